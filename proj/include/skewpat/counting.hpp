#pragma once

// Exact closed-form and recursive counts: hook lengths, skew tableau
// counts, Catalan numbers, the alternating 1234 formulas, and the
// shape-indexed counts for patterns of length three.

#include <algorithm>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "skewpat/bigcount.hpp"
#include "skewpat/core.hpp"
#include "skewpat/slide.hpp"

namespace skewpat {

inline BigCount factorial(int n) {
  BigCount f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

inline BigCount binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigCount b = 1;
  for (int i = 0; i < k; ++i) {
    b *= n - i;
    b /= i + 1;
  }
  return b;
}

inline BigCount catalan(int n) {
  if (n < 0) throw DomainError("catalan: n must be nonnegative");
  return binomial(2 * n, n) / (n + 1);
}

// f^lambda = |lambda|! / product of hook lengths.
inline BigCount hook_count(const Partition& lambda) {
  Partition conj = lambda.conjugate();
  BigCount hooks = 1;
  for (int i = 0; i < lambda.length(); ++i) {
    for (int j = 0; j < lambda[i]; ++j) {
      hooks *= (lambda[i] - j - 1) + (conj[j] - i - 1) + 1;
    }
  }
  return factorial(lambda.size()) / hooks;
}

namespace detail {

using ShapeKey = std::pair<std::vector<int>, std::vector<int>>;

inline BigCount skew_count_rec(std::vector<int>& outer, const std::vector<int>& inner,
                               std::map<ShapeKey, BigCount>& memo) {
  bool empty = true;
  for (std::size_t i = 0; i < outer.size() && empty; ++i) empty = outer[i] == inner[i];
  if (empty) return 1;
  ShapeKey key{outer, inner};
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  BigCount total = 0;
  for (std::size_t i = 0; i < outer.size(); ++i) {
    bool corner = outer[i] > inner[i] &&
                  (i + 1 == outer.size() || outer[i + 1] < outer[i]);
    if (!corner) continue;
    --outer[i];
    total += skew_count_rec(outer, inner, memo);
    ++outer[i];
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace detail

// f^{lambda/mu} by deleting the box holding the largest entry, summed over
// the removable outer corners.
inline BigCount skew_count(const SkewShape& s) {
  std::vector<int> outer(s.outer().parts().begin(), s.outer().parts().end());
  std::vector<int> inner(outer.size(), 0);
  for (int i = 0; i < s.inner().length(); ++i) inner[i] = s.inner()[i];
  std::map<detail::ShapeKey, BigCount> memo;
  return detail::skew_count_rec(outer, inner, memo);
}

// 2 (3n)! / (n! (n+1)! (n+2)!)
inline BigCount count_A2n_1234(int n) {
  if (n < 0) throw DomainError("count_A2n_1234: n must be nonnegative");
  return 2 * factorial(3 * n) / (factorial(n) * factorial(n + 1) * factorial(n + 2));
}

// 16 (3n)! / ((n-1)! (n+1)! (n+3)!)
inline BigCount count_A2n1_1234(int n) {
  if (n < 1) throw DomainError("count_A2n1_1234: n must be at least 1");
  return 16 * factorial(3 * n) /
         (factorial(n - 1) * factorial(n + 1) * factorial(n + 3));
}

// Number of partitions inside mu, by a row-by-row transfer count.
inline BigCount count_subpartitions(const Partition& mu) {
  if (mu.empty()) return 1;
  // ways[v]: choices for the rows so far with the current row equal to v.
  std::vector<BigCount> ways(mu[0] + 1, 1);
  for (int i = 1; i < mu.length(); ++i) {
    std::vector<BigCount> next(mu[i] + 1, 0);
    BigCount suffix = 0;
    for (int v = static_cast<int>(ways.size()) - 1; v >= 0; --v) {
      suffix += ways[v];
      if (v <= mu[i]) next[v] = suffix;
    }
    ways = std::move(next);
  }
  BigCount total = 0;
  for (const auto& w : ways) total += w;
  return total;
}

namespace detail {

inline void require_basic(const SkewShape& s, const char* what) {
  if (!s.is_basic()) {
    throw DomainError(std::string(what) + ": shape " + s.to_string() +
                      " is not basic; normalize it first (normalized form " +
                      normalize_shape(s).to_string() + ")");
  }
}

// <l1 - lk, l1 - l(k-1), ..., l1 - l2> for the outer partition of s.
inline Partition rotated_complement_of_outer(const SkewShape& s) {
  const Partition& lam = s.outer();
  std::vector<int> parts;
  for (int i = lam.length() - 1; i >= 1; --i) parts.push_back(lam[0] - lam[i]);
  return Partition(parts);
}

}  // namespace detail

inline BigCount count_213(const SkewShape& s) {
  detail::require_basic(s, "count_213");
  return count_subpartitions(s.inner());
}

inline BigCount count_132(const SkewShape& s) {
  detail::require_basic(s, "count_132");
  return count_subpartitions(detail::rotated_complement_of_outer(s));
}

inline BigCount count_312(const SkewShape& s) {
  detail::require_basic(s, "count_312");
  if (s.has_square()) return 0;
  return count_subpartitions(s.inner());
}

inline BigCount count_231(const SkewShape& s) {
  detail::require_basic(s, "count_231");
  if (s.has_square()) return 0;
  return count_subpartitions(detail::rotated_complement_of_outer(s));
}

// ---------------------------------------------------------------------------
// 123 and 321
// ---------------------------------------------------------------------------

// Relation between consecutive letters of a word.
enum class Relation : std::uint8_t { ascent, descent, free };

// Adjacent-letter relations forced on reading words of a shape with no
// 2x2 square: ascents inside rows, a descent where a row's last box sits
// below the first box of the row above, nothing otherwise.
inline std::vector<Relation> ribbon_signature(const SkewShape& s) {
  if (s.has_square()) {
    throw DomainError("ribbon_signature: " + s.to_string() + " contains a 2x2 square");
  }
  std::vector<Relation> sig;
  int prev_row = -1;
  for (int i = s.rows() - 1; i >= 0; --i) {
    if (s.row_length(i) == 0) continue;
    if (prev_row >= 0) {
      bool touching = prev_row == i + 1 && s.overlap(i) == 1;
      sig.push_back(touching ? Relation::descent : Relation::free);
    }
    for (int t = 1; t < s.row_length(i); ++t) sig.push_back(Relation::ascent);
    prev_row = i;
  }
  return sig;
}

namespace detail {

class SignatureCounter {
 public:
  explicit SignatureCounter(std::span<const Relation> sig)
      : sig_(sig), n_(static_cast<int>(sig.size()) + 1) {
    if (n_ > 24) throw DomainError("signature too long for exact counting (max 24 letters)");
  }

  BigCount count() { return extend(0, 0, n_ + 1, n_ + 1); }

 private:
  // mask: used values; last: previous letter; low: smallest letter so far;
  // top: smallest letter preceded by a smaller one (a 12 ends there).
  BigCount extend(std::uint32_t mask, int last, int low, int top) {
    int pos = std::popcount(mask);
    if (pos == n_) return 1;
    std::uint64_t key = mask | (std::uint64_t(last) << 24) |
                        (std::uint64_t(low) << 30) | (std::uint64_t(top) << 36);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    BigCount total = 0;
    for (int x = 1; x <= n_ && x < top; ++x) {
      if (mask & (1u << (x - 1))) continue;
      if (pos > 0) {
        Relation rel = sig_[pos - 1];
        if (rel == Relation::ascent && x < last) continue;
        if (rel == Relation::descent && x > last) continue;
      }
      int new_top = x > low ? x : top;
      total += extend(mask | (1u << (x - 1)), x, std::min(low, x), new_top);
    }
    memo_.emplace(key, total);
    return total;
  }

  std::span<const Relation> sig_;
  int n_;
  std::unordered_map<std::uint64_t, BigCount> memo_;
};

}  // namespace detail

// Permutations of length sig.size()+1 that avoid 123 and realise every
// ascent and descent the signature prescribes.
inline BigCount count_123_avoiders_with_signature(std::span<const Relation> sig) {
  return detail::SignatureCounter(sig).count();
}

inline BigCount count_321_avoiders_with_signature(std::span<const Relation> sig) {
  // Complementing swaps ascents with descents and 321 with 123.
  std::vector<Relation> flipped(sig.begin(), sig.end());
  for (auto& r : flipped) {
    if (r == Relation::ascent) {
      r = Relation::descent;
    } else if (r == Relation::descent) {
      r = Relation::ascent;
    }
  }
  return detail::SignatureCounter(flipped).count();
}

// Slides every 2x2 block apart by moving the rows above and including its
// upper row one column right. Needs rows of length at most two.
inline SkewShape reduce_rows_to_ribbon(SkewShape s) {
  for (int i = 0; i + 1 < s.rows();) {
    if (s.overlap(i) >= 2) {
      s = slide_move(s, i, SlideKind::through_row);
    } else {
      ++i;
    }
  }
  return s;
}

// Column analogue: shift leading columns down, i.e. slide rows of the
// conjugate shape. Needs columns of length at most two.
inline SkewShape reduce_columns_to_ribbon(const SkewShape& s) {
  return reduce_rows_to_ribbon(s.conjugate()).conjugate();
}

inline BigCount count_123(const SkewShape& s) {
  detail::require_basic(s, "count_123");
  if (s.max_row_length() >= 3) return 0;
  SkewShape ribbon = reduce_rows_to_ribbon(s);
  auto sig = ribbon_signature(ribbon);
  if (s.empty()) return 1;
  return count_123_avoiders_with_signature(sig);
}

// Column-shift reduction followed by signature counting. The count is
// checked against brute force rather than proved.
inline BigCount count_321(const SkewShape& s) {
  detail::require_basic(s, "count_321");
  if (s.max_column_length() >= 3) return 0;
  if (s.empty()) return 1;
  SkewShape ribbon = reduce_columns_to_ribbon(s);
  auto sig = ribbon_signature(ribbon);
  return count_321_avoiders_with_signature(sig);
}

// Counts of L(n,k;r) avoiding the increasing pattern of length k+1 or k+2
// via the hook-length formula on the target shapes.
inline BigCount count_class_monotone(const ClassSpec& c, int len) {
  std::vector<int> parts;
  if (len == c.k + 1) {
    parts.assign(c.n, c.k);
  } else if (len == c.k + 2) {
    if (c.r == 0) {
      parts.assign(c.n, c.k + 1);
    } else {
      parts.assign(c.n - 1, c.k + 1);
      parts.push_back(c.k);
    }
  } else {
    throw DomainError("count_class_monotone: pattern length must be k+1 or k+2 (k=" +
                      std::to_string(c.k) + ")");
  }
  if (c.r > 0) parts.push_back(c.r);
  return hook_count(Partition(parts));
}

}  // namespace skewpat
