#pragma once

// Exhaustive generators and brute-force counts. Everything here is the
// ground truth the closed formulas and bijections are checked against, so
// nothing in this header relies on them.

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "skewpat/bigcount.hpp"
#include "skewpat/core.hpp"

namespace skewpat {

inline constexpr int kDefaultMaxBoxes = 16;

class BoundExceeded : public DomainError {
 public:
  BoundExceeded(int boxes, int limit)
      : DomainError("refusing to enumerate " + std::to_string(boxes) +
                    " boxes: the enumeration limit is " + std::to_string(limit) +
                    " (raise it with --max-boxes or SKEWPAT_MAX_BOXES)") {}
};

// SKEWPAT_MAX_BOXES when set to a positive integer, else the default.
inline int max_boxes_from_env() {
  const char* v = std::getenv("SKEWPAT_MAX_BOXES");
  if (v == nullptr || *v == '\0') return kDefaultMaxBoxes;
  char* end = nullptr;
  long n = std::strtol(v, &end, 10);
  if (*end != '\0' || n <= 0 || n > 64) {
    throw DomainError(std::string("SKEWPAT_MAX_BOXES must be an integer in 1..64, got '") + v + "'");
  }
  return static_cast<int>(n);
}

inline void check_bound(int boxes, int max_boxes) {
  if (boxes > max_boxes) throw BoundExceeded(boxes, max_boxes);
}

namespace detail {

// Linear-extension enumerator for the box poset of a skew shape. Boxes are
// indexed in row-major order; `word_pos` maps a box to its position in the
// reading word.
class SytEnumerator {
 public:
  explicit SytEnumerator(const SkewShape& shape) : shape_(shape) {
    int n = shape.size();
    std::vector<int> row_first(shape.rows());
    for (int i = 0; i < shape.rows(); ++i) {
      row_first[i] = static_cast<int>(cells_.size());
      for (int c = shape.row_start(i); c < shape.row_end(i); ++c) {
        cells_.push_back({i, c});
      }
    }
    left_.assign(n, -1);
    above_.assign(n, -1);
    word_pos_.assign(n, 0);
    int pos = 0;
    for (int i = shape.rows() - 1; i >= 0; --i) {
      for (int t = 0; t < shape.row_length(i); ++t) word_pos_[row_first[i] + t] = pos++;
    }
    for (int b = 0; b < n; ++b) {
      auto [r, c] = cells_[b];
      if (c > shape.row_start(r)) left_[b] = b - 1;
      if (r > 0 && shape.contains({r - 1, c})) {
        above_[b] = row_first[r - 1] + (c - shape.row_start(r - 1));
      }
    }
    values_.assign(n, 0);
    word_.assign(n, 0);
  }

  // visit(word, values) with values indexed by row-major box index.
  template <class Visit>
  void run(Visit& visit) {
    place(1, visit);
  }

  const SkewShape& shape() const { return shape_; }

  SkewTableau tableau(std::span<const int> values) const {
    Rows rows(shape_.rows());
    for (std::size_t b = 0; b < cells_.size(); ++b) {
      rows[cells_[b].row].push_back(values[b]);
    }
    return SkewTableau(shape_, std::move(rows));
  }

 private:
  template <class Visit>
  void place(int value, Visit& visit) {
    int n = static_cast<int>(cells_.size());
    if (value > n) {
      visit(std::span<const int>(word_), std::span<const int>(values_));
      return;
    }
    for (int b = 0; b < n; ++b) {
      if (values_[b] != 0) continue;
      if (left_[b] >= 0 && values_[left_[b]] == 0) continue;
      if (above_[b] >= 0 && values_[above_[b]] == 0) continue;
      values_[b] = value;
      word_[word_pos_[b]] = value;
      place(value + 1, visit);
      values_[b] = 0;
    }
  }

  SkewShape shape_;
  std::vector<Cell> cells_;
  std::vector<int> left_, above_, word_pos_;
  std::vector<int> values_, word_;
};

}  // namespace detail

// Visits the reading word of every standard tableau of `shape` exactly once.
// Tableaux are produced by placing 1, 2, ... in turn, each into the first
// free box (top-to-bottom, left-to-right) whose left and upper neighbours
// are already filled, so the order is deterministic.
template <class Visit>
void for_each_syt_word(const SkewShape& shape, Visit&& visit,
                       int max_boxes = kDefaultMaxBoxes) {
  check_bound(shape.size(), max_boxes);
  detail::SytEnumerator e(shape);
  auto adapter = [&](std::span<const int> word, std::span<const int>) {
    visit(word);
  };
  e.run(adapter);
}

template <class Visit>
void for_each_syt(const SkewShape& shape, Visit&& visit,
                  int max_boxes = kDefaultMaxBoxes) {
  check_bound(shape.size(), max_boxes);
  detail::SytEnumerator e(shape);
  auto adapter = [&](std::span<const int>, std::span<const int> values) {
    visit(e.tableau(values));
  };
  e.run(adapter);
}

inline std::vector<SkewTableau> all_syt(const SkewShape& shape,
                                        int max_boxes = kDefaultMaxBoxes) {
  std::vector<SkewTableau> out;
  for_each_syt(shape, [&](const SkewTableau& t) { out.push_back(t); }, max_boxes);
  // Lexicographic by the rows, top row first.
  std::sort(out.begin(), out.end(),
            [](const SkewTableau& a, const SkewTableau& b) { return a.rows() < b.rows(); });
  return out;
}

// Reading words of the standard tableaux of class_shape(c).
inline std::vector<Permutation> all_class(const ClassSpec& c,
                                          int max_boxes = kDefaultMaxBoxes) {
  std::vector<Permutation> out;
  for_each_syt_word(
      class_shape(c),
      [&](std::span<const int> w) {
        out.emplace_back(std::vector<int>(w.begin(), w.end()));
      },
      max_boxes);
  return out;
}

// Lexicographic walk over S_n.
template <class Visit>
void for_each_permutation(int n, Visit&& visit) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  do {
    visit(std::span<const int>(w));
  } while (std::next_permutation(w.begin(), w.end()));
}

// Direct filter of S_{nk+r} by the run and interlacing conditions.
inline std::vector<Permutation> filter_class(const ClassSpec& c,
                                             int max_boxes = kDefaultMaxBoxes) {
  check_bound(c.length(), max_boxes);
  std::vector<Permutation> out;
  for_each_permutation(c.length(), [&](std::span<const int> w) {
    Permutation p(std::vector<int>(w.begin(), w.end()));
    if (is_member(p, c)) out.push_back(std::move(p));
  });
  return out;
}

namespace detail {

template <class Visit>
void subpartitions_rec(const Partition& mu, std::vector<int>& parts, Visit& visit) {
  std::size_t i = parts.size();
  int cap = mu[i];
  if (i > 0) cap = std::min(cap, parts.back());
  if (i >= static_cast<std::size_t>(mu.length()) || cap == 0) {
    visit(Partition(parts));
    return;
  }
  for (int v = 0; v <= cap; ++v) {
    if (v == 0) {
      visit(Partition(parts));
      continue;
    }
    parts.push_back(v);
    subpartitions_rec(mu, parts, visit);
    parts.pop_back();
  }
}

}  // namespace detail

// Every partition whose diagram fits inside mu, including the empty one and
// mu itself, in lexicographic order.
template <class Visit>
void for_each_subpartition(const Partition& mu, Visit&& visit) {
  std::vector<int> parts;
  detail::subpartitions_rec(mu, parts, visit);
}

inline std::vector<Partition> subpartitions(const Partition& mu) {
  std::vector<Partition> out;
  for_each_subpartition(mu, [&](const Partition& p) { out.push_back(p); });
  return out;
}

namespace detail {

inline SkewShape shape_from_rows(std::span<const int> lengths,
                                 std::span<const int> overlaps) {
  int m = static_cast<int>(lengths.size());
  std::vector<int> outer(m), inner(m);
  for (int i = m - 1; i >= 0; --i) {
    inner[i] = (i == m - 1) ? 0 : outer[i + 1] - overlaps[i];
    outer[i] = inner[i] + lengths[i];
  }
  return SkewShape(Partition(outer), Partition(inner));
}

template <class Visit>
void basic_overlaps(const std::vector<int>& lengths, std::vector<int>& overlaps,
                    Visit& visit) {
  std::size_t i = overlaps.size();
  if (i + 1 >= lengths.size()) {
    visit(shape_from_rows(lengths, overlaps));
    return;
  }
  int cap = std::min(lengths[i], lengths[i + 1]);
  for (int o = 0; o <= cap; ++o) {
    overlaps.push_back(o);
    basic_overlaps(lengths, overlaps, visit);
    overlaps.pop_back();
  }
}

template <class Visit>
void basic_compositions(int remaining, std::vector<int>& lengths, Visit& visit) {
  if (remaining == 0) {
    std::vector<int> overlaps;
    basic_overlaps(lengths, overlaps, visit);
    return;
  }
  for (int len = 1; len <= remaining; ++len) {
    lengths.push_back(len);
    basic_compositions(remaining - len, lengths, visit);
    lengths.pop_back();
  }
}

}  // namespace detail

// Every basic skew shape with exactly `boxes` boxes. A basic shape is fixed
// by its row lengths (top to bottom) and the column overlap of each pair of
// consecutive rows.
template <class Visit>
void for_each_basic_shape(int boxes, Visit&& visit) {
  std::vector<int> lengths;
  detail::basic_compositions(boxes, lengths, visit);
}

inline std::vector<SkewShape> basic_shapes(int boxes) {
  std::vector<SkewShape> out;
  for_each_basic_shape(boxes, [&](const SkewShape& s) { out.push_back(s); });
  return out;
}

// Number of standard tableaux of `shape` whose reading word avoids p.
inline BigCount count_avoiders(const SkewShape& shape, const Permutation& p,
                               int max_boxes = kDefaultMaxBoxes) {
  unsigned long long count = 0;
  for_each_syt_word(
      shape,
      [&](std::span<const int> w) {
        if (!contains_pattern(w, p.entries())) ++count;
      },
      max_boxes);
  return BigCount(count);
}

inline BigCount count_class_avoiders(const ClassSpec& c, const Permutation& p,
                                     int max_boxes = kDefaultMaxBoxes) {
  return count_avoiders(class_shape(c), p, max_boxes);
}

template <class Range>
std::vector<Permutation> involutions_in(const Range& perms) {
  std::vector<Permutation> out;
  for (const Permutation& w : perms) {
    if (w.is_involution()) out.push_back(w);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Count reports
// ---------------------------------------------------------------------------

enum class CountMethod { oracle, formula, bijection };

inline std::string to_string(CountMethod m) {
  switch (m) {
    case CountMethod::oracle: return "oracle";
    case CountMethod::formula: return "formula";
    case CountMethod::bijection: return "bijection";
  }
  return "?";
}

struct CountReport {
  std::string input;  // shape or class literal
  Permutation pattern;
  BigCount count;
  CountMethod method = CountMethod::oracle;
  bool experimental = false;
};

}  // namespace skewpat
