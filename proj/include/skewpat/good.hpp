#pragma once

// Good tableaux: the intermediate objects between L(n,k;r)(1..k+2) and
// standard tableaux of shape <(k+1)^n> (or <(k+1)^(n-1), k, r>).

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "skewpat/core.hpp"
#include "skewpat/rsk.hpp"

namespace skewpat {

struct GoodTableau {
  Rows rows;

  Partition shape() const { return row_shape(rows); }
  int n_rows() const { return static_cast<int>(rows.size()); }
  friend bool operator==(const GoodTableau&, const GoodTableau&) = default;
};

// G1 and G2 on an n x (k+1) rectangle. Returns the first violation.
inline std::optional<std::string> good_violation(const GoodTableau& g, int k) {
  int n = g.n_rows();
  for (int i = 0; i < n; ++i) {
    const auto& row = g.rows[i];
    if (static_cast<int>(row.size()) != k + 1) {
      return "row " + std::to_string(i) + " does not have k+1 = " +
             std::to_string(k + 1) + " entries";
    }
    if (row[0] != 1) return "row " + std::to_string(i) + " does not start with 1";
    for (int j = 1; j <= k; ++j) {
      if (row[j - 1] >= row[j]) return "row " + std::to_string(i) + " is not increasing";
    }
    int cap = (n - i) * k + 1;
    if (row[k] > cap) {
      return "row " + std::to_string(i) + " exceeds its bound " + std::to_string(cap);
    }
    if (i + 1 < n) {
      for (int j = 0; j <= k; ++j) {
        if (row[j] > g.rows[i + 1][j] + j) {
          return "entry (" + std::to_string(i) + "," + std::to_string(j) +
                 ") is too large for the entry below it";
        }
      }
    }
  }
  return std::nullopt;
}

inline bool is_good(const GoodTableau& g, int k) { return !good_violation(g, k); }

// ---------------------------------------------------------------------------
// Good tableaux <-> standard tableaux of the same straight shape
// ---------------------------------------------------------------------------

// Entry (i,j) becomes the rank of T(i,j) among the entries in rows >= i.
inline GoodTableau syt_to_good(const SkewTableau& t) {
  detail::require_straight(t, "syt_to_good");
  const Rows& rows = t.rows();
  int n = t.size();
  std::vector<bool> alive(n + 1, true);
  GoodTableau g;
  for (const auto& row : rows) {
    std::vector<int> out;
    for (int v : row) {
      int rank = 0;
      for (int u = 1; u <= v; ++u) rank += alive[u] ? 1 : 0;
      out.push_back(rank);
    }
    for (int v : row) alive[v] = false;
    g.rows.push_back(std::move(out));
  }
  return g;
}

// Entry l in row i becomes the l-th smallest value not used in rows above.
inline SkewTableau good_to_syt(const GoodTableau& g) {
  int n = 0;
  for (const auto& row : g.rows) n += static_cast<int>(row.size());
  std::vector<int> pool(n);
  for (int v = 0; v < n; ++v) pool[v] = v + 1;
  Rows out;
  for (const auto& row : g.rows) {
    std::vector<int> vals;
    for (int l : row) {
      if (l < 1 || l > static_cast<int>(pool.size())) {
        throw DomainError("good tableau entry " + std::to_string(l) +
                          " exceeds the number of values left (" +
                          std::to_string(pool.size()) + ")");
      }
      vals.push_back(pool[l - 1]);
    }
    for (int v : vals) pool.erase(std::find(pool.begin(), pool.end(), v));
    out.push_back(std::move(vals));
  }
  auto lengths = row_shape(out);
  auto t = SkewTableau::try_make(SkewShape(lengths), out);
  if (!t) throw DomainError("filling produced from the good tableau is not standard");
  return *t;
}

// Generalized membership: G is the image of some standard tableau.
inline bool is_generalized_good(const GoodTableau& g) {
  try {
    return syt_to_good(good_to_syt(g)) == g;
  } catch (const DomainError&) {
    return false;
  }
}

// ---------------------------------------------------------------------------
// Words -> good tableaux
// ---------------------------------------------------------------------------

namespace detail {

// Smallest entry ending an increasing subsequence of length j, for
// j = 1..count, with `fallback` where none exists.
inline std::vector<int> first_row_entries(std::span<const int> u, int count, int fallback) {
  std::vector<int> ending(u.size());
  std::vector<int> best(count + 1, fallback);
  for (std::size_t p = 0; p < u.size(); ++p) {
    int len = 1;
    for (std::size_t q = 0; q < p; ++q) {
      if (u[q] < u[p]) len = std::max(len, ending[q] + 1);
    }
    ending[p] = len;
    for (int j = 1; j <= std::min(len, count); ++j) best[j] = std::min(best[j], u[p]);
  }
  return {best.begin() + 1, best.end()};
}

inline std::vector<int> drop_last(std::span<const int> u, int k) {
  std::vector<int> rest(u.begin(), u.end() - k);
  Permutation s = Permutation::standardize(rest);
  return {s.begin(), s.end()};
}

}  // namespace detail

// T(w). For r = 0 an n x (k+1) good tableau; for r > 0 the last row built
// from the word has only k entries and is followed by the row 1..r.
inline GoodTableau good_of_perm(const Permutation& w, const ClassSpec& c) {
  detail::require_member(w, c, "good_of_perm");
  Permutation inc = Permutation::identity(c.k + 2);
  if (contains_pattern(w, inc)) {
    throw PatternError("good_of_perm: " + w.to_string() +
                       " contains an increasing subsequence of length " +
                       std::to_string(c.k + 2));
  }
  GoodTableau g;
  std::vector<int> u(w.begin(), w.end());
  for (int i = 1; i <= c.n; ++i) {
    int len = static_cast<int>(u.size());
    bool short_row = c.r > 0 && i == c.n;
    g.rows.push_back(detail::first_row_entries(u, short_row ? c.k : c.k + 1, len + 1));
    if (i < c.n) u = detail::drop_last(u, c.k);
  }
  if (c.r > 0) {
    std::vector<int> last(c.r);
    for (int t = 0; t < c.r; ++t) last[t] = t + 1;
    g.rows.push_back(std::move(last));
  }
  return g;
}

// Row-by-row record of the inverse: which column each row omits (0-based,
// -1 when nothing is omitted) and the final value each sent entry lands on.
struct GoodTrace {
  std::vector<int> omitted;
  Rows image;  // image[i][j] = value in w of G(i,j), 0 if omitted
};

namespace detail {

inline Partition odd_good_shape(const ClassSpec& c) {
  std::vector<int> parts(c.n - 1, c.k + 1);
  parts.push_back(c.k);
  parts.push_back(c.r);
  return Partition(parts);
}

inline void check_good_shape(const GoodTableau& g, const ClassSpec& c) {
  if (c.r == 0) {
    if (g.n_rows() != c.n) {
      throw DomainError("good tableau has " + std::to_string(g.n_rows()) +
                        " rows, expected " + std::to_string(c.n));
    }
    if (auto err = good_violation(g, c.k)) throw DomainError("not a good tableau: " + *err);
    return;
  }
  if (g.shape() != odd_good_shape(c)) {
    throw DomainError("good tableau has shape " + g.shape().to_string() + ", expected " +
                      odd_good_shape(c).to_string());
  }
  if (!is_generalized_good(g)) {
    throw DomainError("filling is not the rank tableau of any standard tableau");
  }
}

// Check on a finished run: if G(i,a) and G(i+1,b) are both sent and
// G(i+1,b) >= G(i+1,a) then G(i+1,b) lands on the larger value.
inline void check_sent_order(const GoodTableau& g, const GoodTrace& tr) {
  for (int i = 0; i + 1 < g.n_rows(); ++i) {
    const auto& up = g.rows[i];
    const auto& down = g.rows[i + 1];
    for (std::size_t a = 0; a < up.size() && a < down.size(); ++a) {
      if (tr.image[i][a] == 0) continue;
      for (std::size_t b = 0; b < down.size(); ++b) {
        if (tr.image[i + 1][b] == 0 || down[b] < down[a]) continue;
        if (tr.image[i + 1][b] <= tr.image[i][a]) {
          throw DomainError("sent-order lemma fails at rows " + std::to_string(i) + "/" +
                            std::to_string(i + 1));
        }
      }
    }
  }
}

}  // namespace detail

// w(G), with the per-row omission record.
inline Permutation perm_of_good(const GoodTableau& g, const ClassSpec& c,
                                GoodTrace* trace = nullptr) {
  detail::check_good_shape(g, c);
  int rows = g.n_rows();
  GoodTrace tr;
  tr.omitted.assign(rows, -1);
  // u: word built so far, as positions of g entries feeding it.
  std::vector<int> u;
  std::vector<std::pair<int, int>> source;  // (row, col) of each letter of u
  int base;  // index of the lowest row that starts the recursion
  if (c.r == 0) {
    base = rows - 1;
    // The last row is 1..k+1; its last entry is omitted.
    for (int j = 0; j < c.k; ++j) {
      u.push_back(g.rows[base][j]);
      source.push_back({base, j});
    }
    tr.omitted[base] = c.k;
  } else {
    // Last two rows: the prefix (row 1..r) ranks among the k+r values not
    // used by the row above it; nothing is omitted.
    base = rows - 2;
    const auto& blk = g.rows[base];
    std::vector<bool> used(c.k + c.r + 1, false);
    for (int v : blk) used[v] = true;
    int t = 0;
    for (int v = 1; v <= c.k + c.r; ++v) {
      if (used[v]) continue;
      u.push_back(v);
      source.push_back({base + 1, t++});
    }
    for (int j = 0; j < c.k; ++j) {
      u.push_back(blk[j]);
      source.push_back({base, j});
    }
  }
  for (int i = base - 1; i >= 0; --i) {
    const auto& row = g.rows[i];
    const auto& below = g.rows[i + 1];
    int len = static_cast<int>(u.size());
    auto below_at = [&](int j) {
      if (j < static_cast<int>(below.size())) return below[j];
      return len + 1;  // the short row behaves as if it ended with len+1
    };
    int m = -1;
    for (int j = 0; j <= c.k; ++j) {
      if (row[j] == below_at(j) + j) m = j;
    }
    if (m < 0) throw DomainError("no omittable entry in row " + std::to_string(i));
    tr.omitted[i] = m;
    std::vector<int> last;
    for (int j = 0; j <= c.k; ++j) {
      if (j != m) last.push_back(row[j]);
    }
    int total = len + c.k;
    if (last.back() > total) {
      throw DomainError("row " + std::to_string(i) + " sends a value beyond " +
                        std::to_string(total));
    }
    std::vector<bool> taken(total + 1, false);
    for (int v : last) taken[v] = true;
    std::vector<int> free;
    for (int v = 1; v <= total; ++v) {
      if (!taken[v]) free.push_back(v);
    }
    for (int& x : u) x = free[x - 1];
    int t = 0;
    for (int j = 0; j <= c.k; ++j) {
      if (j == m) continue;
      u.push_back(last[t++]);
      source.push_back({i, j});
    }
  }
  tr.image.assign(rows, {});
  for (int i = 0; i < rows; ++i) tr.image[i].assign(g.rows[i].size(), 0);
  for (std::size_t p = 0; p < u.size(); ++p) {
    tr.image[source[p].first][source[p].second] = u[p];
  }
  detail::check_sent_order(g, tr);
  Permutation w(std::move(u));
  if (trace) *trace = std::move(tr);
  return w;
}

// ---------------------------------------------------------------------------
// Composite bijection onto standard tableaux
// ---------------------------------------------------------------------------

inline Partition k2_target_shape(const ClassSpec& c) {
  if (c.r == 0) return Partition::rectangle(c.n, c.k + 1);
  return detail::odd_good_shape(c);
}

inline SkewTableau k2_bijection(const Permutation& w, const ClassSpec& c) {
  return good_to_syt(good_of_perm(w, c));
}

inline Permutation k2_inverse(const SkewTableau& t, const ClassSpec& c) {
  if (t.shape() != SkewShape(k2_target_shape(c))) {
    throw DomainError("expected a tableau of shape " + k2_target_shape(c).to_string() +
                      ", got " + t.shape().to_string());
  }
  return perm_of_good(syt_to_good(t), c);
}

}  // namespace skewpat
