#pragma once

// Schensted row insertion, RSK and its inverse, and the column-pairing
// compression of recording tableaux for words made of increasing blocks.

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skewpat/core.hpp"

namespace skewpat {

struct InsertionResult {
  Rows tableau;            // straight rows after the insertion
  std::vector<Cell> path;  // one cell per row touched, top to bottom
};

inline Partition row_shape(const Rows& rows) {
  std::vector<int> lengths;
  for (const auto& r : rows) lengths.push_back(static_cast<int>(r.size()));
  return Partition(lengths);
}

inline void insert_in_place(Rows& p, int x, std::vector<Cell>* path = nullptr) {
  for (int row = 0;; ++row) {
    if (row == static_cast<int>(p.size())) p.emplace_back();
    auto& r = p[row];
    auto it = std::upper_bound(r.begin(), r.end(), x);
    int col = static_cast<int>(it - r.begin());
    if (path) path->push_back({row, col});
    if (it == r.end()) {
      r.push_back(x);
      return;
    }
    std::swap(*it, x);
  }
}

inline InsertionResult schensted_insert(Rows p, int x) {
  for (const auto& r : p) {
    if (std::find(r.begin(), r.end(), x) != r.end()) {
      throw DomainError("cannot insert " + std::to_string(x) +
                        ": value already present");
    }
  }
  InsertionResult out;
  insert_in_place(p, x, &out.path);
  out.tableau = std::move(p);
  return out;
}

// Path check for consecutive insertions of a < b: the second
// path is strictly right of the first in every row it visits and ends no
// lower.
inline bool path_dominates(const std::vector<Cell>& first,
                           const std::vector<Cell>& second) {
  if (second.size() > first.size()) return false;
  for (std::size_t i = 0; i < second.size(); ++i) {
    if (second[i].col <= first[i].col) return false;
  }
  return true;
}

struct RskPair {
  SkewTableau P;
  SkewTableau Q;
};

// Called after every insertion with the 0-based step, the inserted value,
// the bump path and the current insertion rows.
using InsertObserver =
    std::function<void(int step, int value, const std::vector<Cell>& path, const Rows& p)>;

inline RskPair rsk(const Permutation& w, const InsertObserver& observe = {}) {
  Rows p, q;
  std::vector<Cell> path;
  for (int t = 0; t < w.size(); ++t) {
    path.clear();
    insert_in_place(p, w[t], &path);
    Cell end = path.back();
    if (end.row == static_cast<int>(q.size())) q.emplace_back();
    q[end.row].push_back(t + 1);
    if (observe) observe(t, w[t], path, p);
  }
  return {SkewTableau::straight(std::move(p)), SkewTableau::straight(std::move(q))};
}

namespace detail {

// Undo the insertion whose new box is the last cell of `row`; returns the
// value that leaves the first row.
inline int uninsert(Rows& p, int row) {
  int x = p[row].back();
  p[row].pop_back();
  if (p[row].empty()) p.pop_back();
  for (int i = row - 1; i >= 0; --i) {
    auto& r = p[i];
    auto it = std::lower_bound(r.begin(), r.end(), x);  // first entry >= x
    --it;                                               // largest entry < x
    std::swap(*it, x);
  }
  return x;
}

inline void require_straight(const SkewTableau& t, const char* what) {
  if (!t.shape().is_straight()) {
    throw DomainError(std::string(what) + ": expected a straight tableau, got shape " +
                      t.shape().to_string());
  }
}

}  // namespace detail

inline Permutation rsk_inverse(const SkewTableau& P, const SkewTableau& Q) {
  detail::require_straight(P, "rsk_inverse");
  detail::require_straight(Q, "rsk_inverse");
  if (P.shape() != Q.shape()) {
    throw DomainError("rsk_inverse: shapes " + P.shape().to_string() + " and " +
                      Q.shape().to_string() + " differ");
  }
  int n = P.size();
  Rows p = P.rows();
  std::vector<int> row_of(n + 1);
  for (int i = 0; i < Q.shape().rows(); ++i) {
    for (int v : Q.rows()[i]) row_of[v] = i;
  }
  std::vector<int> w(n);
  for (int v = n; v >= 1; --v) w[v - 1] = detail::uninsert(p, row_of[v]);
  return Permutation(std::move(w));
}

// ---------------------------------------------------------------------------
// Column pairing
// ---------------------------------------------------------------------------

// Standard skew tableau given by an inner partition and rows listing the
// entries of each row left to right (possibly empty rows).
struct PairedTableau {
  Partition inner;
  Rows rows;

  Partition outer() const {
    std::vector<int> lengths;
    int m = std::max(static_cast<int>(rows.size()), inner.length());
    for (int i = 0; i < m; ++i) {
      int len = i < static_cast<int>(rows.size()) ? static_cast<int>(rows[i].size()) : 0;
      lengths.push_back(inner[i] + len);
    }
    return Partition(lengths);
  }

  SkewShape shape() const { return SkewShape(outer(), inner); }

  SkewTableau tableau() const {
    SkewShape s = shape();
    Rows r = rows;
    r.resize(s.rows());
    return SkewTableau(s, std::move(r));
  }

  friend bool operator==(const PairedTableau&, const PairedTableau&) = default;
};

struct TableauPair {
  SkewTableau P;
  PairedTableau R;
};

namespace detail {

// Column heights (1-based column c at index c-1) of a row-length list.
inline std::vector<int> column_heights(const std::vector<int>& row_lengths, int width) {
  std::vector<int> h(width, 0);
  for (int len : row_lengths) {
    for (int c = 0; c < std::min(len, width); ++c) ++h[c];
  }
  return h;
}

// Adds `label` to column c (1-based) of a paired tableau, directly under
// whatever is there already.
inline void push_into_column(PairedTableau& R, int c, int label) {
  int row = 0;
  while (true) {
    int start = R.inner[row];
    int len = row < static_cast<int>(R.rows.size()) ? static_cast<int>(R.rows[row].size()) : 0;
    if (c - 1 >= start + len) break;  // column c is beyond the end of this row
    ++row;
  }
  if (row >= static_cast<int>(R.rows.size())) R.rows.resize(row + 1);
  int start = R.inner[row];
  if (start + static_cast<int>(R.rows[row].size()) != c - 1) {
    throw DomainError("column pairing produced a non-partition shape");
  }
  R.rows[row].push_back(label);
}

// The single column in 1..k+1 a size-k horizontal strip misses. Throws
// PatternError when the strip spills beyond column k+1.
inline int missing_column(const Partition& before, const Partition& after, int k) {
  Partition cb = before.conjugate(), ca = after.conjugate();
  if (ca.length() > k + 1) {
    throw PatternError("insertion shape reached column " + std::to_string(ca.length()) +
                       ": the word contains an increasing subsequence of length " +
                       std::to_string(k + 2));
  }
  int missing = -1, grown = 0;
  for (int c = 1; c <= k + 1; ++c) {
    int d = ca[c - 1] - cb[c - 1];
    if (d == 1) {
      ++grown;
    } else if (d == 0 && missing < 0) {
      missing = c;
    } else {
      throw DomainError("block of insertions is not a horizontal strip");
    }
  }
  if (grown != k || missing < 0) {
    throw DomainError("block of insertions is not a horizontal strip of size " +
                      std::to_string(k));
  }
  return missing;
}

}  // namespace detail

// Compress a recording tableau whose blocks first+1..first+k, first+k+1..
// ... each occupy k distinct columns among 1..k+1 into one box per block.
// Block i (1-based) missing column j adds label i in column k+2-j of R,
// which starts from the given inner shape.
inline PairedTableau encode_recording(const SkewTableau& Q, int k, int first = 0,
                                      const Partition& inner = {}) {
  detail::require_straight(Q, "encode_recording");
  int n = Q.size();
  if ((n - first) % k != 0) {
    throw DomainError("recording tableau size is not a whole number of blocks");
  }
  std::vector<int> row_of(n + 1);
  for (int i = 0; i < Q.shape().rows(); ++i) {
    for (int v : Q.rows()[i]) row_of[v] = i;
  }
  std::vector<int> lengths;
  auto grow = [&](int v) {
    int row = row_of[v];
    if (row == static_cast<int>(lengths.size())) lengths.push_back(0);
    ++lengths[row];
  };
  for (int v = 1; v <= first; ++v) grow(v);
  PairedTableau R{inner, {}};
  int blocks = (n - first) / k;
  for (int b = 1; b <= blocks; ++b) {
    Partition before(lengths);
    for (int t = 1; t <= k; ++t) grow(first + (b - 1) * k + t);
    int j = detail::missing_column(before, Partition(lengths), k);
    detail::push_into_column(R, k + 2 - j, b);
  }
  return R;
}

// Inverse of encode_recording: starting from the straight shape `start`
// filled with 1..|start| row by row (only its shape matters to callers),
// block i takes the columns other than k+2-c where c is the column of
// label i in R.
inline SkewTableau decode_recording(const PairedTableau& R, int k,
                                    const Partition& start = {}) {
  SkewShape rshape = R.shape();
  int blocks = rshape.size();
  std::vector<int> col_of(blocks + 1, 0);
  std::vector<bool> seen(blocks + 1, false);
  for (std::size_t i = 0; i < R.rows.size(); ++i) {
    for (std::size_t t = 0; t < R.rows[i].size(); ++t) {
      int v = R.rows[i][t];
      if (v < 1 || v > blocks || seen[v]) throw DomainError("R is not standard");
      seen[v] = true;
      col_of[v] = R.inner[i] + static_cast<int>(t) + 1;
    }
  }
  Rows q;
  int value = 0;
  for (int i = 0; i < start.length(); ++i) {
    q.emplace_back();
    for (int t = 0; t < start[i]; ++t) q.back().push_back(++value);
  }
  std::vector<int> height = detail::column_heights(
      std::vector<int>(start.parts().begin(), start.parts().end()), k + 1);
  for (int b = 1; b <= blocks; ++b) {
    int c = col_of[b];
    if (c < 1 || c > k + 1) throw DomainError("R has a box beyond column k+1");
    int j = k + 2 - c;
    for (int col = 1; col <= k + 1; ++col) {
      if (col == j) continue;
      int row = height[col - 1]++;
      if (row == static_cast<int>(q.size())) q.emplace_back();
      if (static_cast<int>(q[row].size()) != col - 1) {
        throw DomainError("decoded recording tableau is not of partition shape");
      }
      q[row].push_back(++value);
    }
  }
  auto lengths = row_shape(q);
  auto t = SkewTableau::try_make(SkewShape(lengths), q);
  if (!t) throw DomainError("decoded recording tableau is not standard");
  return *t;
}

// ---------------------------------------------------------------------------
// Modified RSK
// ---------------------------------------------------------------------------

struct MrskStep {
  int block;        // 1-based block just inserted (0 for the prefix)
  Partition shape;  // shape of the insertion tableau after the block
  int missing;      // column of 1..k+1 the block's strip misses (0 if none)
  PairedTableau R;  // R after the block
};

using MrskObserver = std::function<void(const MrskStep&)>;

namespace detail {

inline void require_member(const Permutation& w, const ClassSpec& c, const char* what) {
  if (w.size() != c.length() || !is_member(w, c)) {
    throw DomainError(std::string(what) + ": " + w.to_string() + " is not in the class " +
                      c.to_string());
  }
}

inline Partition odd_inner(const ClassSpec& c) { return Partition{c.k + 1 - c.r, 1}; }

inline TableauPair mrsk_run(const Permutation& w, const ClassSpec& c, int first,
                            const Partition& inner, int label_offset,
                            const MrskObserver& observe) {
  Rows p;
  int t = 0;
  for (; t < first; ++t) insert_in_place(p, w[t]);
  PairedTableau R{inner, {}};
  if (observe) observe({0, row_shape(p), 0, R});
  int blocks = (c.length() - first) / c.k;
  for (int b = 1; b <= blocks; ++b) {
    Partition before = row_shape(p);
    for (int s = 0; s < c.k; ++s) insert_in_place(p, w[t++]);
    Partition after = row_shape(p);
    int j = missing_column(before, after, c.k);
    push_into_column(R, c.k + 2 - j, b + label_offset);
    if (observe) observe({b, after, j, R});
  }
  return {SkewTableau::straight(std::move(p)), std::move(R)};
}

inline Permutation mrsk_unrun(const TableauPair& pair, const ClassSpec& c,
                              const Partition& start) {
  detail::require_straight(pair.P, "modified RSK inverse");
  SkewTableau Q = decode_recording(pair.R, c.k, start);
  if (Q.shape() != pair.P.shape()) {
    throw DomainError("P has shape " + pair.P.shape().to_string() +
                      " but R completes a recording tableau of shape " +
                      Q.shape().to_string());
  }
  int n = Q.size();
  std::vector<int> row_of(n + 1);
  for (int i = 0; i < Q.shape().rows(); ++i) {
    for (int v : Q.rows()[i]) row_of[v] = i;
  }
  Rows p = pair.P.rows();
  std::vector<int> w(n);
  int stop = start.size();
  for (int v = n; v > stop; --v) w[v - 1] = uninsert(p, row_of[v]);
  // What is left has shape `start`: its second row is the prefix, its
  // first row the first block.
  int t = 0;
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) {
    for (int x : p[i]) w[t++] = x;
  }
  return Permutation(std::move(w));
}

}  // namespace detail

// w in L(n,k) avoiding 1..k+2 -> (P, R). P is the RSK insertion tableau;
// R has one box per block.
inline TableauPair modified_rsk(const Permutation& w, const ClassSpec& c,
                                const MrskObserver& observe = {}) {
  if (c.r != 0) throw DomainError("modified_rsk needs r = 0; use modified_rsk_odd");
  detail::require_member(w, c, "modified_rsk");
  return detail::mrsk_run(w, c, 0, {}, 0, observe);
}

// sh(P)'_i + sh(R)'_{k+2-i} = n for 1 <= i <= k+1, both standard.
inline bool is_valid_pair(const TableauPair& pair, const ClassSpec& c) {
  if (!pair.P.shape().is_straight() || pair.P.size() != c.length()) return false;
  SkewShape rs;
  try {
    rs = pair.R.shape();
    (void)pair.R.tableau();
  } catch (const DomainError&) {
    return false;
  }
  Partition pc = pair.P.shape().outer().conjugate();
  if (c.r == 0) {
    if (!rs.is_straight() || rs.size() != c.n) return false;
    Partition rc = rs.outer().conjugate();
    if (pc.length() > c.k + 1 || rc.length() > c.k + 1) return false;
    for (int i = 1; i <= c.k + 1; ++i) {
      if (pc[i - 1] + rc[c.k + 1 - i] != c.n) return false;
    }
    return true;
  }
  if (rs.inner() != detail::odd_inner(c) || rs.size() != c.n - 1) return false;
  Partition rc = rs.outer().conjugate();
  if (pc.length() > c.k + 1 || rc.length() > c.k + 1) return false;
  for (int i = 1; i <= c.k + 1; ++i) {
    if (pc[i - 1] + rc[c.k + 1 - i] != c.n + 1) return false;
  }
  return true;
}

inline Permutation modified_rsk_inverse(const TableauPair& pair, const ClassSpec& c) {
  if (c.r != 0) throw DomainError("modified_rsk_inverse needs r = 0");
  if (!is_valid_pair(pair, c)) {
    throw DomainError("(P, R) do not join into a " + std::to_string(c.n) + " x " +
                      std::to_string(c.k + 1) + " rectangle");
  }
  return detail::mrsk_unrun(pair, c, {});
}

// Odd variant: the first r+k letters are inserted before pairing starts and
// R lives on the skew shape mu / <k+1-r, 1> with n-1 boxes.
inline TableauPair modified_rsk_odd(const Permutation& w, const ClassSpec& c,
                                    const MrskObserver& observe = {}) {
  if (c.r == 0) throw DomainError("modified_rsk_odd needs r > 0; use modified_rsk");
  detail::require_member(w, c, "modified_rsk_odd");
  return detail::mrsk_run(w, c, c.r + c.k, detail::odd_inner(c), 0, observe);
}

inline Permutation modified_rsk_odd_inverse(const TableauPair& pair, const ClassSpec& c) {
  if (c.r == 0) throw DomainError("modified_rsk_odd_inverse needs r > 0");
  if (!is_valid_pair(pair, c)) {
    throw DomainError("(P, R) do not join into the shape with rows (k+1)^(n-1), k, r");
  }
  // After the last R label is undone what is left of P has shape <k, r>.
  Permutation w = detail::mrsk_unrun(pair, c, Partition{c.k, c.r});
  if (!is_member(w, c)) {
    throw DomainError("modified_rsk_odd_inverse: result " + w.to_string() +
                      " is not in the class " + c.to_string());
  }
  return w;
}

// ---------------------------------------------------------------------------
// Words with w and w^{-1} both in L(n,k)(1..k+2)
// ---------------------------------------------------------------------------

inline bool in_doubly_class(const Permutation& w, const ClassSpec& c) {
  if (c.r != 0 || w.size() != c.length()) return false;
  Permutation inc = Permutation::identity(c.k + 2);
  Permutation inv = w.inverse();
  return is_member(w, c) && is_member(inv, c) && !contains_pattern(w, inc);
}

// w -> rsk_inverse(S, R) with R the pairing of Q and S the pairing of P.
inline Permutation doubly_map(const Permutation& w, const ClassSpec& c) {
  if (c.r != 0) throw DomainError("doubly_map needs r = 0");
  if (w.size() != c.length() || !is_member(w, c) || !is_member(w.inverse(), c)) {
    throw DomainError("doubly_map: " + w.to_string() +
                      " and its inverse must both lie in " + c.to_string());
  }
  RskPair pq = rsk(w);
  PairedTableau R = encode_recording(pq.Q, c.k);
  PairedTableau S = encode_recording(pq.P, c.k);
  return rsk_inverse(S.tableau(), R.tableau());
}

inline Permutation doubly_map_inverse(const Permutation& v, const ClassSpec& c) {
  if (c.r != 0) throw DomainError("doubly_map_inverse needs r = 0");
  if (v.size() != c.n) {
    throw DomainError("doubly_map_inverse: expected a permutation of length " +
                      std::to_string(c.n));
  }
  if (contains_pattern(v, Permutation::identity(c.k + 2))) {
    throw PatternError("doubly_map_inverse: " + v.to_string() +
                       " contains an increasing subsequence of length " +
                       std::to_string(c.k + 2));
  }
  RskPair sr = rsk(v);
  PairedTableau S{{}, sr.P.rows()}, R{{}, sr.Q.rows()};
  SkewTableau P = decode_recording(S, c.k);
  SkewTableau Q = decode_recording(R, c.k);
  return rsk_inverse(P, Q);
}

}  // namespace skewpat
