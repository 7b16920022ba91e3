#pragma once

// Domain types for permutations, partitions, skew shapes and standard skew
// tableaux, plus pattern containment and membership in the classes
// L(n,k;r) of reading words of staircase-difference shapes.
//
// Conventions: permutation entries are the values 1..n; rows, columns and
// word positions are 0-based, except descent_set() which reports the
// mathematical 1-based positions.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace skewpat {

// Raised when an input is outside the domain of an operation: a bad shape,
// a word that is not in the requested class, a pattern containment
// violation, a malformed tableau.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The input contains the pattern the operation requires it to avoid.
class PatternError : public DomainError {
 public:
  using DomainError::DomainError;
};

// ---------------------------------------------------------------------------
// Permutation
// ---------------------------------------------------------------------------

class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
    std::vector<bool> seen(entries_.size() + 1, false);
    for (int v : entries_) {
      if (v < 1 || static_cast<std::size_t>(v) > entries_.size() || seen[v]) {
        throw DomainError("not a permutation of 1.." +
                          std::to_string(entries_.size()));
      }
      seen[v] = true;
    }
  }

  Permutation(std::initializer_list<int> entries)
      : Permutation(std::vector<int>(entries)) {}

  static Permutation identity(int n) {
    std::vector<int> e(n);
    std::iota(e.begin(), e.end(), 1);
    return Permutation(std::move(e));
  }

  // The permutation order-isomorphic to a sequence of distinct integers.
  static Permutation standardize(std::span<const int> values) {
    std::vector<int> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return values[a] < values[b]; });
    std::vector<int> e(values.size());
    for (std::size_t rank = 0; rank < order.size(); ++rank) {
      if (rank > 0 && values[order[rank]] == values[order[rank - 1]]) {
        throw DomainError("standardize: values are not distinct");
      }
      e[order[rank]] = static_cast<int>(rank) + 1;
    }
    return Permutation(std::move(e));
  }

  int size() const { return static_cast<int>(entries_.size()); }
  bool empty() const { return entries_.empty(); }
  int operator[](std::size_t i) const { return entries_[i]; }
  std::span<const int> entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  Permutation inverse() const {
    std::vector<int> inv(entries_.size());
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      inv[entries_[i] - 1] = static_cast<int>(i) + 1;
    }
    return Permutation(std::move(inv));
  }

  Permutation reverse() const {
    return Permutation(std::vector<int>(entries_.rbegin(), entries_.rend()));
  }

  Permutation complement() const {
    std::vector<int> c(entries_);
    for (int& v : c) v = size() + 1 - v;
    return Permutation(std::move(c));
  }

  bool is_involution() const {
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (entries_[entries_[i] - 1] != static_cast<int>(i) + 1) return false;
    }
    return true;
  }

  std::string to_string() const {
    std::string s;
    bool wide = size() > 9;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (wide && i > 0) s += ',';
      s += std::to_string(entries_[i]);
    }
    return s;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> entries_;
};

// ---------------------------------------------------------------------------
// Partition
// ---------------------------------------------------------------------------

class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 0 || (i > 0 && parts_[i] > parts_[i - 1])) {
        throw DomainError("partition parts must be weakly decreasing and nonnegative");
      }
    }
  }

  Partition(std::initializer_list<int> parts)
      : Partition(std::vector<int>(parts)) {}

  static Partition rectangle(int rows, int cols) {
    if (cols == 0) return {};
    return Partition(std::vector<int>(rows, cols));
  }

  // Number of nonzero parts.
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  int operator[](std::size_t i) const {
    return i < parts_.size() ? parts_[i] : 0;
  }
  std::span<const int> parts() const { return parts_; }

  Partition conjugate() const {
    std::vector<int> c(parts_.empty() ? 0 : parts_.front(), 0);
    for (int p : parts_) {
      for (int j = 0; j < p; ++j) ++c[j];
    }
    return Partition(std::move(c));
  }

  bool contains(const Partition& inner) const {
    if (inner.length() > length()) return false;
    for (int i = 0; i < inner.length(); ++i) {
      if (inner[i] > parts_[i]) return false;
    }
    return true;
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i > 0) s += ',';
      s += std::to_string(parts_[i]);
    }
    return s;
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

inline bool partition_contained(const Partition& inner, const Partition& outer) {
  return outer.contains(inner);
}

// ---------------------------------------------------------------------------
// SkewShape
// ---------------------------------------------------------------------------

struct Cell {
  int row = 0;
  int col = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

class SkewShape {
 public:
  SkewShape() = default;

  SkewShape(Partition outer, Partition inner = {})
      : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!outer_.contains(inner_)) {
      throw DomainError("inner partition " + inner_.to_string() +
                        " is not contained in outer partition " +
                        outer_.to_string());
    }
  }

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }

  // Number of rows of the outer partition (empty rows included).
  int rows() const { return outer_.length(); }
  int row_start(int i) const { return inner_[i]; }
  int row_end(int i) const { return outer_[i]; }
  int row_length(int i) const { return outer_[i] - inner_[i]; }
  int size() const { return outer_.size() - inner_.size(); }
  bool empty() const { return size() == 0; }
  bool is_straight() const { return inner_.empty(); }

  bool contains(Cell c) const {
    return c.row >= 0 && c.row < rows() && c.col >= inner_[c.row] &&
           c.col < outer_[c.row];
  }

  // Number of columns shared by rows i and i+1.
  int overlap(int i) const {
    return std::max(0, outer_[i + 1] - inner_[i]);
  }

  // Every edge of the south-east boundary of the inner partition borders a
  // box of the shape. Shapes with this property are the canonical
  // representatives of their reading-word sets.
  bool is_basic() const {
    for (int i = 0; i < inner_.length(); ++i) {
      if (outer_[i] <= inner_[i] || outer_[i + 1] < inner_[i]) return false;
    }
    return true;
  }

  // True when some 2x2 block of boxes lies inside the shape.
  bool has_square() const {
    for (int i = 0; i + 1 < rows(); ++i) {
      if (overlap(i) >= 2) return true;
    }
    return false;
  }

  int max_row_length() const {
    int m = 0;
    for (int i = 0; i < rows(); ++i) m = std::max(m, row_length(i));
    return m;
  }

  int max_column_length() const { return conjugate().max_row_length(); }

  SkewShape conjugate() const {
    return SkewShape(outer_.conjugate(), inner_.conjugate());
  }

  // 180 degree rotation inside the rows() x outer[0] bounding box.
  SkewShape rotated() const {
    int rows_n = rows();
    if (rows_n == 0) return {};
    int width = outer_[0];
    std::vector<int> out(rows_n), in(rows_n);
    for (int i = 0; i < rows_n; ++i) {
      out[i] = width - inner_[rows_n - 1 - i];
      in[i] = width - outer_[rows_n - 1 - i];
    }
    return SkewShape(Partition(std::move(out)), Partition(std::move(in)));
  }

  std::string to_string() const {
    std::string s = outer_.to_string();
    if (!inner_.empty()) s += "/" + inner_.to_string();
    return s;
  }

  friend bool operator==(const SkewShape&, const SkewShape&) = default;
  friend auto operator<=>(const SkewShape&, const SkewShape&) = default;

 private:
  Partition outer_;
  Partition inner_;
};

// ---------------------------------------------------------------------------
// SkewTableau
// ---------------------------------------------------------------------------

using Rows = std::vector<std::vector<int>>;

namespace detail {

// Row-wise fill fits the shape, uses 1..size once each, and increases along
// rows and down columns.
inline std::optional<std::string> standard_filling_error(const SkewShape& shape,
                                                         const Rows& rows) {
  if (static_cast<int>(rows.size()) != shape.rows()) {
    return "expected " + std::to_string(shape.rows()) + " rows, got " +
           std::to_string(rows.size());
  }
  int n = shape.size();
  std::vector<bool> seen(n + 1, false);
  for (int i = 0; i < shape.rows(); ++i) {
    if (static_cast<int>(rows[i].size()) != shape.row_length(i)) {
      return "row " + std::to_string(i) + " has the wrong length";
    }
    for (int v : rows[i]) {
      if (v < 1 || v > n || seen[v]) return "entries must be 1.." + std::to_string(n);
      seen[v] = true;
    }
    for (std::size_t j = 1; j < rows[i].size(); ++j) {
      if (rows[i][j - 1] >= rows[i][j]) {
        return "row " + std::to_string(i) + " is not increasing";
      }
    }
    if (i > 0) {
      int lo = std::max(shape.row_start(i), shape.row_start(i - 1));
      int hi = std::min(shape.row_end(i), shape.row_end(i - 1));
      for (int c = lo; c < hi; ++c) {
        int above = rows[i - 1][c - shape.row_start(i - 1)];
        int below = rows[i][c - shape.row_start(i)];
        if (above >= below) {
          return "column " + std::to_string(c) + " is not increasing";
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace detail

inline bool is_standard_filling(const SkewShape& shape, const Rows& rows) {
  return !detail::standard_filling_error(shape, rows).has_value();
}

class SkewTableau {
 public:
  SkewTableau() = default;

  SkewTableau(SkewShape shape, Rows rows)
      : shape_(std::move(shape)), rows_(std::move(rows)) {
    if (auto err = detail::standard_filling_error(shape_, rows_)) {
      throw DomainError("not a standard tableau of shape " +
                        shape_.to_string() + ": " + *err);
    }
  }

  // Straight shape read off the row lengths.
  static SkewTableau straight(Rows rows) {
    std::vector<int> lengths;
    for (const auto& r : rows) lengths.push_back(static_cast<int>(r.size()));
    while (!rows.empty() && rows.back().empty()) rows.pop_back();
    return SkewTableau(SkewShape(Partition(lengths)), std::move(rows));
  }

  static std::optional<SkewTableau> try_make(const SkewShape& shape, Rows rows) {
    if (!is_standard_filling(shape, rows)) return std::nullopt;
    return SkewTableau(shape, std::move(rows));
  }

  const SkewShape& shape() const { return shape_; }
  const Rows& rows() const { return rows_; }
  int size() const { return shape_.size(); }

  int at(Cell c) const { return rows_[c.row][c.col - shape_.row_start(c.row)]; }

  Cell find(int value) const {
    for (int i = 0; i < shape_.rows(); ++i) {
      for (std::size_t j = 0; j < rows_[i].size(); ++j) {
        if (rows_[i][j] == value) {
          return {i, shape_.row_start(i) + static_cast<int>(j)};
        }
      }
    }
    throw DomainError("value " + std::to_string(value) + " not in tableau");
  }

  friend bool operator==(const SkewTableau&, const SkewTableau&) = default;

 private:
  SkewShape shape_;
  Rows rows_;
};

// Rows read bottom to top, each left to right.
inline Permutation reading_word(const SkewTableau& t) {
  std::vector<int> w;
  w.reserve(t.size());
  for (int i = t.shape().rows() - 1; i >= 0; --i) {
    w.insert(w.end(), t.rows()[i].begin(), t.rows()[i].end());
  }
  return Permutation(std::move(w));
}

inline Partition conjugate(const Partition& p) { return p.conjugate(); }
inline SkewShape conjugate(const SkewShape& s) { return s.conjugate(); }

inline SkewTableau conjugate(const SkewTableau& t) {
  SkewShape shape = t.shape().conjugate();
  Rows rows(shape.rows());
  for (int i = 0; i < t.shape().rows(); ++i) {
    for (std::size_t j = 0; j < t.rows()[i].size(); ++j) {
      int col = t.shape().row_start(i) + static_cast<int>(j);
      rows[col].push_back(t.rows()[i][j]);
    }
  }
  return SkewTableau(std::move(shape), std::move(rows));
}

// Rotate by 180 degrees and replace each entry v by n+1-v.
inline SkewTableau rotate_complement(const SkewTableau& t) {
  SkewShape shape = t.shape().rotated();
  int n = t.size();
  int rows_n = t.shape().rows();
  Rows rows(shape.rows());
  for (int i = 0; i < shape.rows(); ++i) {
    const auto& src = t.rows()[rows_n - 1 - i];
    for (auto it = src.rbegin(); it != src.rend(); ++it) {
      rows[i].push_back(n + 1 - *it);
    }
  }
  return SkewTableau(std::move(shape), std::move(rows));
}

// ---------------------------------------------------------------------------
// Patterns
// ---------------------------------------------------------------------------

// Longest increasing subsequence by patience sorting.
inline int lis_length(std::span<const int> w) {
  std::vector<int> tails;
  for (int x : w) {
    auto it = std::lower_bound(tails.begin(), tails.end(), x);
    if (it == tails.end()) {
      tails.push_back(x);
    } else {
      *it = x;
    }
  }
  return static_cast<int>(tails.size());
}

inline int lis_length(const Permutation& w) { return lis_length(w.entries()); }

inline int lds_length(std::span<const int> w) {
  std::vector<int> negated(w.begin(), w.end());
  for (int& x : negated) x = -x;
  return lis_length(negated);
}

namespace detail {

inline bool embed_pattern(std::span<const int> w, std::span<const int> p,
                          std::size_t t, std::size_t start,
                          std::vector<std::size_t>& chosen) {
  if (t == p.size()) return true;
  for (std::size_t i = start; i + (p.size() - t) <= w.size(); ++i) {
    bool ok = true;
    for (std::size_t s = 0; s < t && ok; ++s) {
      ok = (w[chosen[s]] < w[i]) == (p[s] < p[t]);
    }
    if (!ok) continue;
    chosen[t] = i;
    if (embed_pattern(w, p, t + 1, i + 1, chosen)) return true;
  }
  return false;
}

}  // namespace detail

// Some subsequence of w is order-isomorphic to p. w may be any sequence of
// distinct integers.
inline bool contains_pattern(std::span<const int> w, std::span<const int> p) {
  if (p.empty()) return true;
  if (p.size() > w.size()) return false;
  if (std::is_sorted(p.begin(), p.end())) {
    return lis_length(w) >= static_cast<int>(p.size());
  }
  if (std::is_sorted(p.begin(), p.end(), std::greater<>())) {
    return lds_length(w) >= static_cast<int>(p.size());
  }
  std::vector<std::size_t> chosen(p.size());
  return detail::embed_pattern(w, p, 0, 0, chosen);
}

inline bool contains_pattern(const Permutation& w, const Permutation& p) {
  return contains_pattern(w.entries(), p.entries());
}

inline bool avoids(const Permutation& w, const Permutation& p) {
  return !contains_pattern(w, p);
}

// 1-based positions i with w_i > w_{i+1}.
inline std::vector<int> descent_set(const Permutation& w) {
  std::vector<int> d;
  for (int i = 0; i + 1 < w.size(); ++i) {
    if (w[i] > w[i + 1]) d.push_back(i + 1);
  }
  return d;
}

// ---------------------------------------------------------------------------
// The classes L(n,k;r)
// ---------------------------------------------------------------------------

// n blocks of k increasing entries preceded by a block of r < k entries;
// r = 0 is L(n,k), (k,r) = (2,0) the up-down permutations of length 2n and
// (2,1) the down-up permutations of length 2n+1.
struct ClassSpec {
  int n = 1;
  int k = 1;
  int r = 0;

  ClassSpec() = default;
  ClassSpec(int n_, int k_, int r_ = 0) : n(n_), k(k_), r(r_) {
    if (n < 1 || k < 1 || r < 0 || r > k - 1) {
      throw DomainError("class parameters need n >= 1, k >= 1, 0 <= r <= k-1");
    }
  }

  int length() const { return n * k + r; }

  // Flat 0-based position of the entry indexed (block, j): block 0 is the
  // prefix with j in 2..r+1, blocks 1..n have j in 1..k.
  int position(int block, int j) const {
    if (block == 0) return j - 2;
    return r + (block - 1) * k + (j - 1);
  }

  std::string to_string() const {
    return "n=" + std::to_string(n) + ",k=" + std::to_string(k) +
           ",r=" + std::to_string(r);
  }

  friend bool operator==(const ClassSpec&, const ClassSpec&) = default;
};

// Checks the run condition (increasing blocks) and the interlacing
// condition between consecutive blocks directly on the word.
inline bool is_member(const Permutation& w, const ClassSpec& c) {
  if (w.size() != c.length()) {
    throw DomainError("word of length " + std::to_string(w.size()) +
                      " cannot be in the class " + c.to_string() +
                      " of length " + std::to_string(c.length()));
  }
  auto at = [&](int block, int j) { return w[c.position(block, j)]; };
  for (int j = 2; j <= c.r; ++j) {
    if (at(0, j) >= at(0, j + 1)) return false;
  }
  for (int j = 1; j <= c.r; ++j) {
    if (at(0, j + 1) <= at(1, j)) return false;
  }
  for (int i = 1; i <= c.n; ++i) {
    for (int j = 1; j < c.k; ++j) {
      if (at(i, j) >= at(i, j + 1)) return false;
      if (i < c.n && at(i, j + 1) <= at(i + 1, j)) return false;
    }
  }
  return true;
}

// Staircase difference <n+k-1, ..., k, r> / <n-1, ..., 1>. Block i >= 1
// occupies columns i-1 .. i+k-2 of row n-i; the prefix block sits under
// block 1 in columns 0..r-1.
inline SkewShape class_shape(const ClassSpec& c) {
  std::vector<int> outer, inner;
  for (int i = 0; i < c.n; ++i) {
    outer.push_back(c.n + c.k - 1 - i);
    inner.push_back(c.n - 1 - i);
  }
  if (c.r > 0) outer.push_back(c.r);
  return SkewShape(Partition(outer), Partition(inner));
}

// Equivalent basic shape: empty rows are dropped and the remaining rows are
// packed so consecutive rows keep exactly the column overlap they had.
// Reading-word sets are unchanged because only overlaps of adjacent rows
// constrain a standard filling.
inline SkewShape normalize_shape(const SkewShape& s) {
  std::vector<int> lengths;
  std::vector<int> overlaps;  // between consecutive nonempty rows
  int prev = -1;
  for (int i = 0; i < s.rows(); ++i) {
    if (s.row_length(i) == 0) continue;
    if (prev >= 0) {
      overlaps.push_back(prev == i - 1 ? s.overlap(prev) : 0);
    }
    lengths.push_back(s.row_length(i));
    prev = i;
  }
  int m = static_cast<int>(lengths.size());
  std::vector<int> outer(m), inner(m);
  for (int i = m - 1; i >= 0; --i) {
    inner[i] = (i == m - 1) ? 0 : outer[i + 1] - overlaps[i];
    outer[i] = inner[i] + lengths[i];
  }
  return SkewShape(Partition(outer), Partition(inner));
}

}  // namespace skewpat
