#pragma once

// Recursive bijection between tableaux of a basic shape lambda/mu whose
// reading word avoids 213 and partitions inside mu, plus the versions for
// 132, 312 and 231 obtained by rotating and/or transposing.

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "skewpat/core.hpp"

namespace skewpat {

// One recursion step, for tracing: the shape being split, the row of the
// entry 1 (0-based), and the partition assigned to it.
struct Split213 {
  int depth;
  SkewShape shape;
  int row;
  Partition tau;
};

using Split213Observer = std::function<void(const Split213&)>;

namespace detail {

inline SkewShape top_piece(const SkewShape& s, int i, int j) {
  // Rows 0..i to the right of column j-1 (the box of 1 removed).
  std::vector<int> outer, inner;
  for (int t = 0; t <= i; ++t) {
    outer.push_back(s.outer()[t] - j);
    inner.push_back(t < i ? s.inner()[t] - j : 0);
  }
  return SkewShape(Partition(outer), Partition(inner));
}

inline SkewShape bottom_piece(const SkewShape& s, int i) {
  std::vector<int> outer, inner;
  for (int t = i + 1; t < s.rows(); ++t) {
    outer.push_back(s.outer()[t]);
    inner.push_back(s.inner()[t]);
  }
  return SkewShape(Partition(outer), Partition(inner));
}

// Relabels the entries of a piece 1..size, keeping their order.
inline Rows standardize_rows(Rows rows) {
  std::vector<int> all;
  for (const auto& r : rows) all.insert(all.end(), r.begin(), r.end());
  std::sort(all.begin(), all.end());
  for (auto& r : rows) {
    for (int& v : r) {
      v = static_cast<int>(std::lower_bound(all.begin(), all.end(), v) - all.begin()) + 1;
    }
  }
  return rows;
}

inline Partition map213_rec(const SkewShape& s, const Rows& rows, int depth,
                            const Split213Observer& observe) {
  if (s.empty()) return {};
  // Locate 1.
  int i = -1;
  for (int t = 0; t < s.rows() && i < 0; ++t) {
    if (!rows[t].empty() && rows[t].front() == 1) i = t;
  }
  int j = s.row_start(i) + 1;  // 1-based column of the entry 1
  SkewShape top = top_piece(s, i, j);
  Rows top_rows(rows.begin(), rows.begin() + i + 1);
  top_rows[i].erase(top_rows[i].begin());
  top_rows.resize(top.rows());
  SkewShape bottom = bottom_piece(s, i);
  Rows bottom_rows(rows.begin() + i + 1, rows.end());
  bottom_rows.resize(bottom.rows());
  Partition nu = map213_rec(top, standardize_rows(top_rows), depth + 1, observe);
  Partition iota = map213_rec(bottom, standardize_rows(bottom_rows), depth + 1, observe);
  std::vector<int> tau;
  for (int t = 0; t < i; ++t) tau.push_back(nu[t] + j);
  for (int v : iota.parts()) tau.push_back(v);
  Partition result(tau);
  if (observe) observe({depth, s, i, result});
  return result;
}

// Fills the piece s with offset+1..offset+|s|; piece row t is row row0+t
// of `out`, and every piece appends its entries left to right.
inline void build213_rec(const SkewShape& s, const Partition& tau, int offset, Rows& out,
                         int row0, int depth, const Split213Observer& observe) {
  if (s.empty()) return;
  const Partition& mu = s.inner();
  // Largest 1-based i with tau_{i-1} > mu_i, else 1.
  int i = 1;
  for (int t = s.rows(); t >= 2; --t) {
    if (tau[t - 2] > mu[t - 1]) {
      i = t;
      break;
    }
  }
  int r = i - 1;  // 0-based row of the entry 1
  if (observe) observe({depth, s, r, tau});
  int j = mu[r] + 1;
  out[row0 + r].push_back(offset + 1);
  std::vector<int> nu, iota;
  for (int t = 0; t < r; ++t) nu.push_back(tau[t] - j);
  for (int t = r; t < tau.length(); ++t) iota.push_back(tau[t]);
  SkewShape top = top_piece(s, r, j);
  SkewShape bottom = bottom_piece(s, r);
  build213_rec(top, Partition(nu), offset + 1, out, row0, depth + 1, observe);
  build213_rec(bottom, Partition(iota), offset + 1 + top.size(), out, row0 + r + 1,
               depth + 1, observe);
}

}  // namespace detail

// Partitions indexing the tableaux of a basic shape for each pattern.
inline Partition tau_bound_213(const SkewShape& s) { return s.inner(); }

inline void require_basic_shape(const SkewShape& s, const char* what) {
  if (!s.is_basic()) {
    throw DomainError(std::string(what) + ": shape " + s.to_string() +
                      " is not basic; normalize it first (normalized form " +
                      normalize_shape(s).to_string() + ")");
  }
}

inline Partition map_213(const SkewTableau& t, const Split213Observer& observe = {}) {
  require_basic_shape(t.shape(), "map_213");
  Permutation w = reading_word(t);
  if (contains_pattern(w, Permutation{2, 1, 3})) {
    throw PatternError("map_213: reading word " + w.to_string() + " contains 213");
  }
  return detail::map213_rec(t.shape(), t.rows(), 0, observe);
}

inline SkewTableau build_213(const SkewShape& s, const Partition& tau,
                             const Split213Observer& observe = {}) {
  require_basic_shape(s, "build_213");
  if (!s.inner().contains(tau)) {
    throw DomainError("build_213: " + tau.to_string() + " does not fit inside " +
                      s.inner().to_string());
  }
  Rows out(s.rows());
  detail::build213_rec(s, tau, 0, out, 0, 0, observe);
  return SkewTableau(s, std::move(out));
}

// ---------------------------------------------------------------------------
// 132, 312, 231 by symmetry
// ---------------------------------------------------------------------------

// Same rows in the normalized position of the shape.
inline SkewTableau normalize_tableau(const SkewTableau& t) {
  SkewShape s = normalize_shape(t.shape());
  Rows rows;
  for (const auto& r : t.rows()) {
    if (!r.empty()) rows.push_back(r);
  }
  return SkewTableau(s, std::move(rows));
}

namespace detail {

inline void require_square_free(const SkewShape& s, const char* what) {
  if (s.has_square()) {
    throw DomainError(std::string(what) + ": shape " + s.to_string() +
                      " contains a 2x2 square, so no reading word avoids the pattern");
  }
}

// Rotation and transposition keep basic shapes basic, and both are
// involutions on them.
inline SkewShape star_shape(const SkewShape& s) { return s.rotated(); }
inline SkewShape flip_shape(const SkewShape& s) { return s.conjugate(); }
inline SkewShape star_flip_shape(const SkewShape& s) { return s.conjugate().rotated(); }

}  // namespace detail

inline Partition tau_bound_132(const SkewShape& s) { return detail::star_shape(s).inner(); }
inline Partition tau_bound_312(const SkewShape& s) { return detail::flip_shape(s).inner(); }
inline Partition tau_bound_231(const SkewShape& s) {
  return detail::star_flip_shape(s).inner();
}

namespace detail {

inline void require_avoids(const SkewTableau& t, const Permutation& p, const char* what) {
  Permutation w = reading_word(t);
  if (contains_pattern(w, p)) {
    throw PatternError(std::string(what) + ": reading word " + w.to_string() +
                       " contains " + p.to_string());
  }
}

}  // namespace detail

// The reading word of T* is the reverse-complement of that of T.
inline Partition map_132(const SkewTableau& t) {
  require_basic_shape(t.shape(), "map_132");
  detail::require_avoids(t, Permutation{1, 3, 2}, "map_132");
  return map_213(rotate_complement(t));
}

inline SkewTableau build_132(const SkewShape& s, const Partition& tau) {
  require_basic_shape(s, "build_132");
  return rotate_complement(build_213(detail::star_shape(s), tau));
}

// On square-free shapes the transpose reverses the reading word.
inline Partition map_312(const SkewTableau& t) {
  require_basic_shape(t.shape(), "map_312");
  detail::require_square_free(t.shape(), "map_312");
  detail::require_avoids(t, Permutation{3, 1, 2}, "map_312");
  return map_213(conjugate(t));
}

inline SkewTableau build_312(const SkewShape& s, const Partition& tau) {
  require_basic_shape(s, "build_312");
  detail::require_square_free(s, "build_312");
  return conjugate(build_213(detail::flip_shape(s), tau));
}

inline Partition map_231(const SkewTableau& t) {
  require_basic_shape(t.shape(), "map_231");
  detail::require_square_free(t.shape(), "map_231");
  detail::require_avoids(t, Permutation{2, 3, 1}, "map_231");
  return map_213(rotate_complement(conjugate(t)));
}

inline SkewTableau build_231(const SkewShape& s, const Partition& tau) {
  require_basic_shape(s, "build_231");
  detail::require_square_free(s, "build_231");
  return conjugate(rotate_complement(build_213(detail::star_flip_shape(s), tau)));
}

}  // namespace skewpat
