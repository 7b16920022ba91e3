#pragma once

// L(n,k;r)(1..k+1) <-> standard tableaux of shape <k^n, r>: stack the
// blocks of the word upside down.

#include <string>

#include "skewpat/core.hpp"
#include "skewpat/rsk.hpp"

namespace skewpat {

inline Partition rect_target_shape(const ClassSpec& c) {
  std::vector<int> parts(c.n, c.k);
  if (c.r > 0) parts.push_back(c.r);
  return Partition(parts);
}

inline SkewTableau rect_bijection(const Permutation& w, const ClassSpec& c) {
  detail::require_member(w, c, "rect_bijection");
  Rows rows;
  for (int block = c.n; block >= 1; --block) {
    std::vector<int> row;
    for (int j = 1; j <= c.k; ++j) row.push_back(w[c.position(block, j)]);
    rows.push_back(std::move(row));
  }
  if (c.r > 0) {
    std::vector<int> row;
    for (int j = 2; j <= c.r + 1; ++j) row.push_back(w[c.position(0, j)]);
    rows.push_back(std::move(row));
  }
  auto t = SkewTableau::try_make(SkewShape(rect_target_shape(c)), rows);
  if (!t) {
    throw PatternError("rect_bijection: " + w.to_string() +
                       " contains an increasing subsequence of length " +
                       std::to_string(c.k + 1));
  }
  return *t;
}

inline Permutation rect_inverse(const SkewTableau& t, const ClassSpec& c) {
  if (t.shape() != SkewShape(rect_target_shape(c))) {
    throw DomainError("rect_inverse: expected shape " + rect_target_shape(c).to_string() +
                      ", got " + t.shape().to_string());
  }
  return reading_word(t);
}

}  // namespace skewpat
