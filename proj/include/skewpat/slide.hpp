#pragma once

// Local slides of length-two rows. On shapes whose rows all have length at
// most two, shifting the rows above (and possibly including) a length-two
// row sideways by one column preserves the number of tableaux whose reading
// word avoids 123.

#include <string>
#include <vector>

#include "skewpat/core.hpp"

namespace skewpat {

enum class SlideKind {
  through_row,  // rows 0..row move
  above_row,    // rows 0..row-1 move
};

inline SkewShape slide_move(const SkewShape& s, int row, SlideKind kind,
                            int delta = 1) {
  if (row < 0 || row >= s.rows()) {
    throw DomainError("slide row " + std::to_string(row) + " outside shape " +
                      s.to_string());
  }
  if (s.max_row_length() > 2) {
    throw DomainError("slide moves need every row of " + s.to_string() +
                      " to have length at most two");
  }
  if (s.row_length(row) != 2) {
    throw DomainError("slide row " + std::to_string(row) + " of " +
                      s.to_string() + " does not have length two");
  }
  int last = kind == SlideKind::through_row ? row : row - 1;
  std::vector<int> outer(s.outer().parts().begin(), s.outer().parts().end());
  std::vector<int> inner(outer.size(), 0);
  for (int i = 0; i < s.inner().length(); ++i) inner[i] = s.inner()[i];
  for (int i = 0; i <= last; ++i) {
    outer[i] += delta;
    inner[i] += delta;
  }
  try {
    return SkewShape(Partition(outer), Partition(inner));
  } catch (const DomainError&) {
    throw DomainError("sliding " + s.to_string() + " at row " +
                      std::to_string(row) + " leaves the space of skew shapes");
  }
}

// Refill the slid shape row by row with the same entries.
inline SkewTableau transport(const SkewTableau& t, int row, SlideKind kind,
                             int delta = 1) {
  SkewShape target = slide_move(t.shape(), row, kind, delta);
  Rows rows = t.rows();
  rows.resize(target.rows());
  auto moved = SkewTableau::try_make(target, rows);
  if (!moved) {
    throw DomainError("transported filling of " + target.to_string() +
                      " is not standard");
  }
  return *moved;
}

}  // namespace skewpat
