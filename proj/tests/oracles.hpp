#pragma once

// Naive reference implementations used only by the tests. They share no
// code with the library beyond the plain data types.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "skewpat/core.hpp"

namespace oracle {

using skewpat::Permutation;
using skewpat::SkewShape;

// Pattern containment by trying every subsequence of length |p|.
inline bool contains(const std::vector<int>& w, const std::vector<int>& p) {
  int n = static_cast<int>(w.size()), m = static_cast<int>(p.size());
  if (m == 0) return true;
  if (m > n) return false;
  std::vector<int> idx(m);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    bool ok = true;
    for (int a = 0; a < m && ok; ++a) {
      for (int b = a + 1; b < m && ok; ++b) {
        ok = (w[idx[a]] < w[idx[b]]) == (p[a] < p[b]);
      }
    }
    if (ok) return true;
    int t = m - 1;
    while (t >= 0 && idx[t] == n - m + t) --t;
    if (t < 0) return false;
    ++idx[t];
    for (int u = t + 1; u < m; ++u) idx[u] = idx[u - 1] + 1;
  }
}

inline std::vector<int> vec(const Permutation& w) { return {w.begin(), w.end()}; }

inline std::vector<int> increasing(int m) {
  std::vector<int> p(m);
  std::iota(p.begin(), p.end(), 1);
  return p;
}

// Longest increasing subsequence by brute force over subsets (n <= 12).
inline int lis(const std::vector<int>& w) {
  int n = static_cast<int>(w.size()), best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    int last = 0, len = 0;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      if (!(mask >> i & 1)) continue;
      ok = w[i] > last;
      last = w[i];
      ++len;
    }
    if (ok) best = std::max(best, len);
  }
  return best;
}

// Every bijective filling of the boxes of s with 1..|s| checked for
// increasing rows and columns; returns reading words (bottom row first).
inline std::vector<std::vector<int>> syt_words(const SkewShape& s) {
  std::vector<std::pair<int, int>> boxes;
  for (int i = 0; i < s.rows(); ++i) {
    for (int c = s.row_start(i); c < s.row_end(i); ++c) boxes.push_back({i, c});
  }
  int n = static_cast<int>(boxes.size());
  std::vector<int> fill(n);
  std::iota(fill.begin(), fill.end(), 1);
  auto index = [&](int i, int c) -> int {
    for (int b = 0; b < n; ++b) {
      if (boxes[b].first == i && boxes[b].second == c) return b;
    }
    return -1;
  };
  std::vector<int> left(n), up(n);
  for (int b = 0; b < n; ++b) {
    left[b] = index(boxes[b].first, boxes[b].second - 1);
    up[b] = index(boxes[b].first - 1, boxes[b].second);
  }
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (int b = 0; b < n && ok; ++b) {
      if (left[b] >= 0 && fill[left[b]] > fill[b]) ok = false;
      if (up[b] >= 0 && fill[up[b]] > fill[b]) ok = false;
    }
    if (!ok) continue;
    std::vector<int> word;
    for (int i = s.rows() - 1; i >= 0; --i) {
      for (int b = 0; b < n; ++b) {
        if (boxes[b].first == i) word.push_back(fill[b]);
      }
    }
    out.push_back(word);
  } while (std::next_permutation(fill.begin(), fill.end()));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::vector<int>> permutations(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> w = increasing(n);
  do {
    out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

// Membership in L(n,k;r) from the definition: the word cut into a prefix
// of r letters and n blocks of k, every block increasing, and each letter
// of a block smaller than the letter one place to the right in the block
// before it (the prefix is aligned one place to the right).
inline bool in_class(const std::vector<int>& w, int n, int k, int r) {
  if (static_cast<int>(w.size()) != n * k + r) return false;
  std::vector<std::vector<int>> blocks;
  blocks.push_back(std::vector<int>(w.begin(), w.begin() + r));
  for (int b = 0; b < n; ++b) {
    blocks.push_back(std::vector<int>(w.begin() + r + b * k, w.begin() + r + (b + 1) * k));
  }
  for (const auto& blk : blocks) {
    if (!std::is_sorted(blk.begin(), blk.end())) return false;
  }
  // prefix letter t (0-based) sits above block-1 column t+1
  for (int t = 0; t < r; ++t) {
    if (blocks[0][t] <= blocks[1][t]) return false;
  }
  for (int b = 1; b < n; ++b) {
    for (int j = 0; j + 1 < k; ++j) {
      if (blocks[b][j + 1] <= blocks[b + 1][j]) return false;
    }
  }
  return true;
}

inline bool is_involution(const std::vector<int>& w) {
  for (int i = 0; i < static_cast<int>(w.size()); ++i) {
    if (w[w[i] - 1] != i + 1) return false;
  }
  return true;
}

inline std::vector<int> inverse(const std::vector<int>& w) {
  std::vector<int> v(w.size());
  for (int i = 0; i < static_cast<int>(w.size()); ++i) v[w[i] - 1] = i + 1;
  return v;
}

// Number of standard Young tableaux of a straight shape by removing corners.
inline std::uint64_t straight_count(std::vector<int> lambda) {
  while (!lambda.empty() && lambda.back() == 0) lambda.pop_back();
  if (lambda.empty()) return 1;
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    bool corner = i + 1 == lambda.size() || lambda[i + 1] < lambda[i];
    if (!corner) continue;
    --lambda[i];
    total += straight_count(lambda);
    ++lambda[i];
  }
  return total;
}

}  // namespace oracle
