#pragma once

// Exhaustive self-checks. Each check compares a closed form or a bijection
// against brute-force enumeration at desk scale and reports pass/fail with a
// short detail line. Suites: "acceptance" (A1..A9) and one per module.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "skewpat/bijections.hpp"
#include "skewpat/core.hpp"
#include "skewpat/counting.hpp"
#include "skewpat/enumerate.hpp"
#include "skewpat/rsk.hpp"

namespace skewpat {

struct VerifyOptions {
  int max_boxes = 8;
  int jobs = 0;  // 0: hardware concurrency
};

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct Outcome {
  bool passed = true;
  std::string detail;
};

struct Check {
  std::string suite;
  std::string name;
  std::function<Outcome(const VerifyOptions&)> run;
};

namespace verify_detail {

// Collects the first few failures and a tally of cases examined.
class Tally {
 public:
  void ok() { ++cases_; }
  void fail(const std::string& what) {
    ++cases_;
    ++failures_;
    if (first_.empty()) first_ = what;
  }
  void expect(bool cond, const std::string& what) { cond ? ok() : fail(what); }
  long cases() const { return cases_; }
  Outcome outcome(const std::string& summary) const {
    if (failures_ == 0) return {true, summary + " (" + std::to_string(cases_) + " cases)"};
    return {false, std::to_string(failures_) + " of " + std::to_string(cases_) +
                       " cases failed; first: " + first_};
  }

 private:
  long cases_ = 0, failures_ = 0;
  std::string first_;
};

inline Permutation perm(std::span<const int> w) {
  return Permutation(std::vector<int>(w.begin(), w.end()));
}

inline bool up_down(std::span<const int> w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    bool want_up = i % 2 == 0;
    if ((w[i] < w[i + 1]) != want_up) return false;
  }
  return true;
}

// Partitions of m, largest part first.
inline void partitions_rec(int m, int cap, std::vector<int>& cur,
                           std::vector<Partition>& out) {
  if (m == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(m, cap); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(m - p, p, cur, out);
    cur.pop_back();
  }
}

inline std::vector<Partition> partitions_of(int m) {
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(m, m, cur, out);
  return out;
}

inline std::vector<ClassSpec> classes_up_to(int len) {
  std::vector<ClassSpec> out;
  for (int k = 1; k <= len; ++k) {
    for (int n = 1; n * k <= len; ++n) {
      for (int r = 0; r < k && n * k + r <= len; ++r) out.emplace_back(n, k, r);
    }
  }
  return out;
}

inline std::vector<SkewShape> basic_shapes_up_to(int boxes) {
  std::vector<SkewShape> out;
  for (int b = 1; b <= boxes; ++b) {
    for_each_basic_shape(b, [&](const SkewShape& s) { out.push_back(s); });
  }
  return out;
}

// Naive containment over all index subsets.
inline bool naive_contains(std::span<const int> w, std::span<const int> p) {
  int n = static_cast<int>(w.size()), m = static_cast<int>(p.size());
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != m) continue;
    std::vector<int> sub;
    for (int i = 0; i < n; ++i) {
      if (mask >> i & 1) sub.push_back(w[i]);
    }
    bool ok = true;
    for (int a = 0; a < m && ok; ++a) {
      for (int b = a + 1; b < m && ok; ++b) ok = (sub[a] < sub[b]) == (p[a] < p[b]);
    }
    if (ok) return true;
  }
  return m == 0;
}

inline std::string str(const BigCount& c) { return to_decimal(c); }

inline std::string rows_key(const Rows& rows) {
  std::string out;
  for (const auto& r : rows) {
    for (int v : r) out += std::to_string(v) + ',';
    out += '/';
  }
  return out;
}

inline std::string pair_key(const TableauPair& pr) {
  return rows_key(pr.P.rows()) + '|' + pr.R.inner.to_string() + rows_key(pr.R.rows);
}

// Standard tableaux of every valid (P, R) pair shape for the modified RSK.
template <class Visit>
void for_each_valid_pair(const ClassSpec& c, Visit&& visit) {
  int extra = c.r == 0 ? 0 : 1;
  for (const Partition& lam : partitions_of(c.length())) {
    Partition pc = lam.conjugate();
    if (pc.length() > c.k + 1 || lam.length() > c.n + extra) continue;
    std::vector<int> rc(c.k + 1);
    for (int j = 1; j <= c.k + 1; ++j) rc[j - 1] = c.n + extra - pc[c.k + 1 - j];
    Partition rcol(rc);
    Partition outer = rcol.conjugate();
    Partition inner = c.r == 0 ? Partition{} : detail::odd_inner(c);
    if (!outer.contains(inner)) continue;
    SkewShape rs(outer, inner);
    auto Ps = all_syt(SkewShape(lam), 64);
    auto Rs = all_syt(rs, 64);
    for (const auto& P : Ps) {
      for (const auto& R : Rs) visit(TableauPair{P, PairedTableau{inner, R.rows()}});
    }
  }
}

// All good n x (k+1) fillings, built row by row from the bottom.
inline void good_rec(int n, int k, int row, GoodTableau& g, std::vector<GoodTableau>& out) {
  if (row < 0) {
    out.push_back(g);
    return;
  }
  int cap = (n - row) * k + 1;
  std::vector<int> cur{1};
  std::function<void()> fill = [&]() {
    int j = static_cast<int>(cur.size());
    if (j == k + 1) {
      g.rows[row] = cur;
      good_rec(n, k, row - 1, g, out);
      return;
    }
    int hi = cap;
    if (row + 1 < n) hi = std::min(hi, g.rows[row + 1][j] + j);
    for (int v = cur.back() + 1; v <= hi; ++v) {
      cur.push_back(v);
      fill();
      cur.pop_back();
    }
  };
  fill();
}

inline std::vector<GoodTableau> all_good(int n, int k) {
  GoodTableau g;
  g.rows.assign(n, {});
  std::vector<GoodTableau> out;
  good_rec(n, k, n - 1, g, out);
  return out;
}

inline std::vector<Permutation> class_avoiders(const ClassSpec& c, int len) {
  std::vector<Permutation> out;
  Permutation inc = Permutation::identity(len);
  for (auto& w : all_class(c, 64)) {
    if (!contains_pattern(w, inc)) out.push_back(w);
  }
  return out;
}

}  // namespace verify_detail

// ---------------------------------------------------------------------------
// Acceptance criteria
// ---------------------------------------------------------------------------

inline Outcome check_A1(const VerifyOptions&) {
  using namespace verify_detail;
  auto start = std::chrono::steady_clock::now();
  const std::vector<int> expected{1, 5, 42, 462};
  Tally t;
  std::ostringstream os;
  for (int n = 1; n <= 4; ++n) {
    BigCount formula = count_A2n_1234(n);
    BigCount hook = hook_count(Partition::rectangle(n, 3));
    long brute = 0;
    Permutation p{1, 2, 3, 4};
    for_each_permutation(2 * n, [&](std::span<const int> w) {
      if (up_down(w) && !contains_pattern(w, p.entries())) ++brute;
    });
    bool ok = formula == expected[n - 1] && hook == formula && BigCount(brute) == formula;
    t.expect(ok, "n=" + std::to_string(n) + ": formula " + str(formula) + ", hook " +
                     str(hook) + ", brute " + std::to_string(brute));
    os << (n > 1 ? "," : "") << brute;
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  t.expect(secs < 10, "took " + std::to_string(secs) + " s");
  return t.outcome("|A_2n(1234)| = " + os.str());
}

inline Outcome check_A2(const VerifyOptions&) {
  using namespace verify_detail;
  auto start = std::chrono::steady_clock::now();
  const std::vector<int> expected{2, 16, 168};
  Tally t;
  std::ostringstream os;
  Permutation p{1, 2, 3, 4};
  for (int n = 1; n <= 3; ++n) {
    BigCount formula = count_A2n1_1234(n);
    BigCount cls = count_class_avoiders(ClassSpec(n, 2, 1), p, 64);
    long brute = 0;
    for_each_permutation(2 * n + 1, [&](std::span<const int> w) {
      if (up_down(w) && !contains_pattern(w, p.entries())) ++brute;
    });
    bool ok = formula == expected[n - 1] && cls == formula && BigCount(brute) == formula;
    t.expect(ok, "n=" + std::to_string(n) + ": formula " + str(formula) + ", down-up class " +
                     str(cls) + ", up-down brute " + std::to_string(brute));
    os << (n > 1 ? "," : "") << brute;
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  t.expect(secs < 10, "took " + std::to_string(secs) + " s");
  return t.outcome("|A_2n+1(1234)| = " + os.str());
}

inline Outcome check_A3(const VerifyOptions&) {
  using namespace verify_detail;
  Tally t;
  std::ostringstream os;
  Permutation p{1, 2, 3};
  for (int n = 1; n <= 5; ++n) {
    ClassSpec c(n, 2, 0);
    BigCount prop = count_class_monotone(c, 3);
    BigCount oracle = count_class_avoiders(c, p, 64);
    long brute = -1;
    if (n <= 4) {
      brute = 0;
      for_each_permutation(2 * n, [&](std::span<const int> w) {
        if (up_down(w) && !contains_pattern(w, p.entries())) ++brute;
      });
    }
    bool ok = prop == catalan(n) && oracle == prop && (brute < 0 || BigCount(brute) == prop);
    t.expect(ok, "n=" + std::to_string(n) + ": count " + str(prop) + ", oracle " +
                     str(oracle) + ", C_n " + str(catalan(n)));
    os << (n > 1 ? "," : "") << oracle;
  }
  return t.outcome("|A_2n(123)| = " + os.str());
}

inline Outcome check_A4(const VerifyOptions&) {
  using namespace verify_detail;
  Tally t;
  for (int k = 1; k <= 9; ++k) {
    for (int n = 1; n * k <= 9; ++n) {
      ClassSpec c(n, k, 0);
      Permutation p1 = Permutation::identity(k + 1), p2 = Permutation::identity(k + 2);
      long a1 = 0, a2 = 0;
      for_each_permutation(n * k, [&](std::span<const int> w) {
        if (!is_member(perm(w), c)) return;
        if (!contains_pattern(w, p1.entries())) ++a1;
        if (!contains_pattern(w, p2.entries())) ++a2;
      });
      BigCount h1 = hook_count(Partition::rectangle(n, k));
      BigCount h2 = hook_count(Partition::rectangle(n, k + 1));
      t.expect(BigCount(a1) == h1 && BigCount(a2) == h2,
               c.to_string() + ": oracle " + std::to_string(a1) + "/" + std::to_string(a2) +
                   ", hook " + str(h1) + "/" + str(h2));
    }
  }
  return t.outcome("all (n,k) with nk <= 9");
}

inline Outcome check_A5(const VerifyOptions&) {
  using namespace verify_detail;
  Tally t;
  auto guard = [&](const std::string& what, auto&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      t.fail(what + ": " + e.what());
    }
  };
  for (const ClassSpec& c : classes_up_to(9)) {
    // rect
    for (const auto& w : class_avoiders(c, c.k + 1)) {
      guard("rect " + w.to_string(), [&] {
        t.expect(rect_inverse(rect_bijection(w, c), c) == w, "rect " + w.to_string());
      });
    }
    for (const auto& T : all_syt(SkewShape(rect_target_shape(c)), 64)) {
      guard("rect-inv", [&] {
        t.expect(rect_bijection(rect_inverse(T, c), c) == T, "rect-inv " + c.to_string());
      });
    }
    // good tableaux and modified RSK
    auto avoiders = class_avoiders(c, c.k + 2);
    for (const auto& w : avoiders) {
      guard("good " + w.to_string() + " in " + c.to_string(), [&] {
        GoodTableau g = good_of_perm(w, c);
        t.expect(perm_of_good(g, c) == w, "good " + w.to_string());
        TableauPair pr = c.r == 0 ? modified_rsk(w, c) : modified_rsk_odd(w, c);
        t.expect(is_valid_pair(pr, c), "mrsk pair shape " + w.to_string());
        Permutation back =
            c.r == 0 ? modified_rsk_inverse(pr, c) : modified_rsk_odd_inverse(pr, c);
        t.expect(back == w, "mrsk " + w.to_string() + " in " + c.to_string());
      });
    }
    long pairs = 0;
    for_each_valid_pair(c, [&](const TableauPair& pr) {
      ++pairs;
      guard("mrsk-inv " + c.to_string(), [&] {
        Permutation w =
            c.r == 0 ? modified_rsk_inverse(pr, c) : modified_rsk_odd_inverse(pr, c);
        TableauPair again = c.r == 0 ? modified_rsk(w, c) : modified_rsk_odd(w, c);
        t.expect(again.P == pr.P && again.R.tableau() == pr.R.tableau(),
                 "mrsk-inv " + c.to_string());
      });
    });
    t.expect(pairs == static_cast<long>(avoiders.size()),
             "valid pairs " + std::to_string(pairs) + " vs avoiders " +
                 std::to_string(avoiders.size()) + " in " + c.to_string());
    // good -> word -> good over every good tableau
    if (c.r == 0 && c.n * (c.k + 1) <= 12) {
      auto goods = all_good(c.n, c.k);
      t.expect(BigCount(goods.size()) == hook_count(Partition::rectangle(c.n, c.k + 1)),
               "good tableaux count in " + c.to_string());
      for (const auto& g : goods) {
        guard("good-inv " + c.to_string(), [&] {
          t.expect(good_of_perm(perm_of_good(g, c), c) == g, "good-inv " + c.to_string());
        });
      }
    }
    if (c.r > 0) {
      for (const auto& T : all_syt(SkewShape(k2_target_shape(c)), 64)) {
        guard("odd good-inv " + c.to_string(), [&] {
          GoodTableau g = syt_to_good(T);
          t.expect(good_of_perm(perm_of_good(g, c), c) == g, "odd good-inv " + c.to_string());
        });
      }
    }
  }
  // syt <-> good on every straight shape
  for (int m = 1; m <= 9; ++m) {
    for (const Partition& lam : partitions_of(m)) {
      for (const auto& T : all_syt(SkewShape(lam), 64)) {
        guard("syt2good", [&] {
          GoodTableau g = syt_to_good(T);
          t.expect(good_to_syt(g) == T, "syt2good on " + lam.to_string());
          if (lam == Partition::rectangle(lam.length(), lam[0]) && lam[0] >= 2) {
            t.expect(is_good(g, lam[0] - 1), "rank tableau not good on " + lam.to_string());
          }
        });
      }
    }
  }
  for (int k = 1; k <= 5; ++k) {
    for (int n = 1; n * (k + 1) <= 12; ++n) {
      for (const auto& g : all_good(n, k)) {
        guard("good2syt", [&] { t.expect(syt_to_good(good_to_syt(g)) == g, "good2syt"); });
      }
    }
  }
  // 213 family on basic shapes
  for (const SkewShape& s : basic_shapes_up_to(8)) {
    struct Family {
      const char* name;
      Permutation p;
      std::function<Partition(const SkewTableau&)> fwd;
      std::function<SkewTableau(const SkewShape&, const Partition&)> inv;
      std::function<Partition(const SkewShape&)> bound;
      bool needs_ribbon;
    };
    std::vector<Family> fams{
        {"213", {2, 1, 3}, [](const SkewTableau& x) { return map_213(x); },
         [](const SkewShape& sh, const Partition& tau) { return build_213(sh, tau); },
         tau_bound_213, false},
        {"132", {1, 3, 2}, map_132, build_132, tau_bound_132, false},
        {"312", {3, 1, 2}, map_312, build_312, tau_bound_312, true},
        {"231", {2, 3, 1}, map_231, build_231, tau_bound_231, true},
    };
    auto tabs = all_syt(s, 64);
    for (const auto& f : fams) {
      if (f.needs_ribbon && s.has_square()) continue;
      long avoiders = 0;
      for (const auto& T : tabs) {
        if (contains_pattern(reading_word(T), f.p)) continue;
        ++avoiders;
        guard(std::string(f.name) + " on " + s.to_string(), [&] {
          t.expect(f.inv(s, f.fwd(T)) == T, std::string(f.name) + " on " + s.to_string());
        });
      }
      auto taus = subpartitions(f.bound(s));
      t.expect(static_cast<long>(taus.size()) == avoiders,
               std::string(f.name) + " count on " + s.to_string());
      for (const auto& tau : taus) {
        guard(std::string(f.name) + "-inv on " + s.to_string(), [&] {
          t.expect(f.fwd(f.inv(s, tau)) == tau,
                   std::string(f.name) + "-inv on " + s.to_string() + " tau " + tau.to_string());
        });
      }
    }
  }
  return t.outcome("rect, good, syt/good, modified RSK, 213/132/312/231 round trips");
}

inline Outcome check_A6(const VerifyOptions&) {
  using namespace verify_detail;
  auto start = std::chrono::steady_clock::now();
  Tally t;
  const std::vector<Permutation> pats{{2, 1, 3}, {1, 3, 2}, {3, 1, 2}, {2, 3, 1}};
  long shapes = 0;
  for (const SkewShape& s : basic_shapes_up_to(8)) {
    ++shapes;
    std::vector<long> brute(4, 0);
    for_each_syt_word(
        s,
        [&](std::span<const int> w) {
          for (int i = 0; i < 4; ++i) {
            if (!contains_pattern(w, pats[i].entries())) ++brute[i];
          }
        },
        64);
    std::vector<BigCount> formula{count_213(s), count_132(s), count_312(s), count_231(s)};
    for (int i = 0; i < 4; ++i) {
      t.expect(formula[i] == brute[i], pats[i].to_string() + " on " + s.to_string() +
                                           ": formula " + str(formula[i]) + ", oracle " +
                                           std::to_string(brute[i]));
    }
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  t.expect(secs < 60, "took " + std::to_string(secs) + " s");
  return t.outcome(std::to_string(shapes) + " basic shapes x 4 patterns");
}

inline Outcome check_A7(const VerifyOptions&) {
  using namespace verify_detail;
  Tally t;
  auto guard = [&](const std::string& what, auto&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      t.fail(what + ": " + e.what());
    }
  };
  for (int k = 1; k <= 8; ++k) {
    for (int n = 1; n * k <= 8; ++n) {
      ClassSpec c(n, k, 0);
      Permutation inc = Permutation::identity(k + 2);
      std::vector<Permutation> doubly;
      for (const auto& w : class_avoiders(c, k + 2)) {
        if (is_member(w.inverse(), c)) doubly.push_back(w);
      }
      long sn = 0, sn_inv = 0;
      for_each_permutation(n, [&](std::span<const int> v) {
        if (contains_pattern(v, inc.entries())) return;
        ++sn;
        if (perm(v).is_involution()) ++sn_inv;
      });
      long d_inv = static_cast<long>(involutions_in(doubly).size());
      t.expect(static_cast<long>(doubly.size()) == sn && d_inv == sn_inv,
               c.to_string() + ": doubly " + std::to_string(doubly.size()) + "/" +
                   std::to_string(d_inv) + ", S_n " + std::to_string(sn) + "/" +
                   std::to_string(sn_inv));
      std::set<std::vector<int>> images;
      for (const auto& w : doubly) {
        guard("doubly " + w.to_string(), [&] {
          Permutation v = doubly_map(w, c);
          images.insert(std::vector<int>(v.begin(), v.end()));
          t.expect(v.size() == n && !contains_pattern(v, inc), "image of " + w.to_string());
          t.expect(v.is_involution() == w.is_involution(),
                   "involution not preserved at " + w.to_string());
          t.expect(doubly_map_inverse(v, c) == w, "doubly inverse at " + w.to_string());
        });
      }
      t.expect(images.size() == doubly.size(), "doubly map not injective in " + c.to_string());
    }
  }
  return t.outcome("all (n,k) with nk <= 8, doubly map bijective");
}

inline Outcome check_A8(const VerifyOptions&) {
  using namespace verify_detail;
  Tally t;
  Permutation p123{1, 2, 3}, p321{3, 2, 1};
  long moves = 0;
  for (const SkewShape& s : basic_shapes_up_to(8)) {
    if (s.max_column_length() <= 2) {
      BigCount oracle = count_avoiders(s, p321, 64);
      t.expect(count_321(s) == oracle, "count_321 on " + s.to_string() + ": " +
                                           str(count_321(s)) + " vs oracle " + str(oracle));
    }
    if (s.max_row_length() > 2) continue;
    BigCount oracle = count_avoiders(s, p123, 64);
    t.expect(count_123(s) == oracle, "count_123 on " + s.to_string() + ": " +
                                         str(count_123(s)) + " vs oracle " + str(oracle));
    for (int row = 0; row < s.rows(); ++row) {
      if (s.row_length(row) != 2) continue;
      for (SlideKind kind : {SlideKind::through_row, SlideKind::above_row}) {
        if (kind == SlideKind::above_row && row == 0) continue;
        for (int delta : {1, -1}) {
          SkewShape moved;
          try {
            moved = slide_move(s, row, kind, delta);
          } catch (const DomainError&) {
            continue;
          }
          ++moves;
          BigCount after = count_avoiders(moved, p123, 64);
          t.expect(after == oracle, "slide row " + std::to_string(row) + " of " +
                                        s.to_string() + " -> " + moved.to_string() + ": " +
                                        str(oracle) + " vs " + str(after));
          t.expect(slide_move(moved, row, kind, -delta) == s, "slide back " + s.to_string());
        }
      }
    }
  }
  return t.outcome(std::to_string(moves) + " slide moves");
}

inline Outcome check_A9(const VerifyOptions&) {
  using namespace verify_detail;
  Tally t;
  long ascents = 0;
  for_each_permutation(7, [&](std::span<const int> wv) {
    Permutation w = perm(wv);
    std::vector<Cell> prev;
    RskPair pq = rsk(w, [&](int step, int, const std::vector<Cell>& path, const Rows&) {
      if (step > 0 && w[step - 1] < w[step]) {
        ++ascents;
        t.expect(path_dominates(prev, path), "path dominance at " + w.to_string());
      }
      prev = path;
    });
    t.expect(static_cast<int>(pq.P.rows()[0].size()) == lis_length(w), "lis " + w.to_string());
  });
  for_each_permutation(6, [&](std::span<const int> wv) {
    Permutation w = perm(wv);
    RskPair a = rsk(w), b = rsk(w.inverse());
    t.expect(a.P == b.Q && a.Q == b.P, "symmetry " + w.to_string());
  });
  return t.outcome("S_7 lis and " + std::to_string(ascents) + " ascents; S_6 symmetry");
}

// ---------------------------------------------------------------------------
// Module invariant suites (bounded by max_boxes)
// ---------------------------------------------------------------------------

inline Outcome check_core(const VerifyOptions& o) {
  using namespace verify_detail;
  Tally t;
  int m = std::min(o.max_boxes, 7);
  std::vector<Permutation> pats;
  for (int len = 1; len <= 4; ++len) {
    for_each_permutation(len, [&](std::span<const int> p) { pats.push_back(perm(p)); });
  }
  for (int n = 0; n <= m; ++n) {
    for_each_permutation(n, [&](std::span<const int> w) {
      for (const auto& p : pats) {
        t.expect(contains_pattern(w, p.entries()) == naive_contains(w, p.entries()),
                 "containment of " + p.to_string() + " in " + perm(w).to_string());
      }
    });
  }
  for (const SkewShape& s : basic_shapes_up_to(m)) {
    t.expect(s.rotated().is_basic() && s.conjugate().is_basic(),
             "rotation/conjugate of basic " + s.to_string());
    t.expect(normalize_shape(s) == s, "basic shape not normalized " + s.to_string());
    for (const auto& T : all_syt(s, 64)) {
      Permutation w = reading_word(T);
      t.expect(reading_word(rotate_complement(T)) == w.reverse().complement(),
               "rotate-complement word on " + s.to_string());
      if (!s.has_square()) {
        t.expect(reading_word(conjugate(T)) == w.reverse(), "conjugate word on " + s.to_string());
      }
    }
  }
  // normalization of arbitrary skew shapes inside a 4 x 4 box
  for (int a = 0; a < 625; ++a) {
    std::vector<int> outer{a / 125 % 5, a / 25 % 5, a / 5 % 5, a % 5};
    if (!std::is_sorted(outer.rbegin(), outer.rend())) continue;
    for (int b = 0; b < 625; ++b) {
      std::vector<int> inner{b / 125 % 5, b / 25 % 5, b / 5 % 5, b % 5};
      if (!std::is_sorted(inner.rbegin(), inner.rend())) continue;
      Partition O(outer), I(inner);
      if (!O.contains(I) || O.size() - I.size() > m || O.size() == I.size()) continue;
      SkewShape s(O, I);
      SkewShape ns = normalize_shape(s);
      std::set<std::vector<int>> ws, wn;
      for_each_syt_word(s, [&](std::span<const int> w) { ws.insert({w.begin(), w.end()}); }, 64);
      for_each_syt_word(ns, [&](std::span<const int> w) { wn.insert({w.begin(), w.end()}); }, 64);
      t.expect(ns.is_basic() && normalize_shape(ns) == ns && ws == wn,
               "normalize " + s.to_string() + " -> " + ns.to_string());
    }
  }
  for (const ClassSpec& c : classes_up_to(m)) {
    auto a = all_class(c, 64), b = filter_class(c, 64);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    t.expect(a == b, "class words vs filter in " + c.to_string());
    if (c.r != 0) continue;
    // descent-set description of the avoiders
    Permutation inc = Permutation::identity(c.k + 2);
    for_each_permutation(c.length(), [&](std::span<const int> w) {
      Permutation p = perm(w);
      if (contains_pattern(p, inc)) return;
      bool desc_ok = true;
      for (int d : descent_set(p)) desc_ok = desc_ok && d % c.k == 0;
      t.expect(desc_ok == is_member(p, c), "descent description at " + p.to_string());
    });
  }
  return t.outcome("containment, symmetries, normalization, class membership");
}

inline Outcome check_enumerate(const VerifyOptions& o) {
  using namespace verify_detail;
  Tally t;
  for (const SkewShape& s : basic_shapes_up_to(o.max_boxes)) {
    std::set<std::vector<int>> words;
    long count = 0;
    for_each_syt(
        s,
        [&](const SkewTableau& T) {
          ++count;
          auto w = reading_word(T);
          words.insert({w.begin(), w.end()});
        },
        64);
    t.expect(BigCount(count) == skew_count(s) && words.size() == static_cast<size_t>(count),
             "tableau count on " + s.to_string());
    auto taus = subpartitions(s.inner());
    std::set<std::vector<int>> distinct;
    for (const auto& tau : taus) {
      distinct.insert({tau.parts().begin(), tau.parts().end()});
      t.expect(s.inner().contains(tau), "subpartition escapes " + s.inner().to_string());
    }
    t.expect(distinct.size() == taus.size() &&
                 BigCount(taus.size()) == count_subpartitions(s.inner()),
             "subpartitions of " + s.inner().to_string());
  }
  return t.outcome("tableau and subpartition enumeration");
}

inline Outcome check_counting(const VerifyOptions& o) {
  using namespace verify_detail;
  Tally t;
  for (int m = 1; m <= o.max_boxes; ++m) {
    for (const Partition& lam : partitions_of(m)) {
      long n = 0;
      for_each_syt_word(SkewShape(lam), [&](std::span<const int>) { ++n; }, 64);
      t.expect(hook_count(lam) == n, "hook formula on " + lam.to_string());
    }
  }
  for (int n = 1; n <= 12; ++n) {
    t.expect(count_A2n_1234(n) == count_class_monotone(ClassSpec(n, 2, 0), 4), "A2n identity");
    t.expect(count_A2n1_1234(n) == count_class_monotone(ClassSpec(n, 2, 1), 4),
             "A2n+1 identity n=" + std::to_string(n));
    std::vector<int> stair;
    for (int i = n - 1; i >= 1; --i) stair.push_back(i);
    t.expect(count_subpartitions(Partition(stair)) == catalan(n), "Catalan staircase");
  }
  Permutation p123{1, 2, 3}, p321{3, 2, 1};
  for (const SkewShape& s : basic_shapes_up_to(o.max_boxes)) {
    t.expect(count_123(s) == count_avoiders(s, p123, 64), "count_123 on " + s.to_string());
    t.expect(count_321(s) == count_avoiders(s, p321, 64), "count_321 on " + s.to_string());
  }
  return t.outcome("hook lengths, class formulas, 123/321 on all basic shapes");
}

inline Outcome check_rsk(const VerifyOptions& o) {
  using namespace verify_detail;
  Tally t;
  int m = std::min(o.max_boxes, 7);
  for (int n = 0; n <= m; ++n) {
    for_each_permutation(n, [&](std::span<const int> wv) {
      Permutation w = perm(wv);
      RskPair pq = rsk(w);
      t.expect(pq.P.shape() == pq.Q.shape() && rsk_inverse(pq.P, pq.Q) == w,
               "rsk round trip " + w.to_string());
      t.expect(static_cast<int>(pq.P.rows().size()) == lds_length(w.entries()),
               "lds " + w.to_string());
    });
  }
  for (const ClassSpec& c : classes_up_to(o.max_boxes)) {
    std::set<std::string> seen;
    auto avoiders = class_avoiders(c, c.k + 2);
    for (const auto& w : avoiders) {
      TableauPair pr = c.r == 0 ? modified_rsk(w, c) : modified_rsk_odd(w, c);
      seen.insert(pair_key(pr));
    }
    t.expect(seen.size() == avoiders.size() &&
                 BigCount(seen.size()) == count_class_monotone(c, c.k + 2),
             "modified RSK image size in " + c.to_string());
    if (c.r != 0) continue;
    for (const auto& w : avoiders) {
      RskPair pq = rsk(w);
      PairedTableau R = encode_recording(pq.Q, c.k);
      t.expect(decode_recording(R, c.k) == pq.Q, "recording pairing " + w.to_string());
      if (c.k == 1 && is_member(w.inverse(), c) && !contains_pattern(w, Permutation{1, 2, 3})) {
        t.expect(doubly_map(w, c) == w, "k=1 doubly map " + w.to_string());
      }
    }
  }
  return t.outcome("RSK, modified RSK and recording pairing");
}

inline Outcome check_bijections(const VerifyOptions& o) {
  using namespace verify_detail;
  Tally t;
  for (const ClassSpec& c : classes_up_to(9)) {
    std::set<std::string> images;
    auto avoiders = class_avoiders(c, c.k + 2);
    for (const auto& w : avoiders) {
      GoodTableau g = good_of_perm(w, c);
      if (c.r == 0) {
        auto err = good_violation(g, c.k);
        t.expect(!err, "G1/G2 fail for " + w.to_string() + ": " + err.value_or(""));
      }
      SkewTableau T = k2_bijection(w, c);
      t.expect(T.shape() == SkewShape(k2_target_shape(c)), "k2 shape " + w.to_string());
      t.expect(k2_inverse(T, c) == w, "k2 inverse " + w.to_string());
      images.insert(rows_key(T.rows()));
    }
    t.expect(BigCount(images.size()) == count_class_monotone(c, c.k + 2),
             "k2 image size in " + c.to_string());
  }
  for (const SkewShape& s : basic_shapes_up_to(o.max_boxes)) {
    if (s.has_square()) {
      bool threw = false;
      try {
        build_312(s, Partition{});
      } catch (const DomainError&) {
        threw = true;
      }
      t.expect(threw, "312 accepted a square in " + s.to_string());
    }
    for (int row = 0; row < s.rows(); ++row) {
      if (s.max_row_length() > 2 || s.row_length(row) != 2) continue;
      SkewShape moved = slide_move(s, row, SlideKind::through_row);
      t.expect(slide_move(moved, row, SlideKind::through_row, -1) == s,
               "slide back " + s.to_string());
      for (const auto& T : all_syt(s, 64)) {
        if (contains_pattern(reading_word(T), Permutation{1, 2, 3})) continue;
        try {
          t.expect(reading_word(transport(T, row, SlideKind::through_row)) == reading_word(T),
                   "transport word " + s.to_string());
        } catch (const DomainError& e) {
          t.fail("transport on " + s.to_string() + ": " + e.what());
        }
      }
    }
  }
  // build_213 depends on mu only: every basic extension accepts every tau.
  for (const SkewShape& s : basic_shapes_up_to(o.max_boxes)) {
    for (const auto& tau : subpartitions(s.inner())) {
      try {
        t.expect(map_213(build_213(s, tau)) == tau, "213 on " + s.to_string());
      } catch (const DomainError& e) {
        t.fail("build_213 on " + s.to_string() + ": " + e.what());
      }
    }
  }
  return t.outcome("good tableaux, k+2 composite, slides, 213 on every extension");
}

// ---------------------------------------------------------------------------
// Registry and runner
// ---------------------------------------------------------------------------

inline std::vector<Check> all_checks() {
  return {
      {"acceptance", "A1", check_A1},
      {"acceptance", "A2", check_A2},
      {"acceptance", "A3", check_A3},
      {"acceptance", "A4", check_A4},
      {"acceptance", "A5", check_A5},
      {"acceptance", "A6", check_A6},
      {"acceptance", "A7", check_A7},
      {"acceptance", "A8", check_A8},
      {"acceptance", "A9", check_A9},
      {"core", "core", check_core},
      {"enumerate", "enumerate", check_enumerate},
      {"counting", "counting", check_counting},
      {"rsk", "rsk", check_rsk},
      {"bijections", "bijections", check_bijections},
  };
}

// Selects checks by suite or check name; "all" selects everything.
inline std::vector<Check> select_checks(const std::vector<std::string>& names) {
  std::vector<Check> out;
  for (const Check& c : all_checks()) {
    for (const auto& n : names) {
      if (n == "all" || n == c.suite || n == c.name) {
        out.push_back(c);
        break;
      }
    }
  }
  return out;
}

inline CheckResult run_check(const Check& c, const VerifyOptions& o) {
  auto start = std::chrono::steady_clock::now();
  CheckResult r{c.suite, c.name, false, "", 0};
  try {
    Outcome out = c.run(o);
    r.passed = out.passed;
    r.detail = out.detail;
  } catch (const std::exception& e) {
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

// Runs the checks on a pool of o.jobs workers; results keep input order.
// `report` is called from the calling thread in input order.
inline std::vector<CheckResult> run_checks(const std::vector<Check>& checks,
                                           const VerifyOptions& o,
                                           const std::function<void(const CheckResult&)>& report = {}) {
  int jobs = o.jobs > 0 ? o.jobs : static_cast<int>(std::thread::hardware_concurrency());
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(checks.size())));
  std::vector<CheckResult> results(checks.size());
  if (jobs == 1) {
    for (std::size_t i = 0; i < checks.size(); ++i) {
      results[i] = run_check(checks[i], o);
      if (report) report(results[i]);
    }
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (int j = 0; j < jobs; ++j) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < checks.size(); i = next++) {
        results[i] = run_check(checks[i], o);
      }
    });
  }
  for (auto& th : pool) th.join();
  if (report) {
    for (const auto& r : results) report(r);
  }
  return results;
}

inline std::string format_result(const CheckResult& r) {
  char secs[32];
  std::snprintf(secs, sizeof secs, "%.2fs", r.seconds);
  return std::string(r.passed ? "PASS " : "FAIL ") + r.name + " [" + secs + "] " + r.detail;
}

}  // namespace skewpat
