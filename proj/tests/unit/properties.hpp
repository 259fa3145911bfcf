#pragma once

#include <set>
#include <string>
#include <vector>

#include "reflekt/arrangement.hpp"
#include "reflekt/catalog.hpp"
#include "reflekt/quotients.hpp"
#include "oracles.hpp"

namespace props {

// Pointwise stabilizers W_L of the subspaces L cut out by one or two
// hyperplanes of W, each listed once.
inline std::vector<reflekt::MatGroup> parabolics(const reflekt::MatGroup& W) {
  using namespace reflekt;
  auto hs = hyperplanes(W);
  const int n = W.dim();
  std::set<std::vector<int>> seen;
  std::vector<MatGroup> out;
  auto add = [&](const std::vector<int>& which) {
    Mat rows(static_cast<int>(which.size()), n);
    for (std::size_t r = 0; r < which.size(); ++r)
      for (int j = 0; j < n; ++j) rows(r, j) = hs[which[r]].normal[j];
    Mat L = nullspace<CycNum>(rows);  // columns span L
    if (L.cols() != n - static_cast<int>(which.size())) return;
    std::vector<int> ids;
    for (int id = 0; id < W.order(); ++id)
      if (oracle::all_zero(mul<CycNum>(W.element(id) - identity<CycNum>(n), L))) ids.push_back(id);
    if (!seen.insert(ids).second) return;
    out.push_back(group_from_subset(ids, W));
  };
  for (std::size_t i = 0; i < hs.size(); ++i) add({static_cast<int>(i)});
  if (n >= 3)
    for (std::size_t i = 0; i < hs.size(); ++i)
      for (std::size_t j = i + 1; j < hs.size(); ++j) add({static_cast<int>(i), static_cast<int>(j)});
  return out;
}

inline reflekt::MatGroup intersect(const reflekt::MatGroup& A, const reflekt::MatGroup& B,
                                   const reflekt::MatGroup& ambient) {
  auto a = A.ids_in(ambient), b = B.ids_in(ambient);
  std::vector<int> c;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(c));
  return reflekt::group_from_subset(c, ambient);
}

// Number of parabolic subgroups W_L (codim 1 and 2) for which G cap W_L
// fails to be good; -1 if the pair itself is not good.
inline int parabolic_failures(const reflekt::MatGroup& W, const reflekt::MatGroup& G) {
  using namespace reflekt;
  if (!is_good(W, G).good) return -1;
  int bad = 0;
  for (auto& WL : parabolics(W)) {
    MatGroup GL = intersect(WL, G, W);
    if (!is_good(WL, GL).good) ++bad;
  }
  return bad;
}

// d | gcd(p, q), d > 1: the diagonal C_d in Z/p + Z/q is good exactly when
// p | d and q | d. C_1 is trivially good.
struct SweepResult {
  int cases = 0;
  std::vector<std::string> mismatches;
};

inline SweepResult reducible_sweep(int max) {
  using namespace reflekt;
  SweepResult r;
  for (int p = 1; p <= max; ++p)
    for (int q = 1; q <= max; ++q) {
      int g = std::gcd(p, q);
      if (p < 2 && q < 2) continue;
      MatGroup W = get_group("Z", {p, q});
      for (int d = 1; d <= g; ++d) {
        if (g % d) continue;
        MatGroup C = MatGroup::close({diag({CycNum::zeta(d), CycNum::root_of_unity(d, d - 1)})});
        bool expect = d == 1 || (d % p == 0 && d % q == 0);
        bool got = is_good(W, C).good;
        ++r.cases;
        if (got != expect)
          r.mismatches.push_back("Z(" + std::to_string(p) + "," + std::to_string(q) + ") C" + std::to_string(d));
      }
    }
  return r;
}

}  // namespace props
