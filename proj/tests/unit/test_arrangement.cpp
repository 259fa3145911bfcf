#include "doctest.h"

#include <set>

#include "oracles.hpp"
#include "reflekt/arrangement.hpp"
#include "reflekt/catalog.hpp"

using namespace reflekt;

namespace {
MatGroup pm1(int n) {
  std::vector<CycNum> d(n, CycNum(-1));
  return MatGroup::close({diag(d)});
}
}  // namespace

TEST_CASE("arrangement: hyperplanes and inertia orders") {
  MatGroup Z = get_group("Z", {2, 4});
  auto hs = hyperplanes(Z);
  REQUIRE(hs.size() == 2);
  std::multiset<int> orders;
  for (auto& h : hs) orders.insert(h.order());
  CHECK(orders == std::multiset<int>{2, 4});

  auto s3 = hyperplanes(get_group("G", {3, 3, 2}));
  CHECK(s3.size() == 3);
  for (auto& h : s3) CHECK(h.order() == 2);

  // oracle: distinct fixed hyperplanes of the brute-force reflections
  MatGroup G12 = get_group("G12");
  std::set<std::string> normals;
  for (auto& g : G12.elements()) {
    Mat m = g - identity<CycNum>(2);
    if (rank<CycNum>(m) != 1) continue;
    std::string key;
    for (auto& c : reflection_normal(g)) key += c.str() + ";";
    normals.insert(key);
  }
  CHECK(hyperplanes(G12).size() == normals.size());
  CHECK(normals.size() == 12);
}

TEST_CASE("arrangement: classes relative to a subgroup") {
  MatGroup B24 = get_group("G", {4, 1, 2});
  Arrangement a = aprime_classes(B24, pm1(2));
  CHECK(a.classes.size() == 4);
  std::multiset<std::size_t> sizes;
  for (auto& c : a.classes) sizes.insert(c.members.size());
  CHECK(sizes == std::multiset<std::size_t>{1, 1, 2, 2});

  Arrangement triv = aprime_classes(B24, MatGroup::trivial(2));
  CHECK(triv.classes.size() == triv.hyperplanes.size());

  Arrangement z = aprime_classes(get_group("Z", {2, 4}), pm1(2));
  REQUIRE(z.classes.size() == 2);
  for (auto& c : z.classes) CHECK(c.members.size() == 1);
}

TEST_CASE("arrangement: class products") {
  Arrangement a = aprime_classes(get_group("G", {4, 1, 2}), pm1(2));
  auto has = [&](const char* text) {
    MPoly q = MPoly::parse(text, 2);
    for (auto& c : a.classes)
      if (proportionality(c.alpha_C, q)) return true;
    return false;
  };
  CHECK(has("X1^2 - X2^2"));
  CHECK(has("X1^2 + X2^2"));
  CHECK(has("X1"));
  CHECK(has("X2"));
  for (auto& c : a.classes) CHECK(alpha_C(c, a.hyperplanes) == c.alpha_C);
  Arrangement z = aprime_classes(get_group("Z", {2, 4}), MatGroup::trivial(2));
  for (auto& c : z.classes) CHECK(c.alpha_C.degree() == 1);

  const G31Data& d = g31_data();
  MatGroup W = get_group("G31"), G = get_group("G31sub");
  Arrangement g31 = aprime_classes(W, G);
  int matched = 0;
  for (auto& p : d.class_products)
    for (auto& c : g31.classes)
      if (proportionality(c.alpha_C, p)) {
        ++matched;
        break;
      }
  CHECK(matched == 5);
}
