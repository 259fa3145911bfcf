#include "doctest.h"

#include "oracles.hpp"
#include "reflekt/catalog.hpp"

using namespace reflekt;

namespace {
Mat sigma() { return parse_matrix({{"0", "-1"}, {"1", "0"}}); }
Mat swap2() { return parse_matrix({{"0", "1"}, {"1", "0"}}); }
Mat t(long d) { return diag({CycNum::zeta(d), CycNum::root_of_unity(d, d - 1)}); }
}  // namespace

TEST_CASE("groups: closure orders") {
  CHECK(MatGroup::close({t(3)}).order() == 3);
  CHECK(MatGroup::close({sigma(), t(4)}).order() == 8);
  CHECK_THROWS_AS(MatGroup::close({}), Error);
  CHECK(MatGroup::trivial(3).order() == 1);
  for (auto [m, p, n] : {std::tuple{4, 2, 2}, {3, 1, 3}, {6, 3, 2}, {4, 4, 3}, {2, 1, 4}}) {
    long expect = 1;
    for (int i = 0; i < n; ++i) expect *= m;
    expect = expect * oracle::factorial(n) / p;
    CHECK(get_group("G", {m, p, n}).order() == expect);
  }
  CHECK_THROWS_AS(MatGroup::close({diag({2, 1})}, 1000), Error);
}

TEST_CASE("groups: element kinds and reflections") {
  MatGroup G = MatGroup::close({diag({-1, -1})});
  auto& cl = G.classes();
  REQUIRE(cl.size() == 2);
  CHECK(cl[1].kind == ElementKind::DoubleReflection);
  CHECK(cl[1].order == 2);
  MatGroup I4 = get_group("I2", {4});
  CHECK(I4.order() == 8);
  CHECK(static_cast<int>(I4.reflections().size()) == oracle::count_reflections(I4));
  CHECK(I4.reflections().size() == 4);
  CHECK(get_group("Itilde2", {2}).reflections().empty());
  for (auto name : {"G4", "G12", "G13"}) {
    MatGroup W = get_group(name);
    CHECK(static_cast<int>(W.reflections().size()) == oracle::count_reflections(W));
  }
}

TEST_CASE("groups: subgroups") {
  MatGroup B2 = get_group("G", {2, 1, 2});
  CHECK(subgroup({}, B2).order() == 1);
  CHECK(reflection_subgroup(B2).order() == B2.order());
  CHECK(reflection_subgroup(get_group("Itilde2", {2})).order() == 1);
  CHECK(is_normal(B2, center(B2)));
  MatGroup S3 = get_group("G", {3, 3, 2});
  CHECK(derived_subgroup(S3).order() == 3);
  CHECK(!is_normal(B2, subgroup_of_elements({swap2()}, B2)));
  CHECK(in_SL(get_group("Itilde2", {3})));
  CHECK(!in_SL(B2));
  CHECK(in_SL(MatGroup::trivial(2)));
  CHECK(sl_part(get_group("G12")).order() == 24);
}

TEST_CASE("groups: Lagrange on computed subgroups") {
  for (auto key : {"G(4,2,2)", "G(3,1,2)", "G12", "I2(6)", "Stilde4", "A(3)", "G(4,2,3)"}) {
    auto [name, params] = parse_group_name(key);
    MatGroup G = get_group(name, params);
    for (MatGroup H : {derived_subgroup(G), center(G), sl_part(G), reflection_subgroup(G)}) {
      CHECK(G.order() % H.order() == 0);
      CHECK(is_subgroup(H, G));
    }
    for (int id = 0; id < G.order(); id += std::max<long>(1, G.order() / 20)) {
      CHECK(G.order() % G.element_order(id) == 0);
      CHECK(G.order() % subgroup({id}, G).order() == 0);
    }
    CHECK(G.order() % G.exponent() == 0);
  }
}

TEST_CASE("groups: group table") {
  MatGroup G = get_group("G", {4, 2, 2});
  for (int a = 0; a < G.order(); a += 3)
    for (int b = 0; b < G.order(); b += 5)
      CHECK(equal<CycNum>(G.element(G.multiply(a, b)), mul<CycNum>(G.element(a), G.element(b))));
  for (int a = 0; a < G.order(); ++a) CHECK(G.multiply(a, G.inverse(a)) == 0);
}
