#include "doctest.h"

#include "oracles.hpp"
#include "reflekt/catalog.hpp"
#include "reflekt/invariants.hpp"

using namespace reflekt;

namespace {
MatGroup named(const char* key) {
  auto [n, p] = parse_group_name(key);
  return get_group(n, p);
}
std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}
}  // namespace

TEST_CASE("invariants: Molien series") {
  auto m = molien(MatGroup::close({diag({-1, -1})}), 7);
  std::vector<Rational> expect = {1, 0, 3, 0, 5, 0, 7, 0};
  for (int d = 0; d <= 7; ++d) CHECK(m[d] == expect[d]);
  auto one = molien(MatGroup::trivial(1), 5);
  for (int d = 0; d <= 5; ++d) CHECK(one[d] == 1);
  auto s3 = molien(named("G(3,3,2)"), 20);
  auto prod = oracle::product_series({2, 3}, 20);
  for (int d = 0; d <= 20; ++d) CHECK(s3[d] == prod[d]);
}

TEST_CASE("invariants: Molien agrees with invariant dimensions up to degree 12") {
  for (auto key : {"G(4,2,2)", "Itilde2(2)", "C(5)", "G12", "A(3)", "Z(2,4)", "Atilde4", "G(3,1,2)"}) {
    MatGroup G = named(key);
    auto m = molien(G, 12);
    for (int d = 0; d <= 12; ++d) {
      INFO(key << " degree " << d);
      CHECK(m[d] == static_cast<long>(invariant_basis(G, d).size()));
    }
  }
}

TEST_CASE("invariants: degrees of reflection groups") {
  CHECK(sorted(reflection_degrees(named("G12"))) == std::vector<int>{6, 8});
  CHECK(sorted(reflection_degrees(named("G(6,3,2)"))) == std::vector<int>{4, 6});
  CHECK(sorted(reflection_degrees(named("H3"))) == std::vector<int>{2, 6, 10});
  CHECK(sorted(reflection_degrees(named("B(3)"))) == std::vector<int>{2, 4, 6});
  CHECK_THROWS_AS(reflection_degrees(named("Itilde2(2)")), Error);
  for (auto key : {"G(4,2,2)", "G(3,1,2)", "G4", "G13", "A(3)", "F4"}) {
    MatGroup W = named(key);
    auto d = reflection_degrees(W);
    long prod = 1, refl = 0;
    for (int x : d) {
      prod *= x;
      refl += x - 1;
    }
    CHECK(prod == W.order());
    CHECK(refl == oracle::count_reflections(W));
  }
}

TEST_CASE("invariants: minimal generators of SL2 subgroups") {
  CHECK(sorted(min_generator_degrees(named("Itilde2(2)"), 0).generator_degrees) == std::vector<int>{4, 4, 6});
  for (int d = 3; d <= 6; ++d)
    CHECK(sorted(min_generator_degrees(get_group("C", {d}), 0).generator_degrees) == std::vector<int>{2, d, d});
  CHECK(sorted(min_generator_degrees(named("Atilde5"), 0).generator_degrees) == std::vector<int>{12, 20, 30});
}

TEST_CASE("invariants: relations over given generators") {
  MatGroup mu2 = MatGroup::close({diag({-1, -1})});
  InvariantPresentation p;
  p.nvars = 2;
  p.generator_degrees = {2, 2, 2};
  p.generators = {MPoly::parse("X1*X2", 2), MPoly::parse("X1^2", 2), MPoly::parse("X2^2", 2)};
  p = relation_generators(mu2, p, 8);
  REQUIRE(p.relations.size() == 1);
  CHECK(p.relation_degrees == std::vector<int>{4});
  CHECK(proportionality(p.relations[0], MPoly::parse("Y1^2 - Y2*Y3", 3, 'Y', {2, 2, 2})));

  for (int d = 2; d <= 4; ++d) {
    MatGroup G = get_group("Itilde2", {d});
    std::string s = std::to_string(d), s2 = std::to_string(2 * d);
    InvariantPresentation q;
    q.nvars = 2;
    q.generator_degrees = {4, 2 * d, 2 * d + 2};
    q.generators = {MPoly::parse("X1^2*X2^2", 2), MPoly::parse(("X1^" + s2 + " + X2^" + s2).c_str(), 2),
                    MPoly::parse(("X1*X2*(X1^" + s2 + " - X2^" + s2 + ")").c_str(), 2)};
    q = relation_generators(G, q, 8 * (d + 1));
    REQUIRE(q.relations.size() == 1);
    CHECK(q.relation_degrees == std::vector<int>{4 * (d + 1)});
    MPoly R = MPoly::parse(("Y3^2 - Y1*(Y2^2 - 4*Y1^" + s + ")").c_str(), 3, 'Y', {4, 2 * d, 2 * d + 2});
    CHECK(proportionality(q.relations[0], R));
  }
}

TEST_CASE("invariants: presentations are certified") {
  for (auto key : {"Itilde2(3)", "C(4)", "Z(2,4)", "G(4,2,2)"}) {
    auto p = invariant_presentation(named(key));
    CHECK(p.certified);
    CHECK(molien_matches(named(key), p.generator_degrees, p.relation_degrees));
  }
  CHECK(!molien_matches(named("Itilde2(2)"), {4, 4, 6}, {10}));
}

TEST_CASE("invariants: Reynolds images span the invariants") {
  for (auto key : {"G(4,2,2)", "Itilde2(2)", "C(3)"}) {
    MatGroup G = named(key);
    for (int d = 1; d <= 8; ++d) {
      auto basis = invariant_basis(G, d);
      DegreeSpace space(2, d);
      SparseEchelon span(space.size());
      for (auto& e : space.monomials()) {
        MPoly r = reynolds(G, MPoly::monomial(e, CycNum(1)));
        for (auto& g : G.generators()) CHECK(act(g, r) == r);
        span.insert(space.coords(r));
      }
      INFO(key << " degree " << d);
      CHECK(span.rank() == static_cast<int>(basis.size()));
    }
  }
}
