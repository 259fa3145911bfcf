#include "doctest.h"

#include "oracles.hpp"
#include "properties.hpp"
#include "reflekt/tables.hpp"

using namespace reflekt;

namespace {
MatGroup named(const char* key) {
  auto [n, p] = parse_group_name(key);
  return get_group(n, p);
}
MatGroup pm1(int n) {
  std::vector<CycNum> d(n, CycNum(-1));
  return MatGroup::close({diag(d)});
}
std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}
}  // namespace

TEST_CASE("quotients: goodness") {
  CHECK(is_good(named("G12"), pm1(2)).good);
  QuotientResult z = is_good(named("Z(2,4)"), pm1(2));
  CHECK(!z.good);
  CHECK(z.reason == GoodReason::NonInvariantAlpha);
  CHECK(proportionality(z.witness_alpha, MPoly::parse("X2", 2)));
  QuotientResult b = is_good(named("G(4,1,2)"), pm1(2));
  CHECK(!b.good);
  CHECK(b.reason == GoodReason::NonInvariantAlpha);
  CHECK(is_good(named("G(4,2,2)"), MatGroup::close({diag({-1, 1}), diag({1, -1})})).reason ==
        GoodReason::ReflectionSubgroup);
  CHECK(is_good(named("Z(2,2)"), MatGroup::close({diag({CycNum(-1), CycNum(1)})})).good);
  CHECK_THROWS_AS(is_good(named("G(4,1,2)"), MatGroup::close({parse_matrix({{"0", "1"}, {"1", "0"}})})), Error);
}

TEST_CASE("quotients: derived subgroups are good") {
  for (auto key : {"G(4,2,2)", "I2(5)", "G(3,1,2)", "G4", "G12", "A(3)", "B(3)", "G(3,3,3)", "Z(2,4)"}) {
    INFO(key);
    MatGroup W = named(key);
    CHECK(is_good(W, derived_subgroup(W)).good);
  }
}

TEST_CASE("quotients: quotient construction") {
  QuotientResult q = quotient_map(named("G22"), pm1(2));
  CHECK(q.W.order() == 120);
  CHECK(sorted(q.W_degrees) == std::vector<int>{2, 6, 10});
  MatGroup G13 = named("G13");
  QuotientResult r = quotient_map(G13, quaternion_subgroup(G13));
  CHECK(sorted(r.W_degrees) == std::vector<int>{2, 2, 3});
  CHECK(r.relation_degrees == std::vector<int>{12});
  CHECK(oracle::count_reflections(r.W) > 0);
  CHECK(reflection_subgroup(r.W).order() == r.W.order());
  CHECK_THROWS_AS(quotient_map(named("Z(2,4)"), pm1(2)), Error);
}

TEST_CASE("quotients: generators from pairs of reflections") {
  GoodGenerators g = good_generators(named("I2(4)"), pm1(2));
  CHECK(g.all_in_G);
  CHECK(g.generates);
  CHECK(g.generated_order == 2);
  GoodGenerators t = good_generators(named("G12"), MatGroup::trivial(2));
  CHECK(t.generated_order == 1);
  CHECK(t.generates);
  MatGroup G13 = named("G13");
  CHECK(good_generators(G13, quaternion_subgroup(G13)).generates);
}

TEST_CASE("quotients: hyperplane correspondence") {
  MatGroup G12 = named("G12");
  QuotientResult q = quotient_map(G12, pm1(2));
  HyperplaneCorrespondence h = hyperplane_map(G12, pm1(2), q);
  CHECK(h.bijective);
  CHECK(h.orders_match);
  CHECK(h.w_hyperplanes.size() == 6);
  CHECK(static_cast<int>(h.w_hyperplanes.size()) == oracle::count_reflections(q.W));

  MatGroup B = named("G(4,1,2)");
  MatGroup C4 = MatGroup::close({diag({CycNum::zeta(4), CycNum::root_of_unity(4, 3)})});
  QuotientResult r = quotient_map(B, C4);
  HyperplaneCorrespondence hc = hyperplane_map(B, C4, r);
  CHECK(hc.orders_match);
  std::multiset<int> orders;
  for (auto& w : hc.w_hyperplanes) orders.insert(w.order());
  CHECK(orders.count(4) >= 1);
}

TEST_CASE("quotients: degree identity") {
  QuotientResult q = quotient_map(named("G12"), pm1(2));
  DegreeIdentity d = verify_degree_identity(named("G12"), q);
  CHECK(d.holds);
  CHECK(sorted(d.lhs) == std::vector<int>{4, 6, 8});
  MatGroup G13 = named("G13");
  CHECK(verify_degree_identity(G13, quotient_map(G13, quaternion_subgroup(G13))).holds);
  MatGroup B = named("G(3,1,2)");
  QuotientResult t = quotient_map(B, MatGroup::trivial(2));
  CHECK(sorted(t.W_degrees) == sorted(reflection_degrees(B)));
  CHECK(verify_degree_identity(B, t).holds);
}

TEST_CASE("quotients: index-p subgroup of SL") {
  SLPrimeReport b = sl_prime_quotient(named("G(2,1,2)"));
  CHECK(b.N == 4);
  CHECK(sorted(b.computed_degrees) == std::vector<int>{2, 4, 4});
  CHECK(b.computed_relations == std::vector<int>{8});
  CHECK(b.consistent);
  SLPrimeReport s = sl_prime_quotient(named("G(3,3,2)"));
  CHECK(s.N == 3);
  CHECK(sorted(s.computed_degrees) == std::vector<int>{2, 3, 3});
  CHECK(s.computed_relations == std::vector<int>{6});
  SLPrimeReport g = sl_prime_quotient(named("G12"));
  CHECK(sorted(g.computed_degrees) == std::vector<int>{6, 8, 12});
  CHECK(g.computed_relations == std::vector<int>{24});
}

TEST_CASE("quotients: relation normalizer spot checks") {
  MatGroup mu2 = pm1(2);
  InvariantPresentation p = invariant_presentation(mu2);
  CHECK(in_Nrel(mu2, p, parse_matrix({{"0", "1"}, {"1", "0"}})));
  CHECK(!in_Nrel(mu2, p, diag({CycNum(1), CycNum::zeta(4)})));
  MatGroup S4 = named("Stilde4");
  MatGroup Q8 = quaternion_subgroup(S4);
  InvariantPresentation q = invariant_presentation(Q8);
  for (auto& g : S4.generators()) CHECK(in_Nrel(Q8, q, g));
  CHECK(in_Nrel(Q8, q, diag({CycNum::zeta(8), CycNum::root_of_unity(8, 7)})));
}

TEST_CASE("quotients: scalars in the relation normalizer of C_d") {
  for (int d = 3; d <= 5; ++d) {
    MatGroup C = get_group("C", {d});
    InvariantPresentation p = invariant_presentation(C);
    CycNum a = CycNum::zeta(2 * d), b = CycNum::zeta(4 * d);
    CHECK(in_Nrel(C, p, diag({a, a})));
    CHECK(!in_Nrel(C, p, diag({b, b})));
    CHECK(in_Nrel(C, p, parse_matrix({{"0", "1"}, {"1", "0"}})));
  }
}

TEST_CASE("quotients: reducible sweep") {
  auto r = props::reducible_sweep(6);
  CHECK(r.cases > 30);
  CHECK(r.mismatches.empty());
}

TEST_CASE("quotients: parabolic inheritance") {
  CHECK(props::parabolic_failures(named("G12"), pm1(2)) == 0);
  CHECK(props::parabolic_failures(named("G(4,2,2)"), pm1(2)) == 0);
  CHECK(props::parabolic_failures(named("B(3)"), derived_subgroup(named("B(3)"))) == 0);
  CHECK(props::parabolic_failures(named("G(4,2,3)"), derived_subgroup(named("G(4,2,3)"))) == 0);
  MatGroup G13 = named("G13");
  CHECK(props::parabolic_failures(G13, quaternion_subgroup(G13)) == 0);
}
