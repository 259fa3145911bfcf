#include "doctest.h"

#include "oracles.hpp"
#include "reflekt/catalog.hpp"
#include "reflekt/polynomials.hpp"

using namespace reflekt;

namespace {
MPoly P(const char* s, int n = 2) { return MPoly::parse(s, n); }
Mat t(long d) { return diag({CycNum::zeta(d), CycNum::root_of_unity(d, d - 1)}); }
long binom(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}
}  // namespace

TEST_CASE("polynomials: arithmetic and text") {
  MPoly a = P("X1^2*X2 - 1/2*z(4)*X2^3");
  CHECK(MPoly::parse(a.str(), 2) == a);
  CHECK(a.degree() == 3);
  CHECK(a.is_homogeneous());
  CHECK((P("X1+X2") * P("X1-X2")) == P("X1^2-X2^2"));
  CHECK(P("X1+X2").pow(3) == P("X1^3+3*X1^2*X2+3*X1*X2^2+X2^3"));
  CHECK(proportionality(P("2*X1*X2"), P("X1*X2")) == CycNum(2));
  CHECK(!proportionality(P("X1"), P("X2")));
  CHECK_THROWS_AS(MPoly::parse("X3", 2), Error);
}

TEST_CASE("polynomials: action") {
  Mat swap = parse_matrix({{"0", "1"}, {"1", "0"}});
  CHECK(act(swap, P("X1")) == P("X2"));
  CHECK(act(diag({-1, -1}), P("X1*X2")) == P("X1*X2"));
  for (int d = 2; d <= 6; ++d) {
    MPoly xd = MPoly::variable(2, 0).pow(d);
    CHECK(act(t(d), xd) == xd);
  }
}

TEST_CASE("polynomials: action axioms") {
  MatGroup G = get_group("G", {4, 2, 2});
  MatGroup H = get_group("G12");
  std::vector<MPoly> ps = {P("X1^3 + z(4)*X1*X2^2"), P("X1^2*X2^2 - X2^4 + 3*X1"), P("z(8)*X1 + X2")};
  for (auto* grp : {&G, &H}) {
    const auto& els = grp->elements();
    for (std::size_t i = 0; i < els.size(); i += 5)
      for (std::size_t j = 0; j < els.size(); j += 7)
        for (auto& p : ps) {
          CHECK(act(mul<CycNum>(els[i], els[j]), p) == act(els[i], act(els[j], p)));
        }
    for (auto& p : ps) CHECK(act(identity<CycNum>(2), p) == p);
    CHECK(act(els[3], ps[0] + ps[1]) == act(els[3], ps[0]) + act(els[3], ps[1]));
    CHECK(act(els[3], ps[0] * ps[2]) == act(els[3], ps[0]) * act(els[3], ps[2]));
  }
}

TEST_CASE("polynomials: monomials and invariant bases") {
  for (int n = 1; n <= 4; ++n)
    for (int d = 0; d <= 6; ++d) CHECK(static_cast<long>(monomials_of_degree(n, d).size()) == binom(n + d - 1, d));
  MatGroup mu2 = MatGroup::close({diag({-1, -1})});
  auto b = invariant_basis(mu2, 2);
  CHECK(b.size() == 3);
  auto c3 = invariant_basis(MatGroup::close({t(3)}), 2);
  REQUIRE(c3.size() == 1);
  CHECK(proportionality(c3[0], P("X1*X2")));
  CHECK(invariant_basis(MatGroup::trivial(2), 1).size() == 2);
}

TEST_CASE("polynomials: substitution") {
  MPoly R = MPoly::parse("Y1^2 - Y2*Y3", 3, 'Y');
  CHECK(substitute(R, {P("X1*X2"), P("X1^2"), P("X2^2")}).is_zero());
  for (int d = 2; d <= 5; ++d) {
    MPoly Rd = MPoly::parse(("Y1^" + std::to_string(d) + " - Y2*Y3").c_str(), 3, 'Y');
    MPoly x = MPoly::variable(2, 0), y = MPoly::variable(2, 1);
    CHECK(substitute(Rd, {x * y, x.pow(d), y.pow(d)}).is_zero());
  }
  CHECK(substitute(MPoly::variable(1, 0), {P("X1", 1)}) == P("X1", 1));
}
