#include "doctest.h"

#include "oracles.hpp"

using namespace reflekt;

namespace {
Mat sigma() { return parse_matrix({{"0", "-1"}, {"1", "0"}}); }
}  // namespace

TEST_CASE("linalg: determinants") {
  CHECK(det<CycNum>(identity<CycNum>(3)) == CycNum(1));
  CHECK(det<CycNum>(sigma()) == CycNum(1));
  CycNum z3 = CycNum::zeta(3);
  CHECK(det<CycNum>(diag({z3, z3})) == z3 * z3);
  Mat m = parse_matrix({{"1", "2", "3"}, {"4", "5", "6"}, {"7", "8", "10"}});
  CHECK(det<CycNum>(m) == CycNum(-3));
}

TEST_CASE("linalg: fixed spaces") {
  CHECK(fixed_space<CycNum>(identity<CycNum>(2)).cols() == 2);
  Mat f = fixed_space<CycNum>(diag({-1, 1}));
  REQUIRE(f.cols() == 1);
  CHECK(f(0, 0) == CycNum(0));
  CHECK(!f(1, 0).is_zero());
  CHECK(fixed_space<CycNum>(diag({-1, -1})).cols() == 0);
}

TEST_CASE("linalg: solve and inverse") {
  Mat B = parse_matrix({{"1", "z(3)"}, {"2", "0"}});
  auto r = solve<CycNum>(identity<CycNum>(2), B);
  REQUIRE(r);
  CHECK(equal<CycNum>(r->x, B));
  CHECK(!solve<CycNum>(parse_matrix({{"1"}, {"0"}}), parse_matrix({{"0"}, {"1"}})));
  auto h = solve<CycNum>(parse_matrix({{"2"}}), parse_matrix({{"1"}}));
  REQUIRE(h);
  CHECK(h->x(0, 0) == CycNum(Rational(1, 2)));
  Mat m = parse_matrix({{"1", "z(5)"}, {"z(5)^2", "3"}});
  CHECK(is_identity<CycNum>(mul<CycNum>(m, inverse<CycNum>(m))));
  CHECK_THROWS_AS(inverse<CycNum>(parse_matrix({{"1", "2"}, {"2", "4"}})), Error);
}

TEST_CASE("linalg: det(1 - t g)") {
  auto p = rev_charpoly<CycNum>(identity<CycNum>(2));
  CHECK(p == UniPoly<CycNum>({1, -2, 1}));
  CycNum z3 = CycNum::zeta(3);
  CHECK(rev_charpoly<CycNum>(diag({z3, z3 * z3})) == UniPoly<CycNum>({1, 1, 1}));
  // det([[1, t], [-t, 1]]) = 1 + t^2
  CHECK(rev_charpoly<CycNum>(sigma()) == UniPoly<CycNum>({1, 0, 1}));
}

TEST_CASE("linalg: rank, nullspace and text") {
  Mat m = parse_matrix({{"1", "2", "3"}, {"2", "4", "6"}, {"1", "z(4)", "0"}});
  CHECK(rank<CycNum>(m) == 2);
  Mat n = nullspace<CycNum>(m);
  REQUIRE(n.cols() == 1);
  CHECK(oracle::all_zero(mul<CycNum>(m, n)));
  CHECK(equal<CycNum>(parse_matrix({{"1/2*z(4)", "-1"}, {"0", "z(7)^3"}}),
                      parse_matrix({{"z(4)/2", "-1"}, {"0", "z(7)^3"}})));
  Mat r = parse_matrix({{"1/3 + z(8)", "0"}, {"-z(3)", "2"}});
  std::vector<std::vector<std::string>> rows(2, std::vector<std::string>(2));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) rows[i][j] = r(i, j).str();
  CHECK(equal<CycNum>(parse_matrix(rows), r));
  CHECK(matrix_key(r) == matrix_key(parse_matrix(rows)));
}
