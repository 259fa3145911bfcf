#pragma once

#include <boost/container/small_vector.hpp>

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "reflekt/groups.hpp"
#include "reflekt/linalg.hpp"

namespace reflekt {

using Exponent = boost::container::small_vector<int, 6>;

// Weighted graded-lex with the largest monomial first: higher weighted
// degree first, then lexicographically larger exponent vector first
// (X1 > X2 > ...).
struct MonomialOrder {
  const std::vector<int>* weights = nullptr;
  bool operator()(const Exponent& a, const Exponent& b) const;
};

int weighted_degree(const Exponent& e, const std::vector<int>& weights);

// Multivariate polynomial over a cyclotomic field. Variables are named
// <prefix>1..<prefix>n in text (prefix X by default, Y for presentation
// variables); each variable carries a positive weight.
class MPoly {
public:
  using TermMap = std::map<Exponent, CycNum, MonomialOrder>;

  MPoly() : MPoly(1) {}
  explicit MPoly(int nvars, std::vector<int> weights = {});

  static MPoly constant(int nvars, const CycNum& c, std::vector<int> weights = {});
  static MPoly variable(int nvars, int i, std::vector<int> weights = {});
  static MPoly monomial(const Exponent& e, const CycNum& c, std::vector<int> weights = {});
  // Parses text such as "X1^2*X2 - 1/2*z(4)*X3^3".
  static MPoly parse(std::string_view text, int nvars, char prefix = 'X',
                     std::vector<int> weights = {});

  int nvars() const { return nvars_; }
  const std::vector<int>& weights() const { return *weights_; }
  bool uniform_weights() const;
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  // Weighted degree of the leading term; -1 for zero.
  int degree() const;
  bool is_homogeneous() const;
  CycNum coeff(const Exponent& e) const;
  const Exponent& leading_monomial() const { return terms_.begin()->first; }
  const CycNum& leading_coeff() const { return terms_.begin()->second; }

  void add_term(const Exponent& e, const CycNum& c);

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& b);
  MPoly& operator-=(const MPoly& b);
  MPoly& operator*=(const CycNum& c);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const CycNum& c) { return a *= c; }
  friend MPoly operator*(const CycNum& c, MPoly a) { return a *= c; }
  MPoly pow(int e) const;
  friend bool operator==(const MPoly& a, const MPoly& b);
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  // Leading coefficient scaled to 1 (zero stays zero).
  MPoly monic() const;
  // If a = c * b for a nonzero scalar c, returns c.
  friend std::optional<CycNum> proportionality(const MPoly& a, const MPoly& b);

  std::string str(char prefix = 'X') const;

private:
  void check_compatible(const MPoly& b) const;

  int nvars_;
  std::shared_ptr<const std::vector<int>> weights_;
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const MPoly& p);

// All exponent vectors of weighted degree d, largest first.
std::vector<Exponent> monomials_of_degree(int nvars, int d, const std::vector<int>& weights = {});

// (g . p)(x) = p(g^-1 x). With non-uniform weights g must not mix
// variables of different weights.
MPoly act(const Mat& g, const MPoly& p);

// Substitutes images[i] for variable i of q.
MPoly substitute(const MPoly& q, const std::vector<MPoly>& images);

// Coordinates of homogeneous polynomials of one degree against a fixed
// monomial list.
class DegreeSpace {
public:
  DegreeSpace(int nvars, int d, std::vector<int> weights = {});

  int degree() const { return d_; }
  int nvars() const { return nvars_; }
  int size() const { return static_cast<int>(monos_.size()); }
  const std::vector<Exponent>& monomials() const { return monos_; }
  int index(const Exponent& e) const;

  SparseVec coords(const MPoly& p) const;
  MPoly poly(const SparseVec& v) const;

private:
  int nvars_, d_;
  std::vector<int> weights_;
  std::vector<Exponent> monos_;
  std::map<Exponent, int> index_;
};

// Images of all degree-d monomials under act(g, .), built degree by degree
// from images of lower monomials.
class ActionCache {
public:
  explicit ActionCache(const Mat& g, std::vector<int> weights = {});
  const MPoly& image(const Exponent& e);

private:
  Mat ginv_;
  int n_;
  std::vector<int> weights_;
  std::vector<MPoly> linear_;
  std::map<Exponent, MPoly> cache_;
};

// Basis of the degree-d invariants of G in reduced echelon form against the
// graded-lex monomial order (leading coefficients 1).
std::vector<MPoly> invariant_basis(const MatGroup& G, int d);
std::vector<MPoly> invariant_basis(const std::vector<Mat>& generators, int nvars, int d);

// Reynolds average (1/|G|) sum_g g.p.
MPoly reynolds(const MatGroup& G, const MPoly& p);

// Echelonizes polynomials of one degree; returns a basis of their span in
// the same reduced form as invariant_basis.
std::vector<MPoly> echelon_basis(const std::vector<MPoly>& polys, int nvars, int d,
                                 const std::vector<int>& weights = {});

}  // namespace reflekt
