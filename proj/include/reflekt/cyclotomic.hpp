#pragma once

#include <gmpxx.h>

#include <boost/container/small_vector.hpp>

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "reflekt/error.hpp"

namespace reflekt {

using Rational = mpq_class;

std::string to_string(const Rational& q);

// Largest conductor any operation may produce.
inline constexpr long kMaxConductor = 1000000;

long euler_phi(long n);
// Integer coefficients of the n-th cyclotomic polynomial, ascending degree.
const std::vector<long>& cyclotomic_polynomial(long n);

// Exact element of Q(zeta_n), zeta_n = exp(2 pi i / n).
//
// Stored as (1/den) * sum num[k] zeta_n^k over the power basis
// 1, zeta_n, ..., zeta_n^(phi(n)-1), always at the smallest conductor n
// containing the value. Small values live in int64 storage; anything that
// overflows moves to GMP integers.
class CycNum {
public:
  CycNum() = default;
  CycNum(int v) : CycNum(static_cast<long>(v)) {}
  CycNum(long v);
  CycNum(long long v) : CycNum(static_cast<long>(v)) {}
  explicit CycNum(const Rational& q);

  static CycNum zeta(long n) { return root_of_unity(n, 1); }
  static CycNum root_of_unity(long n, long k);
  // Accepts the textual form "p/q*z(n)^k + ..." (and general +,-,*,/,^ of
  // such pieces).
  static CycNum parse(std::string_view text);

  long conductor() const { return n_; }
  int basis_size() const;
  Rational coeff(int k) const;
  Rational denominator() const;

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const { return n_ == 1; }
  Rational to_rational() const;

  CycNum operator-() const;
  CycNum& operator+=(const CycNum& b);
  CycNum& operator-=(const CycNum& b);
  CycNum& operator*=(const CycNum& b);
  CycNum& operator/=(const CycNum& b);
  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(const CycNum& a, const CycNum& b);
  friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }

  CycNum inverse() const;
  CycNum pow(long e) const;
  // Field automorphism zeta -> zeta^k, gcd(k, n) = 1 for the relevant n.
  CycNum galois(long k) const;
  CycNum conj() const { return galois(-1); }

  // Canonical text form.
  std::string str() const;
  // Canonical binary key; equal values give equal keys.
  void append_key(std::string& out) const;
  std::size_t hash() const;
  // Total order on canonical forms (not an order of the field).
  int compare(const CycNum& b) const;

  friend bool operator==(const CycNum& a, const CycNum& b) { return a.compare(b) == 0; }
  friend bool operator!=(const CycNum& a, const CycNum& b) { return a.compare(b) != 0; }

  struct BigRep;

private:
  long n_ = 1;
  std::int64_t den_ = 1;
  boost::container::small_vector<std::int64_t, 4> num_{0};
  std::shared_ptr<const BigRep> big_;

  friend struct CycAccess;
};

std::ostream& operator<<(std::ostream& os, const CycNum& a);

// Canonical form; a no-op given the class invariant, kept as an explicit
// entry point for callers that want to document the requirement.
inline CycNum cyc_canonical(const CycNum& a) { return a; }

}  // namespace reflekt

template <>
struct std::hash<reflekt::CycNum> {
  std::size_t operator()(const reflekt::CycNum& a) const { return a.hash(); }
};
