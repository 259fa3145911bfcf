#pragma once

#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "reflekt/cyclotomic.hpp"
#include "reflekt/groups.hpp"
#include "reflekt/linalg.hpp"

namespace oracle {

using C = std::complex<double>;

// Numerical value of a cyclotomic number, from its power-basis coefficients.
inline C numeric(const reflekt::CycNum& a) {
  const long n = a.conductor();
  C acc = 0;
  for (int k = 0; k < a.basis_size(); ++k) {
    double c = a.coeff(k).get_d();
    acc += c * std::polar(1.0, 2 * std::numbers::pi * k / static_cast<double>(n));
  }
  return acc;
}

inline bool close(C a, C b) { return std::abs(a - b) < 1e-9 * (1 + std::abs(a) + std::abs(b)); }

inline reflekt::CycNum random_cyc(std::mt19937& rng) {
  static const long conductors[] = {1, 3, 4, 5, 7, 8, 12, 15, 20, 24};
  std::uniform_int_distribution<int> pick(0, 9), coef(-6, 6), den(1, 4);
  long n = conductors[pick(rng)];
  reflekt::CycNum x(0);
  for (int k = 0; k < 4; ++k)
    x += reflekt::CycNum(reflekt::Rational(coef(rng), den(rng))) * reflekt::CycNum::root_of_unity(n, k);
  return x;
}

// Reflections found by brute force: rank(g - 1) = 1.
inline int count_reflections(const reflekt::MatGroup& G) {
  int n = 0;
  for (auto& g : G.elements())
    n += reflekt::rank<reflekt::CycNum>(g - reflekt::identity<reflekt::CycNum>(G.dim())) == 1;
  return n;
}

// Coefficients of prod 1/(1 - t^d) up to t^D.
inline std::vector<long> product_series(const std::vector<int>& degrees, int D) {
  std::vector<long> c(D + 1, 0);
  c[0] = 1;
  for (int d : degrees)
    for (int k = d; k <= D; ++k) c[k] += c[k - d];
  return c;
}

inline long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace oracle

namespace oracle {

inline bool all_zero(const reflekt::Mat& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) return false;
  return true;
}

}  // namespace oracle
