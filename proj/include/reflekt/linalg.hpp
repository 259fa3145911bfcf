#pragma once

#include <Eigen/Core>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "reflekt/cyclotomic.hpp"

namespace Eigen {
template <>
struct NumTraits<reflekt::CycNum> : GenericNumTraits<reflekt::CycNum> {
  using Real = reflekt::CycNum;
  using NonInteger = reflekt::CycNum;
  using Nested = reflekt::CycNum;
  using Literal = reflekt::CycNum;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 64,
    MulCost = 256
  };
};
}  // namespace Eigen

namespace reflekt {

template <class S>
using MatX = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using VecX = Eigen::Matrix<S, Eigen::Dynamic, 1>;

using Mat = MatX<CycNum>;
using Vec = VecX<CycNum>;

inline bool is_zero(const CycNum& x) { return x.is_zero(); }

// Dense polynomial in one variable, ascending coefficients, trimmed.
template <class S>
struct UniPoly {
  std::vector<S> c;

  UniPoly() = default;
  explicit UniPoly(std::vector<S> coeffs) : c(std::move(coeffs)) { trim(); }

  static UniPoly constant(const S& s) { return UniPoly(std::vector<S>{s}); }

  void trim() {
    while (!c.empty() && is_zero(c.back())) c.pop_back();
  }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  S operator[](int k) const { return k >= 0 && k < static_cast<int>(c.size()) ? c[k] : S(0); }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<S> r(std::max(a.c.size(), b.c.size()), S(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r[i] += b.c[i];
    return UniPoly(std::move(r));
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    std::vector<S> r(std::max(a.c.size(), b.c.size()), S(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r[i] -= b.c[i];
    return UniPoly(std::move(r));
  }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.c.empty() || b.c.empty()) return UniPoly();
    std::vector<S> r(a.c.size() + b.c.size() - 1, S(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) {
      if (is_zero(a.c[i])) continue;
      for (std::size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
    }
    return UniPoly(std::move(r));
  }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c == b.c; }

  S eval(const S& t) const {
    S acc(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
    return acc;
  }

  // Power series of 1/self truncated after degree D; self(0) must be nonzero.
  std::vector<S> inverse_series(int D) const {
    std::vector<S> out(D + 1, S(0));
    S inv0 = S(1) / c.at(0);
    for (int k = 0; k <= D; ++k) {
      S acc = k == 0 ? S(1) : S(0);
      for (int j = 1; j <= std::min(k, degree()); ++j) acc -= c[j] * out[k - j];
      out[k] = acc * inv0;
    }
    return out;
  }
};

// ---- dense operations --------------------------------------------------

template <class S>
MatX<S> identity(int n) {
  MatX<S> m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = i == j ? S(1) : S(0);
  return m;
}

template <class S>
MatX<S> zeros(int r, int c) {
  MatX<S> m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = S(0);
  return m;
}

// Product that skips zero entries; group elements are mostly sparse.
template <class S>
MatX<S> mul(const MatX<S>& a, const MatX<S>& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "matrix product shapes");
  MatX<S> r = zeros<S>(static_cast<int>(a.rows()), static_cast<int>(b.cols()));
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      const S& x = a(i, k);
      if (is_zero(x)) continue;
      for (Eigen::Index j = 0; j < b.cols(); ++j) {
        const S& y = b(k, j);
        if (is_zero(y)) continue;
        r(i, j) += x * y;
      }
    }
  return r;
}

template <class S>
bool equal(const MatX<S>& a, const MatX<S>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

template <class S>
bool is_identity(const MatX<S>& a) {
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      const S& x = a(i, j);
      if (i == j ? !(x == S(1)) : !is_zero(x)) return false;
    }
  return true;
}

inline void require_square(Eigen::Index r, Eigen::Index c) {
  if (r != c) throw Error(ErrorCode::NotSquare, std::to_string(r) + "x" + std::to_string(c));
}

// Fraction-free (Bareiss) determinant.
template <class S>
S det(MatX<S> m) {
  require_square(m.rows(), m.cols());
  const Eigen::Index n = m.rows();
  if (n == 0) return S(1);
  S prev(1);
  bool negate = false;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (is_zero(m(k, k))) {
      Eigen::Index p = k + 1;
      while (p < n && is_zero(m(p, k))) ++p;
      if (p == n) return S(0);
      m.row(k).swap(m.row(p));
      negate = !negate;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        S v = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        m(i, j) = prev == S(1) ? v : v / prev;
      }
      m(i, k) = S(0);
    }
    prev = m(k, k);
  }
  S d = m(n - 1, n - 1);
  return negate ? S(-d) : d;
}

// Reduced row echelon form in place; returns pivot columns.
template <class S>
std::vector<int> rref(MatX<S>& m) {
  std::vector<int> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index p = row;
    while (p < m.rows() && is_zero(m(p, col))) ++p;
    if (p == m.rows()) continue;
    if (p != row) m.row(p).swap(m.row(row));
    S inv = S(1) / m(row, col);
    for (Eigen::Index j = col; j < m.cols(); ++j)
      if (!is_zero(m(row, j))) m(row, j) *= inv;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (i == row || is_zero(m(i, col))) continue;
      S f = m(i, col);
      for (Eigen::Index j = col; j < m.cols(); ++j)
        if (!is_zero(m(row, j))) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(static_cast<int>(col));
    ++row;
  }
  return pivots;
}

template <class S>
int rank(MatX<S> m) {
  return static_cast<int>(rref(m).size());
}

// Canonical basis of the span of the given rows: its RREF with zero rows
// dropped (pivots normalized to 1).
template <class S>
MatX<S> canonical_rows(MatX<S> rows) {
  auto piv = rref(rows);
  return rows.topRows(static_cast<Eigen::Index>(piv.size())).eval();
}

// Basis of {x : m x = 0} as columns, in reduced column echelon form.
template <class S>
MatX<S> nullspace(MatX<S> m) {
  const int n = static_cast<int>(m.cols());
  auto piv = rref(m);
  std::vector<bool> is_piv(n, false);
  for (int p : piv) is_piv[p] = true;
  std::vector<int> free;
  for (int j = 0; j < n; ++j)
    if (!is_piv[j]) free.push_back(j);
  MatX<S> basis = zeros<S>(static_cast<int>(free.size()), n);
  for (std::size_t f = 0; f < free.size(); ++f) {
    basis(f, free[f]) = S(1);
    for (std::size_t r = 0; r < piv.size(); ++r) basis(f, piv[r]) = -m(r, free[f]);
  }
  return canonical_rows(basis).transpose();
}

template <class S>
MatX<S> fixed_space(const MatX<S>& g) {
  require_square(g.rows(), g.cols());
  return nullspace<S>(g - identity<S>(static_cast<int>(g.rows())));
}

template <class S>
struct SolveResult {
  MatX<S> x;
  bool unique = true;
};

// Solves A X = B; free variables are set to zero when the solution is not
// unique.
template <class S>
std::optional<SolveResult<S>> solve(const MatX<S>& A, const MatX<S>& B) {
  if (A.rows() != B.rows()) throw Error(ErrorCode::DimensionMismatch, "solve: row counts differ");
  MatX<S> aug(A.rows(), A.cols() + B.cols());
  aug << A, B;
  auto piv = rref(aug);
  const int n = static_cast<int>(A.cols());
  for (int p : piv)
    if (p >= n) return std::nullopt;
  SolveResult<S> res;
  res.unique = static_cast<int>(piv.size()) == n;
  res.x = zeros<S>(n, static_cast<int>(B.cols()));
  for (std::size_t r = 0; r < piv.size(); ++r)
    for (Eigen::Index j = 0; j < B.cols(); ++j) res.x(piv[r], j) = aug(r, n + j);
  return res;
}

template <class S>
MatX<S> inverse(const MatX<S>& m) {
  require_square(m.rows(), m.cols());
  auto r = solve<S>(m, identity<S>(static_cast<int>(m.rows())));
  if (!r || !r->unique) throw Error(ErrorCode::DivisionByZero, "singular matrix");
  return r->x;
}

// det(1 - t g) via Faddeev-LeVerrier on the characteristic polynomial.
template <class S>
UniPoly<S> rev_charpoly(const MatX<S>& g) {
  require_square(g.rows(), g.cols());
  const int n = static_cast<int>(g.rows());
  // char poly det(x - g) = sum c_k x^k, c_n = 1.
  std::vector<S> c(n + 1, S(0));
  c[n] = S(1);
  MatX<S> M = zeros<S>(n, n);
  const MatX<S> I = identity<S>(n);
  for (int k = 1; k <= n; ++k) {
    M = mul<S>(g, M);
    for (int i = 0; i < n; ++i) M(i, i) += c[n - k + 1];
    MatX<S> gM = mul<S>(g, M);
    S tr(0);
    for (int i = 0; i < n; ++i) tr += gM(i, i);
    c[n - k] = -tr / S(k);
  }
  // det(1 - t g) = t^n det(1/t - g) = sum c_k t^(n-k)
  std::vector<S> rev(n + 1, S(0));
  for (int k = 0; k <= n; ++k) rev[n - k] = c[k];
  return UniPoly<S>(std::move(rev));
}

// ---- keys and text ------------------------------------------------------

void append_key(const Mat& m, std::string& out);
std::string matrix_key(const Mat& m);
// "[[a, b], [c, d]]" with canonical CycNum text entries.
std::string to_string(const Mat& m);
Mat parse_matrix(const std::vector<std::vector<std::string>>& rows);
Mat diag(const std::vector<CycNum>& entries);
Mat from_rows(const std::vector<std::vector<CycNum>>& rows);

// ---- sparse echelon ----------------------------------------------------

using SparseVec = std::vector<std::pair<int, CycNum>>;

// Incrementally maintained reduced row echelon form of sparse rows over a
// fixed number of columns.
class SparseEchelon {
public:
  explicit SparseEchelon(int ncols) : ncols_(ncols) {}

  int ncols() const { return ncols_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  // Remainder of v after elimination against the current rows.
  SparseVec reduce(const SparseVec& v) const;
  // Adds v to the row space; returns false if it was dependent.
  bool insert(const SparseVec& v);
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }
  // Rows sorted by pivot column.
  std::vector<SparseVec> rows() const;
  const std::map<int, int>& pivots() const { return pivot_row_; }
  // Basis of {x : row . x = 0 for all rows}, canonical (RREF).
  std::vector<SparseVec> nullspace() const;
  // Coefficients expressing v (in the span) as a combination of rows():
  // returns std::nullopt if v is outside the span.
  std::optional<std::vector<CycNum>> coordinates(const SparseVec& v) const;

private:
  int ncols_;
  std::vector<SparseVec> rows_;
  std::map<int, int> pivot_row_;  // pivot column -> index in rows_
};

SparseVec axpy(const SparseVec& y, const CycNum& a, const SparseVec& x);  // y + a x
SparseVec scaled(const SparseVec& x, const CycNum& a);

}  // namespace reflekt
