#include "reflekt/polynomials.hpp"

#include <algorithm>
#include <ostream>

#include "reflekt/detail/expr_parser.hpp"
#include "reflekt/parallel.hpp"

namespace reflekt {

int weighted_degree(const Exponent& e, const std::vector<int>& weights) {
  int d = 0;
  for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * weights[i];
  return d;
}

bool MonomialOrder::operator()(const Exponent& a, const Exponent& b) const {
  int da = weighted_degree(a, *weights), db = weighted_degree(b, *weights);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

namespace {

std::shared_ptr<const std::vector<int>> make_weights(int nvars, std::vector<int> w) {
  if (w.empty()) w.assign(nvars, 1);
  if (static_cast<int>(w.size()) != nvars)
    throw Error(ErrorCode::DimensionMismatch, "weight vector length differs from variable count");
  for (int x : w)
    if (x <= 0) throw Error(ErrorCode::DimensionMismatch, "weights must be positive");
  return std::make_shared<const std::vector<int>>(std::move(w));
}

bool multi_term(const std::string& s) {
  for (std::size_t i = 1; i + 2 < s.size(); ++i)
    if (s[i] == ' ' && (s[i + 1] == '+' || s[i + 1] == '-') && s[i + 2] == ' ') return true;
  return false;
}

}  // namespace

MPoly::MPoly(int nvars, std::vector<int> weights)
    : nvars_(nvars), weights_(make_weights(nvars, std::move(weights))),
      terms_(MonomialOrder{weights_.get()}) {}

MPoly MPoly::constant(int nvars, const CycNum& c, std::vector<int> weights) {
  MPoly p(nvars, std::move(weights));
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

MPoly MPoly::variable(int nvars, int i, std::vector<int> weights) {
  MPoly p(nvars, std::move(weights));
  Exponent e(nvars, 0);
  e.at(i) = 1;
  p.add_term(e, CycNum(1));
  return p;
}

MPoly MPoly::monomial(const Exponent& e, const CycNum& c, std::vector<int> weights) {
  MPoly p(static_cast<int>(e.size()), std::move(weights));
  p.add_term(e, c);
  return p;
}

bool MPoly::uniform_weights() const {
  const auto& w = *weights_;
  return std::all_of(w.begin(), w.end(), [&](int x) { return x == w[0]; });
}

int MPoly::degree() const { return terms_.empty() ? -1 : weighted_degree(leading_monomial(), *weights_); }

bool MPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = degree();
  for (auto& [e, c] : terms_)
    if (weighted_degree(e, *weights_) != d) return false;
  return true;
}

CycNum MPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? CycNum(0) : it->second;
}

void MPoly::add_term(const Exponent& e, const CycNum& c) {
  if (static_cast<int>(e.size()) != nvars_)
    throw Error(ErrorCode::DimensionMismatch, "exponent length differs from variable count");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MPoly::check_compatible(const MPoly& b) const {
  if (nvars_ != b.nvars_ || *weights_ != *b.weights_)
    throw Error(ErrorCode::DimensionMismatch, "polynomials over different variable sets");
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MPoly& MPoly::operator+=(const MPoly& b) {
  check_compatible(b);
  for (auto& [e, c] : b.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& b) {
  check_compatible(b);
  for (auto& [e, c] : b.terms_) add_term(e, -c);
  return *this;
}

MPoly& MPoly::operator*=(const CycNum& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  a.check_compatible(b);
  MPoly r(a.nvars_, *a.weights_);
  r.weights_ = a.weights_;
  r.terms_ = MPoly::TermMap(MonomialOrder{r.weights_.get()});
  Exponent e(a.nvars_, 0);
  for (auto& [ea, ca] : a.terms_)
    for (auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

MPoly MPoly::pow(int e) const {
  if (e < 0) throw Error(ErrorCode::DimensionMismatch, "negative polynomial power");
  MPoly result = constant(nvars_, CycNum(1), *weights_);
  MPoly base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

bool operator==(const MPoly& a, const MPoly& b) {
  if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
  auto i = a.terms_.begin();
  auto j = b.terms_.begin();
  for (; i != a.terms_.end(); ++i, ++j)
    if (i->first != j->first || i->second != j->second) return false;
  return true;
}

MPoly MPoly::monic() const {
  if (is_zero() || leading_coeff().is_one()) return *this;
  return *this * leading_coeff().inverse();
}

std::optional<CycNum> proportionality(const MPoly& a, const MPoly& b) {
  if (a.is_zero() || b.is_zero() || a.size() != b.size()) return std::nullopt;
  CycNum c = a.leading_coeff() / b.leading_coeff();
  if (a == b * c) return c;
  return std::nullopt;
}

std::string MPoly::str(char prefix) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto& [e, c] : terms_) {
    std::string mono;
    for (int i = 0; i < nvars_; ++i) {
      if (!e[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += prefix + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    std::string cs = c.str();
    bool neg = false;
    if (!multi_term(cs) && cs[0] == '-') {
      neg = true;
      cs = cs.substr(1);
    }
    if (multi_term(cs)) cs = "(" + cs + ")";
    std::string term;
    if (mono.empty()) term = cs;
    else if (cs == "1") term = mono;
    else term = cs + "*" + mono;
    if (first) out = (neg ? "-" : "") + term;
    else out += (neg ? " - " : " + ") + term;
    first = false;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const MPoly& p) { return os << p.str(); }

namespace {

struct PolyOps {
  int nvars;
  char prefix;
  std::vector<int> weights;

  MPoly number(const mpz_class& z) { return MPoly::constant(nvars, CycNum(Rational(z)), weights); }
  MPoly zeta(long n) { return MPoly::constant(nvars, CycNum::zeta(n), weights); }
  MPoly variable(std::string_view name) {
    if (name.size() >= 2 && name[0] == prefix) {
      int i = 0;
      for (std::size_t k = 1; k < name.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(name[k]))) i = -1;
        if (i < 0) break;
        i = i * 10 + (name[k] - '0');
      }
      if (i >= 1 && i <= nvars) return MPoly::variable(nvars, i - 1, weights);
    }
    throw Error(ErrorCode::ParseError, "unknown variable '" + std::string(name) + "'");
  }
  MPoly divide(const MPoly& a, const MPoly& b) {
    if (b.is_zero() || b.degree() != 0 || b.size() != 1)
      throw Error(ErrorCode::ParseError, "division by a non-constant polynomial");
    return a * b.leading_coeff().inverse();
  }
  MPoly power(const MPoly& a, long e) {
    if (e < 0) {
      if (a.degree() != 0) throw Error(ErrorCode::ParseError, "negative power of a polynomial");
      return MPoly::constant(nvars, a.leading_coeff().pow(e), weights);
    }
    return a.pow(static_cast<int>(e));
  }
};

void enumerate(int nvars, int d, const std::vector<int>& w, int i, Exponent& cur,
               std::vector<Exponent>& out) {
  if (i == nvars - 1) {
    if (d % w[i] == 0) {
      cur[i] = d / w[i];
      out.push_back(cur);
    }
    return;
  }
  for (int k = d / w[i]; k >= 0; --k) {
    cur[i] = k;
    enumerate(nvars, d - k * w[i], w, i + 1, cur, out);
  }
  cur[i] = 0;
}

}  // namespace

MPoly MPoly::parse(std::string_view text, int nvars, char prefix, std::vector<int> weights) {
  PolyOps ops{nvars, prefix, weights.empty() ? std::vector<int>(nvars, 1) : weights};
  return detail::ExprParser<MPoly, PolyOps>(text, ops).parse();
}

std::vector<Exponent> monomials_of_degree(int nvars, int d, const std::vector<int>& weights) {
  std::vector<int> w = weights.empty() ? std::vector<int>(nvars, 1) : weights;
  std::vector<Exponent> out;
  if (d < 0) return out;
  Exponent cur(nvars, 0);
  enumerate(nvars, d, w, 0, cur, out);
  // enumeration is lexicographically decreasing, which is the term order
  // inside one degree
  return out;
}

MPoly act(const Mat& g, const MPoly& p) {
  if (g.rows() != p.nvars() || g.cols() != p.nvars())
    throw Error(ErrorCode::DimensionMismatch, "act: matrix and polynomial dimensions differ");
  const auto& w = p.weights();
  for (int i = 0; i < p.nvars(); ++i)
    for (int j = 0; j < p.nvars(); ++j)
      if (w[i] != w[j] && !g(i, j).is_zero())
        throw Error(ErrorCode::DimensionMismatch, "act: matrix mixes variables of different weights");
  ActionCache cache(g, w);
  MPoly r(p.nvars(), p.weights());
  for (auto& [e, c] : p.terms()) r += cache.image(e) * c;
  return r;
}

MPoly substitute(const MPoly& q, const std::vector<MPoly>& images) {
  if (static_cast<int>(images.size()) != q.nvars())
    throw Error(ErrorCode::DimensionMismatch, "substitute: image count differs from variable count");
  if (images.empty()) throw Error(ErrorCode::DimensionMismatch, "substitute: no images");
  const int m = images[0].nvars();
  for (auto& im : images)
    if (im.nvars() != m || im.weights() != images[0].weights())
      throw Error(ErrorCode::DimensionMismatch, "substitute: images over different rings");
  // powers of each image, computed on demand
  std::vector<std::vector<MPoly>> powers(images.size());
  auto power = [&](std::size_t i, int k) -> const MPoly& {
    auto& pw = powers[i];
    if (pw.empty()) pw.push_back(MPoly::constant(m, CycNum(1), images[0].weights()));
    while (static_cast<int>(pw.size()) <= k) pw.push_back(pw.back() * images[i]);
    return pw[k];
  };
  MPoly r(m, images[0].weights());
  for (auto& [e, c] : q.terms()) {
    MPoly t = MPoly::constant(m, c, images[0].weights());
    for (std::size_t i = 0; i < images.size(); ++i)
      if (e[i]) t = t * power(i, e[i]);
    r += t;
  }
  return r;
}

DegreeSpace::DegreeSpace(int nvars, int d, std::vector<int> weights)
    : nvars_(nvars), d_(d), weights_(weights.empty() ? std::vector<int>(nvars, 1) : std::move(weights)) {
  monos_ = monomials_of_degree(nvars, d, weights_);
  for (std::size_t i = 0; i < monos_.size(); ++i) index_.emplace(monos_[i], static_cast<int>(i));
}

int DegreeSpace::index(const Exponent& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) throw Error(ErrorCode::DimensionMismatch, "monomial outside degree space");
  return it->second;
}

SparseVec DegreeSpace::coords(const MPoly& p) const {
  SparseVec v;
  v.reserve(p.size());
  for (auto& [e, c] : p.terms()) v.emplace_back(index(e), c);
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}

MPoly DegreeSpace::poly(const SparseVec& v) const {
  MPoly p(nvars_, weights_);
  for (auto& [i, c] : v) p.add_term(monos_.at(i), c);
  return p;
}

ActionCache::ActionCache(const Mat& g, std::vector<int> weights)
    : ginv_(inverse(g)), n_(static_cast<int>(g.rows())),
      weights_(weights.empty() ? std::vector<int>(n_, 1) : std::move(weights)) {
  for (int i = 0; i < n_; ++i) {
    MPoly l(n_, weights_);
    for (int j = 0; j < n_; ++j) {
      Exponent e(n_, 0);
      e[j] = 1;
      l.add_term(e, ginv_(i, j));
    }
    linear_.push_back(std::move(l));
  }
}

const MPoly& ActionCache::image(const Exponent& e) {
  auto it = cache_.find(e);
  if (it != cache_.end()) return it->second;
  int i = 0;
  while (i < n_ && e[i] == 0) ++i;
  MPoly r(n_, weights_);
  if (i == n_) {
    r = MPoly::constant(n_, CycNum(1), weights_);
  } else {
    Exponent lower = e;
    --lower[i];
    r = image(lower) * linear_[i];
  }
  return cache_.emplace(e, std::move(r)).first->second;
}

std::vector<MPoly> invariant_basis(const std::vector<Mat>& generators, int nvars, int d) {
  DegreeSpace space(nvars, d);
  const int N = space.size();
  if (N == 0) return {};
  SparseEchelon ech(N);
  for (auto& g : generators) {
    if (is_identity(g)) continue;
    ActionCache cache(g);
    // rows of (A_g - I): collect column images, then transpose
    std::vector<SparseVec> rows(N);
    for (int j = 0; j < N; ++j) {
      MPoly im = cache.image(space.monomials()[j]);
      im.add_term(space.monomials()[j], CycNum(-1));
      for (auto& [e, c] : im.terms()) rows[space.index(e)].emplace_back(j, c);
    }
    for (auto& r : rows)
      if (!r.empty()) ech.insert(r);
    if (ech.rank() == N) break;
  }
  std::vector<MPoly> out;
  for (auto& v : ech.nullspace()) out.push_back(space.poly(v));
  return out;
}

std::vector<MPoly> invariant_basis(const MatGroup& G, int d) {
  return invariant_basis(G.generators(), G.dim(), d);
}

MPoly reynolds(const MatGroup& G, const MPoly& p) {
  std::vector<MPoly> parts(G.order(), MPoly(p.nvars(), p.weights()));
  parallel_for(G.order(), [&](std::size_t i) { parts[i] = act(G.element(static_cast<int>(i)), p); });
  MPoly sum(p.nvars(), p.weights());
  for (auto& q : parts) sum += q;
  Rational inv(mpz_class(1), mpz_class(G.order()));
  inv.canonicalize();
  return sum * CycNum(inv);
}

std::vector<MPoly> echelon_basis(const std::vector<MPoly>& polys, int nvars, int d,
                                 const std::vector<int>& weights) {
  DegreeSpace space(nvars, d, weights);
  SparseEchelon ech(space.size());
  for (auto& p : polys) ech.insert(space.coords(p));
  std::vector<MPoly> out;
  for (auto& v : ech.rows()) out.push_back(space.poly(v));
  return out;
}

}  // namespace reflekt
