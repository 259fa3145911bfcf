#include "reflekt/invariants.hpp"

#include <algorithm>
#include <numeric>

namespace reflekt {

namespace {

using QPoly = std::vector<Rational>;

QPoly qmul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

QPoly one_minus_tk(int k) {
  QPoly p(k + 1, Rational(0));
  p[0] = 1;
  p[k] -= 1;
  return p;
}

// Multiplies a truncated series by (1 - t^k) in place.
void times_one_minus(std::vector<Rational>& s, int k) {
  for (int j = static_cast<int>(s.size()) - 1; j >= k; --j) s[j] -= s[j - k];
}

Rational integer_or_throw(const CycNum& x) {
  if (!x.is_rational()) throw Error(ErrorCode::Internal, "Molien coefficient not rational");
  return x.to_rational();
}

MPoly extend_vars(const MPoly& p, const std::vector<int>& weights) {
  MPoly r(static_cast<int>(weights.size()), weights);
  for (auto& [e, c] : p.terms()) {
    Exponent f(weights.size(), 0);
    std::copy(e.begin(), e.end(), f.begin());
    r.add_term(f, c);
  }
  return r;
}

// Products of generators indexed by exponent vectors, memoized.
class ProductCache {
public:
  ProductCache(const std::vector<MPoly>& gens, int nx) : gens_(gens), nx_(nx) {}
  const MPoly& image(const Exponent& e) {
    auto it = cache_.find(e);
    if (it != cache_.end()) return it->second;
    std::size_t i = 0;
    while (i < e.size() && e[i] == 0) ++i;
    MPoly r(nx_);
    if (i == e.size()) {
      r = MPoly::constant(nx_, CycNum(1));
    } else {
      Exponent lower = e;
      --lower[i];
      r = image(lower) * gens_[i];
    }
    return cache_.emplace(e, std::move(r)).first->second;
  }

private:
  const std::vector<MPoly>& gens_;
  int nx_;
  std::map<Exponent, MPoly> cache_;
};

bool is_invariant(const MPoly& p, const std::vector<Mat>& gens) {
  for (auto& g : gens)
    if (act(g, p) != p) return false;
  return true;
}

}  // namespace

MolienSeries molien(const MatGroup& G, int D) {
  std::vector<CycNum> sum(D + 1, CycNum(0));
  for (auto& [P, count] : G.charpoly_classes()) {
    auto s = P.inverse_series(D);
    CycNum c(count);
    for (int k = 0; k <= D; ++k)
      if (!s[k].is_zero()) sum[k] += c * s[k];
  }
  MolienSeries M;
  Rational order(static_cast<long>(G.order()));
  for (int k = 0; k <= D; ++k) {
    Rational v = integer_or_throw(sum[k]) / order;
    v.canonicalize();
    M.coeffs.push_back(v);
  }
  return M;
}

bool molien_matches(const MatGroup& G, const std::vector<int>& gen_degrees,
                    const std::vector<int>& rel_degrees) {
  const int n = G.dim();
  const int m = static_cast<int>(G.exponent());
  const int K = n * (m - 1);
  MolienSeries M = molien(G, K);
  std::vector<Rational> N = M.coeffs;
  for (int i = 0; i < n; ++i) times_one_minus(N, m);
  while (!N.empty() && N.back() == 0) N.pop_back();
  QPoly lhs = N;
  for (int d : gen_degrees) lhs = qmul(lhs, one_minus_tk(d));
  QPoly rhs{Rational(1)};
  for (int e : rel_degrees) rhs = qmul(rhs, one_minus_tk(e));
  for (int i = 0; i < n; ++i) rhs = qmul(rhs, one_minus_tk(m));
  return lhs == rhs;
}

std::vector<int> reflection_degrees(const MatGroup& G) {
  const int n = G.dim();
  const int m = static_cast<int>(G.exponent());
  const int K = n * (m - 1) + 1;
  std::vector<Rational> cur = molien(G, K).coeffs;
  std::vector<int> degs;
  for (int k = 1; k <= K && static_cast<int>(degs.size()) < n; ++k) {
    while (cur[k] != 0) {
      if (cur[k] < 0 || static_cast<int>(degs.size()) >= n)
        throw Error(ErrorCode::NotReflectionGroup, "Molien series is not a product of 1/(1-t^d)");
      degs.push_back(k);
      times_one_minus(cur, k);
    }
  }
  if (static_cast<int>(degs.size()) != n || !molien_matches(G, degs, {}))
    throw Error(ErrorCode::NotReflectionGroup, "invariant ring is not polynomial");
  long reflections = static_cast<long>(G.reflections().size());
  long sum = 0;
  for (int d : degs) sum += d - 1;
  if (sum != reflections)
    throw Error(ErrorCode::Internal, "degree sum does not match the reflection count");
  return degs;
}

std::optional<std::vector<CycNum>> span_coordinates(const MPoly& p, const std::vector<MPoly>& basis) {
  if (basis.empty()) {
    if (p.is_zero()) return std::vector<CycNum>{};
    return std::nullopt;
  }
  std::map<Exponent, int> idx;
  auto note = [&](const MPoly& q) {
    for (auto& [e, c] : q.terms()) idx.emplace(e, 0);
  };
  for (auto& b : basis) note(b);
  note(p);
  int r = 0;
  for (auto& [e, i] : idx) i = r++;
  const int k = static_cast<int>(basis.size());
  Mat A = zeros<CycNum>(r, k), B = zeros<CycNum>(r, 1);
  for (int j = 0; j < k; ++j)
    for (auto& [e, c] : basis[j].terms()) A(idx[e], j) = c;
  for (auto& [e, c] : p.terms()) B(idx[e], 0) = c;
  auto sol = solve<CycNum>(A, B);
  if (!sol) return std::nullopt;
  if (!sol->unique) throw Error(ErrorCode::Internal, "span_coordinates: basis is dependent");
  std::vector<CycNum> out;
  for (int j = 0; j < k; ++j) out.push_back(sol->x(j, 0));
  return out;
}

Mat action_on_span(const Mat& g, const std::vector<MPoly>& basis) {
  const int k = static_cast<int>(basis.size());
  Mat A = zeros<CycNum>(k, k);
  for (int j = 0; j < k; ++j) {
    auto c = span_coordinates(act(g, basis[j]), basis);
    if (!c) throw Error(ErrorCode::SpanViolation, "image of " + basis[j].str() + " leaves the span");
    for (int i = 0; i < k; ++i) A(i, j) = (*c)[i];
  }
  return A;
}

namespace {

// Complement of the product span inside the degree-d invariants, chosen
// stable under the ambient group when one is given.
std::vector<MPoly> new_generators(const MatGroup& G, int d, int needed, const SparseEchelon& products,
                                  const DegreeSpace& xs, const PresentationOptions& opt) {
  std::vector<MPoly> out;
  // pinned candidates first
  std::vector<MPoly> pinned;
  for (auto& p : opt.pinned)
    if (p.degree() == d) pinned.push_back(p);
  if (!pinned.empty()) {
    SparseEchelon ech = products;
    for (auto& p : pinned) {
      if (!p.is_homogeneous() || !is_invariant(p, G.generators()))
        throw Error(ErrorCode::SelfCheckFailed, "pinned polynomial " + p.str() + " is not an invariant");
      if (ech.insert(xs.coords(p))) out.push_back(p);
    }
    if (static_cast<int>(out.size()) != needed)
      throw Error(ErrorCode::SelfCheckFailed,
                  "pinned generators in degree " + std::to_string(d) + " do not complete the invariants");
    return out;
  }

  auto inv = invariant_basis(G, d);
  SparseEchelon comp(xs.size());
  for (auto& b : inv) {
    SparseVec r = products.reduce(xs.coords(b));
    if (!r.empty()) comp.insert(r);
  }
  if (comp.rank() != needed)
    throw Error(ErrorCode::Internal, "invariant dimension disagrees with the Molien series in degree " +
                                         std::to_string(d));
  std::vector<MPoly> lex;
  for (auto& v : comp.rows()) lex.push_back(xs.poly(v));
  if (!opt.ambient || products.rank() == 0) return lex;

  // basis of I_d: product span first, then the lex complement
  std::vector<MPoly> B;
  for (auto& v : products.rows()) B.push_back(xs.poly(v));
  const int r = static_cast<int>(B.size());
  B.insert(B.end(), lex.begin(), lex.end());
  const int m = static_cast<int>(B.size());
  std::vector<Mat> rho;
  for (auto& w : opt.ambient->generators()) rho.push_back(action_on_span(w, B));
  MatGroup image = MatGroup::close(rho);
  Mat pi = zeros<CycNum>(m, m);
  for (int i = 0; i < r; ++i) pi(i, i) = CycNum(1);
  Mat avg = zeros<CycNum>(m, m);
  for (int h = 0; h < image.order(); ++h) {
    const Mat& M = image.element(h);
    avg += mul(mul(M, pi), inverse(M));
  }
  Rational inv_order(mpz_class(1), mpz_class(image.order()));
  inv_order.canonicalize();
  Mat comp_proj = identity<CycNum>(m) - avg * CycNum(inv_order);
  std::vector<MPoly> cols;
  for (int j = 0; j < m; ++j) {
    MPoly p(G.dim());
    for (int i = 0; i < m; ++i)
      if (!comp_proj(i, j).is_zero()) p += B[i] * comp_proj(i, j);
    cols.push_back(p);
  }
  auto stable = echelon_basis(cols, G.dim(), d);
  if (static_cast<int>(stable.size()) != needed)
    throw Error(ErrorCode::Internal, "equivariant complement has the wrong dimension");
  return stable;
}

}  // namespace

InvariantPresentation invariant_presentation(const MatGroup& G, const PresentationOptions& opt) {
  const int n = G.dim();
  // generators live in degree <= |G|; relations of the rank-2 cases in degree <= 2|G|
  const int bound = opt.bound > 0 ? opt.bound : static_cast<int>(std::min<long>(2 * G.order(), 4096));
  MolienSeries M = molien(G, bound);

  InvariantPresentation P;
  P.nvars = n;
  for (int d = 1; d <= bound; ++d) {
    P.bound_reached = d;
    const int k = static_cast<int>(P.generators.size());
    const int md = static_cast<int>(M[d].get_num().get_si());
    std::vector<Exponent> ymonos =
        k ? monomials_of_degree(k, d, P.generator_degrees) : std::vector<Exponent>{};
    DegreeSpace xs(n, d);
    const int NX = xs.size();
    const int NY = static_cast<int>(ymonos.size());

    // combined elimination: [image | unit] rows; rows with pivot in the
    // unit block are kernel vectors
    SparseEchelon combined(NX + NY);
    SparseEchelon products(NX);
    if (NY) {
      ProductCache cache(P.generators, n);
      for (int j = 0; j < NY; ++j) {
        SparseVec v = xs.coords(cache.image(ymonos[j]));
        products.insert(v);
        v.emplace_back(NX + j, CycNum(1));
        combined.insert(v);
      }
    }
    const int rank = products.rank();
    if (rank > md) throw Error(ErrorCode::Internal, "product span exceeds the Molien dimension");

    // relations in degree d
    std::vector<SparseVec> kernel;
    for (auto& row : combined.rows())
      if (row.front().first >= NX) {
        SparseVec y;
        for (auto& [c, x] : row) y.emplace_back(c - NX, x);
        kernel.push_back(std::move(y));
      }
    if (!kernel.empty()) {
      DegreeSpace ys(k, d, P.generator_degrees);
      SparseEchelon known(NY);
      for (auto& R : P.relations) {
        int rest = d - R.degree();
        if (rest < 0) continue;
        for (auto& e : monomials_of_degree(k, rest, P.generator_degrees))
          known.insert(ys.coords(R * MPoly::monomial(e, CycNum(1), P.generator_degrees)));
      }
      SparseEchelon fresh(NY);
      for (auto& v : kernel) {
        SparseVec r = known.reduce(v);
        if (!r.empty()) fresh.insert(r);
      }
      for (auto& v : fresh.rows()) {
        P.relations.push_back(ys.poly(v));
        P.relation_degrees.push_back(d);
      }
    }

    if (rank < md) {
      auto gens = new_generators(G, d, md - rank, products, xs, opt);
      for (auto& g : gens) {
        P.generators.push_back(g);
        P.generator_degrees.push_back(d);
      }
      for (auto& R : P.relations) R = extend_vars(R, P.generator_degrees);
    }

    if (opt.stop_when_certified && P.complete_intersection() && !P.generators.empty() &&
        molien_matches(G, P.generator_degrees, P.relation_degrees)) {
      P.certified = true;
      return P;
    }
  }
  if (bound < 2 * G.order())
    throw Error(ErrorCode::BoundTooSmall, "presentation not certified by degree " + std::to_string(bound));
  return P;
}

InvariantPresentation min_generator_degrees(const MatGroup& G, int bound, const MatGroup* ambient) {
  PresentationOptions opt;
  opt.bound = bound;
  opt.ambient = ambient;
  return invariant_presentation(G, opt);
}

InvariantPresentation relation_generators(const MatGroup& G, InvariantPresentation pres, int bound) {
  // recompute relations for the given generators, degree by degree
  const int n = G.dim();
  const int k = static_cast<int>(pres.generators.size());
  pres.relations.clear();
  pres.relation_degrees.clear();
  ProductCache cache(pres.generators, n);
  for (int d = 1; d <= bound; ++d) {
    auto ymonos = monomials_of_degree(k, d, pres.generator_degrees);
    if (ymonos.empty()) continue;
    DegreeSpace xs(n, d), ys(k, d, pres.generator_degrees);
    const int NX = xs.size(), NY = ys.size();
    SparseEchelon combined(NX + NY);
    for (int j = 0; j < NY; ++j) {
      SparseVec v = xs.coords(cache.image(ymonos[j]));
      v.emplace_back(NX + j, CycNum(1));
      combined.insert(v);
    }
    SparseEchelon known(NY);
    for (auto& R : pres.relations)
      for (auto& e : monomials_of_degree(k, d - R.degree(), pres.generator_degrees))
        known.insert(ys.coords(R * MPoly::monomial(e, CycNum(1), pres.generator_degrees)));
    SparseEchelon fresh(NY);
    for (auto& row : combined.rows()) {
      if (row.front().first < NX) continue;
      SparseVec y;
      for (auto& [c, x] : row) y.emplace_back(c - NX, x);
      SparseVec r = known.reduce(y);
      if (!r.empty()) fresh.insert(r);
    }
    for (auto& v : fresh.rows()) {
      pres.relations.push_back(ys.poly(v));
      pres.relation_degrees.push_back(d);
    }
  }
  pres.bound_reached = bound;
  pres.certified = pres.complete_intersection() &&
                   molien_matches(G, pres.generator_degrees, pres.relation_degrees);
  if (!pres.certified && bound < 2 * G.order())
    throw Error(ErrorCode::BoundTooSmall, "relations not certified by degree " + std::to_string(bound));
  return pres;
}

}  // namespace reflekt
