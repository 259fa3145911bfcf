#include "reflekt/quotients.hpp"

#include <algorithm>
#include <numeric>

namespace reflekt {

const char* reason_name(GoodReason r) {
  switch (r) {
    case GoodReason::ReflectionSubgroup: return "reflection_subgroup";
    case GoodReason::NotInSL: return "not_in_SL";
    case GoodReason::NonInvariantAlpha: return "non_invariant_alpha";
    case GoodReason::ReflectionFreeGood: return "reflection_free_good";
    case GoodReason::MixedGood: return "mixed_good";
    case GoodReason::MixedNotGood: return "mixed_not_good";
  }
  return "unknown";
}

Mat phi_matrix(const Mat& w, const std::vector<MPoly>& generators) {
  Mat A = action_on_span(w, generators);
  return inverse(Mat(A.transpose()));
}

namespace {

void require_normal_subgroup(const MatGroup& Wt, const MatGroup& G) {
  if (!is_subgroup(G, Wt)) throw Error(ErrorCode::NotSubgroup, "G is not contained in the ambient group");
  if (!is_normal(Wt, G)) throw Error(ErrorCode::NotNormal, "G is not normal in the ambient group");
}

int order_of(const Mat& g) {
  Mat p = g;
  for (int k = 1; k <= kMaxElementOrder; ++k) {
    if (is_identity(p)) return k;
    p = mul(p, g);
  }
  throw Error(ErrorCode::NotFinite, "element of infinite order");
}

QuotientResult decide(const MatGroup& Wt, const MatGroup& G, const QuotientOptions& opt, int depth) {
  reflection_degrees(Wt);  // throws NotReflectionGroup
  require_normal_subgroup(Wt, G);
  QuotientResult r;
  r.depth = depth;
  MatGroup Gr = reflection_subgroup(G);
  if (Gr.order() == G.order()) {
    r.good = true;
    r.reason = GoodReason::ReflectionSubgroup;
    r.detail = "G is generated by its reflections";
    return r;
  }
  if (Gr.order() == 1) {
    for (std::size_t i = 0; i < G.generators().size(); ++i)
      if (!det(G.generators()[i]).is_one()) {
        r.good = false;
        r.reason = GoodReason::NotInSL;
        r.witness_generator = static_cast<int>(i);
        r.detail = "generator " + to_string(G.generators()[i]) + " has determinant " +
                   det(G.generators()[i]).str();
        return r;
      }
    r.arrangement = aprime_classes(Wt, G);
    for (std::size_t c = 0; c < r.arrangement.classes.size(); ++c) {
      const MPoly& a = r.arrangement.classes[c].alpha_C;
      for (auto& g : G.generators())
        if (act(g, a) != a) {
          r.good = false;
          r.reason = GoodReason::NonInvariantAlpha;
          r.witness_class = static_cast<int>(c);
          r.witness_alpha = a;
          r.detail = "alpha_C = " + a.str() + " is not G-invariant";
          return r;
        }
    }
    r.good = true;
    r.reason = GoodReason::ReflectionFreeGood;
    r.detail = "G is in SL and every alpha_C is G-invariant";
    return r;
  }
  if (depth >= opt.max_depth) throw Error(ErrorCode::Internal, "mixed-case recursion too deep");
  // pass to (Wt/Gr, G/Gr) acting on the tangent space of V/Gr
  PresentationOptions po;
  po.ambient = &Wt;
  auto pres = invariant_presentation(Gr, po);
  std::vector<Mat> wt_gens, g_gens;
  for (auto& w : Wt.generators()) wt_gens.push_back(phi_matrix(w, pres.generators));
  for (auto& g : G.generators()) g_gens.push_back(phi_matrix(g, pres.generators));
  MatGroup Wt2 = MatGroup::close(wt_gens);
  MatGroup G2 = MatGroup::close(g_gens);
  QuotientResult sub = decide(Wt2, G2, opt, depth + 1);
  r.good = sub.good;
  r.reason = sub.good ? GoodReason::MixedGood : GoodReason::MixedNotGood;
  r.depth = sub.depth;
  r.detail = "reflection part of order " + std::to_string(Gr.order()) + " factored out; " + sub.detail;
  r.witness_alpha = sub.witness_alpha;
  return r;
}

}  // namespace

QuotientResult is_good(const MatGroup& Wt, const MatGroup& G, const QuotientOptions& opt) {
  return decide(Wt, G, opt, 0);
}

QuotientResult quotient_map(const MatGroup& Wt, const MatGroup& G, const QuotientOptions& opt) {
  QuotientResult r = is_good(Wt, G, opt);
  if (!r.good) throw Error(ErrorCode::NotGood, r.detail);
  PresentationOptions po;
  po.bound = opt.bound;
  po.ambient = &Wt;
  po.pinned = opt.pinned;
  r.presentation = invariant_presentation(G, po);
  for (auto& w : Wt.generators()) r.phi_gens.push_back(phi_matrix(w, r.presentation.generators));
  r.W = MatGroup::close(r.phi_gens);
  if (r.W.order() * G.order() != Wt.order())
    throw Error(ErrorCode::Internal, "quotient order " + std::to_string(r.W.order()) + " differs from |Wt|/|G|");
  try {
    r.W_degrees = reflection_degrees(r.W);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotReflectionGroup)
      throw Error(ErrorCode::Internal, "quotient of a good pair is not a reflection group");
    throw;
  }
  r.V_weights = r.presentation.generator_degrees;
  r.relation_degrees = r.presentation.relation_degrees;
  r.constructed = true;
  return r;
}

GoodGenerators good_generators(const MatGroup& Wt, const MatGroup& G) {
  QuotientResult r = is_good(Wt, G);
  if (!r.good) throw Error(ErrorCode::NotGood, r.detail);
  if (!G.reflections().empty()) throw Error(ErrorCode::ContainsReflection, "G contains reflections");
  const Arrangement& A = r.arrangement;
  GoodGenerators out;
  for (auto& C : A.classes) {
    for (int a : C.members)
      for (int b : C.members) {
        if (a == b) continue;
        const auto& hb = A.hyperplanes[b];
        const auto& ha = A.hyperplanes[a];
        Mat prod = mul(Wt.element(hb.generator), inverse(Wt.element(ha.generator)));
        out.ids.push_back(Wt.id_of(prod));
      }
  }
  std::sort(out.ids.begin(), out.ids.end());
  out.ids.erase(std::unique(out.ids.begin(), out.ids.end()), out.ids.end());
  std::vector<Mat> gens;
  for (int id : out.ids) {
    if (!G.contains(Wt.element(id))) out.all_in_G = false;
    gens.push_back(Wt.element(id));
  }
  out.generated_order = gens.empty() ? 1 : MatGroup::close(gens).order();
  out.generates = out.all_in_G && out.generated_order == G.order();
  return out;
}

HyperplaneCorrespondence hyperplane_map(const MatGroup& Wt, const MatGroup& G, const QuotientResult& q) {
  if (!q.good || !q.constructed) throw Error(ErrorCode::NotGood, "hyperplane_map needs a constructed quotient");
  HyperplaneCorrespondence hc;
  Arrangement A = aprime_classes(Wt, G);
  hc.w_hyperplanes = hyperplanes(q.W);
  std::vector<int> hit(hc.w_hyperplanes.size(), 0);
  bool consistent = true;
  for (std::size_t c = 0; c < A.classes.size(); ++c) {
    int target = -2;
    for (int m : A.classes[c].members) {
      const Hyperplane& h = A.hyperplanes[m];
      Mat img = phi_matrix(Wt.element(h.generator), q.presentation.generators);
      int r = h.order();
      int expected = r / std::gcd(r, h.e);
      int got = order_of(img);
      if (got != expected) {
        hc.orders_match = false;
        hc.mismatches.push_back("class " + std::to_string(c) + ": image order " + std::to_string(got) +
                                ", expected " + std::to_string(expected));
      }
      int wh = fixed_space(img).cols() + 1 == img.rows() ? find_hyperplane(hc.w_hyperplanes, img) : -1;
      if (target == -2) target = wh;
      else if (target != wh) consistent = false;
    }
    if (target < 0) consistent = false;
    else ++hit[target];
    hc.pairs.push_back({static_cast<int>(c), target});
  }
  hc.bijective = consistent && A.classes.size() == hc.w_hyperplanes.size() &&
                 std::all_of(hit.begin(), hit.end(), [](int h) { return h == 1; });
  return hc;
}

DegreeIdentity verify_degree_identity(const MatGroup& Wt, const QuotientResult& q) {
  if (!q.good || !q.constructed) throw Error(ErrorCode::NotGood, "degree identity needs a constructed quotient");
  DegreeIdentity di;
  const auto& w = q.V_weights;
  std::vector<int> distinct = w;
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  for (int weight : distinct) {
    std::vector<int> idx;
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w[i] == weight) idx.push_back(static_cast<int>(i));
    const int k = static_cast<int>(idx.size());
    std::vector<Mat> blocks;
    for (auto& g : q.phi_gens) {
      Mat b(k, k);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) b(i, j) = g(idx[i], idx[j]);
      blocks.push_back(b);
    }
    for (int e : reflection_degrees(MatGroup::close(blocks))) di.lhs.push_back(weight * e);
  }
  di.rhs = reflection_degrees(Wt);
  di.rhs.insert(di.rhs.end(), q.relation_degrees.begin(), q.relation_degrees.end());
  std::sort(di.lhs.begin(), di.lhs.end());
  std::sort(di.rhs.begin(), di.rhs.end());
  di.holds = di.lhs == di.rhs;
  return di;
}

SLPrimeReport sl_prime_quotient(const MatGroup& Wt) {
  SLPrimeReport rep;
  MatGroup G = sl_part(Wt);
  long index = Wt.order() / G.order();
  bool prime = index >= 2;
  for (long f = 2; f * f <= index; ++f)
    if (index % f == 0) prime = false;
  if (!prime) throw Error(ErrorCode::IndexNotPrime, "index of Wt cap SL is " + std::to_string(index));
  rep.p = static_cast<int>(index);
  Arrangement A = aprime_classes(Wt, G);
  rep.single_class = A.classes.size() == 1;
  rep.N = static_cast<int>(A.hyperplanes.size());
  rep.predicted_degrees = reflection_degrees(Wt);
  rep.predicted_degrees.push_back(rep.N);
  std::sort(rep.predicted_degrees.begin(), rep.predicted_degrees.end());
  rep.predicted_relation = rep.N * rep.p;
  auto pres = invariant_presentation(G);
  rep.computed_degrees = pres.generator_degrees;
  std::sort(rep.computed_degrees.begin(), rep.computed_degrees.end());
  rep.computed_relations = pres.relation_degrees;
  rep.consistent = rep.single_class && rep.computed_degrees == rep.predicted_degrees &&
                   rep.computed_relations == std::vector<int>{rep.predicted_relation};
  return rep;
}

CycNum relation_character(const MatGroup& G, const InvariantPresentation& pres, const Mat& g) {
  Mat gi = inverse(g);
  for (auto& h : G.generators())
    if (!G.contains(mul(mul(g, h), gi))) throw Error(ErrorCode::NotNormalizing, "g does not normalize G");
  if (pres.relations.size() != 1)
    throw Error(ErrorCode::NonPrincipalUnsupported,
                std::to_string(pres.relations.size()) + " minimal relations");
  Mat M;
  try {
    M = phi_matrix(g, pres.generators);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::SpanViolation) throw;
    // generators not g-stable: rebuild them stable under <G, g>
    std::vector<Mat> gens = G.generators();
    gens.push_back(g);
    MatGroup amb = MatGroup::close(gens);
    PresentationOptions po;
    po.ambient = &amb;
    auto p2 = invariant_presentation(G, po);
    return relation_character(G, p2, g);
  }
  const MPoly& R = pres.relations[0];
  auto lambda = proportionality(act(M, R), R);
  if (!lambda) throw Error(ErrorCode::Internal, "g does not preserve the relation line");
  return *lambda;
}

bool in_Nrel(const MatGroup& G, const InvariantPresentation& pres, const Mat& g) {
  return relation_character(G, pres, g).is_one();
}

}  // namespace reflekt
