#include "reflekt/arrangement.hpp"

#include <algorithm>
#include <map>

namespace reflekt {

std::vector<CycNum> reflection_normal(const Mat& r) {
  const int n = static_cast<int>(r.rows());
  Mat fix = fixed_space(r);
  // alpha spans the annihilator of the fixed space
  Mat ann = nullspace<CycNum>(Mat(fix.transpose()));
  if (ann.cols() != 1) throw Error(ErrorCode::Internal, "not a reflection");
  std::vector<CycNum> v(n);
  for (int i = 0; i < n; ++i) v[i] = ann(i, 0);
  int first = 0;
  while (v[first].is_zero()) ++first;
  CycNum inv = v[first].inverse();
  for (auto& x : v) x *= inv;
  return v;
}

namespace {

bool normal_less(const std::vector<CycNum>& a, const std::vector<CycNum>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    int c = a[i].compare(b[i]);
    if (c) return c < 0;
  }
  return false;
}

std::string normal_key(const std::vector<CycNum>& v) {
  std::string k;
  for (auto& x : v) x.append_key(k);
  return k;
}

}  // namespace

std::vector<Hyperplane> hyperplanes(const MatGroup& W) {
  const int n = W.dim();
  std::map<std::string, std::size_t> at;
  std::vector<Hyperplane> hs;
  for (int id : W.reflections()) {
    auto v = reflection_normal(W.element(id));
    auto [it, inserted] = at.emplace(normal_key(v), hs.size());
    if (inserted) {
      Hyperplane h;
      h.normal = v;
      h.alpha = MPoly(n);
      for (int i = 0; i < n; ++i) {
        Exponent e(n, 0);
        e[i] = 1;
        h.alpha.add_term(e, v[i]);
      }
      h.inertia.push_back(0);
      hs.push_back(std::move(h));
    }
    hs[it->second].inertia.push_back(id);
  }
  for (auto& h : hs) {
    const long k = h.order();
    CycNum target = CycNum::root_of_unity(k, 1);
    h.generator = -1;
    for (int id : h.inertia)
      if (id != 0 && det(W.element(id)) == target) h.generator = id;
    if (h.generator < 0) throw Error(ErrorCode::Internal, "inertia group without a generator");
    std::sort(h.inertia.begin() + 1, h.inertia.end());
  }
  std::sort(hs.begin(), hs.end(), [](const Hyperplane& a, const Hyperplane& b) {
    return normal_less(a.normal, b.normal);
  });
  return hs;
}

int find_hyperplane(const std::vector<Hyperplane>& hs, const Mat& r) {
  auto v = reflection_normal(r);
  for (std::size_t i = 0; i < hs.size(); ++i)
    if (hs[i].normal == v) return static_cast<int>(i);
  return -1;
}

MPoly alpha_C(const HyperplaneClass& C, const std::vector<Hyperplane>& hs) {
  MPoly p = MPoly::constant(hs.at(C.members.at(0)).alpha.nvars(), CycNum(1));
  for (int i : C.members) p = p * hs[i].alpha.pow(hs[i].e);
  return p;
}

Arrangement aprime_classes(const MatGroup& Wt, const MatGroup& G) {
  if (!is_subgroup(G, Wt)) throw Error(ErrorCode::NotSubgroup, "G is not contained in the ambient group");
  if (!is_normal(Wt, G)) throw Error(ErrorCode::NotNormal, "G is not normal");
  Arrangement A;
  A.hyperplanes = hyperplanes(Wt);
  auto gids = G.ids_in(Wt);
  std::vector<bool> in_G(Wt.order(), false);
  for (int id : gids) in_G[id] = true;

  std::map<std::vector<int>, std::size_t> by_image;
  for (std::size_t i = 0; i < A.hyperplanes.size(); ++i) {
    auto& h = A.hyperplanes[i];
    h.e = 0;
    for (int id : h.inertia)
      if (in_G[id]) ++h.e;
    if (h.e == h.order()) continue;  // not in A'
    std::vector<int> img;
    img.reserve(gids.size() * h.inertia.size());
    for (int s : h.inertia)
      for (int g : gids) img.push_back(Wt.id_of(mul(Wt.element(g), Wt.element(s))));
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    auto [it, inserted] = by_image.emplace(img, A.classes.size());
    if (inserted) {
      HyperplaneClass C;
      C.image_subgroup = img;
      A.classes.push_back(std::move(C));
    }
    A.classes[it->second].members.push_back(static_cast<int>(i));
  }
  for (auto& C : A.classes) C.alpha_C = alpha_C(C, A.hyperplanes);
  return A;
}

}  // namespace reflekt
