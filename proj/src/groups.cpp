#include "reflekt/groups.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "reflekt/parallel.hpp"

namespace reflekt {

const char* kind_name(ElementKind k) {
  switch (k) {
    case ElementKind::Identity: return "identity";
    case ElementKind::Reflection: return "reflection";
    case ElementKind::DoubleReflection: return "double_reflection";
    case ElementKind::Other: return "other";
  }
  return "other";
}

struct MatGroup::State {
  int dim = 0;
  std::vector<Mat> generators;
  std::vector<Mat> elements;
  std::unordered_map<std::string, int> index;
  std::vector<int> gen_table;  // id * ngens + j

  std::once_flag classified;
  std::atomic<bool> have_classes{false};
  std::vector<ElementClass> classes;
  std::once_flag charpoly_once;
  std::vector<std::pair<UniPoly<CycNum>, long>> charpolys;
  std::once_flag exp_once;
  long exponent = 1;
};

namespace {

int generator_order(const Mat& g) {
  Mat p = g;
  for (int k = 1; k <= kMaxElementOrder; ++k) {
    if (is_identity(p)) return k;
    p = mul(p, g);
  }
  throw Error(ErrorCode::NotFinite, "generator order exceeds " + std::to_string(kMaxElementOrder));
}

}  // namespace

MatGroup MatGroup::trivial(int dim) { return close({identity<CycNum>(dim)}); }

MatGroup MatGroup::close(const std::vector<Mat>& generators, long cap) {
  if (generators.empty()) throw Error(ErrorCode::DimensionMismatch, "close needs at least one generator");
  const int n = static_cast<int>(generators[0].rows());
  for (auto& g : generators) {
    require_square(g.rows(), g.cols());
    if (g.rows() != n) throw Error(ErrorCode::DimensionMismatch, "generators of different dimensions");
    generator_order(g);
  }
  auto st = std::make_shared<State>();
  st->dim = n;
  st->generators = generators;

  // application order: generators sorted by canonical key
  std::vector<int> perm(generators.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::string> gkeys;
  for (auto& g : generators) gkeys.push_back(matrix_key(g));
  std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) { return gkeys[a] < gkeys[b]; });

  const int ng = static_cast<int>(generators.size());
  Mat id = identity<CycNum>(n);
  st->elements.push_back(id);
  st->index.emplace(matrix_key(id), 0);

  std::size_t level_start = 0;
  while (level_start < st->elements.size()) {
    const std::size_t level_end = st->elements.size();
    const std::size_t count = (level_end - level_start) * ng;
    std::vector<Mat> prods(count);
    std::vector<std::string> keys(count);
    parallel_for(count, [&](std::size_t t) {
      std::size_t e = level_start + t / ng;
      int j = perm[t % ng];
      prods[t] = mul(st->elements[e], generators[j]);
      keys[t] = matrix_key(prods[t]);
    });
    st->gen_table.resize(level_end * ng, -1);
    for (std::size_t t = 0; t < count; ++t) {
      std::size_t e = level_start + t / ng;
      int j = perm[t % ng];
      auto [it, inserted] = st->index.emplace(std::move(keys[t]), static_cast<int>(st->elements.size()));
      if (inserted) {
        if (static_cast<long>(st->elements.size()) >= cap)
          throw Error(ErrorCode::CapExceeded, "group order exceeds cap " + std::to_string(cap));
        st->elements.push_back(std::move(prods[t]));
      }
      st->gen_table[e * ng + j] = it->second;
    }
    level_start = level_end;
  }
  MatGroup G;
  G.s_ = std::move(st);
  return G;
}

int MatGroup::dim() const { return s_->dim; }
long MatGroup::order() const { return static_cast<long>(s_->elements.size()); }
const std::vector<Mat>& MatGroup::generators() const { return s_->generators; }
const std::vector<Mat>& MatGroup::elements() const { return s_->elements; }
const Mat& MatGroup::element(int id) const { return s_->elements.at(id); }

std::optional<int> MatGroup::find(const Mat& m) const {
  if (m.rows() != s_->dim || m.cols() != s_->dim) return std::nullopt;
  auto it = s_->index.find(matrix_key(m));
  if (it == s_->index.end()) return std::nullopt;
  return it->second;
}

int MatGroup::id_of(const Mat& m) const {
  auto id = find(m);
  if (!id) throw Error(ErrorCode::NotSubgroup, "matrix " + to_string(m) + " not in group");
  return *id;
}

int MatGroup::mul_gen(int id, int j) const {
  return s_->gen_table.at(static_cast<std::size_t>(id) * s_->generators.size() + j);
}

int MatGroup::multiply(int a, int b) const { return id_of(mul(element(a), element(b))); }

int MatGroup::inverse(int a) const {
  int ord = element_order(a);
  if (ord == 1) return a;
  Mat p = element(a);
  for (int k = 2; k < ord; ++k) p = mul(p, element(a));
  return id_of(p);
}

int MatGroup::element_order(int id) const {
  if (s_->have_classes.load(std::memory_order_acquire)) return s_->classes[id].order;
  return generator_order(element(id));
}

long MatGroup::exponent() const {
  std::call_once(s_->exp_once, [this] {
    long e = 1;
    for (auto& c : classes()) e = std::lcm(e, static_cast<long>(c.order));
    s_->exponent = e;
  });
  return s_->exponent;
}

const std::vector<ElementClass>& MatGroup::classes() const {
  std::call_once(s_->classified, [this] {
    const auto& els = s_->elements;
    std::vector<ElementClass> out(els.size());
    const int n = s_->dim;
    parallel_for(els.size(), [&](std::size_t i) {
      ElementClass c;
      c.id = static_cast<int>(i);
      c.fixed_space = fixed_space(els[i]);
      int codim = n - static_cast<int>(c.fixed_space.cols());
      c.kind = codim == 0   ? ElementKind::Identity
               : codim == 1 ? ElementKind::Reflection
               : codim == 2 ? ElementKind::DoubleReflection
                            : ElementKind::Other;
      c.order = generator_order(els[i]);
      out[i] = std::move(c);
    });
    s_->classes = std::move(out);
    s_->have_classes.store(true, std::memory_order_release);
  });
  return s_->classes;
}

const std::vector<std::pair<UniPoly<CycNum>, long>>& MatGroup::charpoly_classes() const {
  std::call_once(s_->charpoly_once, [this] {
    const auto& els = s_->elements;
    std::vector<UniPoly<CycNum>> polys(els.size());
    std::vector<std::string> keys(els.size());
    parallel_for(els.size(), [&](std::size_t i) {
      polys[i] = rev_charpoly(els[i]);
      for (auto& c : polys[i].c) {
        c.append_key(keys[i]);
        keys[i] += '|';
      }
    });
    std::unordered_map<std::string, std::size_t> where;
    for (std::size_t i = 0; i < els.size(); ++i) {
      auto [it, inserted] = where.emplace(keys[i], s_->charpolys.size());
      if (inserted) s_->charpolys.emplace_back(std::move(polys[i]), 0);
      ++s_->charpolys[it->second].second;
    }
  });
  return s_->charpolys;
}

std::vector<int> MatGroup::reflections() const {
  std::vector<int> r;
  for (auto& c : classes())
    if (c.kind == ElementKind::Reflection) r.push_back(c.id);
  return r;
}

std::vector<int> MatGroup::ids_in(const MatGroup& ambient) const {
  std::vector<int> ids;
  ids.reserve(elements().size());
  for (auto& m : elements()) ids.push_back(ambient.id_of(m));
  std::sort(ids.begin(), ids.end());
  return ids;
}

MatGroup subgroup(const std::vector<int>& generated_by, const MatGroup& G) {
  std::vector<Mat> gens;
  for (int id : generated_by) gens.push_back(G.element(id));
  return subgroup_of_elements(gens, G);
}

MatGroup subgroup_of_elements(const std::vector<Mat>& gens, const MatGroup& G) {
  if (gens.empty()) return MatGroup::trivial(G.dim());
  return MatGroup::close(gens, G.order());
}

bool is_subgroup(const MatGroup& H, const MatGroup& G) {
  for (auto& h : H.generators())
    if (!G.contains(h)) return false;
  return true;
}

bool is_normal(const MatGroup& G, const MatGroup& H) {
  if (!is_subgroup(H, G)) throw Error(ErrorCode::NotSubgroup, "H is not contained in G");
  for (auto& g : G.generators()) {
    Mat gi = inverse(g);
    for (auto& h : H.generators())
      if (!H.contains(mul(mul(g, h), gi))) return false;
  }
  return true;
}

MatGroup normal_closure(const MatGroup& G, const std::vector<Mat>& seeds) {
  std::vector<Mat> gens;
  for (auto& s : seeds)
    if (!is_identity(s)) gens.push_back(s);
  if (gens.empty()) return MatGroup::trivial(G.dim());
  std::vector<Mat> ginv;
  for (auto& g : G.generators()) ginv.push_back(inverse(g));
  for (;;) {
    MatGroup H = MatGroup::close(gens, G.order());
    bool grown = false;
    const std::size_t ngen = gens.size();
    for (std::size_t i = 0; i < ngen && !grown; ++i)
      for (std::size_t j = 0; j < G.generators().size(); ++j) {
        Mat c = mul(mul(G.generators()[j], gens[i]), ginv[j]);
        if (!H.contains(c)) {
          gens.push_back(c);
          grown = true;
          break;
        }
      }
    if (!grown) return H;
  }
}

MatGroup derived_subgroup(const MatGroup& G) {
  std::vector<Mat> comms;
  const auto& gens = G.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Mat a = gens[i], b = gens[j];
      comms.push_back(mul(mul(a, b), mul(inverse(a), inverse(b))));
    }
  return normal_closure(G, comms);
}

bool in_SL(const MatGroup& G) {
  for (auto& g : G.generators())
    if (!det(g).is_one()) return false;
  return true;
}

MatGroup group_from_subset(const std::vector<int>& ids, const MatGroup& G) {
  std::vector<int> sorted = ids;
  std::sort(sorted.begin(), sorted.end());
  std::vector<Mat> gens;
  MatGroup current = MatGroup::trivial(G.dim());
  for (int id : sorted) {
    const Mat& m = G.element(id);
    if (current.contains(m)) continue;
    gens.push_back(m);
    current = MatGroup::close(gens, G.order());
    if (current.order() == static_cast<long>(sorted.size())) break;
  }
  if (current.order() != static_cast<long>(sorted.size()))
    throw Error(ErrorCode::NotSubgroup, "element subset is not closed");
  return current;
}

MatGroup center(const MatGroup& G) {
  std::vector<int> ids;
  for (int i = 0; i < G.order(); ++i) {
    const Mat& m = G.element(i);
    bool central = true;
    for (auto& g : G.generators())
      if (!equal(mul(m, g), mul(g, m))) {
        central = false;
        break;
      }
    if (central) ids.push_back(i);
  }
  return group_from_subset(ids, G);
}

MatGroup sl_part(const MatGroup& G) {
  std::vector<int> ids;
  for (int i = 0; i < G.order(); ++i)
    if (det(G.element(i)).is_one()) ids.push_back(i);
  return group_from_subset(ids, G);
}

MatGroup reflection_subgroup(const MatGroup& G) {
  auto refl = G.reflections();
  if (refl.empty()) return MatGroup::trivial(G.dim());
  std::vector<Mat> gens;
  MatGroup current = MatGroup::trivial(G.dim());
  for (int id : refl) {
    if (current.contains(G.element(id))) continue;
    gens.push_back(G.element(id));
    current = MatGroup::close(gens, G.order());
  }
  return current;
}

bool same_elements(const MatGroup& A, const MatGroup& B) {
  if (A.order() != B.order() || A.dim() != B.dim()) return false;
  for (auto& m : A.elements())
    if (!B.contains(m)) return false;
  return true;
}

}  // namespace reflekt
