#include "reflekt/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "json.hpp"

#include "reflekt/invariants.hpp"

#ifndef REFLEKT_DATA_DIR
#define REFLEKT_DATA_DIR "data"
#endif

namespace reflekt {

namespace {

using json = nlohmann::json;

CycNum z(long n, long k = 1) { return CycNum::root_of_unity(n, k); }
CycNum q(long a, long b) { return CycNum(Rational(mpz_class(a), mpz_class(b))); }

Mat t_of(const CycNum& zeta) { return diag({zeta, zeta.inverse()}); }
Mat swap2() { return from_rows({{0, 1}, {1, 0}}); }
Mat sigma() { return from_rows({{0, -1}, {1, 0}}); }
Mat scalar2(const CycNum& c) { return diag({c, c}); }

// Generators of the binary tetrahedral group.
std::vector<Mat> atilde4_gens() {
  CycNum i = z(4);
  Mat qi = diag({i, -i});
  Mat qj = from_rows({{0, 1}, {-1, 0}});
  Mat omega = from_rows({{q(-1, 2) - q(1, 2) * i, q(-1, 2) - q(1, 2) * i},
                         {q(1, 2) - q(1, 2) * i, q(-1, 2) + q(1, 2) * i}});
  return {qi, qj, omega};
}

std::vector<Mat> stilde4_gens() {
  auto g = atilde4_gens();
  g.push_back(t_of(z(8)));
  return g;
}

std::vector<Mat> atilde5_gens() {
  auto g = atilde4_gens();
  CycNum i = z(4);
  CycNum phi = CycNum(1) + z(5) + z(5, 4);  // golden ratio
  CycNum phinv = z(5) + z(5, 4);
  g.push_back(from_rows({{q(1, 2) * phi + q(1, 2) * phinv * i, q(1, 2)},
                         {q(-1, 2), q(1, 2) * phi - q(1, 2) * phinv * i}}));
  return g;
}

// Reflections s_i(alpha_j) = alpha_j - A_ij alpha_i in the simple-root basis.
std::vector<Mat> coxeter_gens(const std::vector<std::vector<CycNum>>& A) {
  const int n = static_cast<int>(A.size());
  std::vector<Mat> gens;
  for (int i = 0; i < n; ++i) {
    Mat s = identity<CycNum>(n);
    for (int j = 0; j < n; ++j) s(i, j) -= A[i][j];
    gens.push_back(s);
  }
  return gens;
}

std::vector<std::vector<CycNum>> cartan_A(int n) {
  std::vector<std::vector<CycNum>> A(n, std::vector<CycNum>(n, CycNum(0)));
  for (int i = 0; i < n; ++i) {
    A[i][i] = 2;
    if (i + 1 < n) A[i][i + 1] = A[i + 1][i] = -1;
  }
  return A;
}

Mat perm_swap(int n, int a, int b) {
  Mat m = identity<CycNum>(n);
  m(a, a) = m(b, b) = 0;
  m(a, b) = m(b, a) = 1;
  return m;
}

long factorial(int n) {
  long f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

long ipow(long b, int e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

void need(const std::vector<int>& params, std::size_t n, const std::string& name) {
  if (params.size() != n)
    throw Error(ErrorCode::UnknownName, name + " takes " + std::to_string(n) + " parameter(s)");
}

void need_range(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::UnknownName, "parameter out of range: " + what);
}

// ---- rank-2 exceptional groups ---------------------------------------------

struct Exceptional {
  int index;
  long order;
  std::vector<int> degrees;
  const char* sl_type;
  int a;
};

const std::vector<Exceptional>& exceptional_table() {
  static const std::vector<Exceptional> t = {
      {4, 24, {4, 6}, "Itilde2(2)", 3},    {5, 72, {6, 12}, "Atilde4", 3},
      {6, 48, {4, 12}, "Itilde2(2)", 6},   {7, 144, {12, 12}, "Atilde4", 6},
      {8, 96, {8, 12}, "Atilde4", 4},      {9, 192, {8, 24}, "Stilde4", 4},
      {10, 288, {12, 24}, "Atilde4", 12},  {11, 576, {24, 24}, "Stilde4", 12},
      {12, 48, {6, 8}, "Atilde4", 2},      {13, 96, {8, 12}, "Stilde4", 2},
      {14, 144, {6, 24}, "Atilde4", 6},    {15, 288, {12, 24}, "Stilde4", 6},
      {16, 600, {20, 30}, "Atilde5", 5},   {17, 1200, {20, 60}, "Atilde5", 10},
      {18, 1800, {30, 60}, "Atilde5", 15}, {19, 3600, {60, 60}, "Atilde5", 30},
      {20, 360, {12, 30}, "Atilde5", 3},   {21, 720, {12, 60}, "Atilde5", 6},
      {22, 240, {12, 20}, "Atilde5", 2},
  };
  return t;
}

// Maximal group of the family: binary group times scalars.
MatGroup exceptional_ambient(int index) {
  std::vector<Mat> g;
  if (index <= 7) {
    g = atilde4_gens();
    g.push_back(scalar2(z(12)));
  } else if (index <= 15) {
    g = stilde4_gens();
    g.push_back(scalar2(z(24)));
  } else {
    g = atilde5_gens();
    g.push_back(scalar2(z(60)));
  }
  return MatGroup::close(g);
}

// Conjugacy classes of reflections of A, each as sorted ids.
std::vector<std::vector<int>> reflection_conjugacy_classes(const MatGroup& A) {
  std::vector<int> refl = A.reflections();
  std::vector<int> seen(A.order(), 0);
  std::vector<Mat> ginv;
  for (auto& g : A.generators()) ginv.push_back(inverse(g));
  std::vector<std::vector<int>> out;
  for (int r : refl) {
    if (seen[r]) continue;
    std::vector<int> orbit{r};
    seen[r] = 1;
    for (std::size_t k = 0; k < orbit.size(); ++k)
      for (std::size_t j = 0; j < ginv.size(); ++j) {
        int c = A.id_of(mul(mul(A.generators()[j], A.element(orbit[k])), ginv[j]));
        if (!seen[c]) {
          seen[c] = 1;
          orbit.push_back(c);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(orbit);
  }
  return out;
}

// Search the reflection subgroups of the family's maximal group for one with
// the tabulated order, degrees and Wt cap SL; returns its greedy generators.
std::vector<Mat> exceptional_generators(const Exceptional& ex) {
  MatGroup A = exceptional_ambient(ex.index);
  auto classes = reflection_conjugacy_classes(A);
  const int k = static_cast<int>(classes.size());
  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    std::vector<int> ids;
    for (int c = 0; c < k; ++c)
      if (mask & (1u << c)) ids.insert(ids.end(), classes[c].begin(), classes[c].end());
    std::sort(ids.begin(), ids.end());
    std::vector<Mat> gens;
    MatGroup cur = MatGroup::trivial(2);
    for (int id : ids) {
      if (cur.contains(A.element(id))) continue;
      gens.push_back(A.element(id));
      cur = MatGroup::close(gens, A.order());
    }
    if (cur.order() != ex.order) continue;
    MatGroup sl = sl_part(cur);
    if (sl2_type(sl) != ex.sl_type) continue;
    if (reflection_degrees(cur) != ex.degrees) continue;
    return gens;
  }
  throw Error(ErrorCode::SelfCheckFailed, "no reflection subgroup matches G" + std::to_string(ex.index));
}

const Exceptional* find_exceptional(const std::string& name) {
  if (name.size() < 2 || name[0] != 'G') return nullptr;
  if (!std::all_of(name.begin() + 1, name.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    return nullptr;
  int idx = std::stoi(name.substr(1));
  for (auto& e : exceptional_table())
    if (e.index == idx) return &e;
  return nullptr;
}

// ---- G31 --------------------------------------------------------------------

Mat P(const std::vector<std::vector<std::string>>& rows) { return parse_matrix(rows); }

std::vector<Mat> g31_gens() {
  return {P({{"-1", "0", "0", "0"}, {"0", "1", "0", "0"}, {"0", "0", "1", "0"}, {"0", "0", "0", "1"}}),
          P({{"1/2", "-1/2", "-1/2", "-1/2"},
             {"-1/2", "1/2", "-1/2", "-1/2"},
             {"-1/2", "-1/2", "1/2", "-1/2"},
             {"-1/2", "-1/2", "-1/2", "1/2"}}),
          P({{"0", "z(4)", "0", "0"}, {"-z(4)", "0", "0", "0"}, {"0", "0", "1", "0"}, {"0", "0", "0", "1"}}),
          P({{"1", "0", "0", "0"}, {"0", "0", "1", "0"}, {"0", "1", "0", "0"}, {"0", "0", "0", "1"}}),
          P({{"0", "1", "0", "0"}, {"1", "0", "0", "0"}, {"0", "0", "1", "0"}, {"0", "0", "0", "1"}})};
}

long conductor_of(const std::vector<Mat>& gens) {
  long n = 1;
  for (auto& g : gens)
    for (Eigen::Index i = 0; i < g.rows(); ++i)
      for (Eigen::Index j = 0; j < g.cols(); ++j) n = std::lcm(n, g(i, j).conductor());
  return n;
}

std::string join_params(const std::vector<int>& p, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(p[i]);
  }
  return s;
}

}  // namespace

const G31Data& g31_data() {
  static const G31Data d = [] {
    G31Data d;
    d.subgroup_generators = {
        P({{"-1", "0", "0", "0"}, {"0", "-1", "0", "0"}, {"0", "0", "1", "0"}, {"0", "0", "0", "1"}}),
        P({{"-1", "0", "0", "0"}, {"0", "1", "0", "0"}, {"0", "0", "-1", "0"}, {"0", "0", "0", "1"}}),
        P({{"0", "1", "0", "0"}, {"1", "0", "0", "0"}, {"0", "0", "0", "-1"}, {"0", "0", "-1", "0"}}),
        P({{"0", "0", "1", "0"}, {"0", "0", "0", "-1"}, {"1", "0", "0", "0"}, {"0", "-1", "0", "0"}}),
        P({{"0", "0", "0", "-z(4)"}, {"0", "0", "-z(4)", "0"}, {"0", "z(4)", "0", "0"}, {"z(4)", "0", "0", "0"}})};
    auto X = [](const char* s) { return MPoly::parse(s, 4); };
    d.class_products = {X("X1*X2*X3*X4"),
                        X("((X1+X2)^2-(X3+X4)^2)*((X1-X2)^2-(X3-X4)^2)"),
                        X("(X1^2+X2^2)*(X3^2+X4^2)"),
                        X("(X1^2-X4^2)*(X2^2-X3^2)"),
                        X("(X1^2-X2^2)*(X3^2-X4^2)")};
    d.preferred_basis = {X("X1^4+X2^4+X3^4+X4^4"), X("2*(X1^2*X2^2+X3^2*X4^2)"),
                         X("2*(X1^2*X3^2+X2^2*X4^2)"), X("2*(X1^2*X4^2+X2^2*X3^2)"),
                         X("4*X1*X2*X3*X4")};
    d.change = {{-8, 1, 3, 2, 1}, {0, 0, 1, 2, 1}, {0, 0, 1, 0, 1}, {0, 0, 1, 0, -1}, {4, 0, 0, 0, 0}};
    d.relation = MPoly::parse(
        "Y1^2*Y5^2-2*Y1*Y2*Y3*Y4+Y2^2*Y3^2+Y2^2*Y4^2+Y3^2*Y4^2-Y5^2*(Y2^2+Y3^2+Y4^2)+Y5^4", 5, 'Y',
        {4, 4, 4, 4, 4});
    return d;
  }();
  return d;
}

std::string CatalogEntry::key() const {
  return params.empty() ? name : name + "_" + join_params(params, "_");
}

const std::vector<CatalogName>& catalog_names() {
  static const std::vector<CatalogName> names = [] {
    std::vector<CatalogName> v = {
        {"C", 1, "cyclic subgroup {t(z) : z^d = 1} of SL2"},
        {"Itilde2", 1, "binary dihedral <sigma, C_2d>, order 4d"},
        {"Atilde4", 0, "binary tetrahedral, order 24"},
        {"Stilde4", 0, "binary octahedral, order 48"},
        {"Atilde5", 0, "binary icosahedral, order 120"},
        {"I2", 1, "dihedral reflection group of order 2d"},
        {"G", 3, "imprimitive reflection group G(m,p,n)"},
        {"Z", 2, "diagonal group Z/p + Z/q"},
        {"A", 1, "Coxeter A_n"},
        {"B", 1, "Coxeter B_n"},
        {"F4", 0, "Coxeter F4"},
        {"H3", 0, "Coxeter H3"},
        {"G31", 0, "exceptional G31, order 46080"},
        {"G31sub", 0, "normal subgroup of G31 of order 64"},
    };
    for (auto& e : exceptional_table())
      v.push_back({"G" + std::to_string(e.index), 0, "exceptional rank-2 group"});
    return v;
  }();
  return names;
}

std::string sl2_type(const MatGroup& G) {
  long n = G.order();
  long dn = derived_subgroup(G).order();
  if (dn == 1) return "C" + std::to_string(n);
  if (n == 24 && dn == 8) return "Atilde4";
  if (n == 48 && dn == 24) return "Stilde4";
  if (n == 120 && dn == 120) return "Atilde5";
  return "Itilde2(" + std::to_string(n / 4) + ")";
}

CatalogEntry builtin_entry(const std::string& name, const std::vector<int>& p) {
  CatalogEntry e;
  e.name = name;
  e.params = p;
  Expected& x = e.expected;
  if (name == "C") {
    need(p, 1, name);
    need_range(p[0] >= 1, "d >= 1");
    int d = p[0];
    e.generators = {t_of(z(d))};
    x.order = d;
    if (d >= 2) {
      x.sl2_degrees = {2, d, d};
      x.sl2_relation = 2 * d;
    }
  } else if (name == "Itilde2") {
    need(p, 1, name);
    need_range(p[0] >= 2, "d >= 2");
    int d = p[0];
    e.generators = {sigma(), t_of(z(2 * d))};
    x.order = 4 * d;
    x.sl2_degrees = {4, 2 * d, 2 * (d + 1)};
    x.sl2_relation = 4 * (d + 1);
  } else if (name == "Atilde4") {
    need(p, 0, name);
    e.generators = atilde4_gens();
    x.order = 24;
    x.sl2_degrees = {6, 8, 12};
    x.sl2_relation = 24;
  } else if (name == "Stilde4") {
    need(p, 0, name);
    e.generators = stilde4_gens();
    x.order = 48;
    x.sl2_degrees = {8, 12, 18};
    x.sl2_relation = 36;
  } else if (name == "Atilde5") {
    need(p, 0, name);
    e.generators = atilde5_gens();
    x.order = 120;
    x.sl2_degrees = {12, 20, 30};
    x.sl2_relation = 60;
  } else if (name == "I2") {
    need(p, 1, name);
    need_range(p[0] >= 2, "d >= 2");
    int d = p[0];
    e.generators = {t_of(z(d)), swap2()};
    x.order = 2 * d;
    x.degrees = {2, d};
  } else if (name == "G") {
    need(p, 3, name);
    int m = p[0], pp = p[1], n = p[2];
    need_range(m >= 1 && pp >= 1 && n >= 1 && m % pp == 0, "p | m, n >= 1");
    need_range(!(n == 1 && pp == m), "G(m,m,1) is trivial");
    for (int i = 0; i + 1 < n; ++i) e.generators.push_back(perm_swap(n, i, i + 1));
    if (pp > 1 && n >= 2) {
      Mat s = identity<CycNum>(n);
      s(0, 0) = s(1, 1) = 0;
      s(0, 1) = z(m).inverse();
      s(1, 0) = z(m);
      e.generators.insert(e.generators.begin(), s);
    }
    if (pp < m) {
      Mat t = identity<CycNum>(n);
      t(0, 0) = z(m, pp);
      e.generators.insert(e.generators.begin(), t);
    }
    x.order = ipow(m, n) * factorial(n) / pp;
    for (int k = 1; k < n; ++k) x.degrees.push_back(k * m);
    x.degrees.push_back(n * m / pp);
    std::sort(x.degrees.begin(), x.degrees.end());
  } else if (name == "Z") {
    need(p, 2, name);
    need_range(p[0] >= 1 && p[1] >= 1, "p, q >= 1");
    e.generators = {diag({z(p[0]), CycNum(1)}), diag({CycNum(1), z(p[1])})};
    x.order = static_cast<long>(p[0]) * p[1];
    x.degrees = {std::min(p[0], p[1]), std::max(p[0], p[1])};
  } else if (name == "A") {
    need(p, 1, name);
    need_range(p[0] >= 1, "n >= 1");
    int n = p[0];
    e.generators = coxeter_gens(cartan_A(n));
    x.order = factorial(n + 1);
    for (int k = 2; k <= n + 1; ++k) x.degrees.push_back(k);
  } else if (name == "B") {
    need(p, 1, name);
    need_range(p[0] >= 2, "n >= 2");
    int n = p[0];
    auto A = cartan_A(n);
    A[n - 2][n - 1] = -2;
    e.generators = coxeter_gens(A);
    x.order = ipow(2, n) * factorial(n);
    for (int k = 1; k <= n; ++k) x.degrees.push_back(2 * k);
  } else if (name == "F4") {
    need(p, 0, name);
    auto A = cartan_A(4);
    A[1][2] = -2;
    e.generators = coxeter_gens(A);
    x.order = 1152;
    x.degrees = {2, 6, 8, 12};
  } else if (name == "H3") {
    need(p, 0, name);
    auto A = cartan_A(3);
    CycNum phi = CycNum(1) + z(5) + z(5, 4);
    A[1][2] = A[2][1] = -phi;
    e.generators = coxeter_gens(A);
    x.order = 120;
    x.degrees = {2, 6, 10};
  } else if (name == "G31") {
    need(p, 0, name);
    e.generators = g31_gens();
    x.order = 46080;
    x.degrees = {8, 12, 20, 24};
  } else if (name == "G31sub") {
    need(p, 0, name);
    e.generators = g31_data().subgroup_generators;
    x.order = 64;
  } else if (const Exceptional* ex = find_exceptional(name)) {
    need(p, 0, name);
    e.generators = exceptional_generators(*ex);
    x.order = ex->order;
    x.degrees = ex->degrees;
    x.sl_type = ex->sl_type;
    x.sl_index = ex->a;
  } else {
    throw Error(ErrorCode::UnknownName, name);
  }
  e.conductor = conductor_of(e.generators);
  return e;
}

std::string catalog_dir() {
  if (const char* env = std::getenv("REFLEKT_CATALOG"); env && *env) return env;
  return std::string(REFLEKT_DATA_DIR) + "/catalog";
}

CatalogEntry catalog_entry(const std::string& name, const std::vector<int>& params) {
  CatalogEntry probe;
  probe.name = name;
  probe.params = params;
  std::filesystem::path path = std::filesystem::path(catalog_dir()) / (probe.key() + ".json");
  std::ifstream in(path);
  if (in) {
    std::stringstream ss;
    ss << in.rdbuf();
    return entry_from_json(ss.str());
  }
  return builtin_entry(name, params);
}

MatGroup get_group(const std::string& name, const std::vector<int>& params) {
  static std::mutex mu;
  static std::map<std::string, MatGroup> cache;
  CatalogEntry probe;
  probe.name = name;
  probe.params = params;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(probe.key()); it != cache.end()) return it->second;
  }
  CatalogEntry e = catalog_entry(name, params);
  MatGroup G = e.generators.empty() ? MatGroup::trivial(1) : MatGroup::close(e.generators);
  if (e.expected.order && G.order() != e.expected.order)
    throw Error(ErrorCode::SelfCheckFailed, e.key() + ": closure has order " + std::to_string(G.order()) +
                                                ", expected " + std::to_string(e.expected.order));
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(e.key(), G);
  return G;
}

std::pair<std::string, std::vector<int>> parse_group_name(const std::string& text) {
  std::string name;
  std::vector<int> params;
  auto parse_list = [&](const std::string& s, char sep) {
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, sep)) {
      if (tok.empty()) continue;
      try {
        std::size_t used = 0;
        params.push_back(std::stoi(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw Error(ErrorCode::UnknownName, "bad parameter '" + tok + "' in " + text);
      }
    }
  };
  if (auto lp = text.find('('); lp != std::string::npos) {
    if (text.back() != ')') throw Error(ErrorCode::UnknownName, text);
    name = text.substr(0, lp);
    parse_list(text.substr(lp + 1, text.size() - lp - 2), ',');
  } else if (auto us = text.find('_'); us != std::string::npos) {
    name = text.substr(0, us);
    parse_list(text.substr(us + 1), '_');
  } else {
    name = text;
  }
  bool known = std::any_of(catalog_names().begin(), catalog_names().end(),
                           [&](const CatalogName& c) { return c.name == name; });
  if (!known) throw Error(ErrorCode::UnknownName, text);
  return {name, params};
}

std::string entry_to_json(const CatalogEntry& e) {
  json j;
  j["name"] = e.name;
  j["params"] = e.params;
  j["conductor"] = e.conductor;
  json mats = json::array();
  for (auto& g : e.generators) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < g.rows(); ++r) {
      json row = json::array();
      for (Eigen::Index c = 0; c < g.cols(); ++c) row.push_back(g(r, c).str());
      rows.push_back(row);
    }
    mats.push_back(rows);
  }
  j["matrices"] = mats;
  json x;
  x["order"] = e.expected.order;
  if (!e.expected.degrees.empty()) x["degrees"] = e.expected.degrees;
  if (!e.expected.sl2_degrees.empty()) {
    x["sl2_degrees"] = e.expected.sl2_degrees;
    x["sl2_relation"] = e.expected.sl2_relation;
  }
  if (!e.expected.sl_type.empty()) {
    x["sl_type"] = e.expected.sl_type;
    x["sl_index"] = e.expected.sl_index;
  }
  j["expected"] = x;
  return j.dump(1);
}

CatalogEntry entry_from_json(const std::string& text) {
  CatalogEntry e;
  try {
    json j = json::parse(text);
    e.name = j.at("name").get<std::string>();
    e.params = j.value("params", std::vector<int>{});
    e.conductor = j.value("conductor", 1L);
    for (auto& m : j.at("matrices")) {
      std::vector<std::vector<std::string>> rows;
      for (auto& r : m) rows.push_back(r.get<std::vector<std::string>>());
      e.generators.push_back(parse_matrix(rows));
    }
    if (j.contains("expected")) {
      const json& x = j["expected"];
      e.expected.order = x.value("order", 0L);
      e.expected.degrees = x.value("degrees", std::vector<int>{});
      e.expected.sl2_degrees = x.value("sl2_degrees", std::vector<int>{});
      e.expected.sl2_relation = x.value("sl2_relation", 0);
      e.expected.sl_type = x.value("sl_type", std::string{});
      e.expected.sl_index = x.value("sl_index", 0);
    }
  } catch (const json::exception& ex) {
    throw Error(ErrorCode::ParseError, std::string("catalog entry: ") + ex.what());
  }
  return e;
}

SelfCheckReport catalog_selfcheck(const std::string& name, const std::vector<int>& params) {
  CatalogEntry e = catalog_entry(name, params);
  SelfCheckReport rep;
  rep.key = e.key();
  const Expected& x = e.expected;
  MatGroup G = MatGroup::close(e.generators);
  rep.order = G.order();
  auto diff = [&](const std::string& what, const std::string& got, const std::string& want) {
    if (got != want) rep.diffs.push_back(what + ": got " + got + ", expected " + want);
  };
  auto list = [](const std::vector<int>& v) { return "{" + join_params(v, ",") + "}"; };
  if (x.order) diff("order", std::to_string(rep.order), std::to_string(x.order));
  if (!x.degrees.empty()) {
    try {
      rep.degrees = reflection_degrees(G);
      diff("degrees", list(rep.degrees), list(x.degrees));
      long prod = 1;
      long sum = 0;
      for (int d : rep.degrees) {
        prod *= d;
        sum += d - 1;
      }
      diff("product of degrees", std::to_string(prod), std::to_string(rep.order));
      diff("number of reflections", std::to_string(G.reflections().size()), std::to_string(sum));
      diff("reflection subgroup order", std::to_string(reflection_subgroup(G).order()), std::to_string(rep.order));
    } catch (const Error& err) {
      rep.diffs.push_back(err.what());
    }
  }
  if (!x.sl2_degrees.empty()) {
    auto pres = invariant_presentation(G);
    rep.sl2_degrees = pres.generator_degrees;
    std::sort(rep.sl2_degrees.begin(), rep.sl2_degrees.end());
    rep.sl2_relation = pres.relation_degrees.size() == 1 ? pres.relation_degrees[0] : -1;
    diff("generator degrees", list(rep.sl2_degrees), list(x.sl2_degrees));
    diff("relation degree", std::to_string(rep.sl2_relation), std::to_string(x.sl2_relation));
  }
  if (!x.sl_type.empty()) {
    MatGroup sl = sl_part(G);
    rep.sl_type = sl2_type(sl);
    rep.sl_index = static_cast<int>(rep.order / sl.order());
    diff("Wt cap SL", rep.sl_type, x.sl_type);
    diff("index", std::to_string(rep.sl_index), std::to_string(x.sl_index));
  }
  return rep;
}

}  // namespace reflekt
