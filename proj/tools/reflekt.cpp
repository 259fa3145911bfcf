#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "reflekt/catalog.hpp"
#include "reflekt/invariants.hpp"
#include "reflekt/parallel.hpp"
#include "reflekt/presentations.hpp"
#include "reflekt/quotients.hpp"
#include "reflekt/tables.hpp"

using namespace reflekt;
using json = nlohmann::json;

namespace {

enum Exit { kOk = 0, kFailed = 1, kBadInput = 2 };

struct Report {
  std::string command;
  std::string status = "ok";  // ok, failed, inconclusive
  json payload = json::object();
  std::vector<std::string> lines;  // text form
};

json matrix_json(const Mat& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) r.push_back(m(i, j).str());
    rows.push_back(r);
  }
  return rows;
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

json rows_json(const std::vector<RowCheck>& rows) {
  json a = json::array();
  for (auto& r : rows)
    a.push_back({{"label", r.label}, {"ok", r.ok}, {"expected", r.expected}, {"got", r.got}, {"note", r.note}});
  return a;
}

void add_rows(Report& rep, const std::vector<RowCheck>& rows) {
  for (auto& r : rows) {
    std::string line = std::string(r.ok ? "  ok    " : "  FAIL  ") + r.label + ": " + r.got;
    if (!r.ok) line += " (expected " + r.expected + ")";
    if (!r.note.empty()) line += " [" + r.note + "]";
    rep.lines.push_back(line);
  }
}

json group_json(const std::string& name, const MatGroup& G, const std::vector<int>& degrees) {
  return {{"name", name}, {"order", G.order()}, {"degrees", degrees}};
}

std::vector<int> degrees_or_empty(const MatGroup& G) {
  try {
    return reflection_degrees(G);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotReflectionGroup) return {};
    throw;
  }
}

// ---- subcommands ---------------------------------------------------------------

Report group_info(const std::string& name) {
  Report rep;
  MatGroup G = resolve_group(name);
  std::vector<int> d = degrees_or_empty(G);
  rep.payload["group"] = group_json(name, G, d);
  rep.payload["dimension"] = G.dim();
  rep.payload["reflections"] = G.reflections().size();
  rep.payload["reflection_group"] = !d.empty();
  json gens = json::array();
  for (auto& g : G.generators()) gens.push_back(matrix_json(g));
  rep.payload["generators"] = gens;
  rep.lines.push_back(name + ": order " + std::to_string(G.order()) + ", dimension " + std::to_string(G.dim()) +
                      ", " + std::to_string(G.reflections().size()) + " reflections");
  rep.lines.push_back(d.empty() ? "not a reflection group" : "degrees " + multiset_str(d));
  for (auto& g : G.generators()) rep.lines.push_back(to_string(g));
  return rep;
}

Report molien_cmd(const std::string& name, int D) {
  Report rep;
  MatGroup G = resolve_group(name);
  MolienSeries m = molien(G, D);
  std::vector<std::string> c;
  for (auto& q : m.coeffs) c.push_back(to_string(q));
  rep.payload["group"] = {{"name", name}, {"order", G.order()}};
  rep.payload["molien"] = c;
  rep.lines.push_back(join(c, " "));
  return rep;
}

Report degrees_cmd(const std::string& name, int bound) {
  Report rep;
  MatGroup G = resolve_group(name);
  PresentationOptions opt;
  opt.bound = bound;
  InvariantPresentation p = invariant_presentation(G, opt);
  rep.payload["group"] = group_json(name, G, p.generator_degrees);
  rep.payload["relation_degrees"] = p.relation_degrees;
  rep.payload["certified"] = p.certified;
  json gens = json::array(), rels = json::array();
  for (auto& g : p.generators) gens.push_back(g.str());
  for (auto& r : p.relations) rels.push_back(r.str('Y'));
  rep.payload["generators"] = gens;
  rep.payload["relations"] = rels;
  rep.lines.push_back("degrees " + multiset_str(p.generator_degrees) + ", relation degrees " +
                      multiset_str(p.relation_degrees) + (p.certified ? "" : " (not certified by Molien)"));
  if (!p.certified) rep.status = "inconclusive";
  return rep;
}

void describe_quotient(Report& rep, const QuotientResult& q) {
  rep.payload["quotient"] = {{"order", q.W.order()}, {"degrees", q.W_degrees}, {"weights", q.V_weights}};
  rep.payload["quotient_degrees"] = q.W_degrees;
  rep.payload["relation_degrees"] = q.relation_degrees;
  rep.lines.push_back("quotient: order " + std::to_string(q.W.order()) + ", degrees " + multiset_str(q.W_degrees) +
                      ", weights " + multiset_str(q.V_weights) + ", relation degrees " +
                      multiset_str(q.relation_degrees));
}

Report good_cmd(const std::string& wt, const std::string& g, int bound) {
  Report rep;
  MatGroup Wt = resolve_group(wt);
  MatGroup G = resolve_subgroup(g, Wt);
  QuotientOptions opt;
  opt.bound = bound;
  QuotientResult r = is_good(Wt, G, opt);
  rep.payload["group"] = group_json(wt, Wt, reflection_degrees(Wt));
  rep.payload["subgroup"] = {{"name", g}, {"order", G.order()}};
  rep.payload["good"] = r.good;
  rep.payload["reason"] = reason_name(r.reason);
  rep.lines.push_back(wt + " / " + g + ": " + (r.good ? "good" : "not good") + " (" + reason_name(r.reason) + ")");
  if (!r.good) {
    rep.status = "failed";
    json w = {{"detail", r.detail}};
    if (r.witness_generator >= 0) w["generator"] = matrix_json(G.generators()[r.witness_generator]);
    if (!r.witness_alpha.is_zero()) w["alpha_C"] = r.witness_alpha.str();
    rep.payload["witness"] = w;
    if (!r.detail.empty()) rep.lines.push_back("witness: " + r.detail);
    if (!r.witness_alpha.is_zero()) rep.lines.push_back("alpha_C = " + r.witness_alpha.str());
    return rep;
  }
  QuotientResult q = quotient_map(Wt, G, opt);
  describe_quotient(rep, q);
  return rep;
}

Report quotient_cmd(const std::string& wt, const std::string& g, int bound) {
  Report rep;
  MatGroup Wt = resolve_group(wt);
  MatGroup G = resolve_subgroup(g, Wt);
  QuotientOptions opt;
  opt.bound = bound;
  QuotientResult q = quotient_map(Wt, G, opt);
  rep.payload["group"] = group_json(wt, Wt, reflection_degrees(Wt));
  rep.payload["subgroup"] = {{"name", g}, {"order", G.order()}};
  rep.payload["good"] = true;
  rep.payload["reason"] = reason_name(q.reason);
  describe_quotient(rep, q);
  json inv = json::array(), gens = json::array();
  for (auto& p : q.presentation.generators) inv.push_back(p.str());
  for (auto& m : q.phi_gens) gens.push_back(matrix_json(m));
  rep.payload["invariants"] = inv;
  rep.payload["generator_images"] = gens;
  for (auto& p : q.presentation.generators) rep.lines.push_back("  " + p.str());
  for (auto& r : q.presentation.relations) rep.lines.push_back("  relation " + r.str('Y'));
  DegreeIdentity di = verify_degree_identity(Wt, q);
  rep.payload["degree_identity"] = {{"holds", di.holds}, {"lhs", di.lhs}, {"rhs", di.rhs}};
  rep.lines.push_back("degree identity " + multiset_str(di.lhs) + " = " + multiset_str(di.rhs) + ": " +
                      (di.holds ? "holds" : "FAILS"));
  if (!di.holds) rep.status = "failed";
  return rep;
}

Report tables_cmd(const std::vector<int>& tables, int max_param) {
  Report rep;
  json all = json::array();
  for (int t : tables) {
    TableReport tr = verify_table(t, max_param);
    all.push_back({{"table", t}, {"ok", tr.ok()}, {"seconds", tr.seconds}, {"rows", rows_json(tr.rows)}});
    std::ostringstream head;
    head << "table " << t << ": " << (tr.ok() ? "ok" : "FAILED") << " (" << tr.rows.size() << " rows, "
         << tr.seconds << " s)";
    rep.lines.push_back(head.str());
    add_rows(rep, tr.rows);
    if (!tr.ok()) rep.status = "failed";
  }
  rep.payload["tables"] = all;
  return rep;
}

Report g31_cmd() {
  Report rep;
  G31Report g = g31_demo();
  rep.payload["checks"] = rows_json(g.checks);
  rep.payload["group"] = {{"name", "G31"}, {"order", 46080}, {"degrees", {8, 12, 20, 24}}};
  rep.payload["good"] = true;
  rep.payload["reason"] = reason_name(g.quotient.reason);
  describe_quotient(rep, g.quotient);
  add_rows(rep, g.checks);
  for (auto& r : g.quotient.presentation.relations) rep.lines.push_back("R = " + r.str('Y'));
  if (!g.ok()) rep.status = "failed";
  return rep;
}

Report diagram_cmd(const std::string& file, std::vector<std::string> rules, long max_cosets) {
  Report rep;
  Diagram d = load_diagram(file);
  if (rules.empty()) rules = d.rules;
  if (rules.empty()) throw Error(ErrorCode::MalformedDiagram, file + ": no rule given");
  json steps = json::array();
  if (d.group.empty()) {
    // presentation side only
    Diagram cur = d;
    long order = coset_enumerate(diagram_presentation(d), max_cosets);
    rep.lines.push_back(d.name + ": presented order " + std::to_string(order) + " (no matrices bound)");
    for (auto& rule : rules) {
      RuleResult rr = apply_rule(cur, rule);
      long a = coset_enumerate(rr.presentation, max_cosets);
      long b = coset_enumerate(diagram_presentation(rr.diagram), max_cosets);
      steps.push_back({{"rule", rule}, {"kind", rr.kind}, {"presented_order", a}, {"target_diagram_order", b},
                       {"diagram", rr.diagram.to_dsl()}});
      rep.lines.push_back("  " + rule + ": " + std::to_string(a) + (a == b ? "" : " (rewritten diagram presents " +
                                                                                      std::to_string(b) + ")"));
      if (a != b) rep.status = "failed";
      cur = rr.diagram;
    }
    rep.payload["steps"] = steps;
    rep.payload["source_order"] = order;
    return rep;
  }
  for (auto& q : verify_chain(d, rules, max_cosets)) {
    steps.push_back({{"rule", q.rule},
                     {"kind", q.kind},
                     {"ok", q.ok},
                     {"source_order", q.source_order},
                     {"kernel_order", q.kernel_order},
                     {"good", q.good},
                     {"quotient_order", q.quotient_order},
                     {"presented_order", q.presented_order},
                     {"target_diagram_order", q.target_diagram_order},
                     {"images_satisfy_relators", q.images_satisfy_relators},
                     {"diagram", q.quotient.to_dsl()},
                     {"notes", q.notes}});
    std::ostringstream s;
    s << (q.ok ? "  ok    " : "  FAIL  ") << q.rule << " (" << q.kind << "): " << q.source_order << " / "
      << q.kernel_order << " = " << q.quotient_order << ", presented " << q.presented_order
      << (q.good ? "" : ", kernel not good");
    rep.lines.push_back(s.str());
    for (auto& n : q.notes) rep.lines.push_back("        " + n);
    if (!q.ok) rep.status = "failed";
  }
  if (steps.size() != rules.size()) rep.status = "failed";
  rep.payload["steps"] = steps;
  return rep;
}

Report present_cmd(const std::string& file, long max_cosets) {
  Report rep;
  Diagram d = load_diagram(file);
  Presentation p = diagram_presentation(d);
  long n = coset_enumerate(p, max_cosets);
  rep.payload["presentation"] = p.str();
  rep.payload["order"] = n;
  rep.lines.push_back(p.str());
  rep.lines.push_back("order " + std::to_string(n));
  return rep;
}

std::vector<std::string> all_catalog_keys() {
  std::vector<std::string> v;
  for (auto& n : catalog_names()) {
    if (n.arity == 0) v.push_back(n.name);
  }
  for (int d = 2; d <= 8; ++d) v.push_back("C(" + std::to_string(d) + ")");
  for (int d = 2; d <= 5; ++d) v.push_back("Itilde2(" + std::to_string(d) + ")");
  return v;
}

Report catalog_export(const std::string& dir, std::vector<std::string> names) {
  Report rep;
  if (names.empty()) names = all_catalog_keys();
  std::filesystem::create_directories(dir);
  json written = json::array();
  for (auto& n : names) {
    auto [name, params] = parse_group_name(n);
    CatalogEntry e = builtin_entry(name, params);
    std::filesystem::path path = std::filesystem::path(dir) / (e.key() + ".json");
    std::ofstream(path) << entry_to_json(e) << "\n";
    written.push_back(path.string());
    rep.lines.push_back("wrote " + path.string());
  }
  rep.payload["written"] = written;
  return rep;
}

Report catalog_check(std::vector<std::string> names) {
  Report rep;
  if (names.empty()) names = all_catalog_keys();
  json res = json::array();
  for (auto& n : names) {
    auto [name, params] = parse_group_name(n);
    SelfCheckReport r = catalog_selfcheck(name, params);
    res.push_back({{"key", r.key}, {"ok", r.ok()}, {"order", r.order}, {"degrees", r.degrees}, {"diffs", r.diffs}});
    rep.lines.push_back(std::string(r.ok() ? "  ok    " : "  FAIL  ") + r.key + ": order " +
                        std::to_string(r.order) + (r.degrees.empty() ? "" : ", degrees " + multiset_str(r.degrees)));
    for (auto& d : r.diffs) rep.lines.push_back("        " + d);
    if (!r.ok()) rep.status = "failed";
  }
  rep.payload["entries"] = res;
  return rep;
}

Report catalog_list() {
  Report rep;
  json a = json::array();
  for (auto& n : catalog_names()) {
    a.push_back({{"name", n.name}, {"arity", n.arity}, {"description", n.description}});
    rep.lines.push_back(n.name + " (" + std::to_string(n.arity) + " params): " + n.description);
  }
  rep.payload["names"] = a;
  rep.payload["catalog_dir"] = catalog_dir();
  return rep;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"reflekt: finite complex reflection groups and their good quotients"};
  app.require_subcommand(1);
  bool as_json = false;
  unsigned threads = 0;
  int bound = 0;
  app.add_flag("--json", as_json, "machine-readable output");
  app.add_option("--threads", threads, "worker threads (default: hardware)");
  app.add_option("--bound", bound, "degree bound for invariant computations (default 2|G|)");

  std::string name, wt, sub, file, dir;
  int order = 12, max_param = 0;
  long max_cosets = kDefaultCosetLimit;
  std::vector<int> tables;
  std::vector<std::string> rules, names;

  auto* group = app.add_subcommand("group", "group inspection");
  group->require_subcommand(1);
  auto* info = group->add_subcommand("info", "order, degrees and generators");
  info->add_option("NAME", name, "catalog name, e.g. G(4,2,2), G12, or a matrix file")->required();

  auto* mol = app.add_subcommand("molien", "Molien series coefficients");
  mol->add_option("NAME", name)->required();
  mol->add_option("--order", order, "highest degree")->check(CLI::NonNegativeNumber);

  auto* deg = app.add_subcommand("degrees", "generator and relation degrees of the invariant ring");
  deg->add_option("NAME", name)->required();

  auto* good = app.add_subcommand("good", "decide whether G is good in Wt");
  good->add_option("WT", wt)->required();
  good->add_option("G", sub, "catalog name, center2, derived, sl, trivial, or a matrix file")->required();

  auto* quo = app.add_subcommand("quotient", "construct Wt/G on the tangent space");
  quo->add_option("WT", wt)->required();
  quo->add_option("G", sub)->required();

  auto* tab = app.add_subcommand("tables", "table verification suites");
  tab->require_subcommand(1);
  auto* ver = tab->add_subcommand("verify", "recompute and compare a table");
  ver->add_option("--table", tables, "table number(s), 1-6")->required()->check(CLI::Range(1, 6));
  ver->add_option("--max-param", max_param, "bound on parametric rows");

  auto* g31 = app.add_subcommand("g31-demo", "G31 / G of order 64 -> symmetric group S6");

  auto* dia = app.add_subcommand("diagram", "diagram operations");
  dia->require_subcommand(1);
  auto* dq = dia->add_subcommand("quotient", "apply rules and verify each quotient");
  dq->add_option("FILE", file)->required()->check(CLI::ExistingFile);
  dq->add_option("--rule", rules, "rule, e.g. \"t u = u t\" (repeatable; default: rules in the file)");
  dq->add_option("--max", max_cosets, "coset limit");

  auto* pres = app.add_subcommand("present", "presentations");
  pres->require_subcommand(1);
  auto* en = pres->add_subcommand("enumerate", "order of the group presented by a diagram");
  en->add_option("FILE", file)->required()->check(CLI::ExistingFile);
  en->add_option("--max", max_cosets, "coset limit");

  auto* cat = app.add_subcommand("catalog", "catalog files");
  cat->require_subcommand(1);
  auto* exp = cat->add_subcommand("export", "write builtin entries as JSON");
  exp->add_option("DIR", dir)->required();
  exp->add_option("NAMES", names);
  auto* chk = cat->add_subcommand("check", "self-check entries");
  chk->add_option("NAMES", names);
  auto* lst = cat->add_subcommand("list", "known names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kBadInput;
  }
  if (threads) set_num_threads(threads);

  std::string command;
  for (int i = 1; i < argc; ++i) command += (i > 1 ? " " : "") + std::string(argv[i]);

  auto t0 = std::chrono::steady_clock::now();
  Report rep;
  try {
    if (*info) rep = group_info(name);
    else if (*mol) rep = molien_cmd(name, order);
    else if (*deg) rep = degrees_cmd(name, bound);
    else if (*good) rep = good_cmd(wt, sub, bound);
    else if (*quo) rep = quotient_cmd(wt, sub, bound);
    else if (*ver) rep = tables_cmd(tables, max_param);
    else if (*g31) rep = g31_cmd();
    else if (*dq) rep = diagram_cmd(file, rules, max_cosets);
    else if (*en) rep = present_cmd(file, max_cosets);
    else if (*exp) rep = catalog_export(dir, names);
    else if (*chk) rep = catalog_check(names);
    else if (*lst) rep = catalog_list();
  } catch (const Error& e) {
    if (as_json)
      std::cout << json{{"command", command}, {"status", "error"}, {"error", error_name(e.code())}, {"message", e.what()}}
                       .dump(2)
                << "\n";
    else
      std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  if (as_json) {
    json out = rep.payload;
    out["command"] = command;
    out["status"] = rep.status;
    out["seconds"] = seconds;
    std::cout << out.dump(2) << "\n";
  } else {
    for (auto& l : rep.lines) std::cout << l << "\n";
    if (rep.status != "ok") std::cout << rep.status << "\n";
  }
  return rep.status == "failed" ? kFailed : kOk;
}
