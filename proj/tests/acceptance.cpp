// One line per acceptance criterion; exit status 1 if any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "reflekt/catalog.hpp"
#include "reflekt/invariants.hpp"
#include "reflekt/presentations.hpp"
#include "reflekt/quotients.hpp"
#include "reflekt/tables.hpp"
#include "unit/oracles.hpp"
#include "unit/properties.hpp"

using namespace reflekt;

namespace {

struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back("failed: " + what);
    }
  }
  void note(const std::string& s) { notes.push_back(s); }
};

std::string fmt_seconds(double s) {
  std::ostringstream o;
  o.precision(1);
  o << std::fixed << s << " s";
  return o.str();
}

void table_outcome(Outcome& out, int table) {
  TableReport t = verify_table(table);
  for (auto& r : t.rows)
    out.require(r.ok, r.label + ": expected " + r.expected + ", got " + r.got + (r.note.empty() ? "" : " (" + r.note + ")"));
  out.note(std::to_string(t.rows.size()) + " rows");
}

MatGroup pm1(int n) {
  std::vector<CycNum> d(n, CycNum(-1));
  return MatGroup::close({diag(d)});
}

// Good pairs exercised by criteria 2, 3 and 5.
std::vector<PairSpec> good_pairs() {
  std::vector<PairSpec> v = table_pairs(1);
  for (auto& p : table_pairs(4)) v.push_back(p);
  PairSpec g31;
  g31.label = "G31";
  g31.Wt = get_group("G31");
  g31.G = get_group("G31sub");
  v.push_back(g31);
  return v;
}

QuotientResult quotient_for(const PairSpec& p) {
  QuotientOptions opt;
  if (p.label == "G31") opt.pinned = g31_data().preferred_basis;
  return quotient_map(p.Wt, p.G, opt);
}

Outcome criterion1() {
  Outcome o;
  table_outcome(o, 2);
  return o;
}

Outcome criterion2() {
  Outcome o;
  table_outcome(o, 1);
  return o;
}

Outcome criterion3() {
  Outcome o;
  table_outcome(o, 4);
  return o;
}

Outcome criterion4() {
  Outcome o;
  table_outcome(o, 3);
  return o;
}

Outcome criterion5() {
  Outcome o;
  G31Report r = g31_demo();
  for (auto& c : r.checks) o.require(c.ok, c.label + ": expected " + c.expected + ", got " + c.got);
  o.note("R has weighted degree 16 (quartic in Y, each Y of weight 4); the criterion text says 8");
  return o;
}

Outcome criterion6() {
  Outcome o;
  QuotientResult a = is_good(get_group("Z", {2, 4}), pm1(2));
  o.require(!a.good, "mu2 x mu4 with (-1,-1) reported good");
  o.require(a.reason == GoodReason::NonInvariantAlpha && !a.witness_alpha.is_zero(),
            "mu2 x mu4: no non-invariant alpha_C witness");
  QuotientResult b = is_good(get_group("G", {4, 1, 2}), pm1(2));
  o.require(!b.good, "G(4,1,2) with -1 reported good");
  o.require(b.reason == GoodReason::NonInvariantAlpha && !b.witness_alpha.is_zero(),
            "G(4,1,2): no non-invariant alpha_C witness");
  o.note("witnesses alpha_C = " + a.witness_alpha.str() + " and " + b.witness_alpha.str());
  return o;
}

Outcome criterion7(const std::vector<PairSpec>& pairs, std::vector<QuotientResult>& qs) {
  Outcome o;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    DegreeIdentity d = verify_degree_identity(pairs[i].Wt, qs[i]);
    o.require(d.holds, pairs[i].label + ": " + multiset_str(d.lhs) + " != " + multiset_str(d.rhs));
  }
  o.note(std::to_string(pairs.size()) + " pairs");
  return o;
}

Outcome criterion8(const std::vector<PairSpec>& pairs) {
  Outcome o;
  int n = 0;
  for (auto& p : pairs) {
    if (!p.G.reflections().empty()) continue;
    GoodGenerators g = good_generators(p.Wt, p.G);
    o.require(g.all_in_G && g.generates, p.label + ": products generate a group of order " +
                                             std::to_string(g.generated_order) + " out of " +
                                             std::to_string(p.G.order()));
    ++n;
  }
  o.note(std::to_string(n) + " reflection-free pairs");
  return o;
}

Outcome criterion9() {
  Outcome o;
  const std::string dir = REFLEKT_SOURCE_DIR "/data/diagrams/";
  struct Order {
    const char* file;
    long order;
  };
  for (auto [file, order] : {Order{"A2.dgm", 6}, Order{"F4.dgm", 1152}, Order{"G12.dgm", 48}, Order{"G13.dgm", 96},
                             Order{"G22.dgm", 240}}) {
    long got = coset_enumerate(diagram_presentation(load_diagram(dir + file)));
    o.require(got == order, std::string(file) + " presents order " + std::to_string(got));
  }
  struct Quot {
    const char* file;
    std::vector<long> orders;
  };
  for (auto& [file, orders] : std::vector<Quot>{{"F4.dgm", {36}},
                                                {"G12.dgm", {24}},
                                                {"G13.dgm", {48}},
                                                {"G22.dgm", {120}},
                                                {"G424.dgm", {384, 48, 12, 4, 2}}}) {
    Diagram d = load_diagram(dir + file);
    auto reps = verify_chain(d, d.rules);
    o.require(reps.size() == orders.size(), std::string(file) + ": chain stopped after " +
                                                std::to_string(reps.size()) + " steps");
    for (std::size_t i = 0; i < reps.size() && i < orders.size(); ++i) {
      o.require(reps[i].ok, std::string(file) + " step " + reps[i].rule + " not verified");
      o.require(reps[i].quotient_order == orders[i] && reps[i].presented_order == orders[i],
                std::string(file) + " step " + reps[i].rule + ": quotient " +
                    std::to_string(reps[i].quotient_order) + ", presented " +
                    std::to_string(reps[i].presented_order));
    }
  }
  return o;
}

Outcome criterion10() {
  Outcome o;
  auto named = [](const char* key) {
    auto [n, p] = parse_group_name(key);
    return get_group(n, p);
  };

  std::mt19937 rng(1018);
  int field = 0;
  for (int i = 0; i < 300; ++i) {
    CycNum a = oracle::random_cyc(rng), b = oracle::random_cyc(rng), c = oracle::random_cyc(rng);
    bool ok = (a + b) + c == a + (b + c) && (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c &&
              (a.is_zero() || a * a.inverse() == CycNum(1)) &&
              oracle::close(oracle::numeric(a * b), oracle::numeric(a) * oracle::numeric(b));
    field += ok;
  }
  o.require(field == 300, "field axioms: " + std::to_string(300 - field) + " failures");

  int action_bad = 0;
  MatGroup G12 = named("G12");
  MPoly p = MPoly::parse("X1^3 + z(4)*X1*X2^2 - 2*X2", 2);
  for (int i = 0; i < G12.order(); i += 3)
    for (int j = 0; j < G12.order(); j += 7)
      action_bad += act(mul<CycNum>(G12.element(i), G12.element(j)), p) != act(G12.element(i), act(G12.element(j), p));
  action_bad += act(identity<CycNum>(2), p) != p;
  o.require(action_bad == 0, "action axioms: " + std::to_string(action_bad) + " failures");

  for (auto key : {"G(4,2,2)", "Itilde2(2)", "C(5)", "G12", "A(3)", "Z(2,4)", "Atilde4"}) {
    MatGroup G = named(key);
    auto m = molien(G, 12);
    for (int d = 0; d <= 12; ++d)
      o.require(m[d] == static_cast<long>(invariant_basis(G, d).size()),
                std::string("Molien vs dimension for ") + key + " in degree " + std::to_string(d));
  }

  for (auto key : {"G(4,2,2)", "G(3,1,2)", "G12", "Stilde4", "A(3)", "G(4,2,3)"}) {
    MatGroup G = named(key);
    for (MatGroup H : {derived_subgroup(G), center(G), sl_part(G), reflection_subgroup(G)})
      o.require(G.order() % H.order() == 0, std::string("Lagrange in ") + key);
  }

  struct Pair {
    const char* label;
    MatGroup W, G;
  };
  MatGroup G13 = named("G13"), B3 = named("B(3)"), G423 = named("G(4,2,3)");
  for (auto& [label, W, G] : std::vector<Pair>{{"G12/-1", G12, pm1(2)},
                                               {"G(4,2,2)/-1", named("G(4,2,2)"), pm1(2)},
                                               {"G13/Q8", G13, quaternion_subgroup(G13)},
                                               {"B(3)/derived", B3, derived_subgroup(B3)},
                                               {"G(4,2,3)/derived", G423, derived_subgroup(G423)}}) {
    int bad = props::parabolic_failures(W, G);
    o.require(bad == 0, std::string("parabolic inheritance for ") + label + ": " + std::to_string(bad));
  }

  auto sweep = props::reducible_sweep(6);
  for (auto& m : sweep.mismatches) o.require(false, "reducible sweep " + m);
  o.note("reducible sweep: " + std::to_string(sweep.cases) + " cases");

  MatGroup mu2 = pm1(2);
  InvariantPresentation pres = invariant_presentation(mu2);
  o.require(in_Nrel(mu2, pres, parse_matrix({{"0", "1"}, {"1", "0"}})), "swap in N(-1, rel)");
  o.require(!in_Nrel(mu2, pres, diag({CycNum(1), CycNum::zeta(4)})), "diag(1, i) not in N(-1, rel)");
  MatGroup S4 = named("Stilde4");
  MatGroup Q8 = quaternion_subgroup(S4);
  InvariantPresentation q = invariant_presentation(Q8);
  o.require(in_Nrel(Q8, q, diag({CycNum::zeta(8), CycNum::root_of_unity(8, 7)})), "t(zeta8) in N(Q8, rel)");
  for (auto& g : S4.generators()) o.require(in_Nrel(Q8, q, g), "Stilde4 generator in N(Q8, rel)");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* title;
    std::function<Outcome()> run;
  };
  std::vector<PairSpec> pairs;
  std::vector<QuotientResult> quotients;
  auto ensure_pairs = [&] {
    if (!pairs.empty()) return;
    pairs = good_pairs();
    for (auto& p : pairs) quotients.push_back(quotient_for(p));
  };
  std::vector<Criterion> all = {
      {1, "table 2: SL2 subgroups, degrees and relation degree", criterion1},
      {2, "table 1: quotients by -1", criterion2},
      {3, "table 4: rank-2 quotients", criterion3},
      {4, "table 3: W cap SL type and index", criterion4},
      {5, "G31 by its normal subgroup of order 64", criterion5},
      {6, "counterexamples with witnesses", criterion6},
      {7, "degree identity on every good pair",
       [&] {
         ensure_pairs();
         return criterion7(pairs, quotients);
       }},
      {8, "reflection pair products generate G",
       [&] {
         ensure_pairs();
         return criterion8(pairs);
       }},
      {9, "diagram suite", criterion9},
      {10, "property suites", criterion10},
  };

  int failed = 0;
  for (auto& c : all) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.notes.push_back(std::string("exception: ") + e.what());
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << "criterion " << c.number << ": " << (o.ok ? "PASS" : "FAIL") << "  " << c.title << " ("
              << fmt_seconds(s) << ")\n";
    for (auto& n : o.notes) std::cout << "    " << n << "\n";
    std::cout.flush();
    failed += !o.ok;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all criteria passed") << "\n";
  return failed ? 1 : 0;
}
