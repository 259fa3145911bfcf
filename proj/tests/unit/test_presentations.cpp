#include "doctest.h"

#include "oracles.hpp"
#include "reflekt/catalog.hpp"
#include "reflekt/presentations.hpp"

using namespace reflekt;

namespace {
const char* kA2 = "node s 2; node t 2; edge s t";
const char* kF4 = "node s 2; node t 2; node u 2; node v 2; edge s t; edge t u 4; edge u v; group F4 s t u v";
std::string twisted(int e, int f, const char* group) {
  return "node s 2; node t 2; node u 2; twisted s t u e=" + std::to_string(e) + " f=" + std::to_string(f) +
         "; group " + group;
}
long order_of(const std::string& dsl) { return coset_enumerate(diagram_presentation(parse_diagram(dsl))); }
}  // namespace

TEST_CASE("presentations: parsing and words") {
  Diagram d = parse_diagram(kA2);
  CHECK(d.nodes.size() == 2);
  Presentation p = diagram_presentation(d);
  CHECK(p.generators == std::vector<std::string>{"s", "t"});
  CHECK(p.relators.size() == 3);
  std::vector<std::string> labels = {"t1", "t1p", "s"};
  Word w = parse_word("t1p t1 s^-1 t1p^2", labels);
  CHECK(w == Word{2, 1, -3, 2, 2});
  CHECK(parse_word(word_str(w, labels), labels) == w);
  Diagram e = parse_diagram(d.to_dsl());
  CHECK(diagram_presentation(e).str() == p.str());
  CHECK_THROWS_AS(parse_diagram("node s 2; edge s x"), Error);
  CHECK_THROWS_AS(parse_diagram("node s 2; frobnicate s"), Error);
}

TEST_CASE("presentations: twisted relators") {
  Diagram d = parse_diagram(twisted(4, 3, "G13"));
  Presentation p = diagram_presentation(d);
  // s^2, t^2, u^2, then the two relations of lengths 5+5 and 4+4
  REQUIRE(p.relators.size() >= 5);
  CHECK(p.relators[3].size() == 10);
  CHECK(p.relators[4].size() == 8);
}

TEST_CASE("presentations: coset enumeration") {
  CHECK(order_of(kA2) == 6);
  // oracle: closure of the catalog F4 matrices
  CHECK(order_of(kF4) == get_group("F4").order());
  CHECK(order_of(twisted(3, 3, "G12")) == 48);
  CHECK(order_of(twisted(4, 3, "G13")) == 96);
  CHECK(order_of(twisted(5, 3, "G22")) == 240);
  CHECK(order_of("node s 3; node t 3; edge s t") == 24);
  CHECK_THROWS_AS(coset_enumerate(diagram_presentation(parse_diagram(kF4)), 100), Error);
  Presentation inf;
  inf.generators = {"a"};
  CHECK_THROWS_AS(coset_enumerate(inf, 1000), Error);
}

TEST_CASE("presentations: rules") {
  RuleResult r = apply_rule(parse_diagram(kF4), "t u = u t");
  CHECK(r.kind == "commute");
  CHECK(coset_enumerate(r.presentation) == 36);
  CHECK(coset_enumerate(diagram_presentation(r.diagram)) == 36);
  RuleResult b = apply_rule(parse_diagram("node s 2; node t 2; edge s t 6"), "s t s = t s t");
  CHECK(b.kind == "braid");
  CHECK(coset_enumerate(b.presentation) == 6);
  RuleResult i = apply_rule(parse_diagram("node s 2; node t 2; edge s t 5"), "s = t");
  CHECK(i.kind == "identify");
  CHECK(coset_enumerate(i.presentation) == 2);
  CHECK(i.diagram.nodes.size() == 1);
  CHECK_THROWS_AS(apply_rule(parse_diagram(kF4), "s v = v s"), Error);
  CHECK_THROWS_AS(apply_rule(parse_diagram("node s 2; node t 2; edge s t 6"), "s t s t = t s t s"), Error);
}

TEST_CASE("presentations: tietze simplification keeps the group") {
  Presentation p = diagram_presentation(parse_diagram(kF4));
  p.relators.push_back({2, -3});  // t = u
  Presentation q = tietze_simplify(p);
  CHECK(q.generators.size() == 3);
  CHECK(coset_enumerate(q) == coset_enumerate(p));
}

TEST_CASE("presentations: diagram quotients against matrices") {
  Diagram f4 = parse_diagram(kF4);
  auto mats = bind_diagram(f4);
  REQUIRE(mats.size() == 4);
  DiagramQuotientReport r = verify_diagram_quotient(f4, mats, "t u = u t");
  CHECK(r.ok);
  CHECK(r.source_order == 1152);
  CHECK(r.kernel_order == 32);
  CHECK(r.quotient_order == 36);
  CHECK(r.presented_order == 36);

  Diagram g12 = parse_diagram(twisted(3, 3, "G12"));
  DiagramQuotientReport s = verify_diagram_quotient(g12, bind_diagram(g12), "s u = u s");
  CHECK(s.ok);
  CHECK(s.quotient_order == 24);
  CHECK(relators_hold(diagram_presentation(s.quotient), s.quotient_matrices));
}
