#include "reflekt/presentations.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "reflekt/catalog.hpp"
#include "reflekt/quotients.hpp"

namespace reflekt {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::MalformedDiagram, what); }
[[noreturn]] void mismatch(const std::string& what) { throw Error(ErrorCode::RuleMismatch, what); }

std::string trim(const std::string& s) {
  auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

int to_int(const std::string& s, const std::string& ctx) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  malformed("expected an integer in '" + ctx + "', got '" + s + "'");
}

int letter(int gen, bool inv = false) { return inv ? -(gen + 1) : gen + 1; }

Word inverse_word(const Word& w) {
  Word r(w.rbegin(), w.rend());
  for (auto& x : r) x = -x;
  return r;
}

Word concat(Word a, const Word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// x y x ... of length len starting with x
Word alternating(int x, int y, int len) {
  Word w;
  for (int i = 0; i < len; ++i) w.push_back(letter(i % 2 == 0 ? x : y));
  return w;
}

// alternating word of length len whose last letter is last
Word alternating_ending(int last, int other, int len) {
  Word w = alternating(last, other, len);
  std::reverse(w.begin(), w.end());
  return w;
}

Word free_reduce(const Word& w) {
  Word r;
  for (int x : w) {
    if (!r.empty() && r.back() == -x) r.pop_back();
    else r.push_back(x);
  }
  return r;
}

Word cyclic_reduce(Word w) {
  w = free_reduce(w);
  std::size_t a = 0, b = w.size();
  while (b - a >= 2 && w[a] == -w[b - 1]) {
    ++a;
    --b;
  }
  return Word(w.begin() + a, w.begin() + b);
}

Word relator_of(const Word& lhs, const Word& rhs) { return free_reduce(concat(lhs, inverse_word(rhs))); }

// Smallest rotation of w or of its inverse; identifies equivalent relators.
Word canonical_relator(const Word& w) {
  Word best;
  for (const Word& v : {w, inverse_word(w)})
    for (std::size_t k = 0; k < v.size(); ++k) {
      Word r(v.begin() + k, v.end());
      r.insert(r.end(), v.begin(), v.begin() + k);
      if (best.empty() || r < best) best = r;
    }
  return best;
}

bool covered(const Diagram& d, int a, int b) {
  for (auto& e : d.edges) {
    bool ia = std::find(e.nodes.begin(), e.nodes.end(), a) != e.nodes.end();
    bool ib = std::find(e.nodes.begin(), e.nodes.end(), b) != e.nodes.end();
    if (!ia || !ib) continue;
    if (e.kind == Edge::Kind::Double) {
      // only the pair t, t' is tied by a double bar; both are joined to the third node by braids
      if ((a == e.nodes[0] && b == e.nodes[1]) || (a == e.nodes[1] && b == e.nodes[0])) return true;
      continue;
    }
    return true;
  }
  return false;
}

std::vector<std::pair<Word, Word>> edge_equations(const Edge& e) {
  std::vector<std::pair<Word, Word>> eq;
  const auto& n = e.nodes;
  switch (e.kind) {
    case Edge::Kind::Braid:
      if (e.m >= 2) eq.push_back({alternating(n[0], n[1], e.m), alternating(n[1], n[0], e.m)});
      break;
    case Edge::Kind::Twisted: {
      int s = n[0], t = n[1], u = n[2];
      eq.push_back({concat(alternating_ending(t, s, e.e - 1), Word{letter(u), letter(s)}),
                    concat(alternating_ending(t, s, e.e), Word{letter(u)})});
      eq.push_back({concat(Word{letter(u), letter(s)}, alternating(t, u, e.f - 1)),
                    concat(Word{letter(s)}, alternating(t, u, e.f))});
      break;
    }
    case Edge::Kind::Circle: {
      int s = n[0], tp = n[1], t = n[2];
      eq.push_back({Word{letter(s), letter(tp), letter(t)}, Word{letter(tp), letter(t), letter(s)}});
      eq.push_back({concat(Word{letter(t), letter(s)}, alternating(tp, t, e.e - 1)),
                    concat(Word{letter(s)}, alternating(tp, t, e.e))});
      break;
    }
    case Edge::Kind::Double: {
      int a = n[0], b = n[1], c = n[2];
      Word cab{letter(c), letter(a), letter(b)}, abc{letter(a), letter(b), letter(c)};
      eq.push_back({concat(cab, cab), concat(abc, abc)});
      break;
    }
  }
  return eq;
}

const char* kind_word(Edge::Kind k) {
  switch (k) {
    case Edge::Kind::Braid: return "edge";
    case Edge::Kind::Twisted: return "twisted";
    case Edge::Kind::Circle: return "circle";
    case Edge::Kind::Double: return "double";
  }
  return "?";
}

struct ParsedRule {
  Word lhs, rhs;
  std::string kind;
  int x = -1, y = -1, m = 0;
};

ParsedRule parse_rule(const Diagram& d, const std::string& rule) {
  auto eqpos = rule.find('=');
  if (eqpos == std::string::npos) mismatch("rule without '=': " + rule);
  std::vector<std::string> labels;
  for (auto& n : d.nodes) labels.push_back(n.label);
  ParsedRule r;
  r.lhs = parse_word(rule.substr(0, eqpos), labels);
  r.rhs = parse_word(rule.substr(eqpos + 1), labels);
  auto positive = [](const Word& w) { return std::all_of(w.begin(), w.end(), [](int x) { return x > 0; }); };
  if (!positive(r.lhs) || !positive(r.rhs)) mismatch("rules use positive words only: " + rule);
  if (r.lhs.size() == 1 && r.rhs.size() == 1 && r.lhs != r.rhs) {
    r.kind = "identify";
    r.x = r.lhs[0] - 1;
    r.y = r.rhs[0] - 1;
    return r;
  }
  const int len = static_cast<int>(r.lhs.size());
  if (len >= 2 && r.rhs.size() == r.lhs.size()) {
    int x = r.lhs[0] - 1, y = r.lhs[1] - 1;
    if (x != y && r.lhs == alternating(x, y, len) && r.rhs == alternating(y, x, len)) {
      r.kind = len == 2 ? "commute" : "braid";
      r.x = x;
      r.y = y;
      r.m = len;
      return r;
    }
  }
  mismatch("unsupported rule shape: " + rule);
}

// Replaces generator `from` by generator `to` and drops `from`.
Presentation substitute_generator(const Presentation& p, int from, int to) {
  Presentation out;
  std::vector<int> remap(p.generators.size());
  for (std::size_t i = 0, k = 0; i < p.generators.size(); ++i) {
    if (static_cast<int>(i) == from) continue;
    remap[i] = static_cast<int>(k++);
    out.generators.push_back(p.generators[i]);
  }
  for (auto& r : p.relators) {
    Word w;
    for (int x : r) {
      int g = std::abs(x) - 1;
      if (g == from) g = to;
      w.push_back(x > 0 ? letter(remap[g]) : letter(remap[g], true));
    }
    out.relators.push_back(w);
  }
  return out;
}

Presentation remove_generator(const Presentation& p, int gen) {
  Presentation out;
  std::vector<int> remap(p.generators.size());
  for (std::size_t i = 0, k = 0; i < p.generators.size(); ++i) {
    if (static_cast<int>(i) == gen) continue;
    remap[i] = static_cast<int>(k++);
    out.generators.push_back(p.generators[i]);
  }
  for (auto& r : p.relators) {
    Word w;
    for (int x : r) {
      int g = std::abs(x) - 1;
      if (g == gen) continue;
      w.push_back(x > 0 ? letter(remap[g]) : letter(remap[g], true));
    }
    out.relators.push_back(w);
  }
  return out;
}

}  // namespace

// ---- words and presentations --------------------------------------------------

Word parse_word(const std::string& text, const std::vector<std::string>& labels) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  Word w;
  std::size_t i = 0;
  while (i < s.size()) {
    int best = -1;
    std::size_t best_len = 0;
    for (std::size_t k = 0; k < labels.size(); ++k)
      if (labels[k].size() > best_len && s.compare(i, labels[k].size(), labels[k]) == 0) {
        best = static_cast<int>(k);
        best_len = labels[k].size();
      }
    if (best < 0) malformed("unknown generator at '" + s.substr(i) + "'");
    i += best_len;
    int power = 1;
    if (i < s.size() && s[i] == '^') {
      std::size_t j = ++i;
      if (j < s.size() && s[j] == '-') ++j;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      power = to_int(s.substr(i, j - i), text);
      i = j;
    }
    for (int k = 0; k < std::abs(power); ++k) w.push_back(letter(best, power < 0));
  }
  return w;
}

std::string word_str(const Word& w, const std::vector<std::string>& labels) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += labels[std::abs(w[i]) - 1];
    if (w[i] < 0) s += "^-1";
  }
  return s;
}

std::string Presentation::str() const {
  std::string s = "<";
  for (std::size_t i = 0; i < generators.size(); ++i) s += (i ? ", " : "") + generators[i];
  s += " | ";
  for (std::size_t i = 0; i < relators.size(); ++i) s += (i ? ", " : "") + word_str(relators[i], generators);
  return s + ">";
}

int Diagram::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].label == label) return static_cast<int>(i);
  return -1;
}

std::string Diagram::to_dsl() const {
  std::ostringstream out;
  std::vector<std::string> labels;
  for (auto& n : nodes) labels.push_back(n.label);
  if (!name.empty()) out << "name " << name << "\n";
  for (auto& n : nodes) out << "node " << n.label << " " << n.order << "\n";
  for (auto& e : edges) {
    out << kind_word(e.kind);
    for (int i : e.nodes) out << " " << nodes[i].label;
    if (e.kind == Edge::Kind::Braid) out << " " << e.m;
    if (e.kind == Edge::Kind::Twisted) out << " e=" << e.e << " f=" << e.f;
    if (e.kind == Edge::Kind::Circle) out << " e=" << e.e;
    out << "\n";
  }
  for (auto& [l, r] : relations) out << "relation " << word_str(l, labels) << " = " << word_str(r, labels) << "\n";
  return out.str();
}

Diagram parse_diagram(const std::string& text) {
  Diagram d;
  std::string clean;
  {
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
      if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
      clean += line + ";";
    }
  }
  std::vector<std::string> labels;
  auto node = [&](const std::string& l, const std::string& stmt) {
    int i = d.index_of(l);
    if (i < 0) malformed("unknown node '" + l + "' in '" + stmt + "'");
    return i;
  };
  auto key_value = [&](const std::string& tok, const std::string& key, const std::string& stmt) {
    if (tok.rfind(key + "=", 0) != 0) malformed("expected " + key + "=N in '" + stmt + "'");
    return to_int(tok.substr(key.size() + 1), stmt);
  };
  std::istringstream in(clean);
  for (std::string stmt; std::getline(in, stmt, ';');) {
    stmt = trim(stmt);
    if (stmt.empty()) continue;
    auto tok = split_ws(stmt);
    const std::string& kw = tok[0];
    if (kw == "name") {
      if (tok.size() != 2) malformed(stmt);
      d.name = tok[1];
    } else if (kw == "node") {
      if (tok.size() != 3) malformed("node LABEL ORDER: '" + stmt + "'");
      if (d.index_of(tok[1]) >= 0) malformed("duplicate node '" + tok[1] + "'");
      int ord = to_int(tok[2], stmt);
      if (ord < 1) malformed("node order must be positive: '" + stmt + "'");
      d.nodes.push_back({tok[1], ord});
      labels.push_back(tok[1]);
    } else if (kw == "edge" || kw == "braid") {
      if (tok.size() != 3 && tok.size() != 4) malformed("edge A B [m]: '" + stmt + "'");
      Edge e;
      e.nodes = {node(tok[1], stmt), node(tok[2], stmt)};
      if (e.nodes[0] == e.nodes[1]) malformed("loop edge: '" + stmt + "'");
      e.m = tok.size() == 4 ? to_int(tok[3], stmt) : 3;
      if (e.m < 2) malformed("braid label must be >= 2: '" + stmt + "'");
      d.edges.push_back(e);
    } else if (kw == "twisted") {
      if (tok.size() != 6) malformed("twisted S T U e=E f=F: '" + stmt + "'");
      Edge e;
      e.kind = Edge::Kind::Twisted;
      e.nodes = {node(tok[1], stmt), node(tok[2], stmt), node(tok[3], stmt)};
      e.e = key_value(tok[4], "e", stmt);
      e.f = key_value(tok[5], "f", stmt);
      if (e.e < 2 || e.f < 2) malformed("twisted labels must be >= 2: '" + stmt + "'");
      d.edges.push_back(e);
    } else if (kw == "circle") {
      if (tok.size() != 5) malformed("circle S T' T e=E: '" + stmt + "'");
      Edge e;
      e.kind = Edge::Kind::Circle;
      e.nodes = {node(tok[1], stmt), node(tok[2], stmt), node(tok[3], stmt)};
      e.e = key_value(tok[4], "e", stmt);
      if (e.e < 1) malformed("circle label must be >= 1: '" + stmt + "'");
      d.edges.push_back(e);
    } else if (kw == "double") {
      if (tok.size() != 4) malformed("double T T' U: '" + stmt + "'");
      Edge e;
      e.kind = Edge::Kind::Double;
      e.nodes = {node(tok[1], stmt), node(tok[2], stmt), node(tok[3], stmt)};
      d.edges.push_back(e);
    } else if (kw == "relation") {
      auto rest = stmt.substr(kw.size());
      auto eq = rest.find('=');
      if (eq == std::string::npos) malformed("relation needs '=': '" + stmt + "'");
      d.relations.push_back({parse_word(rest.substr(0, eq), labels), parse_word(rest.substr(eq + 1), labels)});
    } else if (kw == "group") {
      if (tok.size() < 2) malformed(stmt);
      d.group = tok[1];
      d.group_labels.assign(tok.begin() + 2, tok.end());
      for (auto& l : d.group_labels)
        if (l != "_") node(l, stmt);
    } else if (kw == "rule") {
      d.rules.push_back(trim(stmt.substr(kw.size())));
    } else {
      malformed("unknown statement '" + stmt + "'");
    }
  }
  if (d.nodes.empty()) malformed("diagram without nodes");
  return d;
}

Diagram load_diagram(const std::string& path) {
  std::ifstream in(path);
  if (!in) malformed("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_diagram(ss.str());
}

Presentation diagram_presentation(const Diagram& d) {
  Presentation p;
  const int n = static_cast<int>(d.nodes.size());
  for (auto& node : d.nodes) p.generators.push_back(node.label);
  for (int i = 0; i < n; ++i)
    if (d.nodes[i].order >= 2) p.relators.push_back(Word(d.nodes[i].order, letter(i)));
  for (auto& e : d.edges)
    for (auto& [l, r] : edge_equations(e)) p.relators.push_back(relator_of(l, r));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!covered(d, i, j)) p.relators.push_back({letter(i), letter(j), letter(i, true), letter(j, true)});
  for (auto& [l, r] : d.relations) p.relators.push_back(relator_of(l, r));
  return p;
}

Presentation tietze_simplify(Presentation p) {
  for (bool changed = true; changed;) {
    changed = false;
    for (auto& r : p.relators) r = cyclic_reduce(r);
    for (auto& r : p.relators) {
      if (r.size() == 1) {
        p = remove_generator(p, std::abs(r[0]) - 1);
        changed = true;
        break;
      }
      if (r.size() == 2 && std::abs(r[0]) != std::abs(r[1]) && (r[0] > 0) != (r[1] > 0)) {
        int a = std::abs(r[0]) - 1, b = std::abs(r[1]) - 1;
        p = substitute_generator(p, std::max(a, b), std::min(a, b));
        changed = true;
        break;
      }
    }
  }
  std::set<Word> seen;
  std::vector<Word> out;
  for (auto& r : p.relators) {
    if (r.empty()) continue;
    if (seen.insert(canonical_relator(r)).second) out.push_back(r);
  }
  p.relators = out;
  return p;
}

// ---- rewrite rules ------------------------------------------------------------

RuleResult apply_rule(const Diagram& d, const std::string& rule) {
  ParsedRule r = parse_rule(d, rule);
  RuleResult res;
  res.kind = r.kind;
  Diagram out = d;
  out.rules.clear();
  out.group.clear();
  out.group_labels.clear();
  const int x = r.x, y = r.y;
  const std::string& lx = d.nodes[x].label;
  const std::string& ly = d.nodes[y].label;

  auto find_edge = [&](Edge::Kind k, auto pred) -> int {
    for (std::size_t i = 0; i < out.edges.size(); ++i)
      if (out.edges[i].kind == k && pred(out.edges[i])) return static_cast<int>(i);
    return -1;
  };
  auto pair_is = [&](const Edge& e) {
    return (e.nodes[0] == x && e.nodes[1] == y) || (e.nodes[0] == y && e.nodes[1] == x);
  };

  if (r.kind == "commute") {
    if (int i = find_edge(Edge::Kind::Braid, pair_is); i >= 0) {
      out.edges.erase(out.edges.begin() + i);
    } else if (int i = find_edge(Edge::Kind::Twisted, [&](const Edge& e) {
                 return (e.nodes[0] == x && e.nodes[2] == y) || (e.nodes[0] == y && e.nodes[2] == x);
               });
               i >= 0) {
      Edge tw = out.edges[i];
      Edge a, b;
      a.nodes = {tw.nodes[0], tw.nodes[1]};
      a.m = tw.e;
      b.nodes = {tw.nodes[1], tw.nodes[2]};
      b.m = tw.f;
      out.edges.erase(out.edges.begin() + i);
      out.edges.insert(out.edges.begin() + i, {a, b});
    } else if (int i = find_edge(Edge::Kind::Circle, [&](const Edge& e) {
                 return (e.nodes[0] == x && (e.nodes[1] == y || e.nodes[2] == y)) ||
                        (e.nodes[0] == y && (e.nodes[1] == x || e.nodes[2] == x));
               });
               i >= 0) {
      Edge c = out.edges[i];
      Edge b;
      b.nodes = {c.nodes[2], c.nodes[1]};
      b.m = c.e;
      out.edges[i] = b;
      res.notes.push_back("circle relation reduced to a braid of length " + std::to_string(c.e));
    } else {
      mismatch(lx + " and " + ly + " are not joined by an edge, a twisted edge or a circle");
    }
  } else if (r.kind == "braid") {
    int i = find_edge(Edge::Kind::Braid, pair_is);
    if (i < 0) mismatch(lx + " and " + ly + " are not joined by a braid edge");
    int M = out.edges[i].m;
    if (M % r.m != 0 || r.m >= M)
      mismatch("braid length " + std::to_string(r.m) + " does not properly divide " + std::to_string(M));
    out.edges[i].m = r.m;
  } else {  // identify: keep x, drop y
    if (d.nodes[x].order != d.nodes[y].order) mismatch("nodes " + lx + " and " + ly + " have different orders");
    std::vector<Edge> kept;
    for (auto e : out.edges) {
      bool has_y = std::find(e.nodes.begin(), e.nodes.end(), y) != e.nodes.end();
      if (!has_y) {
        kept.push_back(e);
        continue;
      }
      if (e.kind != Edge::Kind::Braid) {
        res.notes.push_back(std::string("dropped ") + kind_word(e.kind) + " structure through " + ly);
        continue;
      }
      for (auto& v : e.nodes)
        if (v == y) v = x;
      if (e.nodes[0] == e.nodes[1]) continue;
      bool dup = false;
      for (auto& k : kept)
        if (k.kind == Edge::Kind::Braid &&
            ((k.nodes[0] == e.nodes[0] && k.nodes[1] == e.nodes[1]) ||
             (k.nodes[0] == e.nodes[1] && k.nodes[1] == e.nodes[0]))) {
          if (k.m != e.m) res.notes.push_back("conflicting braid labels after merging " + ly + " into " + lx);
          dup = true;
        }
      if (!dup) kept.push_back(e);
    }
    // later edges may duplicate an edge of x that appears after y's
    out.edges.clear();
    for (auto& e : kept) {
      bool dup = false;
      for (auto& k : out.edges)
        if (k.kind == Edge::Kind::Braid && e.kind == Edge::Kind::Braid &&
            ((k.nodes[0] == e.nodes[0] && k.nodes[1] == e.nodes[1]) ||
             (k.nodes[0] == e.nodes[1] && k.nodes[1] == e.nodes[0])))
          dup = true;
      if (!dup) out.edges.push_back(e);
    }
    for (auto& [l, rr] : out.relations)
      for (Word* w : {&l, &rr})
        for (auto& c : *w)
          if (std::abs(c) - 1 == y) c = c > 0 ? letter(x) : letter(x, true);
    out.nodes.erase(out.nodes.begin() + y);
    auto shift = [&](int v) { return v > y ? v - 1 : v; };
    for (auto& e : out.edges)
      for (auto& v : e.nodes) v = shift(v);
    for (auto& [l, rr] : out.relations)
      for (Word* w : {&l, &rr})
        for (auto& c : *w) c = c > 0 ? letter(shift(c - 1)) : letter(shift(-c - 1), true);
  }
  res.diagram = out;

  Presentation p = diagram_presentation(d);
  p.relators.push_back(relator_of(r.lhs, r.rhs));
  if (r.kind == "identify") p = substitute_generator(p, y, x);
  res.presentation = tietze_simplify(p);
  return res;
}

// ---- Todd-Coxeter -------------------------------------------------------------

long coset_enumerate(const Presentation& pres, long max_cosets) {
  const int ng = static_cast<int>(pres.generators.size());
  if (ng == 0) return 1;
  const int nc = 2 * ng;
  auto col = [](int l) { return l > 0 ? 2 * (l - 1) : 2 * (-l - 1) + 1; };
  std::vector<std::vector<int>> rels;
  for (auto& r : pres.relators) {
    Word w = cyclic_reduce(r);
    if (w.empty()) continue;
    std::vector<int> c;
    for (int l : w) c.push_back(col(l));
    rels.push_back(c);
  }

  std::vector<int> table(nc, -1);
  std::vector<int> parent{0};
  long n = 1;
  std::vector<int> queue;
  auto T = [&](long c, int x) -> int& { return table[static_cast<std::size_t>(c) * nc + x]; };

  auto rep = [&](int k) {
    int l = k;
    while (parent[l] != l) l = parent[l];
    while (parent[k] != k) {
      int next = parent[k];
      parent[k] = l;
      k = next;
    }
    return l;
  };
  auto merge = [&](int k, int l) {
    int a = rep(k), b = rep(l);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    queue.push_back(b);
  };
  auto coincidence = [&](int a, int b) {
    merge(a, b);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      int g = queue[i];
      for (int x = 0; x < nc; ++x) {
        int dlt = T(g, x);
        if (dlt < 0) continue;
        T(dlt, x ^ 1) = -1;
        int mu = rep(g), nu = rep(dlt);
        if (T(mu, x) >= 0) merge(nu, T(mu, x));
        else if (T(nu, x ^ 1) >= 0) merge(mu, T(nu, x ^ 1));
        else {
          T(mu, x) = nu;
          T(nu, x ^ 1) = mu;
        }
      }
    }
    queue.clear();
  };
  auto define = [&](int c, int x) {
    if (n >= max_cosets)
      throw Error(ErrorCode::CosetLimitExceeded, "more than " + std::to_string(max_cosets) + " cosets");
    int b = static_cast<int>(n++);
    parent.push_back(b);
    table.resize(static_cast<std::size_t>(n) * nc, -1);
    T(c, x) = b;
    T(b, x ^ 1) = c;
  };
  auto scan_and_fill = [&](int a, const std::vector<int>& w) {
    int f = a, b = a;
    int i = 0, j = static_cast<int>(w.size()) - 1;
    for (;;) {
      while (i <= j && T(f, w[i]) >= 0) f = T(f, w[i++]);
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && T(b, w[j] ^ 1) >= 0) b = T(b, w[j--] ^ 1);
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        T(f, w[i]) = b;
        T(b, w[i] ^ 1) = f;
        return;
      }
      define(f, w[i]);
    }
  };

  for (long c = 0; c < n; ++c) {
    if (parent[c] != c) continue;
    for (auto& w : rels) {
      scan_and_fill(static_cast<int>(c), w);
      if (parent[c] != c) break;
    }
    if (parent[c] != c) continue;
    for (int x = 0; x < nc; ++x)
      if (T(c, x) < 0) define(static_cast<int>(c), x);
  }
  long live = 0;
  for (long c = 0; c < n; ++c)
    if (parent[c] == c) ++live;
  return live;
}

// ---- matrix side ----------------------------------------------------------------

Mat evaluate_word(const Word& w, const std::vector<Mat>& images) {
  Mat m = identity<CycNum>(static_cast<int>(images.at(0).rows()));
  for (int l : w) {
    const Mat& g = images.at(std::abs(l) - 1);
    m = mul(m, l > 0 ? g : inverse(g));
  }
  return m;
}

bool relators_hold(const Presentation& p, const std::vector<Mat>& images) {
  for (auto& r : p.relators)
    if (!is_identity(evaluate_word(r, images))) return false;
  return true;
}

std::vector<Mat> bind_diagram(const Diagram& d) {
  if (d.group.empty()) malformed("diagram has no group binding");
  auto [name, params] = parse_group_name(d.group);
  MatGroup G = get_group(name, params);
  const int n = static_cast<int>(d.nodes.size());
  std::vector<Mat> mats(n);
  if (!d.group_labels.empty()) {
    CatalogEntry e = catalog_entry(name, params);
    if (e.generators.size() != d.group_labels.size())
      malformed(d.group + " has " + std::to_string(e.generators.size()) + " generators, " +
                std::to_string(d.group_labels.size()) + " labels given");
    std::vector<bool> set(n, false);
    for (std::size_t k = 0; k < d.group_labels.size(); ++k) {
      if (d.group_labels[k] == "_") continue;
      int i = d.index_of(d.group_labels[k]);
      mats[i] = e.generators[k];
      set[i] = true;
    }
    for (int i = 0; i < n; ++i)
      if (!set[i]) malformed("node " + d.nodes[i].label + " is not bound to a generator");
    return mats;
  }
  // search: reflections of the node's order, relators checked as soon as all letters are bound
  Presentation p = diagram_presentation(d);
  std::vector<std::vector<int>> rel_at(n);
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    int top = 0;
    for (int l : p.relators[r]) top = std::max(top, std::abs(l) - 1);
    rel_at[top].push_back(static_cast<int>(r));
  }
  std::vector<std::vector<int>> cand(n);
  for (int id : G.reflections())
    for (int i = 0; i < n; ++i)
      if (G.element_order(id) == d.nodes[i].order) cand[i].push_back(id);
  std::vector<Mat> cur(n, identity<CycNum>(G.dim()));
  std::function<bool(int)> go = [&](int i) -> bool {
    if (i == n) return MatGroup::close(cur, G.order()).order() == G.order();
    for (int id : cand[i]) {
      cur[i] = G.element(id);
      bool ok = true;
      for (int r : rel_at[i])
        if (!is_identity(evaluate_word(p.relators[r], cur))) {
          ok = false;
          break;
        }
      if (ok && go(i + 1)) return true;
    }
    return false;
  };
  if (!go(0)) throw Error(ErrorCode::SelfCheckFailed, "no reflections of " + d.group + " satisfy the diagram");
  return cur;
}

DiagramQuotientReport verify_diagram_quotient(const Diagram& d, const std::vector<Mat>& mats, const std::string& rule,
                                              long max_cosets) {
  DiagramQuotientReport rep;
  rep.rule = rule;
  RuleResult rr = apply_rule(d, rule);
  rep.kind = rr.kind;
  rep.notes = rr.notes;
  rep.quotient = rr.diagram;
  ParsedRule pr = parse_rule(d, rule);

  Presentation src = diagram_presentation(d);
  rep.source_relators_hold = relators_hold(src, mats);
  MatGroup Wt = MatGroup::close(mats);
  rep.source_order = Wt.order();
  Mat rel = mul(evaluate_word(pr.lhs, mats), inverse(evaluate_word(pr.rhs, mats)));
  MatGroup G = normal_closure(Wt, {rel});
  rep.kernel_order = G.order();
  rep.quotient_order = Wt.order() / G.order();

  QuotientResult q;
  try {
    q = quotient_map(Wt, G);
    rep.good = true;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotGood) throw;
    rep.notes.push_back(std::string("kernel is not good: ") + e.what());
  }
  try {
    rep.presented_order = coset_enumerate(rr.presentation, max_cosets);
    rep.target_diagram_order = coset_enumerate(diagram_presentation(rr.diagram), max_cosets);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::CosetLimitExceeded) throw;
    rep.notes.push_back(std::string("inconclusive: ") + e.what());
  }
  if (rep.good) {
    for (auto& node : rr.diagram.nodes)
      rep.quotient_matrices.push_back(phi_matrix(mats[d.index_of(node.label)], q.presentation.generators));
    rep.images_satisfy_relators = relators_hold(rr.presentation, rep.quotient_matrices) &&
                                  relators_hold(diagram_presentation(rr.diagram), rep.quotient_matrices);
  }
  rep.ok = rep.source_relators_hold && rep.good && rep.images_satisfy_relators &&
           rep.presented_order == rep.quotient_order && rep.target_diagram_order == rep.quotient_order;
  return rep;
}

std::vector<DiagramQuotientReport> verify_chain(const Diagram& d, const std::vector<std::string>& rules,
                                                long max_cosets) {
  std::vector<DiagramQuotientReport> out;
  Diagram cur = d;
  std::vector<Mat> mats = bind_diagram(d);
  for (auto& r : rules) {
    out.push_back(verify_diagram_quotient(cur, mats, r, max_cosets));
    if (!out.back().good) break;
    cur = out.back().quotient;
    mats = out.back().quotient_matrices;
  }
  return out;
}

}  // namespace reflekt
