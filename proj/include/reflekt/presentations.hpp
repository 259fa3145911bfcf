#pragma once

#include <optional>
#include <string>
#include <vector>

#include "reflekt/groups.hpp"

namespace reflekt {

inline constexpr long kDefaultCosetLimit = 500000;

// Letter i+1 is generator i, -(i+1) its inverse.
using Word = std::vector<int>;

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  std::string str() const;
};

struct Node {
  std::string label;
  int order = 2;
};

struct Edge {
  enum class Kind {
    Braid,    // a b a ... = b a b ... (m terms); m = 2 is commutation
    Twisted,  // s t u: ...tstus = ...ststu (e+1), ustut... = stutu... (f+1)
    Circle,   // s t' t: s t' t = t' t s and t s t' t t' ... = s t' t t' t ... (e+1)
    Double,   // a b c: c a b c a b = a b c a b c
  };
  Kind kind = Kind::Braid;
  std::vector<int> nodes;
  int m = 3;
  int e = 0;
  int f = 0;
};

struct Diagram {
  std::string name;
  std::vector<Node> nodes;
  std::vector<Edge> edges;
  std::vector<std::pair<Word, Word>> relations;  // extra equations
  // optional binding to a catalog group: "group NAME [labels...]"
  std::string group;
  std::vector<std::string> group_labels;
  std::vector<std::string> rules;  // rules listed in the file, applied in order

  int index_of(const std::string& label) const;  // -1 if absent
  std::string to_dsl() const;
};

// Line-based DSL; statements end at ';' or newline, '#' starts a comment:
//   name F4
//   node s 2
//   edge s t 4
//   twisted s t u e=4 f=3
//   circle s t1p t1 e=2
//   double t1 t1p t2
//   relation s t s = t s t
//   group F4 s t u v
//   rule t u = u t
Diagram parse_diagram(const std::string& text);
Diagram load_diagram(const std::string& path);

// Letters are node labels (greedy longest match), each optionally ^k.
Word parse_word(const std::string& text, const std::vector<std::string>& labels);
std::string word_str(const Word& w, const std::vector<std::string>& labels);

// Order relators, then edge relators in declaration order, then
// commutators of unconnected pairs, then extra relations.
Presentation diagram_presentation(const Diagram& d);

struct RuleResult {
  std::string kind;  // "commute", "braid", "identify"
  Diagram diagram;   // rewritten diagram
  Presentation presentation;  // source presentation + relation, simplified
  std::vector<std::string> notes;
};

// Throws RuleMismatch if the rule does not fit the diagram at that site.
RuleResult apply_rule(const Diagram& d, const std::string& rule);

// Free and cyclic reduction, removal of trivial and duplicate relators, and
// elimination of generators identified by relators x y^-1.
Presentation tietze_simplify(Presentation p);

// HLT Todd-Coxeter over the trivial subgroup. Throws CosetLimitExceeded.
long coset_enumerate(const Presentation& p, long max_cosets = kDefaultCosetLimit);

Mat evaluate_word(const Word& w, const std::vector<Mat>& images);
bool relators_hold(const Presentation& p, const std::vector<Mat>& images);

// Matrices for the nodes: the named catalog generators in the order given
// by group_labels, or else a search over reflections of matching order
// that satisfy the diagram's relators and generate the group.
std::vector<Mat> bind_diagram(const Diagram& d);

struct DiagramQuotientReport {
  std::string rule;
  std::string kind;
  bool source_relators_hold = false;
  long source_order = 0;  // matrix side
  long kernel_order = 0;
  bool good = false;
  long quotient_order = 0;          // |Wt| / |G|
  long presented_order = 0;         // enumeration of source + relation
  long target_diagram_order = 0;    // enumeration of the rewritten diagram
  bool images_satisfy_relators = false;
  bool ok = false;
  Diagram quotient;
  std::vector<Mat> quotient_matrices;
  std::vector<std::string> notes;
};

DiagramQuotientReport verify_diagram_quotient(const Diagram& d, const std::vector<Mat>& node_matrices,
                                              const std::string& rule, long max_cosets = kDefaultCosetLimit);

// Applies rules one after another, feeding each quotient to the next step.
std::vector<DiagramQuotientReport> verify_chain(const Diagram& d, const std::vector<std::string>& rules,
                                                long max_cosets = kDefaultCosetLimit);

}  // namespace reflekt
