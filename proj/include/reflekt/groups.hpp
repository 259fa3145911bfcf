#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "reflekt/linalg.hpp"

namespace reflekt {

inline constexpr long kDefaultGroupCap = 1000000;
inline constexpr long kMaxElementOrder = 10000;

enum class ElementKind { Identity, Reflection, DoubleReflection, Other };

const char* kind_name(ElementKind k);

struct ElementClass {
  int id = 0;
  ElementKind kind = ElementKind::Other;
  int order = 1;
  Mat fixed_space;  // basis as columns
};

// Finite matrix group with all elements enumerated. Element 0 is the
// identity; ids follow breadth-first discovery order. Copies share state.
class MatGroup {
public:
  MatGroup() = default;

  static MatGroup close(const std::vector<Mat>& generators, long cap = kDefaultGroupCap);
  static MatGroup trivial(int dim);

  int dim() const;
  long order() const;
  const std::vector<Mat>& generators() const;
  const std::vector<Mat>& elements() const;
  const Mat& element(int id) const;

  std::optional<int> find(const Mat& m) const;
  bool contains(const Mat& m) const { return find(m).has_value(); }
  int id_of(const Mat& m) const;  // throws NotSubgroup if absent

  // Id of element(id) * generators()[j].
  int mul_gen(int id, int j) const;
  int multiply(int a, int b) const;
  int inverse(int a) const;
  int element_order(int id) const;
  long exponent() const;

  const std::vector<ElementClass>& classes() const;
  // Distinct det(1 - t g) over the group with multiplicities, in order of
  // first occurrence.
  const std::vector<std::pair<UniPoly<CycNum>, long>>& charpoly_classes() const;
  std::vector<int> reflections() const;
  bool is_trivial() const { return order() == 1; }

  // Ids sorted, for set comparisons between groups in a common ambient.
  std::vector<int> ids_in(const MatGroup& ambient) const;

private:
  struct State;
  std::shared_ptr<State> s_;
};

MatGroup subgroup(const std::vector<int>& generated_by, const MatGroup& G);
MatGroup subgroup_of_elements(const std::vector<Mat>& gens, const MatGroup& G);
bool is_subgroup(const MatGroup& H, const MatGroup& G);
bool is_normal(const MatGroup& G, const MatGroup& H);
MatGroup normal_closure(const MatGroup& G, const std::vector<Mat>& seeds);
MatGroup derived_subgroup(const MatGroup& G);
bool in_SL(const MatGroup& G);
MatGroup center(const MatGroup& G);
// W ∩ SL as a group of its own.
MatGroup sl_part(const MatGroup& G);
// Subgroup generated by all reflections of G.
MatGroup reflection_subgroup(const MatGroup& G);
// Closed subset of G given by ids; picks a small generating set greedily.
MatGroup group_from_subset(const std::vector<int>& ids, const MatGroup& G);
bool same_elements(const MatGroup& A, const MatGroup& B);

}  // namespace reflekt
