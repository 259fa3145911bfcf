#pragma once

#include <vector>

#include "reflekt/groups.hpp"
#include "reflekt/polynomials.hpp"

namespace reflekt {

struct Hyperplane {
  std::vector<CycNum> normal;  // coefficients of alpha, first nonzero = 1
  MPoly alpha;
  std::vector<int> inertia;  // ids in the ambient group, identity first
  int generator = 0;         // reflection of determinant zeta_|W_H|
  int e = 1;                 // |G_H| once a subgroup G is fixed

  int order() const { return static_cast<int>(inertia.size()); }
};

struct HyperplaneClass {
  std::vector<int> members;        // indices into the hyperplane list
  std::vector<int> image_subgroup; // sorted ids of G.W_H
  MPoly alpha_C;
};

// One entry per reflection hyperplane of W, sorted by normalized alpha.
std::vector<Hyperplane> hyperplanes(const MatGroup& W);

// Linear form vanishing on the hyperplane fixed by a reflection,
// normalized so its first nonzero coordinate is 1.
std::vector<CycNum> reflection_normal(const Mat& r);

// Index of the hyperplane fixed by reflection r, or -1.
int find_hyperplane(const std::vector<Hyperplane>& hs, const Mat& r);

struct Arrangement {
  std::vector<Hyperplane> hyperplanes;  // all of A(W), with e set against G
  std::vector<HyperplaneClass> classes; // partition of A'(W)
};

// Classes of A'(Wt) relative to a normal subgroup G, with alpha_C.
Arrangement aprime_classes(const MatGroup& Wt, const MatGroup& G);

MPoly alpha_C(const HyperplaneClass& C, const std::vector<Hyperplane>& hs);

}  // namespace reflekt
