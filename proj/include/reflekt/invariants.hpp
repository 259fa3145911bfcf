#pragma once

#include <optional>
#include <vector>

#include "reflekt/groups.hpp"
#include "reflekt/polynomials.hpp"

namespace reflekt {

struct MolienSeries {
  std::vector<Rational> coeffs;  // degrees 0..D

  Rational operator[](int d) const { return d < static_cast<int>(coeffs.size()) ? coeffs[d] : Rational(0); }
  int order() const { return static_cast<int>(coeffs.size()) - 1; }
};

// (1/|G|) sum_g 1/det(1 - t g) up to t^D.
MolienSeries molien(const MatGroup& G, int D);

// True iff the Molien series of G equals prod_j (1 - t^e_j) / prod_i (1 - t^d_i)
// as rational functions (exact: compares numerators over (1 - t^m)^n with m
// the exponent of G).
bool molien_matches(const MatGroup& G, const std::vector<int>& gen_degrees,
                    const std::vector<int>& rel_degrees);

// Degrees of G if its invariant ring is polynomial; throws NotReflectionGroup.
std::vector<int> reflection_degrees(const MatGroup& G);

struct InvariantPresentation {
  int nvars = 0;  // dimension of the space G acts on
  std::vector<int> generator_degrees;
  std::vector<MPoly> generators;  // in X1..Xn
  std::vector<int> relation_degrees;
  std::vector<MPoly> relations;  // in Y1..Yk, weights = generator_degrees
  int bound_reached = 0;         // last degree examined
  bool certified = false;        // Hilbert series of the presentation equals Molien

  bool complete_intersection() const {
    return static_cast<int>(relations.size()) + nvars == static_cast<int>(generators.size());
  }
};

struct PresentationOptions {
  int bound = 0;  // 0: 2|G|
  // Ambient group normalizing G; generators are then chosen so that each
  // degree-wise span is stable under it.
  const MatGroup* ambient = nullptr;
  // Fixed generators to use where possible (e.g. a preferred basis).
  std::vector<MPoly> pinned;
  // Stop once the Molien series certifies the presentation.
  bool stop_when_certified = true;
};

// Minimal homogeneous generators degree by degree, plus relations when
// requested. Throws BoundTooSmall when the bound is reached without the
// Molien series certifying the result.
InvariantPresentation invariant_presentation(const MatGroup& G, const PresentationOptions& opt = {});

// Generators only (no relation search); certified by degree when possible.
InvariantPresentation min_generator_degrees(const MatGroup& G, int bound,
                                            const MatGroup* ambient = nullptr);

// Completes pres with minimal relations up to weighted degree bound.
InvariantPresentation relation_generators(const MatGroup& G, InvariantPresentation pres, int bound);

// Matrix of act(g, .) on span(basis) in the coordinates of basis (columns
// are images); throws SpanViolation if the span is not stable.
Mat action_on_span(const Mat& g, const std::vector<MPoly>& basis);

// Coordinates of p in span(basis); nullopt if outside.
std::optional<std::vector<CycNum>> span_coordinates(const MPoly& p, const std::vector<MPoly>& basis);

}  // namespace reflekt
