#pragma once

#include <string>
#include <vector>

#include "reflekt/arrangement.hpp"
#include "reflekt/groups.hpp"
#include "reflekt/invariants.hpp"

namespace reflekt {

enum class GoodReason {
  ReflectionSubgroup,   // G is generated by reflections
  NotInSL,              // reflection-free G with a generator of det != 1
  NonInvariantAlpha,    // some alpha_C is not G-invariant
  ReflectionFreeGood,   // G in SL and every alpha_C invariant
  MixedGood,            // decided on the quotient by the reflection part
  MixedNotGood
};

const char* reason_name(GoodReason r);

struct QuotientResult {
  bool good = false;
  GoodReason reason = GoodReason::ReflectionFreeGood;
  int witness_generator = -1;  // index into G.generators()
  int witness_class = -1;      // index into arrangement.classes
  MPoly witness_alpha;
  std::string detail;
  int depth = 0;

  Arrangement arrangement;  // classes of A'(Wt) relative to G (reflection-free branch)

  // construction part
  bool constructed = false;
  InvariantPresentation presentation;  // of G, generators stable under Wt
  MatGroup W;                          // on V, coordinates = presentation generators
  std::vector<Mat> phi_gens;           // image of each Wt generator
  std::vector<int> V_weights;
  std::vector<int> W_degrees;
  std::vector<int> relation_degrees;
};

struct QuotientOptions {
  int bound = 0;
  std::vector<MPoly> pinned;  // preferred generators of B^G
  int max_depth = 4;
};

// Throws NotReflectionGroup / NotNormal on bad input.
QuotientResult is_good(const MatGroup& Wt, const MatGroup& G, const QuotientOptions& opt = {});

// Builds W = Wt/G acting on the tangent space V; requires goodness.
QuotientResult quotient_map(const MatGroup& Wt, const MatGroup& G, const QuotientOptions& opt = {});

// Matrix by which w acts on V, given generators p_i of B^G spanning a
// w-stable space: contragredient of the action on span{p_i}.
Mat phi_matrix(const Mat& w, const std::vector<MPoly>& generators);

struct GoodGenerators {
  std::vector<int> ids;  // products s_H' s_H^-1 as ids in Wt
  bool all_in_G = true;
  long generated_order = 1;
  bool generates = false;
};

GoodGenerators good_generators(const MatGroup& Wt, const MatGroup& G);

struct HyperplaneCorrespondence {
  struct Pair {
    int cls;            // index into classes
    int w_hyperplane;   // index into hyperplanes(W)
  };
  std::vector<Pair> pairs;
  std::vector<Hyperplane> w_hyperplanes;
  bool bijective = false;
  bool orders_match = true;  // image order = r / gcd(r, e_H) for every member
  std::vector<std::string> mismatches;
};

HyperplaneCorrespondence hyperplane_map(const MatGroup& Wt, const MatGroup& G, const QuotientResult& q);

struct DegreeIdentity {
  bool holds = false;
  std::vector<int> lhs;  // union of i * E_i
  std::vector<int> rhs;  // degrees(Wt) + relation degrees
};

DegreeIdentity verify_degree_identity(const MatGroup& Wt, const QuotientResult& q);

struct SLPrimeReport {
  int p = 0;       // index of Wt cap SL
  int N = 0;       // number of hyperplanes
  std::vector<int> predicted_degrees;  // degrees(Wt) + {N}
  int predicted_relation = 0;          // N p
  std::vector<int> computed_degrees;
  std::vector<int> computed_relations;
  bool single_class = false;
  bool consistent = false;
};

SLPrimeReport sl_prime_quotient(const MatGroup& Wt);

// True iff g acts trivially on the (principal) relation ideal's generator.
bool in_Nrel(const MatGroup& G, const InvariantPresentation& pres, const Mat& g);

// Scalar lambda with g.R = lambda R.
CycNum relation_character(const MatGroup& G, const InvariantPresentation& pres, const Mat& g);

}  // namespace reflekt
