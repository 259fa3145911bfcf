#pragma once

#include <string>
#include <vector>

#include "reflekt/groups.hpp"
#include "reflekt/quotients.hpp"

namespace reflekt {

struct RowCheck {
  std::string label;
  bool ok = false;
  std::string expected;
  std::string got;
  std::string note;
};

struct TableReport {
  int table = 0;
  std::vector<RowCheck> rows;
  double seconds = 0;
  bool ok() const;
};

// A (Wt, G) pair from the quotient tables with its tabulated data.
struct PairSpec {
  std::string label;
  MatGroup Wt;
  MatGroup G;
  std::vector<int> wt_degrees;
  std::vector<int> quotient_degrees;
  std::vector<int> relation_degrees;  // empty when not tabulated
};

// Pairs of the table of quotients by +-1 (1) or of the rank-2 table (4).
// max_param bounds the parametric rows (0: the defaults d <= 5, mn <= 8).
std::vector<PairSpec> table_pairs(int table, int max_param = 0);

// Wt cap SL restricted to its normal quaternion subgroup of order 8.
MatGroup quaternion_subgroup(const MatGroup& Wt);

// JSON file: either a catalog entry or an array of matrices whose entries
// are strings in the cyclotomic text form.
MatGroup load_matrix_group(const std::string& path);

// Catalog name or matrix file.
MatGroup resolve_group(const std::string& arg);

// Subgroup argument of the CLI: catalog name, center2, derived, sl, trivial,
// or a path to a JSON file of matrices.
MatGroup resolve_subgroup(const std::string& arg, const MatGroup& Wt);

TableReport verify_table(int table, int max_param = 0);

struct G31Report {
  std::vector<RowCheck> checks;
  QuotientResult quotient;
  bool ok() const;
};

G31Report g31_demo();

std::string multiset_str(std::vector<int> v);

}  // namespace reflekt
