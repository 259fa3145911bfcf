#pragma once

#include <optional>
#include <string>
#include <vector>

#include "reflekt/groups.hpp"
#include "reflekt/polynomials.hpp"

namespace reflekt {

// Reference data attached to an entry. Zero / empty fields are unset.
struct Expected {
  long order = 0;
  std::vector<int> degrees;  // reflection groups
  // subgroups of SL2: generator degrees and relation degree
  std::vector<int> sl2_degrees;
  int sl2_relation = 0;
  // rank-2 exceptionals: type of Wt cap SL and its index
  std::string sl_type;
  int sl_index = 0;
};

struct CatalogEntry {
  std::string name;
  std::vector<int> params;
  long conductor = 1;
  std::vector<Mat> generators;
  Expected expected;

  std::string key() const;  // e.g. "G_4_2_2", "G12"
};

// Names accepted by catalog_entry, with their parameter arity.
struct CatalogName {
  std::string name;
  int arity;
  std::string description;
};
const std::vector<CatalogName>& catalog_names();

// Entry from the catalog directory if a file exists there, else from the
// built-in recipe. Throws UnknownName.
CatalogEntry catalog_entry(const std::string& name, const std::vector<int>& params = {});

// Built-in recipe only (used to generate the data files).
CatalogEntry builtin_entry(const std::string& name, const std::vector<int>& params = {});

// Closure of the entry's generators, checked against the expected order.
// Results are cached per process. Throws UnknownName, SelfCheckFailed.
MatGroup get_group(const std::string& name, const std::vector<int>& params = {});

// Parses "G12", "G(4,2,2)", "C(3)", "Itilde2(2)", "G_4_2_2".
std::pair<std::string, std::vector<int>> parse_group_name(const std::string& text);

// Directory holding <key>.json files: $REFLEKT_CATALOG, else the source tree's data/catalog.
std::string catalog_dir();

std::string entry_to_json(const CatalogEntry& e);
CatalogEntry entry_from_json(const std::string& text);

// Type of a finite subgroup of SL2 determined by its order and the order of
// its derived subgroup: "C<n>", "Itilde2(<d>)", "Atilde4", "Stilde4", "Atilde5".
std::string sl2_type(const MatGroup& G);

struct SelfCheckReport {
  std::string key;
  long order = 0;
  std::vector<int> degrees;
  std::vector<int> sl2_degrees;
  int sl2_relation = 0;
  std::string sl_type;
  int sl_index = 0;
  std::vector<std::string> diffs;
  bool ok() const { return diffs.empty(); }
};

// Recomputes the entry's fingerprints and compares them to the expected data.
SelfCheckReport catalog_selfcheck(const std::string& name, const std::vector<int>& params = {});

// Pinned invariants of the order-64 normal subgroup of G31.
struct G31Data {
  std::vector<Mat> subgroup_generators;
  std::vector<MPoly> class_products;   // p_s, p_t, p_u, p_v, p_w
  std::vector<MPoly> preferred_basis;  // p1..p5
  // p_i = sum_j change[i][j] * class_products[j]
  std::vector<std::vector<int>> change;
  MPoly relation;  // R in Y1..Y5 over the preferred basis
};
const G31Data& g31_data();

}  // namespace reflekt
