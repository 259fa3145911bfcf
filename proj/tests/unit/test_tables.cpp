#include "doctest.h"

#include "reflekt/catalog.hpp"
#include "reflekt/tables.hpp"

using namespace reflekt;

TEST_CASE("tables: subgroup arguments") {
  MatGroup G12 = get_group("G12");
  CHECK(resolve_subgroup("center2", G12).order() == 2);
  CHECK(resolve_subgroup("sl", G12).order() == 24);
  CHECK(resolve_subgroup("derived", G12).order() == derived_subgroup(G12).order());
  CHECK(resolve_subgroup("trivial", G12).order() == 1);
  CHECK(resolve_subgroup("Itilde2(2)", get_group("G", {4, 2, 2})).order() == 8);
  CHECK(quaternion_subgroup(G12).order() == 8);
  CHECK_THROWS_AS(resolve_subgroup("center2", get_group("A", {2})), Error);
  CHECK_THROWS_AS(resolve_subgroup("G12", get_group("A", {3})), Error);
}

TEST_CASE("tables: pair lists") {
  CHECK(table_pairs(1).size() == 11);
  auto t4 = table_pairs(4);
  CHECK(t4.size() == 26);
  CHECK(table_pairs(4, 4).size() == 9);
  CHECK_THROWS_AS(table_pairs(2), Error);
  CHECK_THROWS_AS(verify_table(7), Error);
}

TEST_CASE("tables: table 2") {
  TableReport t = verify_table(2);
  CHECK(t.rows.size() == 7);
  CHECK(t.ok());
}

TEST_CASE("tables: multiset text") { CHECK(multiset_str({3, 1, 2}) == "{1,2,3}"); }
