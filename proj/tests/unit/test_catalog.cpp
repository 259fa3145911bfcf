#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "reflekt/catalog.hpp"
#include "reflekt/invariants.hpp"

using namespace reflekt;

TEST_CASE("catalog: names") {
  CHECK(parse_group_name("G(4,2,2)") == std::pair<std::string, std::vector<int>>{"G", {4, 2, 2}});
  CHECK(parse_group_name("G_4_2_2") == std::pair<std::string, std::vector<int>>{"G", {4, 2, 2}});
  CHECK(parse_group_name("G12").first == "G12");
  CHECK(parse_group_name("Itilde2(3)") == std::pair<std::string, std::vector<int>>{"Itilde2", {3}});
  CHECK_THROWS_AS(get_group("Nope"), Error);
  CHECK_THROWS_AS(get_group("G", {4, 3, 2}), Error);
}

TEST_CASE("catalog: orders") {
  CHECK(get_group("G", {4, 2, 2}).order() == 16);
  CHECK(get_group("Itilde2", {3}).order() == 12);
  CHECK(get_group("F4").order() == 1152);
  CHECK(get_group("H3").order() == 120);
  const long exceptional[] = {24, 72, 48, 144, 96, 192, 288, 576, 48, 96, 144, 288,
                              600, 1200, 1800, 3600, 360, 720, 240};
  for (int i = 4; i <= 22; ++i) CHECK(get_group("G" + std::to_string(i)).order() == exceptional[i - 4]);
}

TEST_CASE("catalog: G31") {
  MatGroup W = get_group("G31");
  CHECK(W.order() == 46080);
  CHECK(W.generators().size() == 5);
  for (auto& g : W.generators()) CHECK(rank<CycNum>(g - identity<CycNum>(4)) == 1);
  MatGroup G = get_group("G31sub");
  CHECK(G.order() == 64);
  CHECK(is_normal(W, G));
  CHECK(G.reflections().empty());
}

TEST_CASE("catalog: rank-2 fingerprints") {
  auto G12 = catalog_selfcheck("G12");
  CHECK(G12.ok());
  CHECK(G12.sl_type == "Atilde4");
  CHECK(G12.sl_index == 2);
  auto G11 = catalog_selfcheck("G11");
  CHECK(G11.sl_type == "Stilde4");
  CHECK(G11.sl_index == 12);
  // G11 = Stilde4 . mu24 as sets
  MatGroup W = get_group("G11");
  MatGroup S = get_group("Stilde4");
  MatGroup mu = MatGroup::close({diag({CycNum::zeta(24), CycNum::zeta(24)})});
  std::set<std::string> prods;
  for (auto& a : S.elements())
    for (auto& b : mu.elements()) prods.insert(matrix_key(mul<CycNum>(a, b)));
  CHECK(static_cast<long>(prods.size()) == W.order());
  bool inside = true;
  for (auto& a : S.elements()) inside = inside && W.contains(a);
  CHECK(inside);
  auto G13 = catalog_selfcheck("G13");
  CHECK(G13.degrees == std::vector<int>{8, 12});
}

TEST_CASE("catalog: JSON round trip") {
  for (auto key : {"G12", "G(4,2,2)", "Itilde2(3)", "G31"}) {
    auto [name, params] = parse_group_name(key);
    CatalogEntry e = builtin_entry(name, params);
    CatalogEntry f = entry_from_json(entry_to_json(e));
    CHECK(f.key() == e.key());
    CHECK(f.expected.order == e.expected.order);
    REQUIRE(f.generators.size() == e.generators.size());
    for (std::size_t i = 0; i < e.generators.size(); ++i) CHECK(equal<CycNum>(f.generators[i], e.generators[i]));
  }
  CHECK_THROWS_AS(entry_from_json("{\"name\": 3}"), Error);
}

TEST_CASE("catalog: shipped files agree with the builtin constructions") {
  namespace fs = std::filesystem;
  fs::path dir = catalog_dir();
  REQUIRE(fs::exists(dir));
  int n = 0;
  for (auto& f : fs::directory_iterator(dir)) {
    std::ifstream in(f.path());
    std::stringstream ss;
    ss << in.rdbuf();
    CatalogEntry e = entry_from_json(ss.str());
    CHECK(MatGroup::close(e.generators).order() == e.expected.order);
    ++n;
  }
  CHECK(n > 30);
}
