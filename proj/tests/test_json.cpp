// Tests for JSON round trips and golden file stability.  The golden files
// under data/ are committed bytes; re-serializing them must reproduce the
// files exactly.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>

#include "logfloer/arrangement.hpp"
#include "logfloer/error.hpp"
#include "logfloer/json_io.hpp"
#include "logfloer/models.hpp"
#include "logfloer/pushoff.hpp"

using namespace logfloer;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string data_path(const std::string& name) {
  return std::string(LOGFLOER_DATA_DIR) + "/" + name;
}

}  // namespace

// ---------------------------------------------------------------------------
// round trips
// ---------------------------------------------------------------------------

TEST_CASE("arrangement round trips bit for bit") {
  for (arrangement a :
       {wiggle_model(4), necklace_model(2), interval_model(),
        shared_endpoint_model(true), bigon_model(),
        admissible_pushoff_self(wiggle_model(2)).arr}) {
    if (!a.has_areas() && !z_circle_ids(a).empty()) assign_unit_areas(a);
    std::string text = pretty(arrangement_to_json(a));
    arrangement b = arrangement_from_json(ojson::parse(text));
    CHECK_NOTHROW(check_arrangement(b));
    CHECK(pretty(arrangement_to_json(b)) == text);
  }
}

TEST_CASE("graph round trips bit for bit") {
  log_graph g;
  g.vertices = {{1, 2}, {-1, 0}, {1, 0}};
  g.edges = {{0, 1, rational(3, 7)}, {1, 2, rational(1)}, {1, 2, rational(2)}};
  g.volume = rational(9, 4);
  std::string text = pretty(graph_to_json(g));
  log_graph h = graph_from_json(ojson::parse(text));
  CHECK(isomorphic(g, h));
  CHECK(pretty(graph_to_json(h)) == text);
}

TEST_CASE("map round trips preserve permutations") {
  comb_map m = admissible_pushoff_self(wiggle_model(2)).arr.map;
  ojson j = combmap_to_json(m);
  comb_map back = combmap_from_json(j);
  CHECK(back.rot == m.rot);
  CHECK(back.opp == m.opp);
  CHECK(back.boundary_faces == m.boundary_faces);
}

// ---------------------------------------------------------------------------
// goldens
// ---------------------------------------------------------------------------

TEST_CASE("golden arrangements load and re-serialize to the same bytes") {
  for (const std::string name :
       {"k4_circle.json", "necklace3.json", "interval.json",
        "shared_crossed.json"}) {
    std::string text = slurp(data_path(name));
    arrangement a = arrangement_from_json(ojson::parse(text));
    CHECK_NOTHROW(check_arrangement(a));
    CHECK(pretty(arrangement_to_json(a)) == text);
  }
}

TEST_CASE("golden circle matches the built-in model") {
  arrangement disk = arrangement_from_json(
      ojson::parse(slurp(data_path("k4_circle.json"))));
  arrangement built = wiggle_model(4);
  assign_unit_areas(built);
  CHECK(pretty(arrangement_to_json(built)) ==
        pretty(arrangement_to_json(disk)));
}

// ---------------------------------------------------------------------------
// malformed input
// ---------------------------------------------------------------------------

TEST_CASE("malformed documents are rejected") {
  ojson good = arrangement_to_json(wiggle_model(2));

  ojson wrong_version = good;
  wrong_version["schema_version"] = 99;
  CHECK_THROWS_AS(arrangement_from_json(wrong_version), log_floer_error);

  ojson broken_perm = good;
  broken_perm["pairing"][0] = 0;  // fixed point
  CHECK_THROWS_AS(arrangement_from_json(broken_perm), log_floer_error);

  ojson bad_rational = good;
  bad_rational["modular_periods"]["0"] = "x/y";
  CHECK_THROWS_AS(arrangement_from_json(bad_rational), log_floer_error);

  CHECK_THROWS_AS(load_json_file("/nonexistent/nowhere.json"),
                  log_floer_error);
}
