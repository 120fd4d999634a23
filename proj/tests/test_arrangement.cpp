// Tests for labelled arrangements: validation, pieces and signs, curve
// tracing, vertex classification, intersection points, admissibility.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "logfloer/arrangement.hpp"
#include "logfloer/error.hpp"
#include "logfloer/models.hpp"
#include "logfloer/pushoff.hpp"

using namespace logfloer;

// ---------------------------------------------------------------------------
// validation
// ---------------------------------------------------------------------------

TEST_CASE("model arrangements validate") {
  CHECK_NOTHROW(check_arrangement(wiggle_model(2)));
  CHECK_NOTHROW(check_arrangement(wiggle_model(6)));
  CHECK_NOTHROW(check_arrangement(necklace_model(3)));
  CHECK_NOTHROW(check_arrangement(interval_model()));
  CHECK_NOTHROW(check_arrangement(shared_endpoint_model(true)));
  CHECK_NOTHROW(check_arrangement(bigon_model()));
}

TEST_CASE("validation rejects a broken sign assignment") {
  arrangement a = wiggle_model(2);
  for (auto& [rep, s] : a.component_signs) s = 1;  // both sides positive
  auto rep = validate_arrangement(a);
  CHECK_FALSE(rep.ok);
  CHECK_THROWS_AS(check_arrangement(a), log_floer_error);
}

TEST_CASE("validation rejects bad modular periods") {
  // periods are optional as a block, but must be positive and cover
  // exactly the circles when present
  arrangement a = wiggle_model(2);
  a.modular_periods.clear();
  CHECK_NOTHROW(check_arrangement(a));
  a.modular_periods[0] = rational(-1);
  CHECK_THROWS_AS(check_arrangement(a), log_floer_error);
  a.modular_periods[0] = rational(1);
  a.modular_periods[7] = rational(1);
  CHECK_THROWS_AS(check_arrangement(a), log_floer_error);
}

TEST_CASE("odd transit count is rejected") {
  CHECK_THROWS_AS(wiggle_model(3), log_floer_error);
  CHECK_THROWS_AS(wiggle_model(-2), log_floer_error);
}

// ---------------------------------------------------------------------------
// pieces and signs
// ---------------------------------------------------------------------------

TEST_CASE("wiggle complement has two pieces of opposite sign") {
  arrangement a = wiggle_model(4);
  piece_set p = pieces(a);
  CHECK(p.reps.size() == 2);
  std::set<int> signs;
  for (int r : p.reps) signs.insert(sign_of_face(a, p, r));
  CHECK(signs == std::set<int>{-1, 1});
}

TEST_CASE("signs flip across every z edge") {
  arrangement a = necklace_model(3);
  piece_set p = pieces(a);
  for (int d = 0; d < a.map.n; ++d) {
    if (!a.is_kind(d, edge_kind::z)) continue;
    int lf = a.map.face_of(d);
    int rf = a.map.face_of(a.map.opp[d]);
    CHECK(sign_of_face(a, p, lf) == -sign_of_face(a, p, rf));
  }
}

TEST_CASE("nested circles alternate piece signs") {
  arrangement a = necklace_model(3);
  piece_set p = pieces(a);
  CHECK(p.reps.size() == 4);  // disc, two annuli, outer cap
}

TEST_CASE("modular orientation picks one dart per edge") {
  arrangement a = wiggle_model(4);
  piece_set p = pieces(a);
  for (int d = 0; d < a.map.n; ++d) {
    if (!a.is_kind(d, edge_kind::z)) continue;
    bool fwd = modular_forward(a, p, d);
    bool bwd = modular_forward(a, p, a.map.opp[d]);
    CHECK(fwd != bwd);
    // forward means the positive piece sits on the right
    if (fwd) CHECK(sign_of_face(a, p, a.map.face_of(a.map.opp[d])) == 1);
  }
}

// ---------------------------------------------------------------------------
// curves and circles
// ---------------------------------------------------------------------------

TEST_CASE("wiggle curve traces closed through every transit") {
  arrangement a = wiggle_model(4);
  curve_info alpha = trace_curve(a, edge_kind::alpha);
  CHECK(alpha.present);
  CHECK(alpha.closed);
  CHECK(alpha.order.size() == 4);
  CHECK_FALSE(trace_curve(a, edge_kind::beta).present);
}

TEST_CASE("interval curve traces open with two endpoints") {
  arrangement a = interval_model();
  curve_info alpha = trace_curve(a, edge_kind::alpha);
  CHECK(alpha.present);
  CHECK_FALSE(alpha.closed);
  CHECK(alpha.order.size() == 1);
}

TEST_CASE("necklace circles are indexed and traversable") {
  arrangement a = necklace_model(3);
  auto ids = z_circle_ids(a);
  CHECK(ids == std::vector<int>{0, 1, 2});
  for (int c : ids) {
    auto darts = circle_darts(a, c);
    CHECK(darts.size() == 4);  // two arcs, both darts each
    for (int d : darts) CHECK(a.labels[d].circle == c);
  }
}

// ---------------------------------------------------------------------------
// vertex classification
// ---------------------------------------------------------------------------

TEST_CASE("vertex kinds across the model zoo") {
  arrangement w = wiggle_model(4);
  for (int v : w.map.vertices())
    CHECK(classify_vertex(w, v) == vertex_type::z_transit);

  arrangement b = bigon_model();
  for (int v : b.map.vertices())
    CHECK(classify_vertex(b, v) == vertex_type::crossing);

  arrangement i = interval_model();
  for (int v : i.map.vertices())
    CHECK(classify_vertex(i, v) == vertex_type::endpoint);

  arrangement s = shared_endpoint_model(true);
  int shared = 0, plain = 0, crossings = 0;
  for (int v : s.map.vertices()) {
    vertex_type t = classify_vertex(s, v);
    if (t == vertex_type::shared_endpoint) ++shared;
    if (t == vertex_type::endpoint) ++plain;
    if (t == vertex_type::crossing) ++crossings;
  }
  CHECK(shared == 1);  // the two curves share one boundary point
  CHECK(plain == 2);
  CHECK(crossings == 1);
}

TEST_CASE("pushoff produces triple points") {
  pushoff_result pr = admissible_pushoff_self(wiggle_model(2));
  int triples = 0;
  for (int v : pr.arr.map.vertices())
    if (classify_vertex(pr.arr, v) == vertex_type::triple) ++triples;
  CHECK(triples == 2);
  CHECK(pr.z_points.size() == 2);
  CHECK(pr.crossings.size() == 2);
}

// ---------------------------------------------------------------------------
// intersection points and degrees
// ---------------------------------------------------------------------------

TEST_CASE("bigon carries two interior points of opposite degree") {
  arrangement a = bigon_model();
  auto pts = intersection_points(a);
  REQUIRE(pts.size() == 2);
  CHECK_FALSE(pts[0].in_z);
  CHECK_FALSE(pts[1].in_z);
  CHECK(pts[0].degree + pts[1].degree == 1);

  auto flipped = intersection_points(a, true);
  for (std::size_t i = 0; i < pts.size(); ++i)
    CHECK(flipped[i].degree == 1 - pts[i].degree);
}

TEST_CASE("points on the degeneracy locus always have degree one") {
  pushoff_result pr = admissible_pushoff_self(wiggle_model(4));
  for (bool flip : {false, true})
    for (const auto& pt : intersection_points(pr.arr, flip))
      if (pt.in_z) CHECK(pt.degree == 1);
}

TEST_CASE("pushoff crossing degrees alternate along the rail") {
  pushoff_result pr = admissible_pushoff_self(wiggle_model(4));
  auto pts = intersection_points(pr.arr);
  std::map<int, int> deg;
  for (const auto& pt : pts) deg[pt.vertex] = pt.degree;
  int zeros = 0, ones = 0;
  for (int v : pr.crossings) (deg.at(v) == 0 ? zeros : ones)++;
  CHECK(zeros == 2);
  CHECK(ones == 2);
}

// ---------------------------------------------------------------------------
// admissible position
// ---------------------------------------------------------------------------

TEST_CASE("admissibility of the shared endpoint models") {
  CHECK_NOTHROW(verify_admissible_position(shared_endpoint_model(true)));
  CHECK_THROWS_AS(verify_admissible_position(shared_endpoint_model(false)),
                  log_floer_error);
  arrangement swapped = shared_endpoint_model(false);
  swap_roles(swapped);
  CHECK_NOTHROW(verify_admissible_position(swapped));
}

TEST_CASE("swapping roles twice restores labels") {
  arrangement a = shared_endpoint_model(true);
  arrangement b = a;
  swap_roles(b);
  swap_roles(b);
  for (int d = 0; d < a.map.n; ++d) CHECK(a.labels[d] == b.labels[d]);
  curve_info beta = trace_curve(a, edge_kind::beta);
  CHECK(beta.present);
}

// ---------------------------------------------------------------------------
// areas and the degeneracy graph
// ---------------------------------------------------------------------------

TEST_CASE("unit areas cover every unmarked face") {
  arrangement a = wiggle_model(4);
  assign_unit_areas(a);
  CHECK(a.has_areas());
  for (int f : a.map.faces()) {
    if (a.map.is_boundary_face(f)) {
      CHECK_FALSE(a.face_areas.count(f));
    } else {
      CHECK(a.face_areas.at(f) == rational(1));
    }
  }
}

TEST_CASE("degeneracy graph of the wiggle is a dumbbell") {
  log_graph g = degeneracy_graph(wiggle_model(4));
  CHECK(g.vertices.size() == 2);
  CHECK(g.edges.size() == 1);
  CHECK(g.total_genus() == 0);
  std::set<int> signs;
  for (const auto& v : g.vertices) signs.insert(v.sign);
  CHECK(signs == std::set<int>{-1, 1});
}

TEST_CASE("degeneracy graph of the necklace is a path") {
  log_graph g = degeneracy_graph(necklace_model(3));
  CHECK(g.vertices.size() == 4);
  CHECK(g.edges.size() == 3);
  CHECK(g.total_genus() == 0);
}
