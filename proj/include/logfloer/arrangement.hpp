#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "logfloer/combmap.hpp"
#include "logfloer/graphclass.hpp"
#include "logfloer/rational.hpp"

namespace logfloer {

// ---------------------------------------------------------------------------
// curve arrangements on log symplectic surfaces
// ---------------------------------------------------------------------------
//
// A combinatorial map whose edges are labelled: the degeneracy circles (z,
// one circle index per embedded circle), up to two transverse curves (alpha
// and beta, each an embedded circle or an interval with endpoints on Z), and
// auxiliary cell subdivision edges.  Cutting along Z splits the surface into
// signed pieces; the modular direction along a circle is the one with the
// positive piece on its right.
//
// Optional decorations: positive areas for the unmarked faces, modular
// periods per circle, a volume, and seam tags remembering which removed
// triple point a curve edge used to pass through.

enum class edge_kind { alpha, beta, z, aux };

struct edge_label {
  edge_kind kind = edge_kind::aux;
  int circle = -1;  // circle index, z edges only

  friend bool operator==(const edge_label& a, const edge_label& b) {
    return a.kind == b.kind && a.circle == b.circle;
  }
};

struct arrangement {
  comb_map map;
  std::vector<edge_label> labels;  // per dart, equal on both darts of an edge
  std::vector<char> along;  // 1 if the dart points along its curve, else 0
  std::map<int, int> component_signs;      // piece rep -> +1 / -1
  std::map<int, rational> face_areas;      // face -> area, empty when absent
  std::map<int, rational> modular_periods; // circle -> period, may be empty
  std::optional<rational> volume;
  std::map<int, int> seam_tags;  // curve edge id -> erased triple point id

  bool is_kind(int d, edge_kind k) const { return labels[d].kind == k; }
  bool is_curve(int d) const {
    return labels[d].kind == edge_kind::alpha ||
           labels[d].kind == edge_kind::beta;
  }
  bool has_areas() const { return !face_areas.empty(); }
};

// ---------------------------------------------------------------------------
// validation
// ---------------------------------------------------------------------------

struct validation_report {
  bool ok = true;
  std::vector<std::pair<errk, std::string>> problems;

  void add(errk kind, const std::string& msg) {
    ok = false;
    problems.emplace_back(kind, msg);
  }
  std::string text() const;
};

// full structural check, collecting problems instead of throwing
validation_report validate_arrangement(const arrangement& a);

// throws the first problem
void check_arrangement(const arrangement& a);

// ---------------------------------------------------------------------------
// pieces of the complement of Z
// ---------------------------------------------------------------------------

struct piece_set {
  std::map<int, int> of_face;  // unmarked face -> piece rep (minimal face)
  std::vector<int> reps;
};

piece_set pieces(const arrangement& a);

// sign of the piece containing the given unmarked face
int sign_of_face(const arrangement& a, const piece_set& p, int face);

// sets the sign of the piece containing face_of(dart)
void assign_sign_by_dart(arrangement& a, int dart, int sign);

// every unmarked face gets area 1
void assign_unit_areas(arrangement& a);

// ---------------------------------------------------------------------------
// circles and curves
// ---------------------------------------------------------------------------

std::vector<int> z_circle_ids(const arrangement& a);
std::vector<int> circle_darts(const arrangement& a, int circle);

// true when the positive piece lies on the right of the z dart; darts whose
// right side is a hole take the opposite of the left piece's sign
bool modular_forward(const arrangement& a, const piece_set& p, int zdart);

struct curve_info {
  bool present = false;
  bool closed = true;
  // darts with along = 1 in travel order; for an interval, from start to end
  std::vector<int> order;
};

curve_info trace_curve(const arrangement& a, edge_kind kind);

// outgoing / incoming dart of the given kind at a vertex, -1 if absent
int out_dart(const arrangement& a, int vertex, edge_kind kind);
int in_dart(const arrangement& a, int vertex, edge_kind kind);

// ---------------------------------------------------------------------------
// vertex patterns
// ---------------------------------------------------------------------------

enum class vertex_type {
  curve_interior,   // two darts of one curve (plus aux)
  bare_z,           // two z darts (plus aux)
  aux_only,
  crossing,         // alpha beta alpha beta
  z_transit,        // curve z curve z
  triple,           // alpha beta z alpha beta z
  endpoint,         // z curve z
  shared_endpoint,  // z alpha beta z
  invalid,
};

vertex_type classify_vertex(const arrangement& a, int v);

// refined position check at triples and shared endpoints, plus the demand
// that every piece next to a triple contains an interior crossing
void verify_admissible_position(const arrangement& a);

// ---------------------------------------------------------------------------
// intersection points and degrees
// ---------------------------------------------------------------------------

struct ipoint {
  int vertex = -1;
  bool in_z = false;
  int degree = 1;
};

std::vector<ipoint> intersection_points(const arrangement& a,
                                        bool flip_degrees = false);

// relabels alpha as beta and back
void swap_roles(arrangement& a);

// ---------------------------------------------------------------------------
// classification bridge
// ---------------------------------------------------------------------------

// the decorated bipartite graph of a closed arrangement; pieces become
// vertices in rep order, circles become edges
log_graph degeneracy_graph(const arrangement& a);

}  // namespace logfloer
