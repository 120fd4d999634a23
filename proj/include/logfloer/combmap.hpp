#pragma once

#include <vector>

#include "logfloer/error.hpp"

namespace logfloer {

// ---------------------------------------------------------------------------
// combinatorial maps
// ---------------------------------------------------------------------------
//
// A cellular embedding of a graph in a closed oriented surface, encoded as a
// set of darts (directed edge sides) with two permutations:
//
//   rot  counterclockwise rotation of outgoing darts at each vertex
//   opp  fixed point free involution pairing the two darts of each edge
//
// Vertices are rot orbits, edges are opp orbits, faces are orbits of
// face_next(d) = rot_inv(opp(d)).  With that convention the face of a dart
// lies on its LEFT when the dart is traversed from its vertex, and the
// corner wedge swept CCW from a dart d to rot(d) belongs to the face of d.
// Cells are named by the minimal dart of their orbit.
//
// Surfaces with boundary are encoded by marking faces in boundary_faces:
// marked faces are holes rather than discs.  euler_map() counts every face
// (the capped closed surface), euler_surface() subtracts the holes.

struct comb_map {
  int n = 0;
  std::vector<int> rot;
  std::vector<int> opp;
  std::vector<int> boundary_faces;
  bool allow_multi = true;

  // throws on malformed permutation data
  void validate(bool require_connected = true) const;

  // --- navigation ---------------------------------------------------------

  int rot_inv(int d) const;
  int face_next(int d) const { return rot_inv(opp[d]); }
  int face_prev(int d) const { return opp[rot[d]]; }

  int vertex_of(int d) const;
  int face_of(int d) const;
  int edge_of(int d) const { return d < opp[d] ? d : opp[d]; }

  int valence(int d) const;

  // rot orbit through d starting at d, in rotation order
  std::vector<int> vertex_darts(int d) const;
  // face orbit through d starting at d, in boundary order
  std::vector<int> face_darts(int d) const;

  // --- cells --------------------------------------------------------------

  std::vector<int> vertices() const;
  std::vector<int> edges() const;
  std::vector<int> faces() const;

  int num_vertices() const { return static_cast<int>(vertices().size()); }
  int num_edges() const { return n / 2; }
  int num_faces() const { return static_cast<int>(faces().size()); }

  bool is_boundary_face(int f) const;

  // --- topology -----------------------------------------------------------

  int euler_map() const;
  int euler_surface() const;
  // genus of the capped closed surface; map must be connected
  int genus() const;

  // component rep (minimal dart) for every dart
  std::vector<int> component_of_darts() const;
  std::vector<int> components() const;

  // --- orientation --------------------------------------------------------

  // Reverses rot on the given darts.  The set must be a union of connected
  // components, otherwise SubsetNotSaturated.  Marked faces inside the set
  // are renamed to the orbit of their opposite darts.
  void reverse_orientation(const std::vector<int>& darts);
  comb_map reversed(const std::vector<int>& darts) const;
};

// genus of one bordered piece from its own cell counts and hole count
int capped_genus(int chi_capped, errk on_odd = errk::odd_chi);

}  // namespace logfloer
