#pragma once

#include <map>
#include <vector>

#include "logfloer/arrangement.hpp"

namespace logfloer {

// ---------------------------------------------------------------------------
// mutable builder for arrangements
// ---------------------------------------------------------------------------
//
// Constructions and moves assemble maps as explicit rotation fans.  Darts
// live in one global pool; fan[v] lists the darts of vertex v in CCW order.
// Darts and vertices can be retired; compile() renumbers the survivors
// compactly and reports where every old dart went.

struct edit_map {
  std::vector<std::vector<int>> fan;  // per vertex, CCW order
  std::vector<int> mate;              // dart -> dart, -1 while unpaired
  std::vector<int> at;                // dart -> vertex, -1 when dead
  std::vector<edge_label> label;
  std::vector<char> along;
  std::vector<int> hole_hints;  // darts lying on holes

  edit_map() = default;
  explicit edit_map(const arrangement& a);  // ids match a's darts

  int new_vertex();
  // appends a dart to the fan of v
  int new_dart(int v, edge_label l, char forward = 0);
  // inserts a dart into the fan of v directly after an existing dart
  int new_dart_after(int after, edge_label l, char forward = 0);
  void pair_darts(int d, int e);

  // convenience: paired edge between fresh fan ends of u and v
  std::pair<int, int> add_edge(int u, int v, edge_label l, char forward = 0);

  void retire_dart(int d);    // removes from its fan
  void retire_vertex(int v);  // retires every dart of v

  // splits the edge of d at a fresh 2-valent vertex and returns that vertex;
  // labels and orientation flags carry over to both halves
  int subdivide(int d);
  // removes a 2-valent vertex, welding its two edges into one
  void smooth(int v);

  struct compiled {
    arrangement arr;
    std::vector<int> dart_map;  // builder dart -> new dart, -1 if retired
  };
  compiled compile() const;
};

// copies piece signs from an old arrangement onto a new one through a dart
// correspondence; every new piece must be reached
void derive_component_signs(const arrangement& before, arrangement& after,
                            const std::vector<int>& dart_map);

// carries face areas across an edit: faces linked by surviving darts form
// clusters, and each cluster's total area is split evenly among its new
// faces.  Marked faces carry no area; a new unmarked face no old dart
// reaches is an error.  old_face_glue unites old faces up front (for faces
// that die with no surviving darts), new_face_glue unites the faces of two
// new darts (for freshly created faces with no old-dart link).
void redistribute_areas(const arrangement& before, arrangement& after,
                        const std::vector<int>& dart_map,
                        const std::vector<std::pair<int, int>>& old_face_glue = {},
                        const std::vector<std::pair<int, int>>& new_face_glue = {});

// carries seam tags across an edit (tags follow surviving edges)
void remap_seam_tags(const arrangement& before, arrangement& after,
                     const std::vector<int>& dart_map);

}  // namespace logfloer
