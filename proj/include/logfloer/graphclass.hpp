#pragma once

#include <string>
#include <vector>

#include "logfloer/rational.hpp"

namespace logfloer {

// ---------------------------------------------------------------------------
// decorated bipartite graphs
// ---------------------------------------------------------------------------
//
// A compact oriented log symplectic surface is classified by a connected
// bipartite multigraph: vertices are the open components of the complement
// of the degeneracy circles, signed by the sign of the form and carrying the
// component genus; edges are the circles, decorated with their positive
// modular period.  A global volume completes the data.  Self loops cannot
// occur (a circle separates locally), parallel edges can.

struct log_graph {
  struct vertex {
    int sign = 1;   // +1 or -1
    int genus = 0;  // >= 0
  };
  struct edge {
    int u = 0;
    int v = 0;
    rational tau{1};  // modular period, > 0
  };

  std::vector<vertex> vertices;
  std::vector<edge> edges;
  rational volume{1};

  void validate() const;

  // genus of the closed surface glued from the pieces:
  // sum of vertex genera plus the cycle rank of the graph
  int total_genus() const;

  bool is_tree() const {
    return static_cast<int>(edges.size()) ==
           static_cast<int>(vertices.size()) - 1;
  }
};

// ---------------------------------------------------------------------------
// isomorphism
// ---------------------------------------------------------------------------

// canonical string, equal exactly for isomorphic decorated graphs
// (sign, genus and period preserving vertex bijections; equal volume)
std::string canonical_code(const log_graph& g);

bool isomorphic(const log_graph& a, const log_graph& b);

// ---------------------------------------------------------------------------
// enumeration
// ---------------------------------------------------------------------------

// all isomorphism classes of connected shapes with the given total genus and
// at most max_edges circles; periods and volume are left at 1
std::vector<log_graph> enumerate_shapes(int total_genus, int max_edges);

// Graphviz form
std::string graph_dot(const log_graph& g);

}  // namespace logfloer
