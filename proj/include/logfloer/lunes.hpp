#pragma once

#include <vector>

#include "logfloer/arrangement.hpp"

namespace logfloer {

// ---------------------------------------------------------------------------
// lune enumeration
// ---------------------------------------------------------------------------
//
// A lune from p to q is a disc leaning on the two curves: its boundary runs
// from p to q along alpha and back along beta, and the disc pinches to a
// wedge at both corners.  The body may sweep across the degeneracy locus
// through triple points, where the two boundary arcs pinch together into a
// bowtie; with include_z set, the landing corner q itself may sit on Z.
//
// A candidate is a pair of embedded arcs meeting only at the corners (and
// at shared triple passages).  Its winding numbers on faces are solved from
// the jump rule: crossing a dart d of the boundary from left to right
// changes w by the piece sign times the net usage of d.  The candidate is a
// lune when the windings are 0/1, the marked faces stay at 0, exactly one
// wedge at each corner is covered, and the swept region is a disc.

struct lune {
  int from = -1;
  int to = -1;
  std::vector<int> alpha_darts;  // travel darts along alpha, p to q
  std::vector<int> beta_darts;   // travel darts along beta, q to p
  std::vector<int> alpha_z;      // z vertices passed through, travel order
  std::vector<int> beta_z;
  std::map<int, int> winding;  // face -> positive winding
  rational area;               // winding-weighted area, 0 without areas
};

struct lune_options {
  bool include_z = false;   // allow the landing corner on Z
  bool smooth_only = false; // keep the body clear of Z entirely
  bool immersed = false;    // experimental: windings above 1
  int max_winding = 4;      // immersed winding cap
  int max_wraps = 2;        // immersed arc wrap cap
};

std::vector<lune> lunes_between(const arrangement& a, int p, int q,
                                const lune_options& opt = {});

// landing corner must lie on Z; launch corner must not
std::vector<lune> z_lunes_between(const arrangement& a, int p, int q,
                                  const lune_options& opt = {});

std::vector<lune> all_lunes(const arrangement& a,
                            const lune_options& opt = {});

}  // namespace logfloer
