#pragma once

#include <vector>

#include "logfloer/arrangement.hpp"

namespace logfloer {

// ---------------------------------------------------------------------------
// admissible parallel copy
// ---------------------------------------------------------------------------
//
// Given an arrangement holding only the alpha curve, lays a beta rail
// alongside it.  Between consecutive points of alpha on Z the rail starts on
// the left of the travel direction, crosses alpha once through a fresh
// interior crossing, and arrives on the right; at the Z points the six
// darts close up into the admissible wedge pattern.  A closed curve needs
// at least one transit; an interval shares both endpoints with its copy.
// Auxiliary darts hanging off alpha on the rail side are re-hooked onto the
// rail so it stays embedded.

struct pushoff_result {
  arrangement arr;
  std::vector<int> crossings;  // one fresh interior crossing per arc
  std::vector<int> z_points;   // transit / endpoint vertices, travel order
};

pushoff_result admissible_pushoff_self(const arrangement& a);

}  // namespace logfloer
