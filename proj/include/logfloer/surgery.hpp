#pragma once

#include <map>
#include <vector>

#include "logfloer/arrangement.hpp"

namespace logfloer {

// ---------------------------------------------------------------------------
// resolving triple points
// ---------------------------------------------------------------------------
//
// Surgery removes every triple point of a closed arrangement by resolving the
// degeneracy circles that carry them.  Each such circle is cut out; the side
// with negative sign is reflected and reglued so that the two curve strands
// through a former triple cross no longer.  Where the circle ran between two
// consecutive triples, a strip is removed, leaving a hole bounded by the two
// copies of the old circle segment and two short arcs; the copies become
// fresh degeneracy circles of the output.
//
// Curve edges created by fusing the strands are seam tagged with the erased
// triple point, and the neck face between the two strands at each former
// triple gains 2 * strip of extra area.
//
// Circles carrying the triples may meet the curves only at triple points;
// anything else (a transit, an endpoint) throws NotAdmissiblePosition.  A
// strand running straight between two triples is split at its midpoint
// before the resolution.

struct surgery_result {
  arrangement arr;
  std::vector<int> removed_z_points;  // old triple vertices, ascending
  std::map<int, int> point_map;       // old interior crossing -> new vertex
  std::map<int, int> circle_map;      // fresh circle id -> old circle id
};

surgery_result surgery(const arrangement& a,
                       const rational& strip = rational(1, 4));

}  // namespace logfloer
