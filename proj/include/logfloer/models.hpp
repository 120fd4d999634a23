#pragma once

#include "logfloer/arrangement.hpp"
#include "logfloer/graphclass.hpp"

namespace logfloer {

// ---------------------------------------------------------------------------
// reference surfaces
// ---------------------------------------------------------------------------

// Sphere with one degeneracy circle and a closed curve weaving across it at
// k transit points (k even, >= 2); chords alternate between the negative
// north side and the positive south side.  k = 0 builds a closed curve that
// misses Z entirely.
arrangement wiggle_model(int k);

// Sphere with m nested circles and one closed curve crossing each twice;
// piece signs alternate from -1 innermost.
arrangement necklace_model(int m);

// Disc bounded by a circle of two marked-side arcs, with an oriented chord
// whose endpoints sit on the circle; the disc piece has sign +1.
arrangement interval_model();

// Disc with two chords leaving a common boundary point q.  Uncrossed: the
// chords stay disjoint and the wedge at q opens the other way, so only the
// swapped pair is admissible.  Crossed: the chords trade targets across one
// interior crossing and the pair itself is admissible.
arrangement shared_endpoint_model(bool crossed);

// Sphere, no circles: two closed curves meeting at two points, bounding
// two bigons each way.
arrangement bigon_model();

// closed surface realizing a decorated graph: one hub per piece carrying
// interleaved genus loops and one spoke per incident circle
arrangement model_surface(const log_graph& g);

}  // namespace logfloer
