#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "logfloer/arrangement.hpp"

namespace logfloer {

// ---------------------------------------------------------------------------
// elementary moves
// ---------------------------------------------------------------------------
//
// Local modifications of an arrangement that preserve the isotopy class of
// the curves relative to Z.  Every move keeps the set of intersection points
// on Z untouched; birth and death create or cancel a pair of interior
// crossings, the modular slide pushes a strand across a transit of the other
// curve and adds two interior crossings, and the slides only recellularise.
//
// Sites are darts of the input arrangement.  Illegal sites throw
// IllegalMoveSite (or NotBoundaryPoint for blow ups).

enum class move_kind {
  birth,             // push a finger of site_a's curve across the edge of site_b
  death,             // cancel the empty bigon whose face contains site_a
  slide_remove_aux,  // delete the aux edge of site_a
  slide_add_aux,     // join site_a's and site_b's corners by a fresh aux edge
  slide_subdivide,   // split the edge of site_a
  slide_smooth,      // erase the 2-valent vertex of site_a
  modular_slide,     // slide a strand across the transit at the head of site_a
};

struct move_spec {
  move_kind kind = move_kind::slide_subdivide;
  int site_a = -1;
  int site_b = -1;
};

std::string move_name(move_kind k);

arrangement apply_move(const arrangement& a, const move_spec& m);

// every currently legal site, in deterministic order
std::vector<move_spec> legal_moves(const arrangement& a);

// seeded choice: uniform over available kinds, then uniform over sites
std::optional<move_spec> random_move(const arrangement& a, std::mt19937& rng);

// ---------------------------------------------------------------------------
// blow up
// ---------------------------------------------------------------------------
//
// Separates a shared endpoint on a boundary circle into two plain endpoints
// joined by a fresh circle segment.  The vertex must classify as a shared
// endpoint whose z wedge faces a hole.

arrangement blow_up(const arrangement& a, int vertex);

// resolves every shared endpoint; identity when there are none
arrangement blow_up_all(const arrangement& a);

}  // namespace logfloer
