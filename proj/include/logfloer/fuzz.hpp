#pragma once

#include <string>
#include <vector>

#include "logfloer/arrangement.hpp"

namespace logfloer {

// ---------------------------------------------------------------------------
// randomized corpus
// ---------------------------------------------------------------------------
//
// Deterministic stream of admissible two-curve arrangements: a surface is
// modelled from an enumerated shape, a closed alpha curve is threaded
// across one or two degeneracy circles, the admissible parallel copy lays
// down beta, and a few random elementary moves stir the result.  Every
// instance keeps the curves in admissible position and meets Z in triple
// points, so downstream counts always exercise the crossing machinery.

struct fuzz_options {
  int count = 100;
  unsigned seed = 2026;
  int max_genus = 2;
  int max_circles = 3;
  int max_moves = 3;
  // keep only instances whose triple points admit the resolving surgery;
  // routes across circles that do not jointly separate the surface are
  // redrawn (turn off to also collect those)
  bool require_resolvable = true;
};

struct fuzz_instance {
  arrangement arr;
  std::string recipe;  // construction trace, stable across runs
};

std::vector<fuzz_instance> fuzz_corpus(const fuzz_options& opt = {});

}  // namespace logfloer
