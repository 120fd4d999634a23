#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "logfloer/arrangement.hpp"
#include "logfloer/lunes.hpp"
#include "logfloer/moves.hpp"
#include "logfloer/novikov.hpp"
#include "logfloer/pushoff.hpp"
#include "logfloer/surgery.hpp"

namespace logfloer {

// ---------------------------------------------------------------------------
// intersection Floer complexes
// ---------------------------------------------------------------------------
//
// The cochain group is spanned by the intersection points of the two curves,
// graded mod 2 by the local degree; points on Z always sit in degree one.
// The differential counts lunes: over F2 every lune contributes 1, over the
// Novikov field it contributes T^area, so equal-area pairs cancel either
// way.  Lunes pinching through triple points are counted natively; the same
// counts must fall out of resolving the triples by surgery and enumerating
// smooth lunes on the resolved surface, which the decomposition check and
// the resolution census verify.

enum class coeff_kind { f2, novikov_field };

struct floer_complex {
  coeff_kind coeffs = coeff_kind::f2;
  bool with_z = false;  // Z landing lunes were enumerated
  std::vector<ipoint> basis;
  // entries[j][i] is the coefficient of basis[i] in d(basis[j])
  std::vector<std::map<int, novikov>> entries;
  // witnesses per (from, to) basis index pair
  std::map<std::pair<int, int>, std::vector<lune>> lunes;
};

// include_z admits lunes landing on Z and needs a surface with boundary
floer_complex build_complex(const arrangement& a, coeff_kind coeffs,
                            bool include_z = false,
                            bool flip_degrees = false);

struct cohomology_result {
  int rank0 = 0;
  int rank1 = 0;
  // cocycle representatives as (basis index, coefficient) supports
  std::vector<std::vector<std::pair<int, novikov>>> reps0, reps1;
};

// verifies that d shifts the grading and squares to zero, then computes
// ranks by exact fraction-free elimination; no Novikov truncation happens
cohomology_result cohomology(const floer_complex& c);

// ---------------------------------------------------------------------------
// counting ops
// ---------------------------------------------------------------------------

// native census between two interior crossings: every lune, the smooth
// subset staying clear of Z, and the crossing remainder
struct lune_census {
  int total = 0;
  int smooth = 0;
  int crossing = 0;
  std::vector<lune> witnesses;
};

lune_census count_lunes(const arrangement& a, int p, int q);

// the same census routed through surgery: triples are resolved, smooth
// lunes are enumerated on the resolved surface, and each witness reports
// the erased triple points its boundary runs through (at most one)
struct crossing_witness {
  lune resolved;
  std::vector<int> crossings;
};

struct resolved_census {
  int total = 0;
  int smooth = 0;
  int crossing = 0;
  std::vector<crossing_witness> witnesses;
  surgery_result resolution;
};

resolved_census count_lunes_by_resolution(const arrangement& a, int p, int q);

// ---------------------------------------------------------------------------
// self Floer cohomology
// ---------------------------------------------------------------------------

// pairs the curve with its admissible parallel copy and names the classes:
// "[1]" in degree zero, one "lambda_i" per point on Z carried by a single
// z generator, "zeta" for the class carried by interior crossings
struct self_floer_result {
  pushoff_result pushed;
  floer_complex complex;
  cohomology_result coh;
  std::vector<std::string> point_names;  // aligned with complex.basis
  std::vector<std::string> class_names0;  // aligned with coh.reps0
  std::vector<std::string> class_names1;  // aligned with coh.reps1
};

self_floer_result self_floer(const arrangement& a, coeff_kind coeffs);

// expected self ranks: a closed circle through k points of Z has (1, k+1),
// an interval between two boundary points has (1, 2)
std::pair<int, int> log_derham_ranks(int k, bool closed);

// ---------------------------------------------------------------------------
// checks
// ---------------------------------------------------------------------------

struct invariance_step {
  move_spec move;
  int rank0 = 0;
  int rank1 = 0;
  bool ok = true;
};

struct invariance_report {
  bool ok = true;
  int rank0 = 0;  // ranks of the starting arrangement
  int rank1 = 0;
  std::vector<invariance_step> steps;
};

// applies a seeded sequence of elementary moves, skipping candidates that
// leave admissible position, and records the ranks after each one
invariance_report invariance_check(const arrangement& a, coeff_kind coeffs,
                                   int n_moves, unsigned seed);

struct decomposition_report {
  bool ok = true;
  std::vector<std::string> notes;
};

// compares the native F2 complex with the complex of the resolved surface:
// Z generators must be isolated, interior points must match one to one
// under the surgery point map, and all matrix entries must agree
decomposition_report surgery_decomposition_check(const arrangement& a);

}  // namespace logfloer
