#pragma once

#include <stdexcept>
#include <string>

namespace logfloer {

// ---------------------------------------------------------------------------
// error taxonomy
// ---------------------------------------------------------------------------

enum class errk {
  not_involution,
  rotation_not_permutation,
  disconnected,
  odd_chi,
  subset_not_saturated,
  signs_inconsistent,
  not_transverse,
  odd_crossing_closed_curve,
  no_z_crossings,
  illegal_move_site,
  not_boundary_point,
  not_admissible_position,
  points_in_z,
  both_interior,
  multi_crossing_found,
  missing_areas,
  division_by_zero,
  differential_not_square_zero,
  bad_input,
};

inline const char* errk_name(errk k) {
  switch (k) {
    case errk::not_involution: return "NotInvolution";
    case errk::rotation_not_permutation: return "RotationNotPermutation";
    case errk::disconnected: return "Disconnected";
    case errk::odd_chi: return "OddChi";
    case errk::subset_not_saturated: return "SubsetNotSaturated";
    case errk::signs_inconsistent: return "SignsInconsistent";
    case errk::not_transverse: return "NotTransverse";
    case errk::odd_crossing_closed_curve: return "OddCrossingClosedCurve";
    case errk::no_z_crossings: return "NoZCrossings";
    case errk::illegal_move_site: return "IllegalMoveSite";
    case errk::not_boundary_point: return "NotBoundaryPoint";
    case errk::not_admissible_position: return "NotAdmissiblePosition";
    case errk::points_in_z: return "PointsInZ";
    case errk::both_interior: return "BothInterior";
    case errk::multi_crossing_found: return "MultiCrossingFound";
    case errk::missing_areas: return "MissingAreas";
    case errk::division_by_zero: return "DivisionByZero";
    case errk::differential_not_square_zero: return "DifferentialNotSquareZero";
    case errk::bad_input: return "BadInput";
  }
  return "Unknown";
}

class log_floer_error : public std::runtime_error {
public:
  log_floer_error(errk kind, const std::string& detail)
      : std::runtime_error(std::string(errk_name(kind)) + ": " + detail),
        kind_(kind) {}

  errk kind() const { return kind_; }

private:
  errk kind_;
};

[[noreturn]] inline void fail(errk kind, const std::string& detail) {
  throw log_floer_error(kind, detail);
}

inline void require(bool cond, errk kind, const std::string& detail) {
  if (!cond) fail(kind, detail);
}

}  // namespace logfloer
