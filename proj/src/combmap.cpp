#include "logfloer/combmap.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace logfloer {

namespace {

// minimal dart of the orbit of `next` through d
template <class Next>
int orbit_min(int d, Next next) {
  int best = d;
  int e = next(d);
  while (e != d) {
    best = std::min(best, e);
    e = next(e);
  }
  return best;
}

template <class Next>
std::vector<int> orbit_list(int d, Next next) {
  std::vector<int> out{d};
  int e = next(d);
  while (e != d) {
    out.push_back(e);
    e = next(e);
  }
  return out;
}

template <class Next>
std::vector<int> orbit_reps(int n, Next next) {
  std::vector<char> seen(n, 0);
  std::vector<int> reps;
  for (int d = 0; d < n; ++d) {
    if (seen[d]) continue;
    reps.push_back(d);
    int e = d;
    do {
      seen[e] = 1;
      e = next(e);
    } while (e != d);
  }
  return reps;
}

}  // namespace

// ---------------------------------------------------------------------------
// validation
// ---------------------------------------------------------------------------

void comb_map::validate(bool require_connected) const {
  require(n >= 0 && n % 2 == 0, errk::rotation_not_permutation,
          "dart count must be even, got " + std::to_string(n));
  require(static_cast<int>(rot.size()) == n, errk::rotation_not_permutation,
          "rotation has " + std::to_string(rot.size()) + " entries for " +
              std::to_string(n) + " darts");
  require(static_cast<int>(opp.size()) == n, errk::not_involution,
          "pairing has " + std::to_string(opp.size()) + " entries for " +
              std::to_string(n) + " darts");

  std::vector<char> hit(n, 0);
  for (int d = 0; d < n; ++d) {
    require(rot[d] >= 0 && rot[d] < n, errk::rotation_not_permutation,
            "rotation image out of range at dart " + std::to_string(d));
    require(!hit[rot[d]], errk::rotation_not_permutation,
            "rotation repeats image " + std::to_string(rot[d]));
    hit[rot[d]] = 1;
  }
  for (int d = 0; d < n; ++d) {
    require(opp[d] >= 0 && opp[d] < n, errk::not_involution,
            "pairing image out of range at dart " + std::to_string(d));
    require(opp[d] != d, errk::not_involution,
            "pairing fixes dart " + std::to_string(d));
    require(opp[opp[d]] == d, errk::not_involution,
            "pairing not an involution at dart " + std::to_string(d));
  }

  if (!allow_multi) {
    for (int d = 0; d < n; ++d)
      require(vertex_of(d) != vertex_of(opp[d]), errk::not_involution,
              "self loop at dart " + std::to_string(d));
  }

  for (int f : boundary_faces)
    require(f >= 0 && f < n && face_of(f) == f, errk::rotation_not_permutation,
            "marked face " + std::to_string(f) + " is not a face id");

  if (require_connected && n > 0)
    require(components().size() == 1, errk::disconnected,
            "map has " + std::to_string(components().size()) + " components");
}

// ---------------------------------------------------------------------------
// navigation
// ---------------------------------------------------------------------------

int comb_map::rot_inv(int d) const {
  int e = d;
  while (rot[e] != d) e = rot[e];
  return e;
}

int comb_map::vertex_of(int d) const {
  return orbit_min(d, [&](int e) { return rot[e]; });
}

int comb_map::face_of(int d) const {
  return orbit_min(d, [&](int e) { return face_next(e); });
}

int comb_map::valence(int d) const {
  return static_cast<int>(vertex_darts(d).size());
}

std::vector<int> comb_map::vertex_darts(int d) const {
  return orbit_list(d, [&](int e) { return rot[e]; });
}

std::vector<int> comb_map::face_darts(int d) const {
  return orbit_list(d, [&](int e) { return face_next(e); });
}

// ---------------------------------------------------------------------------
// cells
// ---------------------------------------------------------------------------

std::vector<int> comb_map::vertices() const {
  return orbit_reps(n, [&](int e) { return rot[e]; });
}

std::vector<int> comb_map::edges() const {
  std::vector<int> out;
  for (int d = 0; d < n; ++d)
    if (d < opp[d]) out.push_back(d);
  return out;
}

std::vector<int> comb_map::faces() const {
  return orbit_reps(n, [&](int e) { return face_next(e); });
}

bool comb_map::is_boundary_face(int f) const {
  return std::find(boundary_faces.begin(), boundary_faces.end(), f) !=
         boundary_faces.end();
}

// ---------------------------------------------------------------------------
// topology
// ---------------------------------------------------------------------------

int comb_map::euler_map() const {
  return num_vertices() - num_edges() + num_faces();
}

int comb_map::euler_surface() const {
  return euler_map() - static_cast<int>(boundary_faces.size());
}

int comb_map::genus() const {
  require(n == 0 || components().size() == 1, errk::disconnected,
          "genus of a disconnected map");
  return capped_genus(euler_map());
}

int capped_genus(int chi_capped, errk on_odd) {
  int twice = 2 - chi_capped;
  require(twice % 2 == 0, on_odd,
          "capped Euler characteristic " + std::to_string(chi_capped) +
              " is odd");
  require(twice >= 0, on_odd,
          "capped Euler characteristic " + std::to_string(chi_capped) +
              " exceeds 2");
  return twice / 2;
}

std::vector<int> comb_map::component_of_darts() const {
  std::vector<int> comp(n, -1);
  for (int d = 0; d < n; ++d) {
    if (comp[d] != -1) continue;
    std::vector<int> stack{d};
    comp[d] = d;
    while (!stack.empty()) {
      int e = stack.back();
      stack.pop_back();
      for (int f : {rot[e], opp[e]}) {
        if (comp[f] == -1) {
          comp[f] = d;
          stack.push_back(f);
        }
      }
    }
  }
  return comp;
}

std::vector<int> comb_map::components() const {
  auto comp = component_of_darts();
  std::vector<int> reps;
  for (int d = 0; d < n; ++d)
    if (comp[d] == d) reps.push_back(d);
  return reps;
}

// ---------------------------------------------------------------------------
// orientation
// ---------------------------------------------------------------------------

void comb_map::reverse_orientation(const std::vector<int>& darts) {
  std::set<int> in(darts.begin(), darts.end());
  for (int d : darts) {
    require(d >= 0 && d < n, errk::subset_not_saturated,
            "dart " + std::to_string(d) + " out of range");
    require(in.count(rot[d]) && in.count(opp[d]), errk::subset_not_saturated,
            "subset not closed under rotation and pairing at dart " +
                std::to_string(d));
  }

  std::vector<int> rinv(n);
  for (int d = 0; d < n; ++d) rinv[rot[d]] = d;

  // a marked face inside the subset becomes the orbit of its opposite darts
  for (int& f : boundary_faces) {
    if (!in.count(f)) continue;
    int best = n;
    for (int d : face_darts(f)) best = std::min(best, opp[d]);
    f = best;
  }

  for (int d : darts) rot[d] = rinv[d];
  std::sort(boundary_faces.begin(), boundary_faces.end());
}

comb_map comb_map::reversed(const std::vector<int>& darts) const {
  comb_map out = *this;
  out.reverse_orientation(darts);
  return out;
}

}  // namespace logfloer
