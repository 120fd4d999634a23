#include "logfloer/pushoff.hpp"

#include <algorithm>

#include "logfloer/editmap.hpp"

namespace logfloer {

namespace {

const edge_label kB{edge_kind::beta, -1};

// moves an existing dart to the end of the fan of y
void rehome(edit_map& em, int d, int y) {
  int v = em.at[d];
  auto& f = em.fan[v];
  f.erase(std::remove(f.begin(), f.end(), d), f.end());
  em.fan[y].push_back(d);
  em.at[d] = y;
}

}  // namespace

pushoff_result admissible_pushoff_self(const arrangement& a) {
  check_arrangement(a);
  require(!trace_curve(a, edge_kind::beta).present, errk::illegal_move_site,
          "arrangement already holds a beta curve");
  curve_info ci = trace_curve(a, edge_kind::alpha);
  require(ci.present, errk::illegal_move_site, "no alpha curve to copy");

  // split the travel order into arcs separated by the points on Z
  std::vector<int> order = ci.order;
  std::vector<std::size_t> cut;  // arc start positions
  if (ci.closed) {
    std::size_t first = order.size();
    for (std::size_t i = 0; i < order.size(); ++i)
      if (classify_vertex(a, a.map.vertex_of(order[i])) ==
          vertex_type::z_transit) {
        if (first == order.size()) first = i;
        cut.push_back(i);
      }
    require(!cut.empty(), errk::no_z_crossings,
            "closed curve never meets the degeneracy locus");
    require(cut.size() % 2 == 0, errk::odd_crossing_closed_curve,
            "closed curve crosses Z an odd number of times");
    std::rotate(order.begin(), order.begin() + static_cast<long>(first),
                order.end());
    cut.clear();
    for (std::size_t i = 0; i < order.size(); ++i)
      if (classify_vertex(a, a.map.vertex_of(order[i])) ==
          vertex_type::z_transit)
        cut.push_back(i);
  } else {
    cut.push_back(0);  // the start endpoint opens the first arc
    for (std::size_t i = 1; i < order.size(); ++i)
      if (classify_vertex(a, a.map.vertex_of(order[i])) ==
          vertex_type::z_transit)
        cut.push_back(i);
  }

  edit_map em(a);

  // beta wedge darts at every point of alpha on Z, in travel order
  std::size_t narcs = cut.size();
  std::vector<int> bout(narcs, -1), bin(narcs, -1);
  std::vector<int> site(narcs, -1);  // a surviving alpha dart per site
  for (std::size_t j = 0; j < narcs; ++j) {
    int d = order[cut[j]];
    site[j] = d;
    bout[j] = em.new_dart_after(d, kB, 1);
  }
  // arrival wedges: after the last travel dart of each arc
  auto arc_span = [&](std::size_t j) {
    std::size_t lo = cut[j];
    std::size_t hi = (j + 1 < narcs) ? cut[j + 1] : order.size();
    return std::pair<std::size_t, std::size_t>{lo, hi};
  };
  for (std::size_t j = 0; j < narcs; ++j) {
    auto [lo, hi] = arc_span(j);
    int last = order[hi - 1];
    bin[j] = em.new_dart_after(em.mate[last], kB, 0);
  }

  // rails, one crossing per arc
  std::vector<int> cross_mark(narcs, -1);  // forward alpha dart at p_j
  for (std::size_t j = 0; j < narcs; ++j) {
    auto [lo, hi] = arc_span(j);
    std::vector<int> darts(order.begin() + static_cast<long>(lo),
                           order.begin() + static_cast<long>(hi));
    // refine the middle edge through the fresh crossing
    std::size_t mid = darts.size() / 2;
    int pj = em.subdivide(darts[mid]);
    int cont = em.fan[pj][0];  // forward half leaving p_j
    darts.insert(darts.begin() + static_cast<long>(mid) + 1, cont);
    cross_mark[j] = cont;

    int prev = bout[j];
    bool left = true;
    for (std::size_t i = 0; i + 1 < darts.size(); ++i) {
      int arrive = em.mate[darts[i]];
      int depart = darts[i + 1];
      int v = em.at[depart];
      if (v == pj) {
        int b_in = em.new_dart_after(depart, kB, 0);
        int b_out = em.new_dart_after(arrive, kB, 1);
        em.pair_darts(prev, b_in);
        prev = b_out;
        left = false;
        continue;
      }
      // collect the aux darts of the two sides, CCW from the depart dart
      std::vector<int> fanv = em.fan[v];
      auto start = std::find(fanv.begin(), fanv.end(), depart);
      std::rotate(fanv.begin(), start, fanv.end());
      auto split = std::find(fanv.begin(), fanv.end(), arrive);
      std::vector<int> lside(fanv.begin() + 1, split);
      std::vector<int> rside(split + 1, fanv.end());

      int y = em.new_vertex();
      int b_out = em.new_dart(y, kB, 1);
      if (left) {
        for (int d : lside) rehome(em, d, y);
      }
      int b_in = em.new_dart(y, kB, 0);
      if (!left) {
        for (int d : rside) rehome(em, d, y);
      }
      em.pair_darts(prev, b_in);
      prev = b_out;
    }
    em.pair_darts(prev, bin[j]);
    require(!left, errk::not_admissible_position,
            "rail finished an arc without crossing");
  }

  auto c = em.compile();
  pushoff_result out{std::move(c.arr), {}, {}};
  derive_component_signs(a, out.arr, c.dart_map);
  redistribute_areas(a, out.arr, c.dart_map);
  remap_seam_tags(a, out.arr, c.dart_map);
  out.arr.modular_periods = a.modular_periods;
  out.arr.volume = a.volume;

  for (std::size_t j = 0; j < narcs; ++j) {
    out.crossings.push_back(out.arr.map.vertex_of(c.dart_map[cross_mark[j]]));
    out.z_points.push_back(out.arr.map.vertex_of(c.dart_map[site[j]]));
  }
  if (!ci.closed)
    out.z_points.push_back(
        out.arr.map.vertex_of(c.dart_map[bin[narcs - 1]]));

  check_arrangement(out.arr);
  verify_admissible_position(out.arr);
  return out;
}

}  // namespace logfloer
