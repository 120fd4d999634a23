#include "logfloer/surgery.hpp"

#include <algorithm>
#include <set>

#include "logfloer/editmap.hpp"

namespace logfloer {

namespace {

// fan of a triple in walk orientation: [z_e, xn, yn, z_w, xs, ys] with the
// x strand adjacent to the z darts; after resolution x is the east strand
struct triple_info {
  int q = -1;
  int z_e = -1, z_w = -1;
  int xn = -1, yn = -1, xs = -1, ys = -1;
  int m_xn = -1, m_yn = -1, m_xs = -1, m_ys = -1;
  int q_ne = -1, q_se = -1, q_nw = -1, q_sw = -1;  // rim vertices
  int x_up = -1;  // fresh dart whose left face is the neck centre
};

std::vector<int> oriented_circle_walk(const arrangement& a, int circle,
                                      int start) {
  std::vector<int> walk;
  int d = start;
  do {
    walk.push_back(d);
    int back = a.map.opp[d];
    int nxt = -1;
    for (int e : a.map.vertex_darts(back))
      if (a.is_kind(e, edge_kind::z) && a.labels[e].circle == circle &&
          e != back)
        nxt = e;
    require(nxt >= 0, errk::not_admissible_position,
            "degeneracy circle does not close up");
    d = nxt;
  } while (d != start);
  return walk;
}

// Which components of the surface cut along the affected circles get their
// orientation reversed before regluing.  The two sides of each affected
// circle must reflect oppositely, or the seams would fuse faces of opposite
// sign into one piece; this is a two-colouring problem, seeded so that the
// negative side of the lowest circle is the reflected one.  No colouring
// exists when the affected circles do not jointly separate the surface.
struct reflection {
  std::vector<int> up;     // face union-find, cut along affected circles
  std::map<int, bool> flip;  // component root -> reflect
  bool ok = true;
  std::string why;

  int find(int x) {
    while (up[x] != x) x = up[x] = up[up[x]];
    return x;
  }
  bool flipped(int face) {
    auto it = flip.find(find(face));
    return it != flip.end() && it->second;
  }
};

reflection plan_reflection(const arrangement& a, const std::set<int>& circles,
                           const piece_set& ps) {
  reflection r;
  r.up.resize(a.map.n);
  for (int i = 0; i < a.map.n; ++i) r.up[i] = i;
  for (int d = 0; d < a.map.n; ++d) {
    if (d >= a.map.opp[d]) continue;
    if (a.is_kind(d, edge_kind::z) && circles.count(a.labels[d].circle))
      continue;
    int x = r.find(a.map.face_of(d)), y = r.find(a.map.face_of(a.map.opp[d]));
    r.up[x] = y;
  }

  std::vector<std::pair<int, int>> sides;  // negative comp, positive comp
  for (int c : circles) {
    int d0 = -1;
    for (int d = 0; d < a.map.n && d0 < 0; ++d)
      if (a.is_kind(d, edge_kind::z) && a.labels[d].circle == c) d0 = d;
    int fa = a.map.face_of(d0), fb = a.map.face_of(a.map.opp[d0]);
    bool a_neg = sign_of_face(a, ps, fa) < 0;
    int neg = r.find(a_neg ? fa : fb), pos = r.find(a_neg ? fb : fa);
    if (neg == pos) {
      r.ok = false;
      r.why = "an affected circle has the same component on both sides";
      return r;
    }
    sides.push_back({neg, pos});
  }

  for (bool changed = true; changed;) {
    changed = false;
    for (auto [neg, pos] : sides) {
      auto in = r.flip.find(neg), ip = r.flip.find(pos);
      if (in == r.flip.end() && ip == r.flip.end()) {
        r.flip[neg] = true;
        r.flip[pos] = false;
        changed = true;
      } else if (in == r.flip.end()) {
        r.flip[neg] = !ip->second;
        changed = true;
      } else if (ip == r.flip.end()) {
        r.flip[pos] = !in->second;
        changed = true;
      } else if (in->second == ip->second) {
        r.ok = false;
        r.why = "the affected circles do not jointly separate the surface";
        return r;
      }
    }
  }
  return r;
}

}  // namespace

surgery_result surgery(const arrangement& a, const rational& strip) {
  check_arrangement(a);
  require(strip.is_positive(), errk::missing_areas,
          "strip width must be positive");
  require(a.map.boundary_faces.empty(), errk::not_admissible_position,
          "surgery needs a closed surface");
  verify_admissible_position(a);

  // --- collect triples per circle -----------------------------------------

  std::map<int, std::vector<int>> triples_on;  // circle -> triple vertices
  std::vector<int> crossings;
  for (int v : a.map.vertices()) {
    vertex_type t = classify_vertex(a, v);
    if (t == vertex_type::crossing) crossings.push_back(v);
    if (t != vertex_type::triple) continue;
    int circle = -1;
    for (int d : a.map.vertex_darts(v))
      if (a.is_kind(d, edge_kind::z)) circle = a.labels[d].circle;
    triples_on[circle].push_back(v);
  }

  surgery_result res;
  if (triples_on.empty()) {
    res.arr = a;
    for (int v : crossings) res.point_map[v] = v;
    return res;
  }

  std::set<int> affected;
  for (const auto& [c, qs] : triples_on) affected.insert(c);

  // --- flip colouring ------------------------------------------------------

  piece_set ps = pieces(a);
  reflection refl = plan_reflection(a, affected, ps);
  require(refl.ok, errk::not_admissible_position, refl.why);
  auto flipped_face = [&](int face) { return refl.flipped(face); };

  // --- oriented walks, one per affected circle ----------------------------

  struct circle_walk {
    int circle;
    std::vector<int> walk;  // walk[i] points from vertex i to vertex i + 1
    std::vector<int> verts;
    std::vector<int> tpos;  // positions carrying triples
  };
  std::vector<circle_walk> walks;
  std::set<int> on_affected;
  std::map<int, triple_info> tinfo;

  for (int c : affected) {
    circle_walk cw;
    cw.circle = c;
    int start = -1;
    for (int d = 0; d < a.map.n && start < 0; ++d)
      if (a.is_kind(d, edge_kind::z) && a.labels[d].circle == c) start = d;
    cw.walk = oriented_circle_walk(a, c, start);
    // keep the unreflected side on the left of the walk
    if (flipped_face(a.map.face_of(cw.walk[0]))) {
      std::vector<int> rev;
      for (auto it = cw.walk.rbegin(); it != cw.walk.rend(); ++it)
        rev.push_back(a.map.opp[*it]);
      cw.walk = rev;
    }
    int L = static_cast<int>(cw.walk.size());
    for (int i = 0; i < L; ++i) {
      int v = a.map.vertex_of(cw.walk[i]);
      cw.verts.push_back(v);
      on_affected.insert(v);
      vertex_type t = classify_vertex(a, v);
      if (t == vertex_type::triple) {
        cw.tpos.push_back(i);
      } else {
        require(t == vertex_type::bare_z, errk::not_admissible_position,
                "resolved circle meets a curve away from its triple points");
      }
    }
    require(!cw.tpos.empty(), errk::not_admissible_position, "lost a triple");

    // analyse each triple in walk orientation
    for (int i : cw.tpos) {
      triple_info t;
      t.q = cw.verts[i];
      t.z_e = cw.walk[i];
      t.z_w = a.map.opp[cw.walk[(i + L - 1) % L]];
      t.xn = a.map.rot[t.z_e];
      t.yn = a.map.rot[t.xn];
      require(a.map.rot[t.yn] == t.z_w, errk::not_admissible_position,
              "triple fan out of order");
      t.xs = a.map.rot[t.z_w];
      t.ys = a.map.rot[t.xs];
      require(a.map.rot[t.ys] == t.z_e, errk::not_admissible_position,
              "triple fan out of order");
      require(a.labels[t.xn].kind == a.labels[t.xs].kind &&
                  a.labels[t.yn].kind == a.labels[t.ys].kind,
              errk::not_admissible_position, "strand kinds do not line up");
      t.m_xn = a.map.opp[t.xn];
      t.m_yn = a.map.opp[t.yn];
      t.m_xs = a.map.opp[t.xs];
      t.m_ys = a.map.opp[t.ys];
      tinfo[t.q] = t;
    }
    walks.push_back(std::move(cw));
  }

  // --- edits ---------------------------------------------------------------

  edit_map em(a);

  // a strand joining two triples is split in the middle first, so every
  // stub later fuses against a plain midpoint instead of the far triple
  {
    std::vector<int> straight;
    std::set<int> seen;
    for (const auto& [q, t] : tinfo) {
      (void)q;
      for (int m : {t.m_xn, t.m_yn, t.m_xs, t.m_ys})
        if (tinfo.count(a.map.vertex_of(m)) &&
            seen.insert(a.map.edge_of(m)).second)
          straight.push_back(a.map.edge_of(m));
    }
    for (int ed : straight) {
      int d = ed, e = a.map.opp[ed];
      int w = em.subdivide(d);
      int x = em.fan[w][0], y = em.fan[w][1];
      for (auto& [q, t] : tinfo) {
        (void)q;
        for (int* m : {&t.m_xn, &t.m_yn, &t.m_xs, &t.m_ys}) {
          if (*m == e) *m = y;       // its stub was d, now paired with y
          else if (*m == d) *m = x;  // its stub was e, now paired with x
        }
      }
    }
  }

  // reflect the components on the flipped side
  for (int v : a.map.vertices()) {
    if (on_affected.count(v)) continue;
    if (flipped_face(a.map.face_of(v)))
      std::reverse(em.fan[em.at[v]].begin(), em.fan[em.at[v]].end());
  }

  auto move_dart = [&](int d, int v) {
    auto& old_fan = em.fan[em.at[d]];
    old_fan.erase(std::find(old_fan.begin(), old_fan.end(), d));
    em.at[d] = v;
    em.fan[v].push_back(d);
  };
  auto relabel = [&](int d, int circle) {
    em.label[d] = {edge_kind::z, circle};
    em.label[a.map.opp[d]] = {edge_kind::z, circle};
  };

  int next_circle = 0;
  for (int c : z_circle_ids(a)) next_circle = std::max(next_circle, c + 1);
  int total_gaps = 0;

  // dismantle the circles gap by gap; the old z edges become the north bank
  // of each gap (seen from the unreflected side), a fresh chain of edges the
  // south bank, and two short arcs close the rim at the triples
  for (const auto& cw : walks) {
    int L = static_cast<int>(cw.walk.size());
    int nt = static_cast<int>(cw.tpos.size());
    for (int j = 0; j < nt; ++j) {
      int s = cw.tpos[j], e = cw.tpos[(j + 1) % nt];
      int gap = next_circle++;
      res.circle_map[gap] = cw.circle;
      ++total_gaps;
      edge_label zl{edge_kind::z, gap};

      triple_info& ts = tinfo.at(cw.verts[s]);
      ts.q_ne = em.new_vertex();
      ts.q_se = em.new_vertex();
      move_dart(ts.z_e, ts.q_ne);
      relabel(ts.z_e, gap);
      int arc_n = em.new_dart(ts.q_ne, zl);
      int s_prev = em.new_dart(ts.q_se, zl);
      int arc_s = em.new_dart(ts.q_se, zl);
      em.pair_darts(arc_n, arc_s);
      em.hole_hints.push_back(a.map.opp[cw.walk[s]]);

      for (int p = (s + 1) % L; p != e; p = (p + 1) % L) {
        int v = cw.verts[p];
        int d_out = cw.walk[p];
        int d_in = a.map.opp[cw.walk[(p + L - 1) % L]];
        auto fanv = a.map.vertex_darts(v);
        std::rotate(fanv.begin(),
                    std::find(fanv.begin(), fanv.end(), d_out), fanv.end());
        auto in_it = std::find(fanv.begin(), fanv.end(), d_in);
        std::vector<int> tops(fanv.begin() + 1, in_it);
        std::vector<int> bottoms(in_it + 1, fanv.end());

        int vn = em.new_vertex();
        move_dart(d_out, vn);
        for (int td : tops) move_dart(td, vn);
        move_dart(d_in, vn);
        relabel(d_out, gap);

        int vs = em.new_vertex();
        for (auto it = bottoms.rbegin(); it != bottoms.rend(); ++it)
          move_dart(*it, vs);
        int s_in = em.new_dart(vs, zl);
        int s_out = em.new_dart(vs, zl);
        em.pair_darts(s_prev, s_in);
        s_prev = s_out;
      }

      triple_info& te = tinfo.at(cw.verts[e]);
      te.q_nw = em.new_vertex();
      te.q_sw = em.new_vertex();
      move_dart(te.z_w, te.q_nw);
      int warc_n = em.new_dart(te.q_nw, zl);
      int s_in_w = em.new_dart(te.q_sw, zl);
      em.pair_darts(s_prev, s_in_w);
      int warc_s = em.new_dart(te.q_sw, zl);
      em.pair_darts(warc_n, warc_s);
    }
  }

  // fuse the strands at every former triple and brace the rim slivers
  edge_label laux;
  for (auto& [q, t] : tinfo) {
    em.retire_dart(t.xn);
    em.retire_dart(t.yn);
    em.retire_dart(t.xs);
    em.retire_dart(t.ys);
    em.pair_darts(t.m_xn, t.m_xs);
    em.pair_darts(t.m_yn, t.m_ys);

    int m_x = em.subdivide(t.m_xs);
    int x_up = em.fan[m_x][0], x_down = em.fan[m_x][1];
    int m_y = em.subdivide(t.m_ys);
    int y_up = em.fan[m_y][0], y_down = em.fan[m_y][1];
    (void)y_down;
    t.x_up = x_up;

    int aux_e_m = em.new_dart_after(x_down, laux);
    int aux_e_q = em.new_dart_after(t.z_e, laux);  // q_ne: [z_e, aux, arc]
    em.pair_darts(aux_e_m, aux_e_q);
    int aux_w_m = em.new_dart_after(y_up, laux);
    int aux_w_q = em.new_dart(t.q_nw, laux);  // q_nw: [z_w, arc, aux]
    em.pair_darts(aux_w_m, aux_w_q);
  }

  auto compiled = em.compile();
  arrangement& out = compiled.arr;
  const std::vector<int>& dart_map = compiled.dart_map;

  // --- signs: reflected pieces negate -------------------------------------

  piece_set ps_out = pieces(out);
  std::map<int, int> new_signs;
  for (int od = 0; od < a.map.n; ++od) {
    int nd = dart_map[od];
    if (nd < 0) continue;
    int nf = out.map.face_of(nd);
    if (out.map.is_boundary_face(nf)) continue;
    int of = a.map.face_of(od);
    int s = sign_of_face(a, ps, of) * (flipped_face(of) ? -1 : 1);
    int rep = ps_out.of_face.at(nf);
    auto it = new_signs.find(rep);
    if (it == new_signs.end())
      new_signs[rep] = s;
    else
      require(it->second == s, errk::signs_inconsistent,
              "reflection produced clashing piece signs");
  }
  for (int rep : ps_out.reps)
    require(new_signs.count(rep), errk::signs_inconsistent,
            "piece received no sign");
  out.component_signs = new_signs;

  // --- areas, periods, volume, seams --------------------------------------

  redistribute_areas(a, out, dart_map);
  if (out.has_areas()) {
    for (const auto& [q, t] : tinfo) {
      int nf = out.map.face_of(dart_map[t.x_up]);
      out.face_areas[nf] += strip + strip;
    }
  }

  out.modular_periods.clear();
  if (!a.modular_periods.empty()) {
    for (int c : z_circle_ids(out)) {
      auto oc = res.circle_map.find(c);
      int old_c = oc == res.circle_map.end() ? c : oc->second;
      out.modular_periods[c] = a.modular_periods.at(old_c);
    }
  }
  if (a.volume && out.has_areas()) {
    rational vol(0);
    for (const auto& [f, ar] : out.face_areas)
      vol += rational(sign_of_face(out, ps_out, f)) * ar;
    out.volume = vol;
  } else {
    out.volume = a.volume;
  }

  remap_seam_tags(a, out, dart_map);
  for (const auto& [q, t] : tinfo) {
    for (int m : {t.m_xn, t.m_xs, t.m_yn, t.m_ys})
      out.seam_tags[out.map.edge_of(dart_map[m])] = q;
  }

  // --- bookkeeping and sanity ----------------------------------------------

  for (const auto& [q, t] : tinfo) res.removed_z_points.push_back(q);
  std::sort(res.removed_z_points.begin(), res.removed_z_points.end());
  for (int v : crossings) {
    int nd = dart_map[v];
    require(nd >= 0, errk::not_admissible_position, "crossing vanished");
    res.point_map[v] = out.map.vertex_of(nd);
  }

  require(out.map.euler_map() == a.map.euler_map(), errk::odd_chi,
          "resolution changed the capped Euler number");
  require(static_cast<int>(out.map.boundary_faces.size()) == total_gaps,
          errk::not_admissible_position, "gap rims did not close into holes");
  check_arrangement(out);

  res.arr = std::move(out);
  return res;
}

}  // namespace logfloer
