#include "logfloer/moves.hpp"

#include <algorithm>
#include <set>

#include "logfloer/editmap.hpp"

namespace logfloer {

namespace {

// ---------------------------------------------------------------------------
// shared plumbing
// ---------------------------------------------------------------------------

int dart_before_in_fan(const edit_map& em, int d) {
  const auto& f = em.fan[em.at[d]];
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f[i] == d) return f[(i + f.size() - 1) % f.size()];
  fail(errk::illegal_move_site, "dart missing from its fan");
}

// hole hints sitting on darts about to die are re-aimed at surviving darts of
// the same boundary face; a hole whose entire rim dies is an illegal site
void repoint_hole_hints(edit_map& em, const arrangement& a,
                        const std::vector<int>& dying) {
  std::set<int> dead(dying.begin(), dying.end());
  for (int& h : em.hole_hints) {
    if (!dead.count(h)) continue;
    int found = -1;
    for (int d : a.map.face_darts(h)) {
      if (!dead.count(d)) {
        found = d;
        break;
      }
    }
    require(found >= 0, errk::illegal_move_site,
            "move would strip a hole of its boundary");
    h = found;
  }
}

arrangement finish(const arrangement& a, const edit_map& em,
                   const std::vector<std::pair<int, int>>& old_glue = {},
                   const std::vector<std::pair<int, int>>& new_glue_em = {}) {
  auto c = em.compile();
  arrangement out = std::move(c.arr);
  derive_component_signs(a, out, c.dart_map);
  std::vector<std::pair<int, int>> ng;
  for (auto [p, q] : new_glue_em) ng.push_back({c.dart_map[p], c.dart_map[q]});
  redistribute_areas(a, out, c.dart_map, old_glue, ng);
  remap_seam_tags(a, out, c.dart_map);
  out.modular_periods = a.modular_periods;
  out.volume = a.volume;
  check_arrangement(out);
  return out;
}

edge_kind curve_kind_at(const arrangement& a, int v) {
  if (out_dart(a, v, edge_kind::alpha) >= 0) return edge_kind::alpha;
  return edge_kind::beta;
}

// ---------------------------------------------------------------------------
// birth
// ---------------------------------------------------------------------------
//
// Pushes a finger of the curve carrying d_push across the edge of d_cross.
// Both darts must see the same unmarked face on their left.  The pushed edge
// is replaced by a three edge detour through two fresh crossings u and v on
// the crossed edge, and the far side of the crossed edge gains an empty
// bigon between the finger tip and the middle segment.

arrangement birth(const arrangement& a, int d_push, int d_cross) {
  int n = a.map.n;
  require(d_push >= 0 && d_push < n && d_cross >= 0 && d_cross < n,
          errk::illegal_move_site, "site out of range");
  require(a.is_curve(d_push) && a.is_curve(d_cross), errk::illegal_move_site,
          "birth sites must be curve darts");
  require(a.labels[d_push].kind != a.labels[d_cross].kind,
          errk::illegal_move_site, "birth needs one dart of each curve");

  int f = a.map.face_of(d_push);
  require(f == a.map.face_of(d_cross), errk::illegal_move_site,
          "birth sites must share their left face");
  require(!a.map.is_boundary_face(f), errk::illegal_move_site,
          "cannot push through a hole");
  int m_push = a.map.opp[d_push];
  int m_cross = a.map.opp[d_cross];
  require(a.map.face_of(m_push) != f, errk::illegal_move_site,
          "pushed edge has the same face on both sides");
  require(!a.map.is_boundary_face(a.map.face_of(m_cross)),
          errk::illegal_move_site, "crossed edge bounds a hole");

  edit_map em(a);
  repoint_hole_hints(em, a, {d_push, m_push});

  edge_label la = a.labels[d_push];
  char fwd = a.along[d_push];
  char bwd = static_cast<char>(1 - fwd);

  // chord anchors at the old endpoints, placed in the wedges facing f while
  // the pushed edge is still there
  int nt = em.new_dart_after(d_push, la, fwd);
  int nh = em.new_dart_after(dart_before_in_fan(em, m_push), la, bwd);

  // two fresh crossings on the crossed edge, u nearer its tail
  int u = em.subdivide(d_cross);
  int x_u = em.fan[u][0], y_u = em.fan[u][1];
  int v = em.subdivide(x_u);
  int x_v = em.fan[v][0], y_v = em.fan[v][1];

  // the face cycle of f passes t, h, ..., u, v, so the non-crossing chords
  // are t-v and h-u; the finger tip edge u-v runs along the far side
  int u_h = em.new_dart_after(x_u, la, fwd);
  int u_v = em.new_dart_after(y_u, la, bwd);
  int v_t = em.new_dart_after(x_v, la, bwd);
  int v_u = em.new_dart_after(y_v, la, fwd);

  em.retire_dart(d_push);
  em.retire_dart(m_push);
  em.pair_darts(nt, v_t);
  em.pair_darts(nh, u_h);
  em.pair_darts(u_v, v_u);

  // the new bigon face {u_v, y_v} has no old darts; it belongs with the far
  // side of the crossed edge
  return finish(a, em, {}, {{u_v, m_cross}});
}

// ---------------------------------------------------------------------------
// death
// ---------------------------------------------------------------------------

struct death_site {
  int dA = -1, dB = -1;       // the two bigon darts, dA alpha
  int u = -1, v = -1;         // corner vertices
  int m_au = -1, m_av = -1;   // mates of the outer alpha strands
  int m_bu = -1, m_bv = -1;   // mates of the outer beta strands
};

std::optional<death_site> probe_death(const arrangement& a, int site) {
  if (site < 0 || site >= a.map.n) return std::nullopt;
  int f = a.map.face_of(site);
  if (a.map.is_boundary_face(f)) return std::nullopt;
  auto fd = a.map.face_darts(f);
  if (fd.size() != 2) return std::nullopt;
  death_site s;
  s.dA = fd[0];
  s.dB = fd[1];
  if (a.labels[s.dA].kind == edge_kind::beta) std::swap(s.dA, s.dB);
  if (a.labels[s.dA].kind != edge_kind::alpha) return std::nullopt;
  if (a.labels[s.dB].kind != edge_kind::beta) return std::nullopt;
  s.u = a.map.vertex_of(s.dA);
  s.v = a.map.vertex_of(s.dB);
  if (s.u == s.v) return std::nullopt;
  if (classify_vertex(a, s.u) != vertex_type::crossing) return std::nullopt;
  if (classify_vertex(a, s.v) != vertex_type::crossing) return std::nullopt;

  int mA = a.map.opp[s.dA], mB = a.map.opp[s.dB];
  auto outer = [&](int corner, int skip1, int skip2, edge_kind k) {
    for (int d : a.map.vertex_darts(corner))
      if (d != skip1 && d != skip2 && a.labels[d].kind == k) return d;
    return -1;
  };
  int a_u = outer(s.dA, s.dA, mB, edge_kind::alpha);
  int b_u = outer(s.dA, s.dA, mB, edge_kind::beta);
  int a_v = outer(s.dB, s.dB, mA, edge_kind::alpha);
  int b_v = outer(s.dB, s.dB, mA, edge_kind::beta);
  if (a_u < 0 || b_u < 0 || a_v < 0 || b_v < 0) return std::nullopt;
  s.m_au = a.map.opp[a_u];
  s.m_bu = a.map.opp[b_u];
  s.m_av = a.map.opp[a_v];
  s.m_bv = a.map.opp[b_v];
  // the outer strands must leave the cancelling pair before coming back
  for (int m : {s.m_au, s.m_bu, s.m_av, s.m_bv}) {
    int w = a.map.vertex_of(m);
    if (w == s.u || w == s.v) return std::nullopt;
  }
  return s;
}

arrangement death(const arrangement& a, int site) {
  auto s = probe_death(a, site);
  require(s.has_value(), errk::illegal_move_site, "not a cancellable bigon");

  edit_map em(a);
  std::vector<int> dying;
  for (int d : a.map.vertex_darts(s->dA)) dying.push_back(d);
  for (int d : a.map.vertex_darts(s->dB)) dying.push_back(d);
  repoint_hole_hints(em, a, dying);
  em.retire_vertex(em.at[s->dA]);
  em.retire_vertex(em.at[s->dB]);
  em.pair_darts(s->m_au, s->m_av);
  em.pair_darts(s->m_bu, s->m_bv);

  // the bigon's area drains into its alpha side neighbour
  int f = a.map.face_of(s->dA);
  int g = a.map.face_of(a.map.opp[s->dA]);
  return finish(a, em, {{f, g}});
}

// ---------------------------------------------------------------------------
// slides
// ---------------------------------------------------------------------------

arrangement slide_remove_aux(const arrangement& a, int d) {
  require(d >= 0 && d < a.map.n && a.is_kind(d, edge_kind::aux),
          errk::illegal_move_site, "site is not an aux edge");
  int f1 = a.map.face_of(d), f2 = a.map.face_of(a.map.opp[d]);
  require(f1 != f2, errk::illegal_move_site, "aux edge is a bridge");
  require(!a.map.is_boundary_face(f1) && !a.map.is_boundary_face(f2),
          errk::illegal_move_site, "holes keep their walls");
  edit_map em(a);
  em.retire_dart(a.map.opp[d]);
  em.retire_dart(d);
  return finish(a, em, {{f1, f2}});
}

// aux darts are only legal in the fan of a plain vertex
bool tolerates_aux(const arrangement& a, int d) {
  switch (classify_vertex(a, a.map.vertex_of(d))) {
    case vertex_type::curve_interior:
    case vertex_type::bare_z:
    case vertex_type::aux_only:
      return true;
    default:
      return false;
  }
}

arrangement slide_add_aux(const arrangement& a, int d1, int d2) {
  require(d1 >= 0 && d1 < a.map.n && d2 >= 0 && d2 < a.map.n && d1 != d2,
          errk::illegal_move_site, "need two distinct corners");
  int f = a.map.face_of(d1);
  require(f == a.map.face_of(d2), errk::illegal_move_site,
          "corners must share a face");
  require(!a.map.is_boundary_face(f), errk::illegal_move_site,
          "cannot subdivide a hole");
  require(tolerates_aux(a, d1) && tolerates_aux(a, d2),
          errk::illegal_move_site, "corners must sit at plain vertices");
  edit_map em(a);
  edge_label laux;
  int n1 = em.new_dart_after(d1, laux);
  int n2 = em.new_dart_after(d2, laux);
  em.pair_darts(n1, n2);
  return finish(a, em);
}

arrangement slide_subdivide(const arrangement& a, int d) {
  require(d >= 0 && d < a.map.n, errk::illegal_move_site, "site out of range");
  edit_map em(a);
  em.subdivide(d);
  return finish(a, em);
}

arrangement slide_smooth(const arrangement& a, int site) {
  require(site >= 0 && site < a.map.n, errk::illegal_move_site,
          "site out of range");
  auto vd = a.map.vertex_darts(site);
  require(vd.size() == 2, errk::illegal_move_site, "vertex is not 2-valent");
  require(a.labels[vd[0]] == a.labels[vd[1]], errk::illegal_move_site,
          "edges through the vertex differ");
  require(a.map.opp[vd[0]] != vd[1], errk::illegal_move_site,
          "cannot smooth a loop");
  edit_map em(a);
  repoint_hole_hints(em, a, {vd[0], vd[1]});
  em.smooth(em.at[vd[0]]);
  return finish(a, em);
}

// ---------------------------------------------------------------------------
// modular slide
// ---------------------------------------------------------------------------
//
// zd runs from a transit y of the moving curve to a transit x of the other
// curve along a degeneracy circle.  The strand through y is lifted over x:
// y disappears, a fresh transit appears on the far z edge of x, and the
// strand now crosses the other curve twice, once per adjacent piece.

struct slide_site {
  int zd, y, x;
  int bn, zw, bs;        // at y: strand north, z west, strand south
  int zx, aS, zE2, aN;   // fan of x from the welded dart
  int m_bn, m_zw, m_bs;
};

std::optional<slide_site> probe_modular_slide(const arrangement& a, int zd) {
  if (zd < 0 || zd >= a.map.n || !a.is_kind(zd, edge_kind::z))
    return std::nullopt;
  slide_site s;
  s.zd = zd;
  s.y = a.map.vertex_of(zd);
  s.x = a.map.vertex_of(a.map.opp[zd]);
  if (s.y == s.x) return std::nullopt;
  if (classify_vertex(a, s.y) != vertex_type::z_transit) return std::nullopt;
  if (classify_vertex(a, s.x) != vertex_type::z_transit) return std::nullopt;
  if (curve_kind_at(a, s.y) == curve_kind_at(a, s.x)) return std::nullopt;
  s.bn = a.map.rot[zd];
  s.zw = a.map.rot[s.bn];
  s.bs = a.map.rot[s.zw];
  s.zx = a.map.opp[zd];
  s.aS = a.map.rot[s.zx];
  s.zE2 = a.map.rot[s.aS];
  s.aN = a.map.rot[s.zE2];
  s.m_bn = a.map.opp[s.bn];
  s.m_zw = a.map.opp[s.zw];
  s.m_bs = a.map.opp[s.bs];
  // a strand doubling straight back through y has nowhere to reattach
  if (s.m_bn == s.bs || s.m_bs == s.bn) return std::nullopt;
  return s;
}

arrangement modular_slide(const arrangement& a, int zd) {
  auto s = probe_modular_slide(a, zd);
  require(s.has_value(), errk::illegal_move_site,
          "site is not a slidable transit pair");

  edit_map em(a);
  repoint_hole_hints(em, a, {s->zd, s->bn, s->zw, s->bs});

  // split the other curve on both sides of x; these become the crossings
  int p_n = em.subdivide(s->aN);
  int pn_up = em.fan[p_n][0], pn_down = em.fan[p_n][1];
  int p_s = em.subdivide(s->aS);
  int ps_cont = em.fan[p_s][0], ps_back = em.fan[p_s][1];

  em.retire_vertex(em.at[s->zd]);
  em.pair_darts(s->m_zw, s->zx);  // circle closes over the removed transit

  // fresh transit on the far z edge of x
  int y2 = em.subdivide(s->zE2);
  int y2_e = em.fan[y2][0], y2_w = em.fan[y2][1];

  edge_label lb = a.labels[s->bn];
  char down = a.along[s->m_bn];  // 1 when the strand flows north to south
  char up = static_cast<char>(1 - down);
  int b_n = em.new_dart_after(y2_e, lb, up);
  int b_s = em.new_dart_after(y2_w, lb, down);
  int b_pn_w = em.new_dart_after(pn_up, lb, up);
  int b_pn_e = em.new_dart_after(pn_down, lb, down);
  int b_ps_e = em.new_dart_after(ps_cont, lb, up);
  int b_ps_w = em.new_dart_after(ps_back, lb, down);

  em.pair_darts(s->m_bn, b_pn_w);
  em.pair_darts(b_pn_e, b_n);
  em.pair_darts(s->m_bs, b_ps_w);
  em.pair_darts(b_ps_e, b_s);

  return finish(a, em);
}

}  // namespace

// ---------------------------------------------------------------------------
// dispatch and site enumeration
// ---------------------------------------------------------------------------

std::string move_name(move_kind k) {
  switch (k) {
    case move_kind::birth: return "birth";
    case move_kind::death: return "death";
    case move_kind::slide_remove_aux: return "slide-remove-aux";
    case move_kind::slide_add_aux: return "slide-add-aux";
    case move_kind::slide_subdivide: return "slide-subdivide";
    case move_kind::slide_smooth: return "slide-smooth";
    case move_kind::modular_slide: return "modular-slide";
  }
  return "unknown";
}

arrangement apply_move(const arrangement& a, const move_spec& m) {
  switch (m.kind) {
    case move_kind::birth: return birth(a, m.site_a, m.site_b);
    case move_kind::death: return death(a, m.site_a);
    case move_kind::slide_remove_aux: return slide_remove_aux(a, m.site_a);
    case move_kind::slide_add_aux: return slide_add_aux(a, m.site_a, m.site_b);
    case move_kind::slide_subdivide: return slide_subdivide(a, m.site_a);
    case move_kind::slide_smooth: return slide_smooth(a, m.site_a);
    case move_kind::modular_slide: return modular_slide(a, m.site_a);
  }
  fail(errk::illegal_move_site, "unknown move kind");
}

std::vector<move_spec> legal_moves(const arrangement& a) {
  std::vector<move_spec> out;
  int n = a.map.n;

  for (int dp = 0; dp < n; ++dp) {
    if (!a.is_curve(dp)) continue;
    int f = a.map.face_of(dp);
    if (a.map.is_boundary_face(f)) continue;
    if (a.map.face_of(a.map.opp[dp]) == f) continue;
    for (int dc = 0; dc < n; ++dc) {
      if (!a.is_curve(dc) || a.labels[dc].kind == a.labels[dp].kind) continue;
      if (a.map.face_of(dc) != f) continue;
      if (a.map.is_boundary_face(a.map.face_of(a.map.opp[dc]))) continue;
      out.push_back({move_kind::birth, dp, dc});
    }
  }
  for (int f : a.map.faces())
    if (probe_death(a, f)) out.push_back({move_kind::death, f, -1});
  for (int d = 0; d < n; ++d) {
    if (d >= a.map.opp[d] || !a.is_kind(d, edge_kind::aux)) continue;
    int f1 = a.map.face_of(d), f2 = a.map.face_of(a.map.opp[d]);
    if (f1 == f2) continue;
    if (a.map.is_boundary_face(f1) || a.map.is_boundary_face(f2)) continue;
    out.push_back({move_kind::slide_remove_aux, d, -1});
  }
  for (int f : a.map.faces()) {
    if (a.map.is_boundary_face(f)) continue;
    std::vector<int> fd;
    for (int d : a.map.face_darts(f))
      if (tolerates_aux(a, d)) fd.push_back(d);
    for (std::size_t i = 0; i < fd.size(); ++i)
      for (std::size_t j = i + 1; j < fd.size(); ++j)
        out.push_back({move_kind::slide_add_aux, fd[i], fd[j]});
  }
  for (int d = 0; d < n; ++d)
    if (d < a.map.opp[d]) out.push_back({move_kind::slide_subdivide, d, -1});
  for (int v : a.map.vertices()) {
    auto vd = a.map.vertex_darts(v);
    if (vd.size() != 2) continue;
    if (!(a.labels[vd[0]] == a.labels[vd[1]])) continue;
    if (a.map.opp[vd[0]] == vd[1]) continue;
    out.push_back({move_kind::slide_smooth, v, -1});
  }
  for (int d = 0; d < n; ++d)
    if (probe_modular_slide(a, d)) out.push_back({move_kind::modular_slide, d, -1});

  return out;
}

std::optional<move_spec> random_move(const arrangement& a, std::mt19937& rng) {
  auto all = legal_moves(a);
  if (all.empty()) return std::nullopt;
  std::vector<move_kind> kinds;
  for (const auto& m : all)
    if (std::find(kinds.begin(), kinds.end(), m.kind) == kinds.end())
      kinds.push_back(m.kind);
  move_kind k = kinds[std::uniform_int_distribution<std::size_t>(
      0, kinds.size() - 1)(rng)];
  std::vector<move_spec> of_kind;
  for (const auto& m : all)
    if (m.kind == k) of_kind.push_back(m);
  return of_kind[std::uniform_int_distribution<std::size_t>(
      0, of_kind.size() - 1)(rng)];
}

// ---------------------------------------------------------------------------
// blow up
// ---------------------------------------------------------------------------

arrangement blow_up(const arrangement& a, int vertex) {
  require(vertex >= 0 && vertex < a.map.n, errk::not_boundary_point,
          "vertex out of range");
  require(classify_vertex(a, vertex) == vertex_type::shared_endpoint,
          errk::not_boundary_point, "vertex is not a shared endpoint");

  // fan is cyclically [z_a, z_b, c1, c2] with the hole in the z wedge
  int z_a = -1;
  for (int d : a.map.vertex_darts(vertex))
    if (a.is_kind(d, edge_kind::z) && a.is_kind(a.map.rot[d], edge_kind::z))
      z_a = d;
  require(z_a >= 0, errk::not_boundary_point, "no adjacent z wedge");
  int z_b = a.map.rot[z_a];
  int c1 = a.map.rot[z_b];
  int c2 = a.map.rot[c1];
  require(a.map.is_boundary_face(a.map.face_of(z_a)), errk::not_boundary_point,
          "endpoint wedge must face a hole");

  edit_map em(a);
  int q = em.at[z_a];
  int qa = em.new_vertex();
  int qb = em.new_vertex();
  auto move_dart = [&](int d, int v) {
    auto& old_fan = em.fan[em.at[d]];
    old_fan.erase(std::find(old_fan.begin(), old_fan.end(), d));
    em.at[d] = v;
    em.fan[v].push_back(d);
  };
  // qa keeps the west half of the circle and curve c2, qb the rest; the new
  // circle segment between them extends the hole boundary
  edge_label lz = a.labels[z_a];
  move_dart(z_a, qa);
  int z_mid_a = em.new_dart(qa, lz);
  move_dart(c2, qa);
  int z_mid_b = em.new_dart(qb, lz);
  move_dart(z_b, qb);
  move_dart(c1, qb);
  em.pair_darts(z_mid_a, z_mid_b);
  require(em.fan[q].empty(), errk::not_boundary_point, "vertex not exhausted");

  return finish(a, em);
}

arrangement blow_up_all(const arrangement& a) {
  arrangement cur = a;
  for (;;) {
    int found = -1;
    for (int v : cur.map.vertices()) {
      if (classify_vertex(cur, v) == vertex_type::shared_endpoint) {
        found = v;
        break;
      }
    }
    if (found < 0) return cur;
    cur = blow_up(cur, found);
  }
}

}  // namespace logfloer
