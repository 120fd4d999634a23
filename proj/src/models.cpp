#include "logfloer/models.hpp"

#include <vector>

#include "logfloer/editmap.hpp"

namespace logfloer {

namespace {

const edge_label kA{edge_kind::alpha, -1};
const edge_label kB{edge_kind::beta, -1};
const edge_label kX{edge_kind::aux, -1};

edge_label zlab(int circle) { return {edge_kind::z, circle}; }

}  // namespace

// ---------------------------------------------------------------------------
// wiggle
// ---------------------------------------------------------------------------
//
// The circle is drawn as a horizontal line with transits t_0 .. t_{k-1};
// chords t_0 t_1, t_2 t_3, ... run above it and the rest below, so the curve
// snakes across.  Fan at every transit, CCW: east z, chord up, west z,
// chord down.

arrangement wiggle_model(int k) {
  require(k >= 0 && k % 2 == 0, errk::not_transverse,
          "transit count must be even and nonnegative");
  edit_map em;

  if (k == 0) {
    // closed curve inside the positive piece, tied to the circle by a strut
    int z0 = em.new_vertex(), z1 = em.new_vertex();
    int a0 = em.new_vertex(), a1 = em.new_vertex();
    int zf = em.new_dart(z0, zlab(0));
    int zb0 = em.new_dart(z0, zlab(0));
    int strut = em.new_dart(z0, kX);
    int zf1 = em.new_dart(z1, zlab(0));
    int zb1 = em.new_dart(z1, zlab(0));
    em.pair_darts(zf, zb1);
    em.pair_darts(zf1, zb0);
    int strut_a = em.new_dart(a0, kX);
    int left = em.new_dart(a0, kA);
    int right = em.new_dart(a0, kA, 1);
    int right1 = em.new_dart(a1, kA);
    int left1 = em.new_dart(a1, kA, 1);
    em.pair_darts(strut, strut_a);
    em.pair_darts(right, right1);
    em.pair_darts(left1, left);
    auto c = em.compile();
    arrangement a = std::move(c.arr);
    assign_sign_by_dart(a, c.dart_map[strut], 1);  // strut sits in the south
    assign_sign_by_dart(a, c.dart_map[zf], -1);    // north of the east dart
    a.modular_periods[0] = rational(1);
    check_arrangement(a);
    return a;
  }

  std::vector<int> zf(k), na(k), zb(k), sa(k);
  for (int i = 0; i < k; ++i) {
    int t = em.new_vertex();
    zf[i] = em.new_dart(t, zlab(0));
    na[i] = em.new_dart(t, kA);
    zb[i] = em.new_dart(t, zlab(0));
    sa[i] = em.new_dart(t, kA);
  }
  for (int i = 0; i < k; ++i) em.pair_darts(zf[i], zb[(i + 1) % k]);
  for (int i = 0; i < k; i += 2) {
    em.pair_darts(na[i], na[i + 1]);
    em.along[na[i]] = 1;  // travel t_i -> t_{i+1} above the line
  }
  for (int i = 1; i < k; i += 2) {
    em.pair_darts(sa[i], sa[(i + 1) % k]);
    em.along[sa[i]] = 1;
  }

  auto c = em.compile();
  arrangement a = std::move(c.arr);
  int east = c.dart_map[zf[0]];
  assign_sign_by_dart(a, east, -1);             // north side
  assign_sign_by_dart(a, a.map.opp[east], 1);   // south side
  a.modular_periods[0] = rational(1);
  check_arrangement(a);
  return a;
}

// ---------------------------------------------------------------------------
// necklace
// ---------------------------------------------------------------------------
//
// Circles are drawn concentric, innermost first; the curve runs out along
// the positive x axis (f_i), through infinity, and back in along the
// negative x axis (b_i).  Circles are traversed counterclockwise.

arrangement necklace_model(int m) {
  require(m >= 1, errk::disconnected, "necklace needs at least one circle");
  edit_map em;

  struct port {
    int a_out, a_in, zf, zb;
  };
  std::vector<port> f(m), b(m);

  for (int i = 0; i < m; ++i) {
    int v = em.new_vertex();  // east crossing of circle i
    f[i].a_out = em.new_dart(v, kA, 1);
    f[i].zf = em.new_dart(v, zlab(i));
    f[i].a_in = em.new_dart(v, kA);
    f[i].zb = em.new_dart(v, zlab(i));
  }
  for (int i = 0; i < m; ++i) {
    int v = em.new_vertex();  // west crossing of circle i
    b[i].a_out = em.new_dart(v, kA, 1);
    b[i].zb = em.new_dart(v, zlab(i));
    b[i].a_in = em.new_dart(v, kA);
    b[i].zf = em.new_dart(v, zlab(i));
  }

  for (int i = 0; i < m; ++i) {
    em.pair_darts(f[i].zf, b[i].zb);  // north arc, eastbound start
    em.pair_darts(b[i].zf, f[i].zb);  // south arc
  }
  em.pair_darts(b[0].a_out, f[0].a_in);  // across the center
  for (int i = 0; i + 1 < m; ++i) {
    em.pair_darts(f[i].a_out, f[i + 1].a_in);
    em.pair_darts(b[i + 1].a_out, b[i].a_in);
  }
  em.pair_darts(f[m - 1].a_out, b[m - 1].a_in);  // through infinity

  auto c = em.compile();
  arrangement a = std::move(c.arr);
  for (int i = 0; i < m; ++i) {
    int s = (i % 2 == 0) ? -1 : 1;  // cap inside the innermost circle is -1
    assign_sign_by_dart(a, c.dart_map[f[i].a_in], s);
    a.modular_periods[i] = rational(1);
  }
  assign_sign_by_dart(a, c.dart_map[f[m - 1].a_out], (m % 2 == 0) ? -1 : 1);
  check_arrangement(a);
  return a;
}

// ---------------------------------------------------------------------------
// disc models
// ---------------------------------------------------------------------------

arrangement interval_model() {
  edit_map em;
  int u = em.new_vertex(), v = em.new_vertex();
  // u is the west point of the circle, v the east; the chord runs eastward
  int cu = em.new_dart(u, kA, 1);
  int tu = em.new_dart(u, zlab(0));
  int bu = em.new_dart(u, zlab(0));
  int tv = em.new_dart(v, zlab(0));
  int cv = em.new_dart(v, kA);
  int bv = em.new_dart(v, zlab(0));
  em.pair_darts(tu, tv);
  em.pair_darts(bu, bv);
  em.pair_darts(cu, cv);
  em.hole_hints.push_back(tu);  // outside of the circle

  auto c = em.compile();
  arrangement a = std::move(c.arr);
  assign_sign_by_dart(a, c.dart_map[cu], 1);
  a.modular_periods[0] = rational(1);
  check_arrangement(a);
  return a;
}

arrangement shared_endpoint_model(bool crossed) {
  edit_map em;
  int q = em.new_vertex();   // top of the circle
  int p8 = em.new_vertex();  // lower left boundary point
  int p4 = em.new_vertex();  // lower right boundary point

  // circle q -> p8 -> p4 -> q, counterclockwise
  int zw = em.new_dart(q, zlab(0));  // toward p4
  int zc = em.new_dart(q, zlab(0));  // toward p8
  int aq = -1, bq = -1;
  if (crossed) {
    aq = em.new_dart(q, kA, 1);
    bq = em.new_dart(q, kB, 1);
  } else {
    bq = em.new_dart(q, kB, 1);
    aq = em.new_dart(q, kA, 1);
  }
  int b8 = em.new_dart(p8, kB);
  int zb8 = em.new_dart(p8, zlab(0));
  int zc8 = em.new_dart(p8, zlab(0));
  int zc4 = em.new_dart(p4, zlab(0));
  int a4 = em.new_dart(p4, kA);
  int zb4 = em.new_dart(p4, zlab(0));
  em.pair_darts(zc, zb8);
  em.pair_darts(zc8, zb4);
  em.pair_darts(zc4, zw);
  em.hole_hints.push_back(zw);

  if (!crossed) {
    em.pair_darts(aq, a4);
    em.pair_darts(bq, b8);
  } else {
    int p = em.new_vertex();
    int b_in = em.new_dart(p, kB);
    int a_in = em.new_dart(p, kA);
    int b_out = em.new_dart(p, kB, 1);
    int a_out = em.new_dart(p, kA, 1);
    em.pair_darts(aq, a_in);
    em.pair_darts(bq, b_in);
    em.pair_darts(a_out, a4);
    em.pair_darts(b_out, b8);
  }

  auto c = em.compile();
  arrangement a = std::move(c.arr);
  assign_sign_by_dart(a, c.dart_map[zc], 1);
  a.modular_periods[0] = rational(1);
  check_arrangement(a);
  return a;
}

arrangement bigon_model() {
  edit_map em;
  int p = em.new_vertex(), q = em.new_vertex();
  int pao = em.new_dart(p, kA, 1);
  int pbo = em.new_dart(p, kB, 1);
  int pai = em.new_dart(p, kA);
  int pbi = em.new_dart(p, kB);
  int qao = em.new_dart(q, kA, 1);
  int qbi = em.new_dart(q, kB);
  int qai = em.new_dart(q, kA);
  int qbo = em.new_dart(q, kB, 1);
  em.pair_darts(pao, qai);  // front arc of the first curve
  em.pair_darts(qao, pai);  // back arc
  em.pair_darts(pbo, qbi);  // top arc of the second curve
  em.pair_darts(qbo, pbi);  // bottom arc

  auto c = em.compile();
  arrangement a = std::move(c.arr);
  assign_sign_by_dart(a, 0, 1);
  check_arrangement(a);
  return a;
}

// ---------------------------------------------------------------------------
// surfaces from decorated graphs
// ---------------------------------------------------------------------------
//
// Each circle gets two 2-valent points u (east side in its own chart) and w;
// the positive hub hooks into the face left of the u -> w south arc, the
// negative hub into the face left of the north arc.  Hubs carry g
// interleaved loop pairs a b a' b' and one spoke per incident circle.

arrangement model_surface(const log_graph& g) {
  g.validate();
  edit_map em;

  struct circ {
    int zAu, zBu, zAw, zBw;  // north / south arcs seen from u and w
    int spoke_u = -1, spoke_w = -1;
  };
  std::vector<circ> cs(g.edges.size());
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    int u = em.new_vertex(), w = em.new_vertex();
    cs[k].zAu = em.new_dart(u, zlab(static_cast<int>(k)));
    cs[k].zBu = em.new_dart(u, zlab(static_cast<int>(k)));
    cs[k].spoke_u = em.new_dart(u, kX);
    cs[k].zAw = em.new_dart(w, zlab(static_cast<int>(k)));
    cs[k].zBw = em.new_dart(w, zlab(static_cast<int>(k)));
    cs[k].spoke_w = em.new_dart(w, kX);
    em.pair_darts(cs[k].zAu, cs[k].zAw);
    em.pair_darts(cs[k].zBw, cs[k].zBu);
  }

  std::vector<int> hub_dart(g.vertices.size(), -1);  // a dart in the piece
  for (std::size_t j = 0; j < g.vertices.size(); ++j) {
    int h = em.new_vertex();
    for (int t = 0; t < g.vertices[j].genus; ++t) {
      int a1 = em.new_dart(h, kX);
      int b1 = em.new_dart(h, kX);
      int a2 = em.new_dart(h, kX);
      int b2 = em.new_dart(h, kX);
      em.pair_darts(a1, a2);
      em.pair_darts(b1, b2);
      if (hub_dart[j] < 0) hub_dart[j] = a1;
    }
    for (std::size_t k = 0; k < g.edges.size(); ++k) {
      const auto& e = g.edges[k];
      int pe = g.vertices[e.u].sign > 0 ? e.u : e.v;  // positive end
      int me = e.u + e.v - pe;
      if (static_cast<int>(j) != pe && static_cast<int>(j) != me) continue;
      int sp = em.new_dart(h, kX);
      em.pair_darts(sp, static_cast<int>(j) == pe ? cs[k].spoke_u
                                                  : cs[k].spoke_w);
      if (hub_dart[j] < 0) hub_dart[j] = sp;
    }
    if (hub_dart[j] < 0) {
      // bare sphere piece: keep the vertex alive with one trivial loop
      int a1 = em.new_dart(h, kX);
      int a2 = em.new_dart(h, kX);
      em.pair_darts(a1, a2);
      hub_dart[j] = a1;
    }
  }

  auto c = em.compile();
  arrangement a = std::move(c.arr);
  for (std::size_t j = 0; j < g.vertices.size(); ++j)
    assign_sign_by_dart(a, c.dart_map[hub_dart[j]], g.vertices[j].sign);
  for (std::size_t k = 0; k < g.edges.size(); ++k)
    a.modular_periods[static_cast<int>(k)] = g.edges[k].tau;
  a.volume = g.volume;
  check_arrangement(a);
  return a;
}

}  // namespace logfloer
