#include "logfloer/lunes.hpp"

#include <algorithm>
#include <optional>
#include <queue>
#include <set>

namespace logfloer {

namespace {

bool on_z(const arrangement& a, int v) {
  for (int d : a.map.vertex_darts(v))
    if (a.is_kind(d, edge_kind::z)) return true;
  return false;
}

// ---------------------------------------------------------------------------
// shared per-arrangement tables
// ---------------------------------------------------------------------------

struct lune_ctx {
  const arrangement& a;
  std::vector<int> face_rep;               // dart -> face
  std::vector<int> faces;                  // face reps
  std::map<int, std::vector<int>> fdarts;  // face -> boundary darts
  std::set<int> marked;
  std::map<int, int> fsign;    // unmarked face -> piece sign
  std::map<int, char> ztouch;  // face -> closure meets Z
  std::map<int, char> zedge;   // face -> a Z edge bounds it

  explicit lune_ctx(const arrangement& arr) : a(arr) {
    const comb_map& m = a.map;
    face_rep.assign(m.n, -1);
    for (int d = 0; d < m.n; ++d) {
      if (face_rep[d] != -1) continue;
      auto orbit = m.face_darts(d);
      int rep = *std::min_element(orbit.begin(), orbit.end());
      faces.push_back(rep);
      for (int e : orbit) face_rep[e] = rep;
      fdarts[rep] = std::move(orbit);
    }
    std::sort(faces.begin(), faces.end());
    marked.insert(m.boundary_faces.begin(), m.boundary_faces.end());
    piece_set ps = pieces(a);
    for (int f : faces) {
      char zt = 0, ze = 0;
      for (int d : fdarts[f]) {
        if (a.is_kind(d, edge_kind::z)) ze = zt = 1;
        else if (on_z(a, m.vertex_of(d))) zt = 1;
      }
      ztouch[f] = zt;
      zedge[f] = ze;
      if (!marked.count(f)) fsign[f] = sign_of_face(a, ps, f);
    }
  }

  int sign_at(int dart) const {
    auto it = fsign.find(face_rep[dart]);
    return it == fsign.end() ? 1 : it->second;  // marked faces never jump
  }
};

// ---------------------------------------------------------------------------
// arcs
// ---------------------------------------------------------------------------

struct arc {
  std::vector<int> darts;     // travel darts
  std::vector<int> z_passed;  // z vertices traversed
  std::vector<int> interior;  // vertices strictly between the ends
};

std::vector<arc> curve_arcs(const arrangement& a, edge_kind k, int x, int y,
                            const lune_options& opt) {
  std::vector<arc> out;
  int cap = opt.immersed ? std::max(1, opt.max_wraps) : 1;
  for (bool fwd : {true, false}) {
    arc cur;
    std::map<int, int> visits;
    visits[x] = 1;
    int v = x;
    while (true) {
      int d = fwd ? out_dart(a, v, k) : in_dart(a, v, k);
      if (d < 0) break;  // the curve stops here
      cur.darts.push_back(d);
      int w = a.map.vertex_of(a.map.opp[d]);
      if (w == y) {
        out.push_back(cur);
        if (!opt.immersed) break;
      } else if (on_z(a, w)) {
        if (opt.smooth_only) break;
        cur.z_passed.push_back(w);
      }
      if (++visits[w] > cap) break;
      if (w == x && !opt.immersed) break;
      cur.interior.push_back(w);
      v = w;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// corners
// ---------------------------------------------------------------------------

// launch corner at p; d_alpha leaves p along the witness, d_beta points back
// along the arriving beta arc
std::optional<int> launch_face(const lune_ctx& c, int d_alpha, int d_beta) {
  const comb_map& m = c.a.map;
  if (m.rot[d_beta] == d_alpha && c.sign_at(d_beta) > 0)
    return c.face_rep[d_beta];
  if (m.rot[d_alpha] == d_beta && c.sign_at(d_alpha) < 0)
    return c.face_rep[d_alpha];
  return std::nullopt;
}

// landing corner at q; e_alpha points back along the arriving alpha arc,
// e_beta leaves q along beta
std::optional<int> landing_face(const lune_ctx& c, int e_alpha, int e_beta) {
  const comb_map& m = c.a.map;
  if (m.rot[e_alpha] == e_beta && c.sign_at(e_alpha) > 0)
    return c.face_rep[e_alpha];
  if (m.rot[e_beta] == e_alpha && c.sign_at(e_beta) < 0)
    return c.face_rep[e_beta];
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// winding solve
// ---------------------------------------------------------------------------

std::optional<std::map<int, int>> solve_windings(
    const lune_ctx& c, const std::map<int, int>& use) {
  const comb_map& m = c.a.map;
  auto mnet = [&](int d) {
    auto u = use.find(d);
    auto v = use.find(m.opp[d]);
    return (u == use.end() ? 0 : u->second) - (v == use.end() ? 0 : v->second);
  };

  std::map<int, int> w;
  std::queue<int> bfs;
  w[c.faces.front()] = 0;
  bfs.push(c.faces.front());
  while (!bfs.empty()) {
    int f = bfs.front();
    bfs.pop();
    for (int d : c.fdarts.at(f)) {
      // stepping over d leaves its face and lands on its right side
      int g = c.face_rep[m.opp[d]];
      int expect = w.at(f) + c.sign_at(d) * mnet(d);
      auto it = w.find(g);
      if (it == w.end()) {
        w[g] = expect;
        bfs.push(g);
      } else if (it->second != expect) {
        return std::nullopt;
      }
    }
  }
  return w;
}

int sectors_covered(const lune_ctx& c, int v, const std::map<int, int>& w) {
  int n = 0;
  for (int d : c.a.map.vertex_darts(v))
    if (w.at(c.face_rep[d]) > 0) ++n;
  return n;
}

bool region_is_disc(const lune_ctx& c, const std::map<int, int>& w) {
  std::set<int> vs, es;
  int fs = 0;
  for (auto [f, wf] : w) {
    if (wf <= 0) continue;
    ++fs;
    for (int d : c.fdarts.at(f)) {
      vs.insert(c.a.map.vertex_of(d));
      es.insert(c.a.map.edge_of(d));
    }
  }
  return static_cast<int>(vs.size()) - static_cast<int>(es.size()) + fs == 1;
}

// ---------------------------------------------------------------------------
// candidate assembly
// ---------------------------------------------------------------------------

std::vector<lune> lunes_in_ctx(const lune_ctx& ctx, int p, int q,
                               const lune_options& opt) {
  const arrangement& a = ctx.a;
  std::vector<lune> found;
  auto alphas = curve_arcs(a, edge_kind::alpha, p, q, opt);
  auto betas = curve_arcs(a, edge_kind::beta, q, p, opt);
  if (!opt.immersed) {
    // embedded boundary arcs may cross Z only where both curves pinch it
    auto pinched = [&](const arc& r) {
      for (int v : r.z_passed)
        if (classify_vertex(a, v) != vertex_type::triple) return true;
      return false;
    };
    std::erase_if(alphas, pinched);
    std::erase_if(betas, pinched);
  }
  for (const arc& A : alphas) {
    for (const arc& B : betas) {
      if (!opt.immersed) {
        // boundary arcs may touch only at corners and joint Z pinches
        std::set<int> av(A.interior.begin(), A.interior.end());
        bool bad = false;
        for (int v : B.interior)
          if (av.count(v) && !on_z(a, v)) bad = true;
        if (bad) continue;
      }

      int d_alpha = A.darts.front();
      int d_beta = a.map.opp[B.darts.back()];
      int e_alpha = a.map.opp[A.darts.back()];
      int e_beta = B.darts.front();
      auto cf = launch_face(ctx, d_alpha, d_beta);
      auto cg = landing_face(ctx, e_alpha, e_beta);
      if (!cf || !cg) continue;

      std::map<int, int> use;
      for (int d : A.darts) ++use[d];
      for (int d : B.darts) ++use[d];
      auto solved = solve_windings(ctx, use);
      if (!solved) continue;
      std::map<int, int> w = *solved;

      if (!opt.immersed) {
        int shift = 1 - w.at(*cf);
        bool ok = true;
        for (auto& [f, wf] : w) {
          wf += shift;
          if (wf < 0 || wf > 1) ok = false;
        }
        if (!ok) continue;
        if (w.at(*cg) != 1) continue;
        bool excluded = false;
        for (auto& [f, wf] : w) {
          if (wf == 0) continue;
          if (ctx.marked.count(f)) excluded = true;
          if (ctx.zedge.at(f)) excluded = true;
          if (opt.smooth_only && ctx.ztouch.at(f)) excluded = true;
        }
        if (excluded) continue;
        if (sectors_covered(ctx, p, w) != 1) continue;
        if (sectors_covered(ctx, q, w) != 1) continue;
        if (!region_is_disc(ctx, w)) continue;
      } else {
        // experimental immersed acceptance: anchor at the marked faces or
        // the minimum, then ask for the (n+1, n, .., n) corner pattern
        int shift;
        if (!ctx.marked.empty()) {
          shift = -w.at(*ctx.marked.begin());
        } else {
          int mn = w.begin()->second;
          for (auto& [f, wf] : w) mn = std::min(mn, wf);
          shift = -mn;
        }
        bool ok = true;
        for (auto& [f, wf] : w) {
          wf += shift;
          if (wf < 0 || wf > opt.max_winding) ok = false;
          if (ctx.marked.count(f) && wf != 0) ok = false;
        }
        if (!ok) continue;
        auto pattern = [&](int v, int corner_face) {
          int cw = w.at(corner_face);
          for (int d : a.map.vertex_darts(v)) {
            int f = ctx.face_rep[d];
            if (f != corner_face && w.at(f) != cw - 1) return false;
          }
          return cw >= 1;
        };
        if (!pattern(p, *cf) || !pattern(q, *cg)) continue;
      }

      lune L;
      L.from = p;
      L.to = q;
      L.alpha_darts = A.darts;
      L.beta_darts = B.darts;
      L.alpha_z = A.z_passed;
      L.beta_z = B.z_passed;
      for (auto [f, wf] : w)
        if (wf > 0) L.winding[f] = wf;
      if (a.has_areas()) {
        rational area;
        for (auto [f, wf] : L.winding)
          area += a.face_areas.at(f) * rational(wf);
        L.area = area;
      }
      found.push_back(std::move(L));
    }
  }
  return found;
}

void check_corner_types(const arrangement& a, int p, int q,
                        const lune_options& opt) {
  require(p != q, errk::not_transverse, "lune corners must differ");
  vertex_type tp = classify_vertex(a, p);
  require(tp == vertex_type::crossing, errk::points_in_z,
          "launch corner must be an interior crossing");
  vertex_type tq = classify_vertex(a, q);
  if (tq == vertex_type::triple || tq == vertex_type::shared_endpoint)
    require(opt.include_z, errk::points_in_z,
            "landing corner on Z needs include_z");
  else
    require(tq == vertex_type::crossing, errk::not_transverse,
            "landing corner is not an intersection point");
}

}  // namespace

// ---------------------------------------------------------------------------
// public entry points
// ---------------------------------------------------------------------------

std::vector<lune> lunes_between(const arrangement& a, int p, int q,
                                const lune_options& opt) {
  check_corner_types(a, p, q, opt);
  lune_ctx ctx(a);
  return lunes_in_ctx(ctx, p, q, opt);
}

std::vector<lune> z_lunes_between(const arrangement& a, int p, int q,
                                  const lune_options& opt) {
  bool pz = on_z(a, p), qz = on_z(a, q);
  require(pz || qz, errk::both_interior,
          "neither corner touches the degeneracy locus");
  require(qz, errk::not_boundary_point, "landing corner must lie on Z");
  require(!pz, errk::points_in_z, "launch corner may not lie on Z");
  lune_options o = opt;
  o.include_z = true;
  return lunes_between(a, p, q, o);
}

std::vector<lune> all_lunes(const arrangement& a, const lune_options& opt) {
  std::vector<lune> out;
  lune_ctx ctx(a);
  auto pts = intersection_points(a);
  for (const ipoint& p : pts) {
    if (p.in_z) continue;
    for (const ipoint& q : pts) {
      if (q.vertex == p.vertex) continue;
      if (q.in_z && !opt.include_z) continue;
      auto ls = lunes_in_ctx(ctx, p.vertex, q.vertex, opt);
      out.insert(out.end(), ls.begin(), ls.end());
    }
  }
  return out;
}

}  // namespace logfloer
