#include "logfloer/arrangement.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace logfloer {

namespace {

// per dart cell representatives, computed once per call site
struct cell_tab {
  std::vector<int> face;
  std::vector<int> vert;
  std::vector<int> faces;
  std::vector<int> verts;
};

cell_tab cells(const comb_map& m) {
  cell_tab t;
  t.face.assign(m.n, -1);
  t.vert.assign(m.n, -1);
  for (int d = 0; d < m.n; ++d) {
    if (t.vert[d] == -1) {
      auto orb = m.vertex_darts(d);
      int rep = *std::min_element(orb.begin(), orb.end());
      for (int e : orb) t.vert[e] = rep;
      t.verts.push_back(rep);
    }
    if (t.face[d] == -1) {
      auto orb = m.face_darts(d);
      int rep = *std::min_element(orb.begin(), orb.end());
      for (int e : orb) t.face[e] = rep;
      t.faces.push_back(rep);
    }
  }
  std::sort(t.verts.begin(), t.verts.end());
  std::sort(t.faces.begin(), t.faces.end());
  return t;
}

struct dsu {
  std::vector<int> root;
  explicit dsu(int n) : root(n) { std::iota(root.begin(), root.end(), 0); }
  int find(int x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  }
  void join(int a, int b) { root[find(a)] = find(b); }
};

const char* kind_word(edge_kind k) {
  switch (k) {
    case edge_kind::alpha: return "alpha";
    case edge_kind::beta: return "beta";
    case edge_kind::z: return "z";
    case edge_kind::aux: return "aux";
  }
  return "?";
}

}  // namespace

// ---------------------------------------------------------------------------
// vertex patterns
// ---------------------------------------------------------------------------

vertex_type classify_vertex(const arrangement& a, int v) {
  auto darts = a.map.vertex_darts(v);
  int na = 0, nb = 0, nz = 0, nx = 0;
  for (int d : darts) {
    switch (a.labels[d].kind) {
      case edge_kind::alpha: ++na; break;
      case edge_kind::beta: ++nb; break;
      case edge_kind::z: ++nz; break;
      case edge_kind::aux: ++nx; break;
    }
  }
  int m = static_cast<int>(darts.size());
  auto kind = [&](int i) { return a.labels[darts[((i % m) + m) % m]].kind; };

  if (nx > 0) {
    bool plain = (na == 2 && nb == 0 && nz == 0) ||
                 (na == 0 && nb == 2 && nz == 0) ||
                 (na == 0 && nb == 0 && nz == 2) ||
                 (na == 0 && nb == 0 && nz == 0);
    if (!plain) return vertex_type::invalid;
    if (na == 2) return vertex_type::curve_interior;
    if (nb == 2) return vertex_type::curve_interior;
    if (nz == 2) return vertex_type::bare_z;
    return vertex_type::aux_only;
  }

  if (na == 2 && nb == 0 && nz == 0) return vertex_type::curve_interior;
  if (na == 0 && nb == 2 && nz == 0) return vertex_type::curve_interior;
  if (na == 0 && nb == 0 && nz == 2) return vertex_type::bare_z;

  if (na == 2 && nb == 2 && nz == 0) {
    for (int i = 0; i < 4; ++i)
      if (kind(i) == kind(i + 1)) return vertex_type::invalid;
    return vertex_type::crossing;
  }

  if ((na == 2 && nb == 0 && nz == 2) || (na == 0 && nb == 2 && nz == 2)) {
    for (int i = 0; i < 4; ++i)
      if ((kind(i) == edge_kind::z) == (kind(i + 1) == edge_kind::z))
        return vertex_type::invalid;
    return vertex_type::z_transit;
  }

  if (na == 2 && nb == 2 && nz == 2) {
    for (int i = 0; i < 3; ++i)
      if (kind(i) != kind(i + 3)) return vertex_type::invalid;
    return vertex_type::triple;
  }

  if ((na == 1 && nb == 0 && nz == 2) || (na == 0 && nb == 1 && nz == 2))
    return vertex_type::endpoint;

  if (na == 1 && nb == 1 && nz == 2) {
    // the two z darts must be rotation neighbours
    for (int i = 0; i < 4; ++i)
      if (kind(i) == edge_kind::z && kind(i + 1) == edge_kind::z)
        return vertex_type::shared_endpoint;
    return vertex_type::invalid;
  }

  return vertex_type::invalid;
}

// ---------------------------------------------------------------------------
// validation
// ---------------------------------------------------------------------------

std::string validation_report::text() const {
  std::string out;
  for (const auto& [k, msg] : problems) {
    out += std::string(errk_name(k)) + ": " + msg + "\n";
  }
  return out;
}

validation_report validate_arrangement(const arrangement& a) {
  validation_report rep;
  const comb_map& m = a.map;

  try {
    m.validate(true);
  } catch (const log_floer_error& e) {
    rep.add(e.kind(), e.what());
    return rep;
  }

  if (static_cast<int>(a.labels.size()) != m.n ||
      static_cast<int>(a.along.size()) != m.n) {
    rep.add(errk::not_transverse, "label or orientation table size mismatch");
    return rep;
  }

  for (int d = 0; d < m.n; ++d) {
    if (!(a.labels[d] == a.labels[m.opp[d]]))
      rep.add(errk::not_transverse,
              "edge of dart " + std::to_string(d) + " has mismatched labels");
    if (a.is_kind(d, edge_kind::z)) {
      if (a.labels[d].circle < 0)
        rep.add(errk::not_transverse,
                "z dart " + std::to_string(d) + " lacks a circle index");
    } else if (a.labels[d].circle != -1) {
      rep.add(errk::not_transverse,
              "non z dart " + std::to_string(d) + " carries a circle index");
    }
    if (a.is_curve(d)) {
      if (a.along[d] + a.along[m.opp[d]] != 1)
        rep.add(errk::not_transverse,
                "curve edge of dart " + std::to_string(d) +
                    " needs exactly one forward dart");
    } else if (a.along[d]) {
      rep.add(errk::not_transverse,
              "non curve dart " + std::to_string(d) + " marked forward");
    }
  }
  if (!rep.ok) return rep;

  cell_tab t = cells(m);

  // vertex patterns
  for (int v : t.verts) {
    if (classify_vertex(a, v) == vertex_type::invalid)
      rep.add(errk::not_transverse,
              "vertex " + std::to_string(v) + " has an illegal local pattern");
  }
  if (!rep.ok) return rep;

  // each curve is one embedded circle or interval, coherently oriented
  for (edge_kind k : {edge_kind::alpha, edge_kind::beta}) {
    dsu u(m.n);
    std::vector<int> ds;
    for (int d = 0; d < m.n; ++d)
      if (a.is_kind(d, k)) ds.push_back(d);
    if (ds.empty()) continue;
    for (int d : ds) u.join(d, m.opp[d]);
    for (int v : t.verts) {
      std::vector<int> here;
      for (int d : m.vertex_darts(v))
        if (a.is_kind(d, k)) here.push_back(d);
      if (here.size() == 2) {
        u.join(here[0], here[1]);
        if (a.along[here[0]] + a.along[here[1]] != 1)
          rep.add(errk::not_transverse,
                  std::string(kind_word(k)) + " orientation breaks at vertex " +
                      std::to_string(v));
      }
    }
    std::set<int> comps;
    for (int d : ds) comps.insert(u.find(d));
    if (comps.size() > 1)
      rep.add(errk::not_transverse,
              std::string(kind_word(k)) + " splits into " +
                  std::to_string(comps.size()) + " components");
  }

  // z circles: constant circle index per circle, distinct between circles
  {
    dsu u(m.n);
    std::vector<int> zs;
    for (int d = 0; d < m.n; ++d)
      if (a.is_kind(d, edge_kind::z)) zs.push_back(d);
    for (int d : zs) u.join(d, m.opp[d]);
    for (int v : t.verts) {
      std::vector<int> here;
      for (int d : m.vertex_darts(v))
        if (a.is_kind(d, edge_kind::z)) here.push_back(d);
      if (here.size() == 2) u.join(here[0], here[1]);
    }
    std::map<int, std::set<int>> ids;  // circle component -> indices seen
    for (int d : zs) ids[u.find(d)].insert(a.labels[d].circle);
    std::set<int> used;
    for (const auto& [c, s] : ids) {
      if (s.size() != 1)
        rep.add(errk::not_transverse,
                "a z circle carries several circle indices");
      else if (!used.insert(*s.begin()).second)
        rep.add(errk::not_transverse,
                "circle index " + std::to_string(*s.begin()) + " reused");
    }
  }

  // marked faces are holes bounded by z edges
  for (int f : m.boundary_faces) {
    for (int d : m.face_darts(f))
      if (!a.is_kind(d, edge_kind::z))
        rep.add(errk::not_transverse,
                "hole " + std::to_string(f) + " bounded by a non z edge");
  }
  for (int d = 0; d < m.n; ++d) {
    if (!a.is_kind(d, edge_kind::z) || d > m.opp[d]) continue;
    if (m.is_boundary_face(t.face[d]) && m.is_boundary_face(t.face[m.opp[d]]))
      rep.add(errk::not_transverse,
              "z edge " + std::to_string(d) + " has holes on both sides");
  }
  if (!rep.ok) return rep;

  // piece signs
  piece_set p = pieces(a);
  {
    std::vector<int> keyed;
    for (const auto& [rep_face, s] : a.component_signs) {
      keyed.push_back(rep_face);
      if (s != 1 && s != -1)
        rep.add(errk::signs_inconsistent,
                "piece " + std::to_string(rep_face) + " has sign " +
                    std::to_string(s));
    }
    if (keyed != p.reps)
      rep.add(errk::signs_inconsistent,
              "signs must be keyed by exactly the piece representatives");
  }
  if (!rep.ok) return rep;

  for (int d = 0; d < m.n; ++d) {
    if (!a.is_kind(d, edge_kind::z) || d > m.opp[d]) continue;
    int lf = t.face[d], rf = t.face[m.opp[d]];
    if (m.is_boundary_face(lf) || m.is_boundary_face(rf)) continue;
    if (sign_of_face(a, p, lf) != -sign_of_face(a, p, rf))
      rep.add(errk::signs_inconsistent,
              "z edge " + std::to_string(d) +
                  " needs opposite signs on its two sides");
  }

  // optional decorations
  if (!a.face_areas.empty()) {
    std::set<int> want;
    for (int f : t.faces)
      if (!m.is_boundary_face(f)) want.insert(f);
    std::set<int> got;
    for (const auto& [f, ar] : a.face_areas) {
      got.insert(f);
      if (!ar.is_positive())
        rep.add(errk::missing_areas,
                "face " + std::to_string(f) + " has a non positive area");
    }
    if (want != got)
      rep.add(errk::missing_areas,
              "areas must cover exactly the unmarked faces");
  }
  if (!a.modular_periods.empty()) {
    std::set<int> want;
    for (int d = 0; d < m.n; ++d)
      if (a.is_kind(d, edge_kind::z)) want.insert(a.labels[d].circle);
    std::set<int> got;
    for (const auto& [c, tau] : a.modular_periods) {
      got.insert(c);
      if (!tau.is_positive())
        rep.add(errk::signs_inconsistent,
                "circle " + std::to_string(c) + " has a non positive period");
    }
    if (want != got)
      rep.add(errk::signs_inconsistent,
              "periods must cover exactly the circles");
  }
  for (const auto& [e, tag] : a.seam_tags) {
    if (e < 0 || e >= m.n || m.edge_of(e) != e || !a.is_curve(e))
      rep.add(errk::not_transverse,
              "seam tag on " + std::to_string(e) + " which is not a curve edge");
    if (tag < 0)
      rep.add(errk::not_transverse, "negative seam tag");
  }

  return rep;
}

void check_arrangement(const arrangement& a) {
  validation_report rep = validate_arrangement(a);
  if (!rep.ok) fail(rep.problems.front().first, rep.problems.front().second);
}

// ---------------------------------------------------------------------------
// pieces
// ---------------------------------------------------------------------------

piece_set pieces(const arrangement& a) {
  const comb_map& m = a.map;
  cell_tab t = cells(m);
  dsu u(m.n == 0 ? 1 : m.n);
  for (int d = 0; d < m.n; ++d)
    if (!a.is_kind(d, edge_kind::z)) u.join(t.face[d], t.face[m.opp[d]]);

  // rep = least member face
  std::map<int, int> least;
  for (int f : t.faces) {
    if (m.is_boundary_face(f)) continue;
    int r = u.find(f);
    auto it = least.find(r);
    if (it == least.end() || f < it->second) least[r] = f;
  }
  piece_set out;
  for (int f : t.faces) {
    if (m.is_boundary_face(f)) continue;
    out.of_face[f] = least[u.find(f)];
  }
  for (const auto& [r, f] : least) out.reps.push_back(f);
  std::sort(out.reps.begin(), out.reps.end());
  return out;
}

int sign_of_face(const arrangement& a, const piece_set& p, int face) {
  auto it = p.of_face.find(face);
  require(it != p.of_face.end(), errk::signs_inconsistent,
          "face " + std::to_string(face) + " belongs to no piece");
  auto st = a.component_signs.find(it->second);
  require(st != a.component_signs.end(), errk::signs_inconsistent,
          "piece " + std::to_string(it->second) + " has no sign");
  return st->second;
}

void assign_sign_by_dart(arrangement& a, int dart, int sign) {
  piece_set p = pieces(a);
  int f = a.map.face_of(dart);
  auto it = p.of_face.find(f);
  require(it != p.of_face.end(), errk::signs_inconsistent,
          "dart " + std::to_string(dart) + " faces a hole");
  a.component_signs[it->second] = sign;
}

void assign_unit_areas(arrangement& a) {
  a.face_areas.clear();
  for (int f : a.map.faces())
    if (!a.map.is_boundary_face(f)) a.face_areas[f] = rational(1);
}

// ---------------------------------------------------------------------------
// circles and curves
// ---------------------------------------------------------------------------

std::vector<int> z_circle_ids(const arrangement& a) {
  std::set<int> ids;
  for (int d = 0; d < a.map.n; ++d)
    if (a.is_kind(d, edge_kind::z)) ids.insert(a.labels[d].circle);
  return {ids.begin(), ids.end()};
}

std::vector<int> circle_darts(const arrangement& a, int circle) {
  std::vector<int> out;
  for (int d = 0; d < a.map.n; ++d)
    if (a.is_kind(d, edge_kind::z) && a.labels[d].circle == circle)
      out.push_back(d);
  return out;
}

bool modular_forward(const arrangement& a, const piece_set& p, int zdart) {
  const comb_map& m = a.map;
  int rf = m.face_of(m.opp[zdart]);
  if (!m.is_boundary_face(rf)) return sign_of_face(a, p, rf) > 0;
  int lf = m.face_of(zdart);
  return sign_of_face(a, p, lf) < 0;
}

int out_dart(const arrangement& a, int vertex, edge_kind kind) {
  for (int d : a.map.vertex_darts(vertex))
    if (a.is_kind(d, kind) && a.along[d]) return d;
  return -1;
}

int in_dart(const arrangement& a, int vertex, edge_kind kind) {
  for (int d : a.map.vertex_darts(vertex))
    if (a.is_kind(d, kind) && !a.along[d]) return d;
  return -1;
}

curve_info trace_curve(const arrangement& a, edge_kind kind) {
  const comb_map& m = a.map;
  curve_info info;
  std::vector<int> forward;
  for (int d = 0; d < m.n; ++d)
    if (a.is_kind(d, kind) && a.along[d]) forward.push_back(d);
  if (forward.empty()) return info;
  info.present = true;

  // an interval starts where the curve goes out but never comes in
  int start = forward.front();
  for (int d : forward) {
    int v = m.vertex_of(d);
    if (in_dart(a, v, kind) == -1) {
      start = d;
      info.closed = false;
    }
  }

  int d = start;
  while (true) {
    info.order.push_back(d);
    int v = m.vertex_of(m.opp[d]);
    int nxt = out_dart(a, v, kind);
    if (nxt == -1) {
      info.closed = false;
      break;
    }
    if (nxt == start) break;
    d = nxt;
  }
  return info;
}

// ---------------------------------------------------------------------------
// admissibility
// ---------------------------------------------------------------------------

void verify_admissible_position(const arrangement& a) {
  const comb_map& m = a.map;
  cell_tab t = cells(m);
  piece_set p = pieces(a);

  // pieces owning at least one interior crossing
  std::set<int> crossed;
  std::vector<int> triples;
  std::vector<int> shared;
  for (int v : t.verts) {
    switch (classify_vertex(a, v)) {
      case vertex_type::crossing:
        crossed.insert(p.of_face.at(t.face[v]));
        break;
      case vertex_type::triple: triples.push_back(v); break;
      case vertex_type::shared_endpoint: shared.push_back(v); break;
      default: break;
    }
  }

  for (int v : triples) {
    int ao = out_dart(a, v, edge_kind::alpha);
    int ai = in_dart(a, v, edge_kind::alpha);
    int bo = out_dart(a, v, edge_kind::beta);
    int bi = in_dart(a, v, edge_kind::beta);
    require(m.rot[ao] == bo && m.rot[ai] == bi, errk::not_admissible_position,
            "triple point " + std::to_string(v) +
                ": beta must follow alpha into the same wedge on both sides");
    std::set<int> nearby;
    for (int d : m.vertex_darts(v)) {
      auto it = p.of_face.find(t.face[d]);
      if (it != p.of_face.end()) nearby.insert(it->second);
    }
    for (int piece : nearby)
      require(crossed.count(piece), errk::not_admissible_position,
              "triple point " + std::to_string(v) +
                  " touches a piece without an interior crossing");
  }

  for (int v : shared) {
    int ad = -1, bd = -1;
    for (int d : m.vertex_darts(v)) {
      if (a.is_kind(d, edge_kind::alpha)) ad = d;
      if (a.is_kind(d, edge_kind::beta)) bd = d;
    }
    require(m.rot[ad] == bd, errk::not_admissible_position,
            "shared endpoint " + std::to_string(v) +
                ": beta must follow alpha inside the wedge");
  }
}

// ---------------------------------------------------------------------------
// intersection points
// ---------------------------------------------------------------------------

std::vector<ipoint> intersection_points(const arrangement& a,
                                        bool flip_degrees) {
  const comb_map& m = a.map;
  cell_tab t = cells(m);
  piece_set p = pieces(a);
  std::vector<ipoint> out;
  for (int v : t.verts) {
    vertex_type vt = classify_vertex(a, v);
    if (vt == vertex_type::crossing) {
      int ao = out_dart(a, v, edge_kind::alpha);
      int bo = out_dart(a, v, edge_kind::beta);
      int s = sign_of_face(a, p, t.face[ao]);
      bool zero = (s > 0) ? (m.rot[bo] == ao) : (m.rot_inv(bo) == ao);
      if (flip_degrees) zero = !zero;
      out.push_back({v, false, zero ? 0 : 1});
    } else if (vt == vertex_type::triple || vt == vertex_type::shared_endpoint) {
      out.push_back({v, true, 1});
    }
  }
  return out;
}

void swap_roles(arrangement& a) {
  for (auto& l : a.labels) {
    if (l.kind == edge_kind::alpha)
      l.kind = edge_kind::beta;
    else if (l.kind == edge_kind::beta)
      l.kind = edge_kind::alpha;
  }
}

// ---------------------------------------------------------------------------
// classification bridge
// ---------------------------------------------------------------------------

log_graph degeneracy_graph(const arrangement& a) {
  const comb_map& m = a.map;
  cell_tab t = cells(m);
  piece_set p = pieces(a);

  std::map<int, int> index;  // piece rep -> vertex index
  log_graph g;
  for (int r : p.reps) {
    index[r] = static_cast<int>(g.vertices.size());
    g.vertices.push_back({a.component_signs.at(r), 0});
  }

  // genus per piece: vertices and edges interior to it, faces inside it,
  // capped with one disc per adjacent circle
  std::map<int, int> vcnt, ecnt, fcnt;
  std::map<int, std::set<int>> holes;
  for (int f : t.faces) {
    auto it = p.of_face.find(f);
    if (it != p.of_face.end()) ++fcnt[it->second];
  }
  for (int d = 0; d < m.n; ++d) {
    if (d > m.opp[d]) continue;
    if (a.is_kind(d, edge_kind::z)) {
      int c = a.labels[d].circle;
      for (int e : {d, m.opp[d]}) {
        auto it = p.of_face.find(t.face[e]);
        if (it != p.of_face.end()) holes[it->second].insert(c);
      }
    } else {
      ecnt[p.of_face.at(t.face[d])]++;
    }
  }
  for (int v : t.verts) {
    bool on_z = false;
    for (int d : m.vertex_darts(v))
      if (a.is_kind(d, edge_kind::z)) on_z = true;
    if (!on_z) vcnt[p.of_face.at(t.face[v])]++;
  }
  for (int r : p.reps) {
    int chi = vcnt[r] - ecnt[r] + fcnt[r];
    int capped = chi + static_cast<int>(holes[r].size());
    g.vertices[index[r]].genus = capped_genus(capped);
  }

  // one graph edge per circle with pieces on both sides
  for (int c : z_circle_ids(a)) {
    int d0 = circle_darts(a, c).front();
    int lf = t.face[d0], rf = t.face[m.opp[d0]];
    if (m.is_boundary_face(lf) || m.is_boundary_face(rf)) continue;
    int u = index.at(p.of_face.at(lf));
    int v = index.at(p.of_face.at(rf));
    rational tau(1);
    auto it = a.modular_periods.find(c);
    if (it != a.modular_periods.end()) tau = it->second;
    g.edges.push_back({u, v, tau});
  }

  if (a.volume) {
    g.volume = *a.volume;
  } else if (a.has_areas()) {
    rational vol(0);
    for (const auto& [f, ar] : a.face_areas)
      vol += rational(sign_of_face(a, p, f)) * ar;
    g.volume = vol;
  }

  g.validate();
  return g;
}

}  // namespace logfloer
