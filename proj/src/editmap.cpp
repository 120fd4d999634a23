#include "logfloer/editmap.hpp"

#include <algorithm>

namespace logfloer {

edit_map::edit_map(const arrangement& a) {
  const comb_map& m = a.map;
  mate = m.opp;
  at.assign(m.n, -1);
  label = a.labels;
  along = a.along;
  for (int d = 0; d < m.n; ++d) {
    if (at[d] != -1) continue;
    int v = static_cast<int>(fan.size());
    fan.push_back(m.vertex_darts(d));
    for (int e : fan.back()) at[e] = v;
  }
  for (int f : m.boundary_faces) hole_hints.push_back(f);
}

int edit_map::new_vertex() {
  fan.emplace_back();
  return static_cast<int>(fan.size()) - 1;
}

int edit_map::new_dart(int v, edge_label l, char forward) {
  int d = static_cast<int>(mate.size());
  mate.push_back(-1);
  at.push_back(v);
  label.push_back(l);
  along.push_back(forward);
  fan[v].push_back(d);
  return d;
}

int edit_map::new_dart_after(int after, edge_label l, char forward) {
  int v = at[after];
  require(v >= 0, errk::illegal_move_site, "inserting after a retired dart");
  int d = static_cast<int>(mate.size());
  mate.push_back(-1);
  at.push_back(v);
  label.push_back(l);
  along.push_back(forward);
  auto& f = fan[v];
  auto it = std::find(f.begin(), f.end(), after);
  f.insert(it + 1, d);
  return d;
}

void edit_map::pair_darts(int d, int e) {
  require(d != e && mate[d] == -1 && mate[e] == -1, errk::not_involution,
          "bad pairing of darts " + std::to_string(d) + ", " +
              std::to_string(e));
  mate[d] = e;
  mate[e] = d;
}

std::pair<int, int> edit_map::add_edge(int u, int v, edge_label l,
                                       char forward) {
  int d = new_dart(u, l, forward);
  int e = new_dart(v, l, 0);
  pair_darts(d, e);
  return {d, e};
}

void edit_map::retire_dart(int d) {
  int v = at[d];
  if (v >= 0) {
    auto& f = fan[v];
    f.erase(std::remove(f.begin(), f.end(), d), f.end());
  }
  at[d] = -1;
  int m = mate[d];
  if (m != -1) {
    mate[m] = -1;
    mate[d] = -1;
  }
}

void edit_map::retire_vertex(int v) {
  auto ds = fan[v];
  for (int d : ds) retire_dart(d);
  fan[v].clear();
}

int edit_map::subdivide(int d) {
  require(at[d] >= 0 && mate[d] != -1, errk::illegal_move_site,
          "subdividing a retired edge");
  int e = mate[d];
  int w = new_vertex();
  int x = new_dart(w, label[d], along[d]);
  int y = new_dart(w, label[d], along[e]);
  mate[d] = mate[e] = -1;
  pair_darts(d, y);
  pair_darts(x, e);
  return w;
}

void edit_map::smooth(int v) {
  require(fan[v].size() == 2, errk::illegal_move_site,
          "smoothing a vertex of valence " + std::to_string(fan[v].size()));
  int x = fan[v][0], y = fan[v][1];
  require(label[x] == label[y], errk::illegal_move_site,
          "smoothing across distinct edge labels");
  require(mate[x] != y, errk::illegal_move_site, "smoothing a closed loop");
  int d = mate[y], e = mate[x];
  retire_dart(x);
  retire_dart(y);
  fan[v].clear();
  pair_darts(d, e);
}

edit_map::compiled edit_map::compile() const {
  int total = static_cast<int>(mate.size());
  std::vector<int> dart_map(total, -1);
  int n = 0;
  for (int d = 0; d < total; ++d)
    if (at[d] != -1) dart_map[d] = n++;

  arrangement a;
  a.map.n = n;
  a.map.rot.assign(n, -1);
  a.map.opp.assign(n, -1);
  a.labels.resize(n);
  a.along.assign(n, 0);

  for (int d = 0; d < total; ++d) {
    if (dart_map[d] == -1) continue;
    require(mate[d] != -1 && dart_map[mate[d]] != -1, errk::not_involution,
            "dart " + std::to_string(d) + " left unpaired");
    a.map.opp[dart_map[d]] = dart_map[mate[d]];
    a.labels[dart_map[d]] = label[d];
    a.along[dart_map[d]] = along[d];
  }
  for (const auto& f : fan) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      int d = f[i], e = f[(i + 1) % f.size()];
      a.map.rot[dart_map[d]] = dart_map[e];
    }
  }

  std::vector<int> holes;
  for (int h : hole_hints) {
    require(h >= 0 && h < total && dart_map[h] != -1, errk::illegal_move_site,
            "hole hint on a retired dart");
    holes.push_back(a.map.face_of(dart_map[h]));
  }
  std::sort(holes.begin(), holes.end());
  holes.erase(std::unique(holes.begin(), holes.end()), holes.end());
  a.map.boundary_faces = holes;

  return {std::move(a), std::move(dart_map)};
}

void derive_component_signs(const arrangement& before, arrangement& after,
                            const std::vector<int>& dart_map) {
  piece_set pb = pieces(before);
  piece_set pa = pieces(after);
  after.component_signs.clear();
  for (int od = 0; od < before.map.n; ++od) {
    int nd = dart_map[od];
    if (nd < 0) continue;
    int of = before.map.face_of(od);
    if (before.map.is_boundary_face(of)) continue;
    int nf = after.map.face_of(nd);
    if (after.map.is_boundary_face(nf)) continue;
    int r = pa.of_face.at(nf);
    int s = sign_of_face(before, pb, of);
    auto [it, fresh] = after.component_signs.insert({r, s});
    require(it->second == s, errk::signs_inconsistent,
            "piece signs disagree while carrying them over");
    (void)fresh;
  }
  for (int r : pa.reps)
    require(after.component_signs.count(r), errk::signs_inconsistent,
            "piece " + std::to_string(r) + " received no sign");
}

void redistribute_areas(const arrangement& before, arrangement& after,
                        const std::vector<int>& dart_map,
                        const std::vector<std::pair<int, int>>& old_face_glue,
                        const std::vector<std::pair<int, int>>& new_face_glue) {
  after.face_areas.clear();
  if (!before.has_areas()) return;

  // union-find over old faces (as-is) and new faces (shifted by n_old)
  int shift = before.map.n;
  std::vector<int> up(shift + after.map.n);
  for (std::size_t i = 0; i < up.size(); ++i) up[i] = static_cast<int>(i);
  auto find = [&](int x) {
    while (up[x] != x) x = up[x] = up[up[x]];
    return x;
  };
  auto unite = [&](int x, int y) { up[find(x)] = find(y); };

  for (auto [f, g] : old_face_glue) unite(f, g);
  for (auto [d, e] : new_face_glue)
    unite(shift + after.map.face_of(d), shift + after.map.face_of(e));
  for (int od = 0; od < before.map.n; ++od) {
    int nd = dart_map[od];
    if (nd < 0) continue;
    int of = before.map.face_of(od);
    if (before.map.is_boundary_face(of)) continue;
    int nf = after.map.face_of(nd);
    if (after.map.is_boundary_face(nf)) continue;
    unite(of, shift + nf);
  }

  std::map<int, rational> total;  // cluster root -> old area sum
  std::map<int, int> parts;       // cluster root -> new face count
  for (int f : before.map.faces()) {
    if (before.map.is_boundary_face(f)) continue;
    total[find(f)] += before.face_areas.at(f);
  }
  for (int g : after.map.faces()) {
    if (after.map.is_boundary_face(g)) continue;
    ++parts[find(shift + g)];
  }
  for (int g : after.map.faces()) {
    if (after.map.is_boundary_face(g)) continue;
    int r = find(shift + g);
    auto it = total.find(r);
    require(it != total.end() && it->second.is_positive(), errk::missing_areas,
            "face " + std::to_string(g) + " received no area");
    after.face_areas[g] = it->second / rational(parts.at(r));
  }
}

void remap_seam_tags(const arrangement& before, arrangement& after,
                     const std::vector<int>& dart_map) {
  after.seam_tags.clear();
  for (auto [edge, tag] : before.seam_tags) {
    for (int od : {edge, before.map.opp[edge]}) {
      int nd = dart_map[od];
      if (nd < 0) continue;
      after.seam_tags[after.map.edge_of(nd)] = tag;
    }
  }
}

}  // namespace logfloer
