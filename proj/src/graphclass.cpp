#include "logfloer/graphclass.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "logfloer/error.hpp"

namespace logfloer {

// ---------------------------------------------------------------------------
// validation
// ---------------------------------------------------------------------------

void log_graph::validate() const {
  int nv = static_cast<int>(vertices.size());
  require(nv >= 1, errk::signs_inconsistent, "graph needs a vertex");
  for (const auto& v : vertices) {
    require(v.sign == 1 || v.sign == -1, errk::signs_inconsistent,
            "vertex sign must be +1 or -1");
    require(v.genus >= 0, errk::signs_inconsistent, "negative genus");
  }
  for (const auto& e : edges) {
    require(e.u >= 0 && e.u < nv && e.v >= 0 && e.v < nv,
            errk::signs_inconsistent, "edge endpoint out of range");
    require(vertices[e.u].sign * vertices[e.v].sign == -1,
            errk::signs_inconsistent,
            "each circle must separate a positive from a negative piece");
    require(e.tau.is_positive(), errk::signs_inconsistent,
            "modular period must be positive");
  }

  std::vector<int> root(nv);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](int x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (const auto& e : edges) root[find(e.u)] = find(e.v);
  int comps = 0;
  for (int i = 0; i < nv; ++i)
    if (find(i) == i) ++comps;
  require(comps == 1, errk::disconnected, "graph is disconnected");
}

int log_graph::total_genus() const {
  int sum = 0;
  for (const auto& v : vertices) sum += v.genus;
  return sum + static_cast<int>(edges.size()) -
         static_cast<int>(vertices.size()) + 1;
}

// ---------------------------------------------------------------------------
// canonical form
// ---------------------------------------------------------------------------

namespace {

// color refinement: stable partition of vertices by decorated neighborhoods
std::vector<int> refine_colors(const log_graph& g) {
  int nv = static_cast<int>(g.vertices.size());
  std::vector<std::vector<std::pair<int, rational>>> inc(nv);
  for (const auto& e : g.edges) {
    inc[e.u].push_back({e.v, e.tau});
    inc[e.v].push_back({e.u, e.tau});
  }

  std::vector<std::string> key(nv);
  for (int i = 0; i < nv; ++i) {
    std::vector<std::string> taus;
    for (const auto& [j, t] : inc[i]) taus.push_back(t.str());
    std::sort(taus.begin(), taus.end());
    key[i] = "s" + std::to_string(g.vertices[i].sign) + "g" +
             std::to_string(g.vertices[i].genus) + "d" +
             std::to_string(inc[i].size()) + "t";
    for (const auto& t : taus) key[i] += t + ",";
  }

  std::vector<int> color(nv, 0);
  auto compress = [&]() {
    std::vector<std::string> uniq(key.begin(), key.end());
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    std::vector<int> next(nv);
    for (int i = 0; i < nv; ++i)
      next[i] = static_cast<int>(
          std::lower_bound(uniq.begin(), uniq.end(), key[i]) - uniq.begin());
    bool changed = next != color;
    color = next;
    return changed;
  };
  compress();

  for (int round = 0; round < nv; ++round) {
    for (int i = 0; i < nv; ++i) {
      std::vector<std::string> nbr;
      for (const auto& [j, t] : inc[i])
        nbr.push_back(std::to_string(color[j]) + ":" + t.str());
      std::sort(nbr.begin(), nbr.end());
      key[i] = std::to_string(color[i]) + "|";
      for (const auto& s : nbr) key[i] += s + ";";
    }
    if (!compress()) break;
  }
  return color;
}

std::string serialize(const log_graph& g, const std::vector<int>& pos) {
  std::string out = "V";
  int nv = static_cast<int>(g.vertices.size());
  std::vector<int> at(nv);  // vertex at each position
  for (int i = 0; i < nv; ++i) at[pos[i]] = i;
  for (int p = 0; p < nv; ++p) {
    const auto& v = g.vertices[at[p]];
    out += (v.sign > 0 ? "+" : "-") + std::to_string(v.genus) + ";";
  }
  std::vector<std::string> es;
  for (const auto& e : g.edges) {
    int a = pos[e.u], b = pos[e.v];
    if (a > b) std::swap(a, b);
    es.push_back(std::to_string(a) + "-" + std::to_string(b) + ":" +
                 e.tau.str());
  }
  std::sort(es.begin(), es.end());
  out += "E";
  for (const auto& s : es) out += s + ";";
  return out;
}

}  // namespace

std::string canonical_code(const log_graph& g) {
  int nv = static_cast<int>(g.vertices.size());
  std::vector<int> color = refine_colors(g);

  // vertices grouped by color, positions assigned class by class
  std::vector<std::vector<int>> classes;
  {
    int top = *std::max_element(color.begin(), color.end());
    classes.resize(top + 1);
    for (int i = 0; i < nv; ++i) classes[color[i]].push_back(i);
  }

  std::vector<int> pos(nv, -1);
  std::string best;
  bool have = false;

  // try every within-class ordering, keep the least serialization
  auto rec = [&](auto&& self, std::size_t c, int base) -> void {
    if (c == classes.size()) {
      std::string s = serialize(g, pos);
      if (!have || s < best) {
        best = std::move(s);
        have = true;
      }
      return;
    }
    auto& cls = classes[c];
    std::sort(cls.begin(), cls.end());
    do {
      for (std::size_t k = 0; k < cls.size(); ++k)
        pos[cls[k]] = base + static_cast<int>(k);
      self(self, c + 1, base + static_cast<int>(cls.size()));
    } while (std::next_permutation(cls.begin(), cls.end()));
  };
  rec(rec, 0, 0);

  return best + "vol" + g.volume.str();
}

bool isomorphic(const log_graph& a, const log_graph& b) {
  return canonical_code(a) == canonical_code(b);
}

// ---------------------------------------------------------------------------
// enumeration of shapes
// ---------------------------------------------------------------------------

namespace {

bool covers_and_connects(const std::vector<int>& mult, int p, int m) {
  int nv = p + m;
  std::vector<int> root(nv);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](int x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  std::vector<char> used(nv, 0);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < m; ++j)
      if (mult[i * m + j] > 0) {
        used[i] = used[p + j] = 1;
        root[find(i)] = find(p + j);
      }
  for (int v = 0; v < nv; ++v)
    if (!used[v]) return false;
  int comps = 0;
  for (int v = 0; v < nv; ++v)
    if (find(v) == v) ++comps;
  return comps == 1;
}

template <class Fn>
void compositions(int total, int cells, std::vector<int>& cur, Fn&& fn) {
  if (cells == 1) {
    cur.push_back(total);
    fn(cur);
    cur.pop_back();
    return;
  }
  for (int take = 0; take <= total; ++take) {
    cur.push_back(take);
    compositions(total - take, cells - 1, cur, fn);
    cur.pop_back();
  }
}

}  // namespace

std::vector<log_graph> enumerate_shapes(int total_genus, int max_edges) {
  std::vector<log_graph> out;
  std::set<std::string> seen;
  auto emit = [&](const log_graph& g) {
    std::string code = canonical_code(g);
    if (seen.insert(code).second) out.push_back(g);
  };

  // single piece, no circles
  if (max_edges >= 0) {
    for (int sign : {1, -1}) {
      log_graph g;
      g.vertices.push_back({sign, total_genus});
      emit(g);
    }
  }

  for (int e = 1; e <= max_edges; ++e) {
    for (int p = 1; p <= e; ++p) {
      for (int m = 1; p + m <= e + 1; ++m) {
        int rank = e - (p + m) + 1;
        if (rank < 0 || rank > total_genus) continue;
        int gsum = total_genus - rank;
        std::vector<int> mult;
        compositions(e, p * m, mult, [&](const std::vector<int>& c) {
          if (!covers_and_connects(c, p, m)) return;
          std::vector<int> gs;
          compositions(gsum, p + m, gs, [&](const std::vector<int>& gv) {
            log_graph g;
            for (int i = 0; i < p; ++i) g.vertices.push_back({1, gv[i]});
            for (int j = 0; j < m; ++j) g.vertices.push_back({-1, gv[p + j]});
            for (int i = 0; i < p; ++i)
              for (int j = 0; j < m; ++j)
                for (int k = 0; k < c[i * m + j]; ++k)
                  g.edges.push_back({i, p + j, rational(1)});
            emit(g);
          });
        });
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Graphviz
// ---------------------------------------------------------------------------

std::string graph_dot(const log_graph& g) {
  std::string out = "graph log_surface {\n";
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    const auto& v = g.vertices[i];
    out += "  v" + std::to_string(i) + " [label=\"" +
           (v.sign > 0 ? "+" : "-") + " g=" + std::to_string(v.genus) +
           "\"];\n";
  }
  for (const auto& e : g.edges) {
    out += "  v" + std::to_string(e.u) + " -- v" + std::to_string(e.v) +
           " [label=\"" + e.tau.str() + "\"];\n";
  }
  out += "  label=\"volume " + g.volume.str() + "\";\n}\n";
  return out;
}

}  // namespace logfloer
