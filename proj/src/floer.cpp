#include "logfloer/floer.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "logfloer/error.hpp"

namespace logfloer {

namespace {

// ---------------------------------------------------------------------------
// fraction-free linear algebra
// ---------------------------------------------------------------------------
//
// Columns are reduced by cross multiplication, which keeps every entry
// inside F2[T^Q] yet computes ranks and kernels over the fraction field.
// The identity is dragged along so kernel vectors come out as combinations
// of the original columns.

struct reduction {
  int rank = 0;
  std::vector<int> pivot_cols;               // inputs that became pivots
  std::vector<std::vector<novikov>> kernel;  // input column combinations
};

reduction column_reduce(std::vector<std::vector<novikov>> cols, int rows) {
  int n = static_cast<int>(cols.size());
  std::vector<std::vector<novikov>> track(
      n, std::vector<novikov>(static_cast<std::size_t>(n)));
  for (int c = 0; c < n; ++c)
    track[c][static_cast<std::size_t>(c)] = novikov::one();
  reduction out;
  std::vector<int> pivot_rows;
  for (int c = 0; c < n; ++c) {
    for (std::size_t k = 0; k < out.pivot_cols.size(); ++k) {
      int pc = out.pivot_cols[k];
      int pr = pivot_rows[k];
      if (cols[c][pr].is_zero()) continue;
      // earlier pivot columns vanish on this row afterwards, and adding
      // column pc cannot disturb rows already cleared
      novikov p = cols[pc][pr];
      novikov q = cols[c][pr];
      for (int i = 0; i < rows; ++i)
        cols[c][i] = p * cols[c][i] + q * cols[pc][i];
      for (int i = 0; i < n; ++i)
        track[c][i] = p * track[c][i] + q * track[pc][i];
    }
    int pr = -1;
    for (int i = 0; i < rows; ++i) {
      if (cols[c][i].is_zero()) continue;
      if (pr < 0 || *cols[c][i].valuation() < *cols[c][pr].valuation()) pr = i;
    }
    if (pr < 0) {
      out.kernel.push_back(track[c]);
    } else {
      out.pivot_cols.push_back(c);
      pivot_rows.push_back(pr);
    }
  }
  out.rank = static_cast<int>(out.pivot_cols.size());
  return out;
}

// dense columns of the block of d sending the listed sources into the
// listed targets
std::vector<std::vector<novikov>> block_columns(const floer_complex& c,
                                                const std::vector<int>& srcs,
                                                const std::vector<int>& dsts) {
  std::map<int, int> row;
  for (std::size_t i = 0; i < dsts.size(); ++i)
    row[dsts[i]] = static_cast<int>(i);
  std::vector<std::vector<novikov>> cols;
  for (int j : srcs) {
    std::vector<novikov> col(dsts.size());
    for (const auto& [i, e] : c.entries[j]) {
      auto it = row.find(i);
      if (it != row.end()) col[it->second] = e;
    }
    cols.push_back(std::move(col));
  }
  return cols;
}

}  // namespace

// ---------------------------------------------------------------------------
// complex construction
// ---------------------------------------------------------------------------

floer_complex build_complex(const arrangement& a, coeff_kind coeffs,
                            bool include_z, bool flip_degrees) {
  check_arrangement(a);
  verify_admissible_position(a);
  require(trace_curve(a, edge_kind::alpha).present &&
              trace_curve(a, edge_kind::beta).present,
          errk::not_transverse, "the complex needs both curves");
  if (include_z)
    require(!a.map.boundary_faces.empty(), errk::not_boundary_point,
            "lunes landing on Z ask for a surface with boundary");
  if (coeffs == coeff_kind::novikov_field)
    require(a.has_areas(), errk::missing_areas,
            "Novikov weights need face areas");

  floer_complex c;
  c.coeffs = coeffs;
  c.with_z = include_z;
  c.basis = intersection_points(a, flip_degrees);
  std::map<int, int> index;
  for (std::size_t i = 0; i < c.basis.size(); ++i)
    index[c.basis[i].vertex] = static_cast<int>(i);

  lune_options opt;
  opt.include_z = include_z;
  auto ls = all_lunes(a, opt);
  for (lune& l : ls) {
    int j = index.at(l.from);
    int i = index.at(l.to);
    c.lunes[{j, i}].push_back(std::move(l));
  }
  c.entries.assign(c.basis.size(), {});
  for (const auto& [ji, ws] : c.lunes) {
    novikov e;
    for (const lune& l : ws)
      e += novikov::monomial(coeffs == coeff_kind::f2 ? rational(0) : l.area);
    if (!e.is_zero()) c.entries[ji.first][ji.second] = e;
  }
  return c;
}

cohomology_result cohomology(const floer_complex& c) {
  int n = static_cast<int>(c.basis.size());
  for (int j = 0; j < n; ++j)
    for (const auto& [i, e] : c.entries[j]) {
      (void)e;
      require(c.basis[i].degree != c.basis[j].degree,
              errk::differential_not_square_zero,
              "the differential does not shift the grading");
    }
  for (int j = 0; j < n; ++j) {
    std::vector<novikov> acc(static_cast<std::size_t>(n));
    for (const auto& [i, e] : c.entries[j])
      for (const auto& [k, f] : c.entries[i]) acc[k] += f * e;
    for (int k = 0; k < n; ++k)
      require(acc[k].is_zero(), errk::differential_not_square_zero,
              "the differential does not square to zero");
  }

  std::vector<int> d0, d1;
  for (int i = 0; i < n; ++i)
    (c.basis[i].degree % 2 == 0 ? d0 : d1).push_back(i);

  auto m10 = block_columns(c, d0, d1);  // degree 0 into degree 1
  auto m01 = block_columns(c, d1, d0);
  auto r10 = column_reduce(m10, static_cast<int>(d1.size()));
  auto r01 = column_reduce(m01, static_cast<int>(d0.size()));

  cohomology_result out;
  out.rank0 = static_cast<int>(d0.size()) - r10.rank - r01.rank;
  out.rank1 = static_cast<int>(d1.size()) - r01.rank - r10.rank;

  // kernel vectors that stay independent of the image represent classes
  auto reps = [&](const std::vector<std::vector<novikov>>& image,
                  const std::vector<std::vector<novikov>>& kernel,
                  const std::vector<int>& gens) {
    std::vector<std::vector<novikov>> stack = image;
    stack.insert(stack.end(), kernel.begin(), kernel.end());
    auto red = column_reduce(std::move(stack), static_cast<int>(gens.size()));
    std::vector<std::vector<std::pair<int, novikov>>> picked;
    int nim = static_cast<int>(image.size());
    for (int pc : red.pivot_cols) {
      if (pc < nim) continue;
      const auto& vec = kernel[static_cast<std::size_t>(pc - nim)];
      std::vector<std::pair<int, novikov>> support;
      for (std::size_t i = 0; i < vec.size(); ++i)
        if (!vec[i].is_zero()) support.push_back({gens[i], vec[i]});
      picked.push_back(std::move(support));
    }
    return picked;
  };
  out.reps0 = reps(m01, r10.kernel, d0);
  out.reps1 = reps(m10, r01.kernel, d1);
  return out;
}

// ---------------------------------------------------------------------------
// counting ops
// ---------------------------------------------------------------------------

lune_census count_lunes(const arrangement& a, int p, int q) {
  lune_census out;
  out.witnesses = lunes_between(a, p, q);
  lune_options sm;
  sm.smooth_only = true;
  out.smooth = static_cast<int>(lunes_between(a, p, q, sm).size());
  out.total = static_cast<int>(out.witnesses.size());
  out.crossing = out.total - out.smooth;
  return out;
}

resolved_census count_lunes_by_resolution(const arrangement& a, int p, int q) {
  require(classify_vertex(a, p) == vertex_type::crossing &&
              classify_vertex(a, q) == vertex_type::crossing,
          errk::points_in_z,
          "resolution counting runs between interior crossings");
  resolved_census out;
  out.resolution = surgery(a);
  const arrangement& r = out.resolution.arr;
  int rp = out.resolution.point_map.at(p);
  int rq = out.resolution.point_map.at(q);
  auto ls = lunes_between(r, rp, rq);
  for (lune& l : ls) {
    std::set<int> tags;
    auto scan = [&](const std::vector<int>& darts) {
      for (int d : darts) {
        auto it = r.seam_tags.find(r.map.edge_of(d));
        if (it != r.seam_tags.end()) tags.insert(it->second);
      }
    };
    scan(l.alpha_darts);
    scan(l.beta_darts);
    crossing_witness w;
    w.crossings.assign(tags.begin(), tags.end());
    require(w.crossings.size() <= 1, errk::multi_crossing_found,
            "a resolved witness runs through several erased triples");
    if (w.crossings.empty())
      ++out.smooth;
    else
      ++out.crossing;
    w.resolved = std::move(l);
    out.witnesses.push_back(std::move(w));
  }
  out.total = static_cast<int>(out.witnesses.size());
  return out;
}

// ---------------------------------------------------------------------------
// self Floer cohomology
// ---------------------------------------------------------------------------

self_floer_result self_floer(const arrangement& a, coeff_kind coeffs) {
  self_floer_result out;
  out.pushed = admissible_pushoff_self(a);
  // the symmetric pushoff gives every piece the same area unless told otherwise
  if (coeffs == coeff_kind::novikov_field && !out.pushed.arr.has_areas())
    assign_unit_areas(out.pushed.arr);
  out.complex = build_complex(out.pushed.arr, coeffs);
  out.coh = cohomology(out.complex);

  std::map<int, std::string> names;
  std::map<int, int> zindex;
  for (std::size_t j = 0; j < out.pushed.crossings.size(); ++j)
    names[out.pushed.crossings[j]] = "p" + std::to_string(j);
  for (std::size_t j = 0; j < out.pushed.z_points.size(); ++j) {
    names[out.pushed.z_points[j]] = "z" + std::to_string(j);
    zindex[out.pushed.z_points[j]] = static_cast<int>(j);
  }
  for (const ipoint& b : out.complex.basis) {
    auto it = names.find(b.vertex);
    out.point_names.push_back(it != names.end()
                                  ? it->second
                                  : "v" + std::to_string(b.vertex));
  }

  for (std::size_t i = 0; i < out.coh.reps0.size(); ++i)
    out.class_names0.push_back(i == 0 ? "[1]" : "e" + std::to_string(i));
  int zetas = 0;
  for (const auto& rep : out.coh.reps1) {
    bool single_z =
        rep.size() == 1 && out.complex.basis[rep[0].first].in_z;
    if (single_z) {
      int v = out.complex.basis[rep[0].first].vertex;
      out.class_names1.push_back("lambda" + std::to_string(zindex.at(v)));
    } else {
      out.class_names1.push_back(
          zetas == 0 ? "zeta" : "zeta" + std::to_string(zetas + 1));
      ++zetas;
    }
  }
  return out;
}

std::pair<int, int> log_derham_ranks(int k, bool closed) {
  if (closed) {
    require(k >= 1, errk::no_z_crossings,
            "a closed curve needs points on Z");
    return {1, k + 1};
  }
  return {1, 2};
}

// ---------------------------------------------------------------------------
// checks
// ---------------------------------------------------------------------------

invariance_report invariance_check(const arrangement& a, coeff_kind coeffs,
                                   int n_moves, unsigned seed) {
  invariance_report out;
  {
    auto coh = cohomology(build_complex(a, coeffs));
    out.rank0 = coh.rank0;
    out.rank1 = coh.rank1;
  }
  std::mt19937 rng(seed);
  arrangement cur = a;
  for (int step = 0; step < n_moves; ++step) {
    auto cands = legal_moves(cur);
    // hand-rolled shuffle so the trace does not depend on the library
    for (std::size_t i = cands.size(); i > 1; --i)
      std::swap(cands[i - 1], cands[rng() % i]);
    bool advanced = false;
    for (const move_spec& m : cands) {
      arrangement next;
      cohomology_result coh;
      try {
        next = apply_move(cur, m);
        coh = cohomology(build_complex(next, coeffs));
      } catch (const log_floer_error&) {
        continue;  // candidate leaves admissible position, skip it
      }
      invariance_step rec;
      rec.move = m;
      rec.rank0 = coh.rank0;
      rec.rank1 = coh.rank1;
      rec.ok = coh.rank0 == out.rank0 && coh.rank1 == out.rank1;
      out.ok = out.ok && rec.ok;
      out.steps.push_back(rec);
      cur = std::move(next);
      advanced = true;
      break;
    }
    if (!advanced) break;
  }
  return out;
}

decomposition_report surgery_decomposition_check(const arrangement& a) {
  decomposition_report out;
  auto note = [&](std::string s) {
    out.ok = false;
    out.notes.push_back(std::move(s));
  };

  floer_complex c0 = build_complex(a, coeff_kind::f2);
  surgery_result s = surgery(a);
  floer_complex c1 = build_complex(s.arr, coeff_kind::f2);

  // Z generators never source or absorb an entry
  std::vector<int> interior;
  for (std::size_t j = 0; j < c0.basis.size(); ++j) {
    if (c0.basis[j].in_z) {
      if (!c0.entries[j].empty()) note("a Z generator sources an entry");
      for (std::size_t k = 0; k < c0.entries.size(); ++k)
        if (c0.entries[k].count(static_cast<int>(j)))
          note("a Z generator absorbs an entry");
    } else {
      interior.push_back(static_cast<int>(j));
    }
  }

  std::map<int, int> r_index;
  for (std::size_t i = 0; i < c1.basis.size(); ++i) {
    if (c1.basis[i].in_z)
      note("the resolved complex still has Z generators");
    r_index[c1.basis[i].vertex] = static_cast<int>(i);
  }
  if (c1.basis.size() != interior.size())
    note("resolved basis size differs from the interior point count");

  std::map<int, int> to_res;
  for (int j : interior) {
    int v = c0.basis[j].vertex;
    auto pm = s.point_map.find(v);
    if (pm == s.point_map.end()) {
      note("interior point " + std::to_string(v) + " lost by surgery");
      continue;
    }
    auto it = r_index.find(pm->second);
    if (it == r_index.end()) {
      note("image of point " + std::to_string(v) +
           " missing from the resolved basis");
      continue;
    }
    if (c1.basis[it->second].degree != c0.basis[j].degree)
      note("degree of point " + std::to_string(v) +
           " changed across the resolution");
    to_res[j] = it->second;
  }

  for (int j : interior) {
    auto tj = to_res.find(j);
    if (tj == to_res.end()) continue;
    for (int i : interior) {
      auto ti = to_res.find(i);
      if (ti == to_res.end()) continue;
      novikov e0, e1;
      if (auto it = c0.entries[j].find(i); it != c0.entries[j].end())
        e0 = it->second;
      if (auto it = c1.entries[tj->second].find(ti->second);
          it != c1.entries[tj->second].end())
        e1 = it->second;
      if (e0 != e1)
        note("entry mismatch " + std::to_string(c0.basis[j].vertex) +
             " -> " + std::to_string(c0.basis[i].vertex));
    }
  }
  return out;
}

}  // namespace logfloer
