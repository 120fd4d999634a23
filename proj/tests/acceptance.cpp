// Acceptance run.  Prints one PASS / FAIL line per criterion and exits
// nonzero when anything fails.  All arithmetic is exact rational; there are
// no floating point tolerances anywhere in the suite.

#include <chrono>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "logfloer/arrangement.hpp"
#include "logfloer/error.hpp"
#include "logfloer/floer.hpp"
#include "logfloer/fuzz.hpp"
#include "logfloer/graphclass.hpp"
#include "logfloer/lunes.hpp"
#include "logfloer/models.hpp"
#include "logfloer/moves.hpp"
#include "logfloer/pushoff.hpp"
#include "logfloer/surgery.hpp"

using namespace logfloer;

namespace {

int failures = 0;

void report(int k, bool ok, const std::string& detail) {
  if (ok) {
    std::cout << "CRITERION " << k << ": PASS" << std::endl;
  } else {
    ++failures;
    std::cout << "CRITERION " << k << ": FAIL"
              << (detail.empty() ? "" : " (" + detail + ")") << std::endl;
  }
}

template <typename Body>
void criterion(int k, Body&& body) {
  auto t0 = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = e.what();
  }
  report(k, ok, detail);
  auto t1 = std::chrono::steady_clock::now();
  std::cerr << "  criterion " << k << ": "
            << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0)
                   .count()
            << " ms" << std::endl;
}

// degree-0 minus degree-1 count of the basis
int euler_count(const floer_complex& c) {
  int chi = 0;
  for (const auto& pt : c.basis) chi += pt.degree == 0 ? 1 : -1;
  return chi;
}

// explicit check that the composite of the differential with itself is zero
bool square_is_zero(const floer_complex& c) {
  int n = static_cast<int>(c.basis.size());
  for (int j = 0; j < n; ++j) {
    std::map<int, novikov> acc;
    for (const auto& [i, vij] : c.entries[j])
      for (const auto& [k, vki] : c.entries[i])
        acc[k] = acc[k] + vki * vij;
    for (const auto& [k, val] : acc) {
      (void)k;
      if (!val.is_zero()) return false;
    }
  }
  return true;
}

// distinct former triple points whose seams the witness boundary crosses
int seams_crossed(const arrangement& resolved, const lune& l) {
  std::set<int> tags;
  for (const auto& arcs : {l.alpha_darts, l.beta_darts})
    for (int d : arcs) {
      auto it = resolved.seam_tags.find(resolved.map.edge_of(d));
      if (it != resolved.seam_tags.end()) tags.insert(it->second);
    }
  return static_cast<int>(tags.size());
}

// seeded sample of legal moves, up to cap, one of each kind first
std::vector<move_spec> sample_moves(const arrangement& a, std::size_t cap,
                                    unsigned seed) {
  std::vector<move_spec> cands = legal_moves(a);
  std::mt19937 rng(seed);
  for (std::size_t i = cands.size(); i > 1; --i)
    std::swap(cands[i - 1], cands[rng() % i]);
  std::vector<move_spec> out;
  std::set<move_kind> seen;
  for (const auto& m : cands)
    if (seen.insert(m.kind).second) out.push_back(m);
  for (const auto& m : cands) {
    if (out.size() >= cap) break;
    out.push_back(m);
  }
  if (out.size() > cap) out.resize(cap);
  return out;
}

std::vector<fuzz_instance> corpus;
std::vector<floer_complex> corpus_f2;

}  // namespace

int main() {
  auto t0 = std::chrono::steady_clock::now();
  std::string corpus_error;
  try {
    corpus = fuzz_corpus();
    for (const auto& inst : corpus)
      corpus_f2.push_back(build_complex(inst.arr, coeff_kind::f2));
  } catch (const std::exception& e) {
    corpus_error = e.what();
  }
  auto t1 = std::chrono::steady_clock::now();
  std::cerr << "corpus: " << corpus.size() << " instances, "
            << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0)
                   .count()
            << " ms" << std::endl;

  // 1: self cohomology of a circle through k points of Z has ranks
  //    (1, k + 1) over both coefficient systems, exactly
  criterion(1, [&](std::string& detail) {
    for (int k : {2, 4, 6})
      for (coeff_kind c : {coeff_kind::f2, coeff_kind::novikov_field}) {
        self_floer_result r = self_floer(wiggle_model(k), c);
        auto want = log_derham_ranks(k, true);
        if (r.coh.rank0 != want.first || r.coh.rank1 != want.second) {
          std::ostringstream os;
          os << "k=" << k << " got (" << r.coh.rank0 << "," << r.coh.rank1
             << ") want (" << want.first << "," << want.second << ")";
          detail = os.str();
          return false;
        }
      }
    return true;
  });

  // 2: self cohomology of an interval has ranks (1, 2)
  criterion(2, [&](std::string& detail) {
    for (coeff_kind c : {coeff_kind::f2, coeff_kind::novikov_field}) {
      self_floer_result r = self_floer(interval_model(), c);
      auto want = log_derham_ranks(1, false);
      if (r.coh.rank0 != want.first || r.coh.rank1 != want.second) {
        std::ostringstream os;
        os << "got (" << r.coh.rank0 << "," << r.coh.rank1 << ")";
        detail = os.str();
        return false;
      }
    }
    return true;
  });

  // 3: the shared endpoint pair: dropping z lunes leaves total rank 2,
  //    counting them kills everything, and the corrected theory gives
  //    different complexes for the two curve orders whose ranks survive
  //    twenty seeded move sequences
  criterion(3, [&](std::string& detail) {
    arrangement crossed = shared_endpoint_model(true);
    auto naive = cohomology(build_complex(crossed, coeff_kind::f2));
    if (naive.rank0 + naive.rank1 != 2) {
      detail = "naive total is not 2";
      return false;
    }
    auto with_z = cohomology(build_complex(crossed, coeff_kind::f2, true));
    if (with_z.rank0 + with_z.rank1 != 0) {
      detail = "z-lune total is not 0";
      return false;
    }

    floer_complex ab = build_complex(crossed, coeff_kind::f2);
    arrangement swapped = shared_endpoint_model(false);
    swap_roles(swapped);
    floer_complex ba = build_complex(swapped, coeff_kind::f2);
    if (ab.basis.size() == ba.basis.size()) {
      detail = "the two orders give complexes of the same size";
      return false;
    }
    auto rab = cohomology(ab);
    auto rba = cohomology(ba);
    if (rab.rank0 != 1 || rab.rank1 != 1 || rba.rank0 != 0 ||
        rba.rank1 != 1) {
      detail = "fixed ranks off";
      return false;
    }

    for (unsigned seed = 1; seed <= 20; ++seed) {
      invariance_report fwd = invariance_check(crossed, coeff_kind::f2, 2, seed);
      invariance_report rev = invariance_check(swapped, coeff_kind::f2, 2, seed);
      bool ok = fwd.ok && rev.ok;
      for (const auto& s : fwd.steps)
        ok = ok && s.rank0 == rab.rank0 && s.rank1 == rab.rank1;
      for (const auto& s : rev.steps)
        ok = ok && s.rank0 == rba.rank0 && s.rank1 == rba.rank1;
      if (!ok) {
        detail = "ranks moved under seed " + std::to_string(seed);
        return false;
      }
    }
    return true;
  });

  // 4: the differential squares to zero on every corpus instance over both
  //    coefficient systems
  criterion(4, [&](std::string& detail) {
    if (!corpus_error.empty() || corpus.size() < 100) {
      detail = corpus_error.empty() ? "corpus too small" : corpus_error;
      return false;
    }
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      if (!square_is_zero(corpus_f2[i])) {
        detail = "f2: " + corpus[i].recipe;
        return false;
      }
      floer_complex nov =
          build_complex(corpus[i].arr, coeff_kind::novikov_field);
      if (!square_is_zero(nov)) {
        detail = "novikov: " + corpus[i].recipe;
        return false;
      }
    }
    return true;
  });

  // 5: the complex decomposes under surgery as the resolved complex plus
  //    one isolated generator per removed point of Z, on every instance
  criterion(5, [&](std::string& detail) {
    if (corpus.empty()) {
      detail = corpus_error;
      return false;
    }
    for (const auto& inst : corpus) {
      decomposition_report rep = surgery_decomposition_check(inst.arr);
      if (!rep.ok) {
        detail = inst.recipe +
                 (rep.notes.empty() ? "" : ": " + rep.notes.front());
        return false;
      }
    }
    return true;
  });

  // 6: on the resolved surface, no lune witness crosses the seams of more
  //    than one former triple point
  criterion(6, [&](std::string& detail) {
    if (corpus.empty()) {
      detail = corpus_error;
      return false;
    }
    for (const auto& inst : corpus) {
      surgery_result sr = surgery(inst.arr);
      floer_complex rc = build_complex(sr.arr, coeff_kind::f2);
      for (const auto& [pair, ws] : rc.lunes) {
        (void)pair;
        for (const auto& l : ws)
          if (seams_crossed(sr.arr, l) > 1) {
            detail = inst.recipe;
            return false;
          }
      }
    }
    return true;
  });

  // 7: every lune witness connects generators of opposite degree
  criterion(7, [&](std::string& detail) {
    if (corpus.empty()) {
      detail = corpus_error;
      return false;
    }
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      std::map<int, int> deg;
      for (const auto& pt : corpus_f2[i].basis) deg[pt.vertex] = pt.degree;
      for (const auto& [pair, ws] : corpus_f2[i].lunes) {
        (void)pair;
        for (const auto& l : ws)
          if (deg.at(l.from) == deg.at(l.to)) {
            detail = corpus[i].recipe;
            return false;
          }
      }
    }
    return true;
  });

  // 8: the classification round trips: the degeneracy graph of the model
  //    surface of any shape with total genus at most 2 and at most 4
  //    circles is isomorphic to the shape, and the glued genus obeys the
  //    vertex-genus plus cycle-rank identity
  criterion(8, [&](std::string& detail) {
    int checked = 0;
    for (int g = 0; g <= 2; ++g)
      for (const log_graph& shape : enumerate_shapes(g, 4)) {
        if (shape.edges.empty()) continue;  // no circles, no surface model
        arrangement a = model_surface(shape);
        if (!isomorphic(degeneracy_graph(a), shape)) {
          detail = "round trip failed at genus " + std::to_string(g);
          return false;
        }
        int vsum = 0;
        for (const auto& v : shape.vertices) vsum += v.genus;
        int cycles = static_cast<int>(shape.edges.size()) -
                     static_cast<int>(shape.vertices.size()) + 1;
        if (vsum + cycles != g || a.map.genus() != g ||
            shape.total_genus() != g) {
          detail = "genus identity failed at genus " + std::to_string(g);
          return false;
        }
        ++checked;
      }
    if (checked < 10) {
      detail = "too few shapes enumerated";
      return false;
    }
    return true;
  });

  // 9: genus zero shapes are exactly the decorated trees
  criterion(9, [&](std::string& detail) {
    auto shapes = enumerate_shapes(0, 6);
    if (shapes.empty()) {
      detail = "no shapes";
      return false;
    }
    for (const log_graph& shape : shapes) {
      bool tree = shape.edges.empty()
                      ? shape.vertices.size() == 1
                      : shape.is_tree();
      if (!tree) {
        detail = "a genus zero shape has a cycle";
        return false;
      }
      for (const auto& v : shape.vertices)
        if (v.genus != 0) {
          detail = "a genus zero shape has vertex genus";
          return false;
        }
    }
    return true;
  });

  // 10: over the Novikov field an equal-area strip pair cancels exactly;
  //     growing one face under a single strip leaves a two-term entry with
  //     the exact rational exponents
  criterion(10, [&](std::string& detail) {
    arrangement a = admissible_pushoff_self(wiggle_model(2)).arr;
    assign_unit_areas(a);
    floer_complex even = build_complex(a, coeff_kind::novikov_field);
    for (const auto& col : even.entries)
      if (!col.empty()) {
        detail = "equal areas did not cancel";
        return false;
      }

    int p0 = -1, p1 = -1;
    for (const auto& pt : intersection_points(a))
      if (!pt.in_z) (pt.degree == 0 ? p0 : p1) = pt.vertex;
    lune_census native = count_lunes(a, p0, p1);
    if (native.total != 2) {
      detail = "expected two strips";
      return false;
    }
    std::set<int> first, second;
    for (const auto& [f, m] : native.witnesses[0].winding)
      if (m > 0) first.insert(f);
    for (const auto& [f, m] : native.witnesses[1].winding)
      if (m > 0) second.insert(f);
    int grow = -1;
    for (int f : first)
      if (!second.count(f)) grow = f;
    if (grow < 0) {
      detail = "strips share every face";
      return false;
    }
    a.face_areas[grow] = a.face_areas[grow] + rational(1, 3);

    floer_complex odd = build_complex(a, coeff_kind::novikov_field);
    const novikov* entry = nullptr;
    for (const auto& col : odd.entries)
      for (const auto& [row, val] : col) {
        (void)row;
        if (entry) {
          detail = "more than one entry after the perturbation";
          return false;
        }
        entry = &val;
      }
    if (!entry || entry->terms().size() != 2) {
      detail = "perturbed entry is not a two-term sum";
      return false;
    }
    if (entry->terms() !=
        std::vector<rational>{rational(2), rational(7, 3)}) {
      detail = "perturbed exponents are not the exact areas";
      return false;
    }
    return true;
  });

  // 11: the rank difference equals the signed generator count on every
  //     corpus instance, and stays equal after sampled admissible moves
  criterion(11, [&](std::string& detail) {
    if (corpus.empty()) {
      detail = corpus_error;
      return false;
    }
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      cohomology_result r = cohomology(corpus_f2[i]);
      if (r.rank0 - r.rank1 != euler_count(corpus_f2[i])) {
        detail = corpus[i].recipe;
        return false;
      }
      for (const auto& m :
           sample_moves(corpus[i].arr, 4, 77 + static_cast<unsigned>(i))) {
        arrangement moved;
        floer_complex mc;
        try {
          moved = apply_move(corpus[i].arr, m);
          mc = build_complex(moved, coeff_kind::f2);
        } catch (const log_floer_error&) {
          continue;  // the move left admissible position
        }
        cohomology_result mr = cohomology(mc);
        if (mr.rank0 - mr.rank1 != euler_count(mc)) {
          detail = corpus[i].recipe + " after " + move_name(m.kind);
          return false;
        }
      }
    }
    return true;
  });

  return failures == 0 ? 0 : 1;
}
