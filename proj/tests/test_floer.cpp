// Tests for the Floer complex: self cohomology of circles and intervals,
// the shared-endpoint regimes, Novikov cancellation, census agreement
// between the direct and resolved routes, and move invariance.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "logfloer/arrangement.hpp"
#include "logfloer/error.hpp"
#include "logfloer/floer.hpp"
#include "logfloer/models.hpp"
#include "logfloer/pushoff.hpp"

using namespace logfloer;

// ---------------------------------------------------------------------------
// self cohomology
// ---------------------------------------------------------------------------

TEST_CASE("self cohomology of a circle through k points") {
  for (int k : {2, 4}) {
    for (coeff_kind c : {coeff_kind::f2, coeff_kind::novikov_field}) {
      self_floer_result r = self_floer(wiggle_model(k), c);
      auto want = log_derham_ranks(k, true);
      CHECK(r.coh.rank0 == want.first);
      CHECK(r.coh.rank1 == want.second);
      CHECK(static_cast<int>(r.complex.basis.size()) == 2 * k);
      CHECK(r.class_names0 == std::vector<std::string>{"[1]"});
      CHECK(static_cast<int>(r.class_names1.size()) == k + 1);
      int lambdas = 0;
      for (const auto& n : r.class_names1)
        if (n.rfind("lambda", 0) == 0) ++lambdas;
      CHECK(lambdas == k);
    }
  }
}

TEST_CASE("self cohomology of an interval") {
  self_floer_result r = self_floer(interval_model(), coeff_kind::f2);
  auto want = log_derham_ranks(1, false);
  CHECK(r.coh.rank0 == want.first);
  CHECK(r.coh.rank1 == want.second);
  CHECK(r.complex.basis.size() == 3);
}

TEST_CASE("expected rank table") {
  CHECK(log_derham_ranks(2, true) == std::pair<int, int>{1, 3});
  CHECK(log_derham_ranks(6, true) == std::pair<int, int>{1, 7});
  CHECK(log_derham_ranks(1, false) == std::pair<int, int>{1, 2});
  CHECK_THROWS_AS(log_derham_ranks(0, true), log_floer_error);
}

// ---------------------------------------------------------------------------
// complex construction guards
// ---------------------------------------------------------------------------

TEST_CASE("both curves are required") {
  CHECK_THROWS_AS(build_complex(wiggle_model(2), coeff_kind::f2),
                  log_floer_error);
}

TEST_CASE("novikov coefficients require areas") {
  arrangement a = bigon_model();
  CHECK_THROWS_AS(build_complex(a, coeff_kind::novikov_field),
                  log_floer_error);
  assign_unit_areas(a);
  CHECK_NOTHROW(build_complex(a, coeff_kind::novikov_field));
}

TEST_CASE("bigon cancels over both coefficient systems") {
  arrangement a = bigon_model();
  assign_unit_areas(a);
  for (coeff_kind c : {coeff_kind::f2, coeff_kind::novikov_field}) {
    auto r = cohomology(build_complex(a, c));
    // two equal-area discs in each direction cancel pairwise
    CHECK(r.rank0 == 1);
    CHECK(r.rank1 == 1);
  }
}

// ---------------------------------------------------------------------------
// shared endpoint regimes
// ---------------------------------------------------------------------------

TEST_CASE("dropping z lunes overcounts the shared-endpoint pair") {
  arrangement a = shared_endpoint_model(true);
  floer_complex naive = build_complex(a, coeff_kind::f2);
  CHECK(naive.basis.size() == 2);
  auto r = cohomology(naive);
  CHECK(r.rank0 + r.rank1 == 2);
}

TEST_CASE("z lunes kill the shared-endpoint pair") {
  arrangement a = shared_endpoint_model(true);
  floer_complex with_z = build_complex(a, coeff_kind::f2, true);
  auto r = cohomology(with_z);
  CHECK(r.rank0 + r.rank1 == 0);
}

TEST_CASE("the two curve orders give different complexes") {
  floer_complex ab =
      build_complex(shared_endpoint_model(true), coeff_kind::f2);
  arrangement swapped = shared_endpoint_model(false);
  swap_roles(swapped);
  floer_complex ba = build_complex(swapped, coeff_kind::f2);
  CHECK(ab.basis.size() == 2);
  CHECK(ba.basis.size() == 1);
  auto rab = cohomology(ab);
  auto rba = cohomology(ba);
  CHECK(rab.rank0 == 1);
  CHECK(rab.rank1 == 1);
  CHECK(rba.rank0 == 0);
  CHECK(rba.rank1 == 1);
}

// ---------------------------------------------------------------------------
// novikov cancellation
// ---------------------------------------------------------------------------

namespace {

// the unique nonzero entry of the differential, if any
const novikov* single_entry(const floer_complex& c) {
  const novikov* found = nullptr;
  for (const auto& col : c.entries)
    for (const auto& [row, val] : col) {
      (void)row;
      if (found) return nullptr;
      found = &val;
    }
  return found;
}

}  // namespace

TEST_CASE("equal strip areas cancel over the novikov field") {
  arrangement a = admissible_pushoff_self(wiggle_model(2)).arr;
  assign_unit_areas(a);
  floer_complex c = build_complex(a, coeff_kind::novikov_field);
  for (const auto& col : c.entries) CHECK(col.empty());
  auto r = cohomology(c);
  CHECK(r.rank0 == 1);
  CHECK(r.rank1 == 3);
}

TEST_CASE("perturbing one strip face leaves a two-term entry") {
  arrangement a = admissible_pushoff_self(wiggle_model(2)).arr;
  assign_unit_areas(a);
  // grow one face under exactly one of the two strips
  auto pts = intersection_points(a);
  int p0 = -1, p1 = -1;
  for (const auto& pt : pts)
    if (!pt.in_z) (pt.degree == 0 ? p0 : p1) = pt.vertex;
  lune_census native = count_lunes(a, p0, p1);
  REQUIRE(native.total == 2);
  std::set<int> first, second;
  for (const auto& [f, m] : native.witnesses[0].winding)
    if (m > 0) first.insert(f);
  for (const auto& [f, m] : native.witnesses[1].winding)
    if (m > 0) second.insert(f);
  int grow = -1;
  for (int f : first)
    if (!second.count(f)) grow = f;
  REQUIRE(grow >= 0);
  a.face_areas[grow] = a.face_areas[grow] + rational(1, 3);

  floer_complex c = build_complex(a, coeff_kind::novikov_field);
  const novikov* entry = single_entry(c);
  REQUIRE(entry != nullptr);
  CHECK(entry->terms().size() == 2);
  CHECK(entry->terms() == std::vector<rational>{rational(2), rational(7, 3)});
}

// ---------------------------------------------------------------------------
// census agreement
// ---------------------------------------------------------------------------

TEST_CASE("direct and resolved counts agree on all wiggle pairs") {
  arrangement a = admissible_pushoff_self(wiggle_model(4)).arr;
  assign_unit_areas(a);
  std::vector<int> interior;
  for (const auto& pt : intersection_points(a))
    if (!pt.in_z) interior.push_back(pt.vertex);
  REQUIRE(interior.size() == 4);
  for (int p : interior)
    for (int q : interior) {
      if (p == q) continue;
      lune_census direct = count_lunes(a, p, q);
      resolved_census routed = count_lunes_by_resolution(a, p, q);
      CHECK(direct.total == routed.total);
      CHECK(direct.smooth == routed.smooth);
      CHECK(direct.crossing == routed.crossing);
      for (const auto& w : routed.witnesses)
        CHECK(w.crossings.size() <= 1);
    }
}

// ---------------------------------------------------------------------------
// invariance
// ---------------------------------------------------------------------------

TEST_CASE("ranks survive elementary moves") {
  arrangement a = admissible_pushoff_self(wiggle_model(2)).arr;
  invariance_report rep = invariance_check(a, coeff_kind::f2, 4, 11);
  CHECK(rep.ok);
  CHECK(rep.rank0 == 1);
  CHECK(rep.rank1 == 3);
  CHECK_FALSE(rep.steps.empty());
  for (const auto& s : rep.steps) {
    CHECK(s.ok);
    CHECK(s.rank0 == 1);
    CHECK(s.rank1 == 3);
  }
}
