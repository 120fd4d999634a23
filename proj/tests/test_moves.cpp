// Tests for elementary moves: inverse pairs restore the arrangement up to
// relabeling, the modular slide adds its crossing pair, and blow ups
// resolve shared endpoints.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "logfloer/arrangement.hpp"
#include "logfloer/editmap.hpp"
#include "logfloer/error.hpp"
#include "logfloer/models.hpp"
#include "logfloer/moves.hpp"
#include "logfloer/pushoff.hpp"

using namespace logfloer;

namespace {

// Canonical certificate of the labelled map: breadth-first relabeling from
// every start dart, keeping the lexicographically smallest transcript.
// Equal certificates mean equal arrangements up to dart renaming.
std::string certificate(const arrangement& a) {
  std::string best;
  for (int start = 0; start < a.map.n; ++start) {
    std::vector<int> id(a.map.n, -1);
    std::vector<int> order;
    order.reserve(a.map.n);
    id[start] = 0;
    order.push_back(start);
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (int nb : {a.map.rot[order[i]], a.map.opp[order[i]]}) {
        if (id[nb] < 0) {
          id[nb] = static_cast<int>(order.size());
          order.push_back(nb);
        }
      }
    }
    std::string cur;
    for (int d : order) {
      cur += std::to_string(id[a.map.rot[d]]);
      cur += ',';
      cur += std::to_string(id[a.map.opp[d]]);
      cur += ',';
      cur += std::to_string(static_cast<int>(a.labels[d].kind));
      cur += '.';
      cur += std::to_string(a.labels[d].circle);
      cur += '.';
      cur += std::to_string(static_cast<int>(a.along[d]));
      cur += ';';
    }
    if (best.empty() || cur < best) best = std::move(cur);
  }
  return best;
}

// Sphere with one circle and four transits t0..t3 on a line; one curve
// chords t0-t2, the other t1-t3, crossing once above and once below.
arrangement quad_model() {
  edit_map em;
  const edge_label ka{edge_kind::alpha, -1};
  const edge_label kb{edge_kind::beta, -1};
  const edge_label kz{edge_kind::z, 0};

  std::vector<int> zf(4), nn(4), zb(4), ss(4);
  for (int i = 0; i < 4; ++i) {
    int t = em.new_vertex();
    edge_label kc = (i % 2 == 0) ? ka : kb;
    zf[i] = em.new_dart(t, kz);
    nn[i] = em.new_dart(t, kc);
    zb[i] = em.new_dart(t, kz);
    ss[i] = em.new_dart(t, kc);
  }
  for (int i = 0; i < 4; ++i) em.pair_darts(zf[i], zb[(i + 1) % 4]);

  int x = em.new_vertex();  // crossing above the line
  int y = em.new_vertex();  // crossing below
  std::vector<int> xd(4), yd(4);
  for (int i = 0; i < 4; ++i) xd[i] = em.new_dart(x, (i % 2 == 0) ? ka : kb);
  for (int i = 3; i >= 0; --i) yd[i] = em.new_dart(y, (i % 2 == 0) ? ka : kb);
  for (int i = 0; i < 4; ++i) {
    em.pair_darts(nn[i], xd[i]);
    em.pair_darts(ss[i], yd[i]);
  }
  // travel t0 -> x -> t2 -> y -> t0 and t1 -> x -> t3 -> y -> t1
  em.along[nn[0]] = em.along[nn[1]] = 1;
  em.along[xd[2]] = em.along[xd[3]] = 1;
  em.along[ss[2]] = em.along[ss[3]] = 1;
  em.along[yd[0]] = em.along[yd[1]] = 1;

  auto c = em.compile();
  arrangement a = std::move(c.arr);
  assign_sign_by_dart(a, c.dart_map[zf[0]], -1);            // north
  assign_sign_by_dart(a, a.map.opp[c.dart_map[zf[0]]], 1);  // south
  a.modular_periods[0] = rational(1);
  check_arrangement(a);
  return a;
}

// apply each candidate of the given kind until one lands back on `want`
bool some_move_restores(const arrangement& a, move_kind kind,
                        const std::string& want) {
  for (const auto& m : legal_moves(a)) {
    if (m.kind != kind) continue;
    try {
      if (certificate(apply_move(a, m)) == want) return true;
    } catch (const log_floer_error&) {
    }
  }
  return false;
}

}  // namespace

// ---------------------------------------------------------------------------
// inverse pairs
// ---------------------------------------------------------------------------

TEST_CASE("death undoes birth") {
  arrangement a = admissible_pushoff_self(wiggle_model(2)).arr;
  std::string before = certificate(a);
  int tried = 0;
  for (const auto& m : legal_moves(a)) {
    if (m.kind != move_kind::birth || tried >= 4) continue;
    ++tried;
    arrangement b = apply_move(a, m);
    CHECK_NOTHROW(check_arrangement(b));
    CHECK(intersection_points(b).size() == intersection_points(a).size() + 2);
    CHECK(some_move_restores(b, move_kind::death, before));
  }
  CHECK(tried > 0);
}

TEST_CASE("removing an aux edge undoes adding it") {
  // aux edges attach only at plain vertices, so make two midpoints on one
  // strand: they share both side faces
  arrangement a = quad_model();
  int site = -1;
  for (int d = 0; d < a.map.n; ++d)
    if (d < a.map.opp[d] && a.is_curve(d)) {
      site = d;
      break;
    }
  REQUIRE(site >= 0);
  a = apply_move(a, {move_kind::slide_subdivide, site, -1});
  int half = -1;
  for (int v : a.map.vertices())
    if (a.map.vertex_darts(v).size() == 2) {
      half = a.map.vertex_darts(v)[0];
      break;
    }
  REQUIRE(half >= 0);
  a = apply_move(a, {move_kind::slide_subdivide, half, -1});
  std::string before = certificate(a);
  int tried = 0;
  for (const auto& m : legal_moves(a)) {
    if (m.kind != move_kind::slide_add_aux || tried >= 4) continue;
    ++tried;
    arrangement b = apply_move(a, m);
    CHECK_NOTHROW(check_arrangement(b));
    CHECK(some_move_restores(b, move_kind::slide_remove_aux, before));
  }
  CHECK(tried > 0);
}

TEST_CASE("smoothing undoes subdividing") {
  arrangement a = quad_model();
  std::string before = certificate(a);
  int tried = 0;
  for (const auto& m : legal_moves(a)) {
    if (m.kind != move_kind::slide_subdivide || tried >= 4) continue;
    ++tried;
    arrangement b = apply_move(a, m);
    CHECK_NOTHROW(check_arrangement(b));
    CHECK(some_move_restores(b, move_kind::slide_smooth, before));
  }
  CHECK(tried > 0);
}

// ---------------------------------------------------------------------------
// modular slide
// ---------------------------------------------------------------------------

TEST_CASE("modular slide trades a transit pair for two crossings") {
  arrangement a = quad_model();
  CHECK(intersection_points(a).size() == 2);
  std::vector<move_spec> slides;
  for (const auto& m : legal_moves(a))
    if (m.kind == move_kind::modular_slide) slides.push_back(m);
  REQUIRE_FALSE(slides.empty());
  arrangement b = apply_move(a, slides.front());
  CHECK_NOTHROW(check_arrangement(b));
  CHECK_NOTHROW(verify_admissible_position(b));
  CHECK(intersection_points(b).size() == 4);
  CHECK(z_circle_ids(b) == z_circle_ids(a));
}

TEST_CASE("illegal sites are rejected") {
  arrangement a = quad_model();
  move_spec bad;
  bad.kind = move_kind::modular_slide;
  bad.site_a = -7;
  CHECK_THROWS_AS(apply_move(a, bad), log_floer_error);
  bad.kind = move_kind::death;
  bad.site_a = 0;  // no empty bigon here
  CHECK_THROWS_AS(apply_move(a, bad), log_floer_error);
}

// ---------------------------------------------------------------------------
// random moves
// ---------------------------------------------------------------------------

TEST_CASE("seeded move choice is reproducible and sound") {
  arrangement a = admissible_pushoff_self(wiggle_model(2)).arr;
  std::mt19937 r1(99), r2(99);
  auto m1 = random_move(a, r1);
  auto m2 = random_move(a, r2);
  REQUIRE(m1.has_value());
  REQUIRE(m2.has_value());
  CHECK(m1->kind == m2->kind);
  CHECK(m1->site_a == m2->site_a);
  CHECK(m1->site_b == m2->site_b);
  arrangement b = apply_move(a, *m1);
  CHECK_NOTHROW(check_arrangement(b));
}

// ---------------------------------------------------------------------------
// blow ups
// ---------------------------------------------------------------------------

TEST_CASE("blowing up resolves every shared endpoint") {
  arrangement a = admissible_pushoff_self(interval_model()).arr;
  int shared = 0;
  for (int v : a.map.vertices())
    if (classify_vertex(a, v) == vertex_type::shared_endpoint) ++shared;
  REQUIRE(shared == 2);

  arrangement b = blow_up_all(a);
  CHECK_NOTHROW(check_arrangement(b));
  int endpoints = 0;
  for (int v : b.map.vertices()) {
    CHECK(classify_vertex(b, v) != vertex_type::shared_endpoint);
    if (classify_vertex(b, v) == vertex_type::endpoint) ++endpoints;
  }
  CHECK(endpoints == 2 * shared);
}

TEST_CASE("blow up rejects interior vertices") {
  arrangement a = admissible_pushoff_self(interval_model()).arr;
  for (int v : a.map.vertices())
    if (classify_vertex(a, v) == vertex_type::crossing)
      CHECK_THROWS_AS(blow_up(a, v), log_floer_error);
  arrangement c = quad_model();
  CHECK(certificate(blow_up_all(c)) == certificate(c));  // nothing to do
}
