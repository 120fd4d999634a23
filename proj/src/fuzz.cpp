#include "logfloer/fuzz.hpp"

#include <algorithm>
#include <random>
#include <utility>

#include "logfloer/editmap.hpp"
#include "logfloer/error.hpp"
#include "logfloer/graphclass.hpp"
#include "logfloer/models.hpp"
#include "logfloer/moves.hpp"
#include "logfloer/pushoff.hpp"
#include "logfloer/surgery.hpp"

namespace logfloer {

namespace {

const edge_label kA{edge_kind::alpha, -1};

struct transit {
  int plus = -1;   // alpha dart opening into the positive side
  int minus = -1;  // alpha dart opening into the negative side
};

// splits the given z dart at a fresh transit vertex and hangs one alpha
// dart into each side; left_sign is the piece sign left of the dart, and
// head receives the far half so the next transit lands right next door
transit make_transit(edit_map& em, int zdart, int left_sign, int* head) {
  int w = em.subdivide(zdart);
  int x = em.fan[w][0];  // continues the travel direction of zdart
  int y = em.fan[w][1];
  int a_left = em.new_dart_after(x, kA);
  int a_right = em.new_dart_after(y, kA);
  *head = x;
  transit t;
  t.plus = left_sign > 0 ? a_left : a_right;
  t.minus = left_sign > 0 ? a_right : a_left;
  return t;
}

// pairs two alpha darts into one travel edge running tail to head
void chord(edit_map& em, int tail, int head) {
  em.along[tail] = 1;
  em.pair_darts(tail, head);
}

// lays a closed alpha curve across the chosen circles: a small loop
// straddling one circle, or a four-transit tour across two of them
arrangement thread_alpha(const arrangement& base, int c1, int c2) {
  piece_set ps = pieces(base);
  auto pick = [&](int circle) {
    auto ds = circle_darts(base, circle);
    int d = *std::min_element(ds.begin(), ds.end());
    return std::pair<int, int>{d, sign_of_face(base, ps, base.map.face_of(d))};
  };
  edit_map em(base);
  if (c1 == c2) {
    auto [d, s] = pick(c1);
    int head = -1;
    transit t1 = make_transit(em, d, s, &head);
    transit t2 = make_transit(em, head, s, &head);
    chord(em, t1.plus, t2.plus);
    chord(em, t2.minus, t1.minus);
  } else {
    auto [d, s] = pick(c1);
    auto [e, r] = pick(c2);
    int head = -1;
    transit t1 = make_transit(em, d, s, &head);
    transit t2 = make_transit(em, head, s, &head);
    transit u1 = make_transit(em, e, r, &head);
    transit u2 = make_transit(em, head, r, &head);
    chord(em, t1.plus, u1.plus);
    chord(em, u1.minus, u2.minus);
    chord(em, u2.plus, t2.plus);
    chord(em, t2.minus, t1.minus);
  }
  auto c = em.compile();
  arrangement out = std::move(c.arr);
  derive_component_signs(base, out, c.dart_map);
  out.modular_periods = base.modular_periods;
  assign_unit_areas(out);
  piece_set nps = pieces(out);
  rational vol;
  for (const auto& [f, ar] : out.face_areas)
    vol += ar * rational(sign_of_face(out, nps, f));
  out.volume = vol;
  check_arrangement(out);
  return out;
}

}  // namespace

std::vector<fuzz_instance> fuzz_corpus(const fuzz_options& opt) {
  std::vector<log_graph> shapes;
  for (int g = 0; g <= opt.max_genus; ++g)
    for (log_graph& s : enumerate_shapes(g, opt.max_circles))
      if (!s.edges.empty()) shapes.push_back(std::move(s));
  require(!shapes.empty(), errk::no_z_crossings,
          "no shapes with a degeneracy circle in range");

  std::vector<fuzz_instance> out;
  std::mt19937 rng(opt.seed);
  long cap = 200L * opt.count + 1000;
  for (long attempt = 0;
       static_cast<int>(out.size()) < opt.count && attempt < cap; ++attempt) {
    // draw everything up front so failures cannot desync the stream
    const log_graph& g = shapes[rng() % shapes.size()];
    arrangement base = model_surface(g);
    auto ids = z_circle_ids(base);
    int c1 = ids[rng() % ids.size()];
    int c2 = ids[rng() % ids.size()];
    int want = static_cast<int>(rng() % static_cast<unsigned>(opt.max_moves + 1));
    std::mt19937 mrng(rng());
    try {
      arrangement cur = admissible_pushoff_self(thread_alpha(base, c1, c2)).arr;
      int applied = 0;
      for (int j = 0; j < want; ++j) {
        auto m = random_move(cur, mrng);
        if (!m) break;
        try {
          arrangement next = apply_move(cur, *m);
          verify_admissible_position(next);
          cur = std::move(next);
          ++applied;
        } catch (const log_floer_error&) {
          // the move left admissible position, keep the previous state
        }
      }
      check_arrangement(cur);
      verify_admissible_position(cur);
      if (opt.require_resolvable) surgery(cur);
      fuzz_instance inst;
      inst.recipe =
          "genus " + std::to_string(g.total_genus()) + " circles " +
          std::to_string(g.edges.size()) + " route " +
          (c1 == c2 ? "loop@" + std::to_string(c1)
                    : std::to_string(c1) + "-" + std::to_string(c2)) +
          " moves " + std::to_string(applied);
      inst.arr = std::move(cur);
      out.push_back(std::move(inst));
    } catch (const log_floer_error&) {
      // unthreadable draw, move on
    }
  }
  return out;
}

}  // namespace logfloer
