#include <filesystem>
#include <random>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "logfloer/error.hpp"
#include "logfloer/floer.hpp"
#include "logfloer/fuzz.hpp"
#include "logfloer/json_io.hpp"
#include "logfloer/models.hpp"
#include "logfloer/moves.hpp"
#include "logfloer/pushoff.hpp"
#include "logfloer/surgery.hpp"

namespace lf = logfloer;

namespace {

// ---------------------------------------------------------------------------
// small formatting helpers
// ---------------------------------------------------------------------------

std::string point_label(const lf::ipoint& p) {
  std::string s = "v" + std::to_string(p.vertex);
  s += p.in_z ? " (on Z)" : "";
  s += " deg " + std::to_string(p.degree);
  return s;
}

std::string chain_text(const lf::floer_complex& c,
                       const std::vector<std::pair<int, lf::novikov>>& supp) {
  std::string s;
  for (std::size_t i = 0; i < supp.size(); ++i) {
    if (i) s += " + ";
    const lf::novikov& e = supp[i].second;
    if (!e.is_one()) s += "(" + e.str() + ")*";
    s += "v" + std::to_string(c.basis[supp[i].first].vertex);
  }
  return s.empty() ? "0" : s;
}

void emit(const lf::ojson& j, const std::string& out_path) {
  if (out_path.empty())
    std::cout << lf::pretty(j);
  else
    lf::save_text_file(out_path, lf::pretty(j));
}

lf::arrangement load_arrangement(const std::string& path) {
  return lf::arrangement_from_json(lf::load_json_file(path));
}

lf::coeff_kind to_coeffs(const std::string& name) {
  return name == "novikov" ? lf::coeff_kind::novikov_field
                           : lf::coeff_kind::f2;
}

lf::ojson complex_json(const lf::floer_complex& c,
                       const lf::cohomology_result& coh) {
  lf::ojson j;
  j["basis"] = lf::ojson::array();
  for (const lf::ipoint& p : c.basis)
    j["basis"].push_back({{"vertex", p.vertex},
                          {"on_z", p.in_z},
                          {"degree", p.degree}});
  j["entries"] = lf::ojson::array();
  for (std::size_t s = 0; s < c.entries.size(); ++s)
    for (const auto& [t, e] : c.entries[s])
      j["entries"].push_back({{"from", c.basis[s].vertex},
                              {"to", c.basis[t].vertex},
                              {"coefficient", e.str()}});
  j["rank0"] = coh.rank0;
  j["rank1"] = coh.rank1;
  auto reps = [&](const auto& rs) {
    lf::ojson out = lf::ojson::array();
    for (const auto& rep : rs) {
      lf::ojson r = lf::ojson::array();
      for (const auto& [i, e] : rep)
        r.push_back({{"vertex", c.basis[i].vertex},
                     {"coefficient", e.str()}});
      out.push_back(r);
    }
    return out;
  };
  j["reps0"] = reps(coh.reps0);
  j["reps1"] = reps(coh.reps1);
  return j;
}

// ---------------------------------------------------------------------------
// subcommand bodies
// ---------------------------------------------------------------------------

int run_validate(const std::string& path, bool admissible) {
  lf::arrangement a = load_arrangement(path);
  lf::validation_report rep = lf::validate_arrangement(a);
  if (!rep.ok) {
    std::cout << rep.text();
    return 1;
  }
  if (admissible) lf::verify_admissible_position(a);
  const lf::comb_map& m = a.map;
  std::cout << "ok: " << m.vertices().size() << " vertices, "
            << m.edges().size() << " edges, " << m.faces().size()
            << " faces, genus " << m.genus() << ", "
            << lf::z_circle_ids(a).size() << " circles\n";
  return 0;
}

int run_classify(const std::string& path, bool json, bool dot) {
  lf::arrangement a = load_arrangement(path);
  lf::log_graph g = lf::degeneracy_graph(a);
  if (dot) {
    std::cout << lf::graph_dot(g);
  } else if (json) {
    std::cout << lf::pretty(lf::graph_to_json(g));
  } else {
    std::cout << "pieces " << g.vertices.size() << ", circles "
              << g.edges.size() << ", total genus " << g.total_genus()
              << "\n"
              << "code " << lf::canonical_code(g) << "\n";
  }
  return 0;
}

int run_enumerate(int genus, int max_circles, bool json, bool dot) {
  auto shapes = lf::enumerate_shapes(genus, max_circles);
  if (json) {
    lf::ojson j = lf::ojson::array();
    for (const auto& g : shapes) j.push_back(lf::graph_to_json(g));
    std::cout << lf::pretty(j);
    return 0;
  }
  std::cout << shapes.size() << " shapes\n";
  for (const auto& g : shapes) {
    if (dot)
      std::cout << lf::graph_dot(g);
    else
      std::cout << lf::canonical_code(g) << "\n";
  }
  return 0;
}

int run_model(const std::string& name, int k, bool crossed,
              const std::string& graph_path, bool unit_areas,
              const std::string& out_path) {
  lf::arrangement a;
  if (name == "wiggle") {
    a = lf::wiggle_model(k);
  } else if (name == "necklace") {
    a = lf::necklace_model(k);
  } else if (name == "interval") {
    a = lf::interval_model();
  } else if (name == "shared") {
    a = lf::shared_endpoint_model(crossed);
  } else if (name == "bigon") {
    a = lf::bigon_model();
  } else if (name == "surface") {
    lf::require(!graph_path.empty(), lf::errk::illegal_move_site,
                "surface model needs --graph");
    a = lf::model_surface(lf::graph_from_json(lf::load_json_file(graph_path)));
  } else {
    lf::fail(lf::errk::illegal_move_site, "unknown model " + name);
  }
  if (unit_areas) lf::assign_unit_areas(a);
  emit(lf::arrangement_to_json(a), out_path);
  return 0;
}

int run_points(const std::string& path, bool flip) {
  lf::arrangement a = load_arrangement(path);
  for (const lf::ipoint& p : lf::intersection_points(a, flip))
    std::cout << point_label(p) << "\n";
  return 0;
}

int run_lunes(const std::string& path, int p, int q, bool include_z,
              bool smooth_only, bool immersed, bool resolve, bool json) {
  lf::arrangement a = load_arrangement(path);
  if (resolve) {
    lf::resolved_census rc = lf::count_lunes_by_resolution(a, p, q);
    if (json) {
      lf::ojson j{{"total", rc.total},
                  {"smooth", rc.smooth},
                  {"crossing", rc.crossing}};
      j["witnesses"] = lf::ojson::array();
      for (const auto& w : rc.witnesses)
        j["witnesses"].push_back(
            {{"area", w.resolved.area.str()}, {"crossings", w.crossings}});
      std::cout << lf::pretty(j);
      return 0;
    }
    std::cout << "resolved: total " << rc.total << ", smooth " << rc.smooth
              << ", crossing " << rc.crossing << "\n";
    for (const auto& w : rc.witnesses) {
      std::cout << "  area " << w.resolved.area.str();
      if (!w.crossings.empty())
        std::cout << " through erased point " << w.crossings.front();
      std::cout << "\n";
    }
    return 0;
  }
  lf::lune_options opt;
  opt.include_z = include_z;
  opt.smooth_only = smooth_only;
  opt.immersed = immersed;
  auto ls = lf::lunes_between(a, p, q, opt);
  if (json) {
    lf::ojson j{{"count", static_cast<int>(ls.size())}};
    j["witnesses"] = lf::ojson::array();
    for (const auto& l : ls) {
      lf::ojson w{{"area", l.area.str()}};
      w["alpha_z"] = l.alpha_z;
      w["beta_z"] = l.beta_z;
      lf::ojson wind = lf::ojson::object();
      for (auto [f, m] : l.winding) wind[std::to_string(f)] = m;
      w["winding"] = wind;
      j["witnesses"].push_back(w);
    }
    std::cout << lf::pretty(j);
    return 0;
  }
  std::cout << ls.size() << " lunes from v" << p << " to v" << q << "\n";
  for (const auto& l : ls) {
    std::cout << "  area " << l.area.str();
    if (!l.alpha_z.empty() || !l.beta_z.empty()) {
      std::cout << " through Z at";
      for (int v : l.alpha_z) std::cout << " " << v;
      for (int v : l.beta_z) std::cout << " " << v;
    }
    std::cout << "\n";
  }
  return 0;
}

int run_floer(const std::string& path, const std::string& coeffs,
              bool include_z, bool flip, bool json) {
  lf::arrangement a = load_arrangement(path);
  lf::coeff_kind ck = to_coeffs(coeffs);
  if (!lf::trace_curve(a, lf::edge_kind::beta).present) {
    // single curve: pair it with its admissible parallel copy
    lf::self_floer_result r = lf::self_floer(a, ck);
    if (json) {
      lf::ojson j = complex_json(r.complex, r.coh);
      j["points"] = r.point_names;
      j["classes0"] = r.class_names0;
      j["classes1"] = r.class_names1;
      std::cout << lf::pretty(j);
      return 0;
    }
    std::cout << "self Floer cohomology, "
              << (ck == lf::coeff_kind::f2 ? "F2" : "Novikov")
              << " coefficients\n";
    for (std::size_t i = 0; i < r.complex.basis.size(); ++i)
      std::cout << "  " << r.point_names[i] << ": "
                << point_label(r.complex.basis[i]) << "\n";
    std::cout << "HF^0 rank " << r.coh.rank0 << ", HF^1 rank " << r.coh.rank1
              << "\n";
    for (std::size_t i = 0; i < r.coh.reps0.size(); ++i)
      std::cout << "  " << r.class_names0[i] << " = "
                << chain_text(r.complex, r.coh.reps0[i]) << "\n";
    for (std::size_t i = 0; i < r.coh.reps1.size(); ++i)
      std::cout << "  " << r.class_names1[i] << " = "
                << chain_text(r.complex, r.coh.reps1[i]) << "\n";
    return 0;
  }
  lf::floer_complex c = lf::build_complex(a, ck, include_z, flip);
  lf::cohomology_result coh = lf::cohomology(c);
  if (json) {
    std::cout << lf::pretty(complex_json(c, coh));
    return 0;
  }
  std::cout << "basis\n";
  for (const lf::ipoint& p : c.basis)
    std::cout << "  " << point_label(p) << "\n";
  std::cout << "differential\n";
  bool any = false;
  for (std::size_t s = 0; s < c.entries.size(); ++s)
    for (const auto& [t, e] : c.entries[s]) {
      std::cout << "  v" << c.basis[s].vertex << " -> v"
                << c.basis[t].vertex << ": " << e.str() << "\n";
      any = true;
    }
  if (!any) std::cout << "  zero\n";
  std::cout << "HF^0 rank " << coh.rank0 << ", HF^1 rank " << coh.rank1
            << "\n";
  for (const auto& rep : coh.reps0)
    std::cout << "  deg 0 class " << chain_text(c, rep) << "\n";
  for (const auto& rep : coh.reps1)
    std::cout << "  deg 1 class " << chain_text(c, rep) << "\n";
  return 0;
}

int run_pushoff(const std::string& path, const std::string& out_path) {
  lf::arrangement a = load_arrangement(path);
  lf::pushoff_result r = lf::admissible_pushoff_self(a);
  std::cerr << "crossings:";
  for (int v : r.crossings) std::cerr << " " << v;
  std::cerr << "\nz points:";
  for (int v : r.z_points) std::cerr << " " << v;
  std::cerr << "\n";
  emit(lf::arrangement_to_json(r.arr), out_path);
  return 0;
}

int run_surgery(const std::string& path, const std::string& strip,
                const std::string& out_path, bool json) {
  lf::arrangement a = load_arrangement(path);
  lf::surgery_result r = lf::surgery(a, lf::rational::parse(strip));
  if (json) {
    lf::ojson j;
    j["removed_z_points"] = r.removed_z_points;
    lf::ojson pm = lf::ojson::object();
    for (auto [o, n] : r.point_map) pm[std::to_string(o)] = n;
    j["point_map"] = pm;
    lf::ojson cm = lf::ojson::object();
    for (auto [n, o] : r.circle_map) cm[std::to_string(n)] = o;
    j["circle_map"] = cm;
    j["arrangement"] = lf::arrangement_to_json(r.arr);
    emit(j, out_path);
    return 0;
  }
  std::cerr << "removed z points:";
  for (int v : r.removed_z_points) std::cerr << " " << v;
  std::cerr << "\nholes: " << r.arr.map.boundary_faces.size() << "\n";
  emit(lf::arrangement_to_json(r.arr), out_path);
  return 0;
}

int run_blowup(const std::string& path, int vertex, bool all,
               const std::string& out_path) {
  lf::arrangement a = load_arrangement(path);
  lf::arrangement b = all ? lf::blow_up_all(a) : lf::blow_up(a, vertex);
  emit(lf::arrangement_to_json(b), out_path);
  return 0;
}

int run_moves(const std::string& path, bool list, const std::string& kind,
              int site_a, int site_b, int random_n, unsigned seed,
              const std::string& out_path) {
  lf::arrangement a = load_arrangement(path);
  if (list) {
    for (const lf::move_spec& m : lf::legal_moves(a)) {
      std::cout << lf::move_name(m.kind);
      if (m.site_a >= 0) std::cout << " " << m.site_a;
      if (m.site_b >= 0) std::cout << " " << m.site_b;
      std::cout << "\n";
    }
    return 0;
  }
  if (random_n > 0) {
    std::mt19937 rng(seed);
    for (int i = 0; i < random_n; ++i) {
      auto m = lf::random_move(a, rng);
      if (!m) break;
      a = lf::apply_move(a, *m);
      std::cerr << "applied " << lf::move_name(m->kind) << "\n";
    }
    emit(lf::arrangement_to_json(a), out_path);
    return 0;
  }
  lf::move_spec m;
  if (kind == "birth") m.kind = lf::move_kind::birth;
  else if (kind == "death") m.kind = lf::move_kind::death;
  else if (kind == "remove-aux") m.kind = lf::move_kind::slide_remove_aux;
  else if (kind == "add-aux") m.kind = lf::move_kind::slide_add_aux;
  else if (kind == "subdivide") m.kind = lf::move_kind::slide_subdivide;
  else if (kind == "smooth") m.kind = lf::move_kind::slide_smooth;
  else if (kind == "modular") m.kind = lf::move_kind::modular_slide;
  else lf::fail(lf::errk::illegal_move_site, "unknown move " + kind);
  m.site_a = site_a;
  m.site_b = site_b;
  emit(lf::arrangement_to_json(lf::apply_move(a, m)), out_path);
  return 0;
}

int run_invariance(const std::string& path, const std::string& coeffs,
                   int n_moves, unsigned seed) {
  lf::arrangement a = load_arrangement(path);
  lf::invariance_report rep =
      lf::invariance_check(a, to_coeffs(coeffs), n_moves, seed);
  std::cout << "start ranks (" << rep.rank0 << ", " << rep.rank1 << ")\n";
  for (const auto& st : rep.steps)
    std::cout << "  " << lf::move_name(st.move.kind) << " -> (" << st.rank0
              << ", " << st.rank1 << ")" << (st.ok ? "" : " MISMATCH")
              << "\n";
  std::cout << (rep.ok ? "ranks stable\n" : "ranks changed\n");
  return rep.ok ? 0 : 1;
}

int run_crosscheck(const std::string& path) {
  lf::arrangement a = load_arrangement(path);
  lf::decomposition_report rep = lf::surgery_decomposition_check(a);
  for (const std::string& n : rep.notes) std::cout << n << "\n";

  // second route: native census against the resolved census, pair by pair
  std::vector<int> crossings;
  for (const lf::ipoint& p : lf::intersection_points(a))
    if (!p.in_z) crossings.push_back(p.vertex);
  bool counts_ok = true;
  for (int p : crossings)
    for (int q : crossings) {
      if (p == q) continue;
      int native = lf::count_lunes(a, p, q).total;
      int resolved = lf::count_lunes_by_resolution(a, p, q).total;
      if (native != resolved) {
        counts_ok = false;
        std::cout << "count mismatch v" << p << " -> v" << q << ": native "
                  << native << ", resolved " << resolved << "\n";
      }
    }
  bool ok = rep.ok && counts_ok;
  std::cout << (ok ? "decomposition consistent\n"
                   : "decomposition inconsistent\n");
  return ok ? 0 : 1;
}

int run_fuzz(const lf::fuzz_options& opt, bool with_floer,
             const std::string& out_dir) {
  auto corpus = lf::fuzz_corpus(opt);
  if (!out_dir.empty())
    std::filesystem::create_directories(out_dir);
  int bad = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const lf::fuzz_instance& inst = corpus[i];
    std::string status = "ok";
    try {
      lf::check_arrangement(inst.arr);
      lf::verify_admissible_position(inst.arr);
      if (with_floer)
        lf::cohomology(lf::build_complex(inst.arr, lf::coeff_kind::f2));
    } catch (const lf::log_floer_error& e) {
      status = std::string("FAIL ") + e.what();
      ++bad;
    }
    std::cout << "#" << i << " " << inst.recipe << ": " << status << "\n";
    if (!out_dir.empty())
      lf::save_text_file(
          out_dir + "/fuzz_" + std::to_string(i) + ".json",
          lf::pretty(lf::arrangement_to_json(inst.arr)));
  }
  std::cout << corpus.size() << " instances, " << bad << " failures\n";
  return (bad == 0 && static_cast<int>(corpus.size()) >= opt.count) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lune counts and log Floer cohomology for curve arrangements "
               "on log symplectic surfaces"};
  app.require_subcommand(1);

  std::string path, out_path, coeffs = "f2", strip = "1/4";
  std::string model_name, graph_path, move_kind_name;
  bool admissible = false, json = false, dot = false, crossed = false;
  bool unit_areas = false, include_z = false, smooth_only = false;
  bool immersed = false, resolve = false, flip = false, all = false;
  bool list = false, with_floer = false;
  int genus = 0, max_circles = 3, k = 4, p = -1, q = -1, vertex = -1;
  int site_a = -1, site_b = -1, random_n = 0, n_moves = 5;
  unsigned seed = 2026;
  lf::fuzz_options fopt;

  auto* c_validate = app.add_subcommand("validate", "check an arrangement");
  c_validate->add_option("file", path)->required();
  c_validate->add_flag("--admissible", admissible,
                       "also demand admissible position");

  auto* c_classify =
      app.add_subcommand("classify", "decorated graph of the surface");
  c_classify->add_option("file", path)->required();
  c_classify->add_flag("--json", json);
  c_classify->add_flag("--dot", dot);

  auto* c_enum =
      app.add_subcommand("enumerate", "surface shapes of a given genus");
  c_enum->add_option("--genus", genus)->required();
  c_enum->add_option("--max-circles", max_circles);
  c_enum->add_flag("--json", json);
  c_enum->add_flag("--dot", dot);

  auto* c_model = app.add_subcommand("model", "build a reference model");
  c_model->add_option("name", model_name)
      ->required()
      ->check(CLI::IsMember(
          {"wiggle", "necklace", "interval", "shared", "bigon", "surface"}));
  c_model->add_option("--k", k, "size parameter");
  c_model->add_flag("--crossed", crossed);
  c_model->add_option("--graph", graph_path, "decorated graph json");
  c_model->add_flag("--unit-areas", unit_areas);
  c_model->add_option("--out", out_path);

  auto* c_points = app.add_subcommand("points", "list intersection points");
  c_points->add_option("file", path)->required();
  c_points->add_flag("--flip-degrees", flip);

  auto* c_lunes = app.add_subcommand("lunes", "count lunes between points");
  c_lunes->add_option("file", path)->required();
  c_lunes->add_option("-p", p)->required();
  c_lunes->add_option("-q", q)->required();
  c_lunes->add_flag("--include-z", include_z);
  c_lunes->add_flag("--smooth-only", smooth_only);
  c_lunes->add_flag("--immersed", immersed);
  c_lunes->add_flag("--resolve", resolve, "count through the resolution");
  c_lunes->add_flag("--json", json);

  auto* c_floer = app.add_subcommand("floer", "complex and cohomology");
  c_floer->add_option("file", path)->required();
  c_floer->add_option("--coefficients", coeffs)
      ->check(CLI::IsMember({"f2", "novikov"}));
  c_floer->add_flag("--include-z", include_z);
  c_floer->add_flag("--flip-degrees", flip);
  c_floer->add_flag("--json", json);

  auto* c_push =
      app.add_subcommand("pushoff", "admissible parallel copy of alpha");
  c_push->add_option("file", path)->required();
  c_push->add_option("--out", out_path);

  auto* c_surgery =
      app.add_subcommand("surgery", "resolve the triple points");
  c_surgery->add_option("file", path)->required();
  c_surgery->add_option("--strip", strip, "strip width, a rational");
  c_surgery->add_option("--out", out_path);
  c_surgery->add_flag("--json", json, "bundle the report with the result");

  auto* c_blow = app.add_subcommand("blowup", "separate shared endpoints");
  c_blow->add_option("file", path)->required();
  c_blow->add_option("--vertex", vertex);
  c_blow->add_flag("--all", all);
  c_blow->add_option("--out", out_path);

  auto* c_moves = app.add_subcommand("moves", "elementary moves");
  c_moves->add_option("file", path)->required();
  c_moves->add_flag("--list", list);
  c_moves->add_option("--apply", move_kind_name);
  c_moves->add_option("--site-a", site_a);
  c_moves->add_option("--site-b", site_b);
  c_moves->add_option("--random", random_n);
  c_moves->add_option("--seed", seed);
  c_moves->add_option("--out", out_path);

  auto* c_inv = app.add_subcommand("invariance", "ranks under random moves");
  c_inv->add_option("file", path)->required();
  c_inv->add_option("--coefficients", coeffs)
      ->check(CLI::IsMember({"f2", "novikov"}));
  c_inv->add_option("--moves", n_moves);
  c_inv->add_option("--seed", seed);

  auto* c_cross = app.add_subcommand(
      "crosscheck", "native counts against the resolved surface");
  c_cross->add_option("file", path)->required();

  auto* c_fuzz = app.add_subcommand("fuzz", "randomized corpus");
  c_fuzz->add_option("--count", fopt.count);
  c_fuzz->add_option("--seed", fopt.seed);
  c_fuzz->add_option("--max-genus", fopt.max_genus);
  c_fuzz->add_option("--max-circles", fopt.max_circles);
  c_fuzz->add_option("--max-moves", fopt.max_moves);
  c_fuzz->add_flag("--floer", with_floer, "run the complex on each instance");
  c_fuzz->add_option("--out", out_path, "directory for instance files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(c_validate)) return run_validate(path, admissible);
    if (app.got_subcommand(c_classify)) return run_classify(path, json, dot);
    if (app.got_subcommand(c_enum))
      return run_enumerate(genus, max_circles, json, dot);
    if (app.got_subcommand(c_model))
      return run_model(model_name, k, crossed, graph_path, unit_areas,
                       out_path);
    if (app.got_subcommand(c_points)) return run_points(path, flip);
    if (app.got_subcommand(c_lunes))
      return run_lunes(path, p, q, include_z, smooth_only, immersed, resolve,
                       json);
    if (app.got_subcommand(c_floer))
      return run_floer(path, coeffs, include_z, flip, json);
    if (app.got_subcommand(c_push)) return run_pushoff(path, out_path);
    if (app.got_subcommand(c_surgery))
      return run_surgery(path, strip, out_path, json);
    if (app.got_subcommand(c_blow))
      return run_blowup(path, vertex, all, out_path);
    if (app.got_subcommand(c_moves))
      return run_moves(path, list, move_kind_name, site_a, site_b, random_n,
                       seed, out_path);
    if (app.got_subcommand(c_inv))
      return run_invariance(path, coeffs, n_moves, seed);
    if (app.got_subcommand(c_cross)) return run_crosscheck(path);
    if (app.got_subcommand(c_fuzz))
      return run_fuzz(fopt, with_floer, out_path);
  } catch (const lf::log_floer_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
