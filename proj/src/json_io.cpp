#include "logfloer/json_io.hpp"

#include <fstream>
#include <sstream>

#include "logfloer/error.hpp"

namespace logfloer {

namespace {

// json access and number parsing raise library exceptions; fold them into
// the error taxonomy with a field hint
template <typename F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const log_floer_error&) {
    throw;
  } catch (const std::exception& e) {
    fail(errk::bad_input, std::string(what) + ": " + e.what());
  }
}

void check_version(const ojson& j, const char* type) {
  require(j.is_object() && j.contains("schema_version"), errk::bad_input,
          std::string(type) + ": missing schema_version");
  require(j.at("schema_version") == 1, errk::bad_input,
          std::string(type) + ": unsupported schema_version");
}

std::string label_str(const edge_label& l) {
  switch (l.kind) {
    case edge_kind::alpha: return "alpha";
    case edge_kind::beta: return "beta";
    case edge_kind::z: return "z:" + std::to_string(l.circle);
    case edge_kind::aux: return "aux";
  }
  return "aux";
}

edge_label label_parse(const std::string& s) {
  if (s == "alpha") return {edge_kind::alpha, -1};
  if (s == "beta") return {edge_kind::beta, -1};
  if (s == "aux") return {edge_kind::aux, -1};
  if (s.rfind("z:", 0) == 0) return {edge_kind::z, std::stoi(s.substr(2))};
  fail(errk::bad_input, "unknown edge label '" + s + "'");
}

ojson rational_map_json(const std::map<int, rational>& m) {
  ojson j = ojson::object();
  for (const auto& [k, v] : m) j[std::to_string(k)] = v.str();
  return j;
}

std::map<int, rational> rational_map_parse(const ojson& j) {
  std::map<int, rational> m;
  for (auto it = j.begin(); it != j.end(); ++it)
    m[std::stoi(it.key())] = rational::parse(it.value().get<std::string>());
  return m;
}

}  // namespace

// ---------------------------------------------------------------------------
// combinatorial maps
// ---------------------------------------------------------------------------

ojson combmap_to_json(const comb_map& m) {
  ojson j;
  j["schema_version"] = 1;
  j["type"] = "combmap";
  j["darts"] = m.n;
  j["rotation"] = m.rot;
  j["pairing"] = m.opp;
  j["boundary_faces"] = m.boundary_faces;
  j["allow_multi"] = m.allow_multi;
  return j;
}

comb_map combmap_from_json(const ojson& j) {
  return guarded("combmap", [&] {
    check_version(j, "combmap");
    comb_map m;
    m.n = j.at("darts").get<int>();
    m.rot = j.at("rotation").get<std::vector<int>>();
    m.opp = j.at("pairing").get<std::vector<int>>();
    m.boundary_faces = j.at("boundary_faces").get<std::vector<int>>();
    if (j.contains("allow_multi"))
      m.allow_multi = j.at("allow_multi").get<bool>();
    m.validate(false);
    return m;
  });
}

// ---------------------------------------------------------------------------
// arrangements
// ---------------------------------------------------------------------------

ojson arrangement_to_json(const arrangement& a) {
  ojson j;
  j["schema_version"] = 1;
  j["type"] = "arrangement";
  j["darts"] = a.map.n;
  j["rotation"] = a.map.rot;
  j["pairing"] = a.map.opp;
  j["boundary_faces"] = a.map.boundary_faces;
  std::vector<std::string> labels;
  for (const auto& l : a.labels) labels.push_back(label_str(l));
  j["edge_labels"] = labels;
  std::vector<int> ao, bo;
  for (int d = 0; d < a.map.n; ++d) {
    if (!a.along[d]) continue;
    if (a.is_kind(d, edge_kind::alpha)) ao.push_back(d);
    if (a.is_kind(d, edge_kind::beta)) bo.push_back(d);
  }
  j["alpha_orientation"] = ao;
  j["beta_orientation"] = bo;
  ojson signs = ojson::object();
  for (const auto& [r, s] : a.component_signs) signs[std::to_string(r)] = s;
  j["component_signs"] = signs;
  if (!a.face_areas.empty()) j["face_areas"] = rational_map_json(a.face_areas);
  if (!a.modular_periods.empty())
    j["modular_periods"] = rational_map_json(a.modular_periods);
  if (a.volume) j["volume"] = a.volume->str();
  if (!a.seam_tags.empty()) {
    ojson seams = ojson::object();
    for (const auto& [e, t] : a.seam_tags) seams[std::to_string(e)] = t;
    j["seam_tags"] = seams;
  }
  return j;
}

arrangement arrangement_from_json(const ojson& j) {
  return guarded("arrangement", [&] {
  check_version(j, "arrangement");
  arrangement a;
  a.map.n = j.at("darts").get<int>();
  a.map.rot = j.at("rotation").get<std::vector<int>>();
  a.map.opp = j.at("pairing").get<std::vector<int>>();
  a.map.boundary_faces = j.at("boundary_faces").get<std::vector<int>>();
  a.map.validate(false);
  for (const auto& s : j.at("edge_labels"))
    a.labels.push_back(label_parse(s.get<std::string>()));
  require(static_cast<int>(a.labels.size()) == a.map.n, errk::bad_input,
          "one edge label per dart required");
  a.along.assign(a.map.n, 0);
  for (const auto& key : {"alpha_orientation", "beta_orientation"})
    for (const auto& d : j.at(key)) {
      int i = d.get<int>();
      require(i >= 0 && i < a.map.n, errk::bad_input,
              "orientation dart out of range");
      a.along[i] = 1;
    }
  for (auto it = j.at("component_signs").begin();
       it != j.at("component_signs").end(); ++it)
    a.component_signs[std::stoi(it.key())] = it.value().get<int>();
  if (j.contains("face_areas"))
    a.face_areas = rational_map_parse(j.at("face_areas"));
  if (j.contains("modular_periods"))
    a.modular_periods = rational_map_parse(j.at("modular_periods"));
  if (j.contains("volume"))
    a.volume = rational::parse(j.at("volume").get<std::string>());
  if (j.contains("seam_tags"))
    for (auto it = j.at("seam_tags").begin(); it != j.at("seam_tags").end();
         ++it)
      a.seam_tags[std::stoi(it.key())] = it.value().get<int>();
  return a;
  });
}

// ---------------------------------------------------------------------------
// graphs
// ---------------------------------------------------------------------------

ojson graph_to_json(const log_graph& g) {
  ojson j;
  j["schema_version"] = 1;
  j["type"] = "graph";
  j["vertices"] = ojson::array();
  for (const auto& v : g.vertices)
    j["vertices"].push_back({{"sign", v.sign}, {"genus", v.genus}});
  j["edges"] = ojson::array();
  for (const auto& e : g.edges)
    j["edges"].push_back({{"u", e.u}, {"v", e.v}, {"tau", e.tau.str()}});
  j["volume"] = g.volume.str();
  return j;
}

log_graph graph_from_json(const ojson& j) {
  return guarded("graph", [&] {
    check_version(j, "graph");
    log_graph g;
    for (const auto& v : j.at("vertices"))
      g.vertices.push_back(
          {v.at("sign").get<int>(), v.at("genus").get<int>()});
    for (const auto& e : j.at("edges"))
      g.edges.push_back({e.at("u").get<int>(), e.at("v").get<int>(),
                         rational::parse(e.at("tau").get<std::string>())});
    g.volume = rational::parse(j.at("volume").get<std::string>());
    g.validate();
    return g;
  });
}

// ---------------------------------------------------------------------------
// files
// ---------------------------------------------------------------------------

std::string pretty(const ojson& j) { return j.dump(2) + "\n"; }

ojson load_json_file(const std::string& path) {
  std::ifstream in(path);
  require(bool(in), errk::bad_input, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return guarded(path.c_str(), [&] { return ojson::parse(buf.str()); });
}

void save_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  require(bool(out), errk::bad_input, "cannot write " + path);
  out << text;
}

}  // namespace logfloer
