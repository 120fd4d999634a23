#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "logfloer/arrangement.hpp"
#include "logfloer/graphclass.hpp"

namespace logfloer {

// ---------------------------------------------------------------------------
// serialization
// ---------------------------------------------------------------------------
//
// Stable on-disk forms with schema_version 1.  Rationals are strings like
// "3" or "-1/2"; dart, face and circle indices are plain integers; objects
// keyed by indices use decimal string keys.  Serialization is deterministic
// and round trips bit for bit.

using ojson = nlohmann::ordered_json;

ojson combmap_to_json(const comb_map& m);
comb_map combmap_from_json(const ojson& j);

ojson arrangement_to_json(const arrangement& a);
arrangement arrangement_from_json(const ojson& j);

ojson graph_to_json(const log_graph& g);
log_graph graph_from_json(const ojson& j);

// canonical textual form: two space indent plus trailing newline
std::string pretty(const ojson& j);

ojson load_json_file(const std::string& path);
void save_text_file(const std::string& path, const std::string& text);

}  // namespace logfloer
