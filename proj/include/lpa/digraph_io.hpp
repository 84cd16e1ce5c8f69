#pragma once

#include <filesystem>
#include <string_view>

#include <json.hpp>

#include "lpa/digraph.hpp"

namespace lpa {

// {"vertices": [...], "arrows": [{"id","src","tgt"}...], "separation": [[...]]}
// "separation" is optional; any other key is rejected.
Digraph load_digraph(std::string_view json_text);
Digraph load_digraph_file(const std::filesystem::path& path);

nlohmann::ordered_json digraph_to_json(const Digraph& g);

}  // namespace lpa
