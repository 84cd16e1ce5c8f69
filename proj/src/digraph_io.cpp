#include "lpa/digraph_io.hpp"

#include <fstream>
#include <sstream>

#include "lpa/error.hpp"

namespace lpa {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& obj, std::initializer_list<std::string_view> allowed,
                         std::string_view where) {
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (auto a : allowed) ok = ok || key == a;
    if (!ok) throw Error("unknown key '" + key + "' in " + std::string(where));
  }
}

std::string require_string(const json& j, std::string_view what) {
  if (!j.is_string()) throw Error(std::string(what) + " must be a string");
  return j.get<std::string>();
}

}  // namespace

Digraph load_digraph(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw Error("digraph description must be a JSON object");
  reject_unknown_keys(doc, {"vertices", "arrows", "separation"}, "digraph");
  if (!doc.contains("vertices") || !doc["vertices"].is_array()) {
    throw Error("digraph needs a \"vertices\" array");
  }
  std::vector<std::string> vertices;
  for (const auto& v : doc["vertices"]) vertices.push_back(require_string(v, "vertex id"));

  std::vector<ArrowSpec> arrows;
  if (doc.contains("arrows")) {
    if (!doc["arrows"].is_array()) throw Error("\"arrows\" must be an array");
    for (const auto& a : doc["arrows"]) {
      if (!a.is_object()) throw Error("each arrow must be an object");
      reject_unknown_keys(a, {"id", "src", "tgt"}, "arrow");
      for (const char* key : {"id", "src", "tgt"}) {
        if (!a.contains(key)) throw Error(std::string("arrow is missing \"") + key + "\"");
      }
      arrows.push_back({require_string(a["id"], "arrow id"), require_string(a["src"], "arrow src"),
                        require_string(a["tgt"], "arrow tgt")});
    }
  }

  std::optional<std::vector<std::vector<std::string>>> separation;
  if (doc.contains("separation")) {
    if (!doc["separation"].is_array()) throw Error("\"separation\" must be an array of arrays");
    auto& parts = separation.emplace();
    for (const auto& part : doc["separation"]) {
      if (!part.is_array()) throw Error("\"separation\" must be an array of arrays");
      auto& ids = parts.emplace_back();
      for (const auto& id : part) ids.push_back(require_string(id, "separation entry"));
    }
  }
  return Digraph(std::move(vertices), std::move(arrows), std::move(separation));
}

Digraph load_digraph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return load_digraph(buf.str());
}

nlohmann::ordered_json digraph_to_json(const Digraph& g) {
  nlohmann::ordered_json j;
  j["vertices"] = g.vertex_names();
  j["arrows"] = nlohmann::ordered_json::array();
  for (const auto& a : g.arrows()) {
    j["arrows"].push_back({{"id", a.id}, {"src", g.vertex_name(a.src)}, {"tgt", g.vertex_name(a.tgt)}});
  }
  j["separation"] = g.separation_ids();
  return j;
}

}  // namespace lpa
