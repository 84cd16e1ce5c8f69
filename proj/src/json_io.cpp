#include "lpa/json_io.hpp"

#include <limits>

#include "lpa/error.hpp"

namespace lpa {

using nlohmann::json;

ojson dimfun_to_json(const Digraph& g, const DimensionFunction& d) {
  if (d.values.size() != g.vertex_count()) throw Error("dimension function has the wrong length");
  ojson j = ojson::object();
  for (Vertex v = 0; v < g.vertex_count(); ++v) j[g.vertex_name(v)] = d.values[v];
  return j;
}

DimensionFunction dimfun_from_json(const Digraph& g, const json& j) {
  if (!j.is_object()) throw Error("dimension function must be a JSON object");
  DimensionFunction d{std::vector<std::uint64_t>(g.vertex_count(), 0)};
  std::vector<bool> seen(g.vertex_count(), false);
  for (const auto& [key, value] : j.items()) {
    auto v = g.find_vertex(key);
    if (!v) throw Error("dimension function names unknown vertex '" + key + "'");
    if (!value.is_number_unsigned()) throw Error("dimension of '" + key + "' must be a natural number");
    d.values[*v] = value.get<std::uint64_t>();
    seen[*v] = true;
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!seen[v]) throw Error("dimension function is missing vertex '" + g.vertex_name(v) + "'");
  }
  return d;
}

ojson matrix_to_json(const Matrix& m) {
  ojson rows = ojson::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    ojson row = ojson::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols, const std::string& what) {
  if (!j.is_array() || j.size() != rows) {
    throw Error(what + " must have " + std::to_string(rows) + " rows");
  }
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const json& row = j[r];
    if (!row.is_array() || row.size() != cols) {
      throw Error(what + " must have " + std::to_string(cols) + " columns");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      const json& x = row[c];
      if (x.is_string()) {
        m(r, c) = parse_rational(x.get<std::string>());
      } else if (x.is_number_integer()) {
        m(r, c) = Rational(std::to_string(x.get<long long>()));
      } else {
        throw Error(what + " entries must be strings \"p/q\" or integers");
      }
    }
  }
  return m;
}

}  // namespace

ojson rep_to_json(const Digraph& g, const QuiverRep& r) {
  ojson j;
  j["dims"] = ojson::object();
  for (Vertex v = 0; v < g.vertex_count(); ++v) j["dims"][g.vertex_name(v)] = r.dims.at(v);
  j["arrows"] = ojson::object();
  j["duals"] = ojson::object();
  for (ArrowIdx e = 0; e < g.arrow_count(); ++e) {
    j["arrows"][g.arrow(e).id] = matrix_to_json(r.arrow_mats.at(e));
    j["duals"][g.arrow(e).id] = matrix_to_json(r.dual_mats.at(e));
  }
  return j;
}

QuiverRep rep_from_json(const Digraph& g, const json& j) {
  if (!j.is_object()) throw Error("representation must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key != "dims" && key != "arrows" && key != "duals") {
      throw Error("unknown key '" + key + "' in representation");
    }
  }
  for (const char* key : {"dims", "arrows", "duals"}) {
    if (!j.contains(key) || !j[key].is_object()) {
      throw Error(std::string("representation needs an object \"") + key + "\"");
    }
  }
  QuiverRep r;
  const DimensionFunction d = dimfun_from_json(g, j["dims"]);
  for (std::uint64_t x : d.values) {
    if (x > std::numeric_limits<std::size_t>::max()) throw Error("dimension too large");
    r.dims.push_back(static_cast<std::size_t>(x));
  }
  for (const char* key : {"arrows", "duals"}) {
    for (const auto& [id, value] : j[key].items()) {
      if (!g.find_arrow(id)) throw Error("representation names unknown arrow '" + id + "'");
    }
  }
  for (ArrowIdx e = 0; e < g.arrow_count(); ++e) {
    const Arrow& a = g.arrow(e);
    if (!j["arrows"].contains(a.id)) throw Error("representation is missing arrow '" + a.id + "'");
    if (!j["duals"].contains(a.id)) throw Error("representation is missing dual of '" + a.id + "'");
    r.arrow_mats.push_back(matrix_from_json(j["arrows"][a.id], r.dims[a.src], r.dims[a.tgt], "matrix of '" + a.id + "'"));
    r.dual_mats.push_back(matrix_from_json(j["duals"][a.id], r.dims[a.tgt], r.dims[a.src], "matrix of '" + a.id + "^'"));
  }
  return r;
}

ojson anchor_to_json(const Digraph& g, const SinkOrCycle& a) {
  ojson j;
  if (const Vertex* w = std::get_if<Vertex>(&a)) {
    j["kind"] = "sink";
    j["anchor"] = g.vertex_name(*w);
  } else {
    const Cycle& c = std::get<Cycle>(a);
    j["kind"] = "cycle";
    j["anchor"] = g.vertex_name(c.anchor);
    ojson arrows = ojson::array();
    for (ArrowIdx e : c.arrows) arrows.push_back(g.arrow(e).id);
    j["arrows"] = std::move(arrows);
  }
  return j;
}

ojson summands_to_json(const Digraph& g, const std::vector<Summand>& summands) {
  ojson list = ojson::array();
  for (const Summand& s : summands) {
    ojson j = anchor_to_json(g, s.anchor);
    j["n"] = s.n;
    list.push_back(std::move(j));
  }
  return ojson{{"summands", std::move(list)}};
}

ojson grade_to_json(const Digraph& g, const Grade& gr) {
  ojson fe = ojson::array();
  for (const FreeLetter& f : gr.fe) {
    fe.push_back(g.arrow(f.arrow).id + (f.exponent < 0 ? "^-1" : ""));
  }
  return ojson{{"z", gr.z}, {"fe", std::move(fe)}};
}

ojson element_to_json(const Digraph& g, const Element& a) {
  ojson terms = ojson::array();
  for (const auto& [m, c] : a.terms()) {
    terms.push_back(ojson{{"coefficient", to_string(c)}, {"monomial", monomial_to_string(g, m)}});
  }
  return ojson{{"text", to_string(g, a)}, {"terms", std::move(terms)}};
}

}  // namespace lpa
