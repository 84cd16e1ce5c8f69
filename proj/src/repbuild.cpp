#include "lpa/repbuild.hpp"

#include <algorithm>
#include <numeric>

#include "lpa/error.hpp"

namespace lpa {

std::size_t QuiverRep::total_dimension() const {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{0});
}

bool RelationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const RelationCheck& c) { return c.passed; });
}

std::size_t RelationReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const RelationCheck& c) { return !c.passed; }));
}

QuiverRep build_rep(const Digraph& g, const DimensionFunction& d, std::optional<std::uint64_t> seed) {
  if (!verify(g, d)) throw Error("not a dimension function of this digraph");
  QuiverRep r;
  r.dims.resize(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) r.dims[v] = static_cast<std::size_t>(d.values[v]);
  r.arrow_mats.resize(g.arrow_count());
  r.dual_mats.resize(g.arrow_count());
  for (PartIdx x = 0; x < g.part_count(); ++x) {
    const std::size_t n = r.dims[g.part_source(x)];
    Matrix theta = seed ? Matrix::random_invertible(n, *seed * 1000003u + x) : Matrix::identity(n);
    Matrix inv = *theta.inverse();
    std::size_t at = 0;
    for (ArrowIdx e : g.part(x)) {
      const std::size_t w = r.dims[g.arrow(e).tgt];
      r.arrow_mats[e] = theta.block(0, at, n, w);
      r.dual_mats[e] = inv.block(at, 0, w, n);
      at += w;
    }
  }
  return r;
}

namespace {

void check_shapes(const Digraph& g, const QuiverRep& r) {
  if (r.dims.size() != g.vertex_count()) throw Error("representation has the wrong number of vertices");
  if (r.arrow_mats.size() != g.arrow_count() || r.dual_mats.size() != g.arrow_count()) {
    throw Error("representation has the wrong number of arrows");
  }
  for (ArrowIdx e = 0; e < g.arrow_count(); ++e) {
    const Arrow& a = g.arrow(e);
    const Matrix& m = r.arrow_mats[e];
    const Matrix& dm = r.dual_mats[e];
    if (m.rows() != r.dims[a.src] || m.cols() != r.dims[a.tgt]) {
      throw Error("matrix of arrow '" + a.id + "' has the wrong shape");
    }
    if (dm.rows() != r.dims[a.tgt] || dm.cols() != r.dims[a.src]) {
      throw Error("matrix of dual arrow '" + a.id + "^' has the wrong shape");
    }
  }
}

}  // namespace

RelationReport verify_relations(const Digraph& g, const QuiverRep& r) {
  check_shapes(g, r);
  RelationReport rep;
  rep.checks.push_back({"V", "vertices act as block projections", true, true});
  rep.checks.push_back({"E", "arrow matrices map ρ(s e) to ρ(t e)", true, true});
  for (PartIdx x = 0; x < g.part_count(); ++x) {
    const auto part = g.part(x);
    for (ArrowIdx e : part) {
      for (ArrowIdx f : part) {
        const Matrix prod = r.dual_mats[e] * r.arrow_mats[f];
        const Matrix expect = e == f ? Matrix::identity(r.dims[g.arrow(e).tgt])
                                     : Matrix(r.dims[g.arrow(e).tgt], r.dims[g.arrow(f).tgt]);
        rep.checks.push_back({"SCK1", g.arrow(e).id + "^ " + g.arrow(f).id, prod == expect, false});
      }
    }
    const std::size_t n = r.dims[g.part_source(x)];
    Matrix sum(n, n);
    std::string label;
    for (ArrowIdx e : part) {
      sum += r.arrow_mats[e] * r.dual_mats[e];
      if (!label.empty()) label += " + ";
      label += g.arrow(e).id + " " + g.arrow(e).id + "^";
    }
    rep.checks.push_back({"SCK2", g.vertex_name(g.part_source(x)) + " = " + label,
                          sum == Matrix::identity(n), false});
  }
  return rep;
}

BlockVector zero_block_vector(const QuiverRep& r) {
  BlockVector v;
  for (std::size_t d : r.dims) v.emplace_back(d, Rational(0));
  return v;
}

BlockVector rep_to_module_action(const Digraph& g, const QuiverRep& r, const Element& x,
                                 const BlockVector& vec) {
  check_shapes(g, r);
  if (vec.size() != r.dims.size()) throw Error("block vector has the wrong number of blocks");
  for (Vertex v = 0; v < vec.size(); ++v) {
    if (vec[v].size() != r.dims[v]) throw Error("block vector has a block of the wrong size");
  }
  BlockVector out = zero_block_vector(r);
  for (const auto& [m, c] : x.terms()) {
    RowVector cur = vec[m.source()];
    for (Letter l : m.letters()) {
      cur = row_times(cur, l.dual ? r.dual_mats[l.arrow] : r.arrow_mats[l.arrow]);
    }
    RowVector& dst = out[m.target(g)];
    for (std::size_t i = 0; i < cur.size(); ++i) dst[i] += c * cur[i];
  }
  return out;
}

Matrix action_matrix(const Digraph& g, const QuiverRep& r, const Element& x) {
  check_shapes(g, r);
  std::vector<std::size_t> offset(r.dims.size() + 1, 0);
  for (std::size_t v = 0; v < r.dims.size(); ++v) offset[v + 1] = offset[v] + r.dims[v];
  Matrix out(offset.back(), offset.back());
  for (const auto& [m, c] : x.terms()) {
    const Vertex s = m.source();
    Matrix cur = Matrix::identity(r.dims[s]);
    for (Letter l : m.letters()) cur = cur * (l.dual ? r.dual_mats[l.arrow] : r.arrow_mats[l.arrow]);
    const Vertex t = m.target(g);
    for (std::size_t i = 0; i < cur.rows(); ++i)
      for (std::size_t j = 0; j < cur.cols(); ++j) out(offset[s] + i, offset[t] + j) += c * cur(i, j);
  }
  return out;
}

SupportSubgraph support_subgraph(const Digraph& g, const QuiverRep& r) {
  if (r.dims.size() != g.vertex_count()) throw Error("representation has the wrong number of vertices");
  SupportSubgraph s;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (r.dims[v] > 0) s.vertices.push_back(v);
  s.subgraph = induced_subgraph(g, s.vertices);
  s.flags = subgraph_flags(g, s.subgraph);
  return s;
}

}  // namespace lpa
