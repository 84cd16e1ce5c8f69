#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lpa/algebra.hpp"
#include "lpa/digraph.hpp"
#include "lpa/dimfun.hpp"
#include "lpa/matrix.hpp"

namespace lpa {

// Vectors are rows acting from the left; arrow_mats[e] is dims[s e] x dims[t e]
// and dual_mats[e] is dims[t e] x dims[s e].
struct QuiverRep {
  std::vector<std::size_t> dims;
  std::vector<Matrix> arrow_mats;
  std::vector<Matrix> dual_mats;

  std::size_t total_dimension() const;
  friend bool operator==(const QuiverRep&, const QuiverRep&) = default;
};

// For each part X, θ_X is the identity of size d(sX), or a random invertible
// matrix when a seed is given. ρ(e) is the column block of θ_X belonging to
// e and the dual is the matching row block of θ_X^{-1}. Throws unless d verifies.
QuiverRep build_rep(const Digraph& g, const DimensionFunction& d,
                    std::optional<std::uint64_t> seed = std::nullopt);

struct RelationCheck {
  std::string relation;  // "V", "E", "SCK1" or "SCK2"
  std::string instance;  // human-readable instance, built from ids
  bool passed = false;
  bool structural = false;  // holds by the block form, nothing to compute
};

struct RelationReport {
  std::vector<RelationCheck> checks;
  bool all_passed() const;
  std::size_t failures() const;
};

// Throws lpa::Error when a matrix shape disagrees with dims.
RelationReport verify_relations(const Digraph& g, const QuiverRep& r);

// One row vector per vertex, of length dims[v].
using BlockVector = std::vector<RowVector>;

BlockVector zero_block_vector(const QuiverRep& r);
BlockVector rep_to_module_action(const Digraph& g, const QuiverRep& r, const Element& x,
                                 const BlockVector& vec);
// Matrix of the right action of x on ⊕_v ρ(v), blocks in vertex order.
Matrix action_matrix(const Digraph& g, const QuiverRep& r, const Element& x);

struct SupportSubgraph {
  Digraph subgraph;
  std::vector<Vertex> vertices;  // g-indices, ascending
  SubgraphFlags flags;
};

SupportSubgraph support_subgraph(const Digraph& g, const QuiverRep& r);

// n(v) = 1 + Σ_{a: t a = v} n(s a). Throws when a cycle reaches v or the
// count exceeds 64 bits.
std::uint64_t path_count_to(const Digraph& g, Vertex v);

// |P^C|: paths ending at the anchor of c that do not end with c. Throws
// unless c is the only cycle among the predecessors of its anchor.
std::uint64_t paths_to_cycle_count(const Digraph& g, const Cycle& c);

// The module M^w on the paths ending at the sink w. basis is grouped by
// start vertex (vertex order), each group by length and then arrows.
struct SinkModule {
  Vertex sink = 0;
  std::vector<Path> basis;
  std::vector<std::size_t> offset;  // first basis index of each vertex block
  QuiverRep rep;

  std::size_t index_of(const Path& p) const;
  // Right action of a monomial on the whole basis.
  Matrix image(const Digraph& g, const Monomial& m) const;
  // E_{p,q}: b_p ↦ b_q.
  Matrix elementary(const Path& p, const Path& q) const;
};

// Throws when w is not a sink, a cycle reaches w, or g is separated.
SinkModule sink_module(const Digraph& g, Vertex w);

// Eventually periodic Chen module on the class of C^∞. A token is a prefix p
// with t(p) = anchor that does not end with C, standing for p C^∞.
struct ChenModule {
  Cycle cycle;
  std::vector<Path> tokens;  // grouped by start vertex like SinkModule::basis
  QuiverRep rep;

  std::size_t index_of(const Path& p) const;
};

// Throws when g is separated, c is not a cycle of g, or P^C is infinite.
ChenModule chen_module(const Digraph& g, const Cycle& c);

// β·x for a single token β and generator x; nullopt is the zero vector.
std::optional<std::size_t> chen_act(const Digraph& g, const ChenModule& m, Generator x,
                                    std::size_t token);

// Linear extension over a combination of tokens (coefficients by token index).
RowVector chen_action(const Digraph& g, const ChenModule& m, Generator x, const RowVector& vec);

}  // namespace lpa
