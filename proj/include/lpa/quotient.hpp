#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lpa/algebra.hpp"
#include "lpa/digraph.hpp"

namespace lpa {

// One matrix-algebra summand M_n(B). For a sink B is the field; for a cycle B
// is F[x]/(P) in a quotient, or F[x, x^-1] in a locally finite algebra.
struct Summand {
  SinkOrCycle anchor;
  std::uint64_t n = 0;

  bool is_sink() const { return std::holds_alternative<Vertex>(anchor); }
};

struct QuotientShape {
  std::vector<Summand> summands;
};

struct InstantiatedQuotient {
  QuotientShape shape;
  // Coefficients constant term first; empty for sink summands.
  std::vector<std::vector<Rational>> polynomials;
  std::vector<std::size_t> degrees;  // 1 for sinks, deg P otherwise
  mpz_class total_dimension;         // Σ n² · degree
};

// The operations below throw lpa::Error for separated digraphs; the
// linear test has_nonzero_dimfun covers those.
bool has_findim_quotient(const Digraph& g);
QuotientShape classify_quotients(const Digraph& g);

// polys maps a summand index to P with P(0) = 1 and deg P >= 1; every cycle
// summand needs one and sink summands take none.
InstantiatedQuotient instantiate(const QuotientShape& shape,
                                 const std::map<std::size_t, std::vector<Rational>>& polys);

// One summand per sink and per cycle. Throws when some cycle has an exit.
std::vector<Summand> locally_finite_structure(const Digraph& g);

// The onto homomorphism L(g) -> L(sub) that is the identity on generators of
// sub and kills the rest. Throws unless sub is a full, cohereditary and
// colorful subgraph carrying the inherited separation.
Element theta_map(const Digraph& g, const Digraph& sub, const Element& x);

// Hereditary saturated vertex sets, sorted by size and then lexicographically
// in vertex order.
std::vector<std::vector<Vertex>> graded_ideals(const Digraph& g);

struct AlgebraClassification {
  bool finite_dimensional = false;  // acyclic
  bool locally_finite = false;      // no cycle has an exit
  bool finite_gk = false;           // cycles pairwise disjoint
  bool has_findim_quotient = false;
  bool ibn = false;
};

// Throws std::logic_error if the computed flags break the implication chain
// on a nonempty digraph.
AlgebraClassification classify_algebra(const Digraph& g);

}  // namespace lpa
