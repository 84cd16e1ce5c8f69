#pragma once

#include <cstdint>
#include <vector>

#include "lpa/digraph.hpp"

namespace lpa {

// Rows indexed by parts, columns by vertices:
// row(X) = χ_{s(X)} - Σ_{e∈X} χ_{t(e)}, multiplicities counted.
struct RelationMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<std::int64_t>> entries;
};

// values[v] for every vertex v of the digraph it belongs to.
struct DimensionFunction {
  std::vector<std::uint64_t> values;

  bool is_zero() const;
  friend bool operator==(const DimensionFunction&, const DimensionFunction&) = default;
  friend auto operator<=>(const DimensionFunction&, const DimensionFunction&) = default;
};

DimensionFunction operator+(const DimensionFunction& a, const DimensionFunction& b);

RelationMatrix relation_matrix(const Digraph& g);

// Throws lpa::Error when d does not assign a value to every vertex.
bool verify(const Digraph& g, const DimensionFunction& d);

// Exact decision of A d = 0, d >= 0, Σ d >= 1 by Fourier–Motzkin elimination.
bool has_nonzero_dimfun(const Digraph& g);

struct HilbertBasis {
  std::vector<DimensionFunction> basis;  // sorted by total, then values
  bool complete = true;                  // false when the bound cut a branch
};

// Minimal nonzero solutions, each with all entries <= bound, by the
// Contejean–Devie completion procedure. Throws when bound == 0.
HilbertBasis hilbert_basis(const Digraph& g, std::uint64_t bound);

// True when the all-ones vector is outside the rational row span of the
// relation matrix.
bool ibn_check(const Digraph& g);

}  // namespace lpa
