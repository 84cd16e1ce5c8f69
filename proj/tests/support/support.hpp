#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "lpa/algebra.hpp"
#include "lpa/digraph.hpp"

namespace lpa::testing {

Digraph load_fixture(const std::string& name);
std::string fixture_path(const std::string& name);

using Rng = std::mt19937_64;

// Vertices v0..v{n-1}, arrows a0..; arrow endpoints uniform.
Digraph random_digraph(Rng& rng, std::size_t max_vertices, std::size_t max_arrows);
// As random_digraph, then each s^{-1}(v) is split into random parts.
Digraph random_separated_digraph(Rng& rng, std::size_t max_vertices, std::size_t max_arrows);
// Arrows only go from v_i to v_j with i < j.
Digraph random_acyclic_digraph(Rng& rng, std::size_t max_vertices, std::size_t max_arrows);
// Disjoint cycles whose vertices emit nothing else, fed by an acyclic part.
Digraph random_no_exit_digraph(Rng& rng, std::size_t cycles, std::size_t max_tree_vertices,
                               std::size_t max_tree_arrows);

// Calls f on every digraph with exactly n vertices and k arrows for all
// 1 <= n <= max_vertices, k <= max_arrows; arrow lists are multisets of
// (src, tgt). With up_to_relabeling only one digraph per isomorphism class
// is visited.
void for_each_small_digraph(std::size_t max_vertices, std::size_t max_arrows,
                            const std::function<void(const Digraph&)>& f,
                            bool up_to_relabeling = false);

Rational random_coefficient(Rng& rng);
// Sum of up to max_terms normal words of length <= max_length.
Element random_element(Rng& rng, const Digraph& g, std::size_t max_terms, std::size_t max_length);
// One normal word with coefficient 1.
Element random_monomial(Rng& rng, const Digraph& g, std::size_t max_length);

}  // namespace lpa::testing
