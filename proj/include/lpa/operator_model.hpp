#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lpa/matrix.hpp"

namespace lpa {

// An operator on sequences a = (a_0 a_1 ...) acting on the right. On basis
// vectors it is a partial map of indices: b_k ↦ b_{map(k)}, or 0.
struct SequenceOperator {
  std::string name;
  std::function<std::optional<std::size_t>(std::size_t)> map;
  Matrix truncated;  // (N+1) x (N+1) restriction to indices 0..N
};

// word lists operator indices in application order: the first entry acts first.
struct OperatorTerm {
  Rational coefficient;
  std::vector<std::size_t> word;
};

struct OperatorRelation {
  std::string name;
  std::vector<OperatorTerm> lhs;
  std::vector<OperatorTerm> rhs;
};

struct OperatorModel {
  std::size_t truncation = 0;  // basis indices 0..truncation
  std::vector<SequenceOperator> ops;
  std::vector<OperatorRelation> relations;

  std::size_t op_index(const std::string& name) const;
};

struct OperatorCheck {
  std::string relation;
  // Basis indices 0..window-1 keep every intermediate image inside 0..N.
  std::size_t window = 0;
  bool passed = false;
};

// D_i, U_i for 0 <= i < n with (a D_i)_k = a_{nk+i} and (a U_i)_k = a_{(k-i)/n}
// when k ≡ i (mod n), else 0. Relations: U_j then D_i is δ_ij I, and
// Σ_i (D_i then U_i) = I. Throws unless n >= 2 and N >= n.
OperatorModel updown_model(std::size_t n, std::size_t N);

// S left shift and T right shift with E00 the projection onto index 0.
// Relations: T then S is I, and I - (S then T) = E00. Throws unless N >= 2.
OperatorModel toeplitz_model(std::size_t N);

// Evaluates every relation with the truncated matrices on the rows whose
// images never leave the window.
std::vector<OperatorCheck> check_relations(const OperatorModel& m);

}  // namespace lpa
