#include "lpa/operator_model.hpp"

#include "lpa/error.hpp"

namespace lpa {

std::size_t OperatorModel::op_index(const std::string& name) const {
  for (std::size_t i = 0; i < ops.size(); ++i)
    if (ops[i].name == name) return i;
  throw Error("no operator named " + name);
}

namespace {

SequenceOperator make_op(std::string name, std::size_t N,
                         std::function<std::optional<std::size_t>(std::size_t)> map) {
  SequenceOperator op{std::move(name), std::move(map), Matrix(N + 1, N + 1)};
  for (std::size_t k = 0; k <= N; ++k) {
    if (auto j = op.map(k); j && *j <= N) op.truncated(k, *j) = 1;
  }
  return op;
}

}  // namespace

OperatorModel updown_model(std::size_t n, std::size_t N) {
  if (n < 2) throw Error("updown model needs n >= 2");
  if (N < n) throw Error("updown model needs N >= n");
  OperatorModel m;
  m.truncation = N;
  for (std::size_t i = 0; i < n; ++i) {
    m.ops.push_back(make_op("D" + std::to_string(i), N, [n, i](std::size_t k) -> std::optional<std::size_t> {
      if (k % n != i) return std::nullopt;
      return (k - i) / n;
    }));
  }
  for (std::size_t i = 0; i < n; ++i) {
    m.ops.push_back(make_op("U" + std::to_string(i), N,
                            [n, i](std::size_t k) -> std::optional<std::size_t> { return n * k + i; }));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      OperatorRelation r;
      r.name = "U" + std::to_string(j) + " then D" + std::to_string(i) + " = " + (i == j ? "I" : "0");
      r.lhs.push_back({1, {n + j, i}});
      if (i == j) r.rhs.push_back({1, {}});
      m.relations.push_back(std::move(r));
    }
  }
  OperatorRelation sum;
  sum.name = "sum over i of (D_i then U_i) = I";
  for (std::size_t i = 0; i < n; ++i) sum.lhs.push_back({1, {i, n + i}});
  sum.rhs.push_back({1, {}});
  m.relations.push_back(std::move(sum));
  return m;
}

OperatorModel toeplitz_model(std::size_t N) {
  if (N < 2) throw Error("toeplitz model needs N >= 2");
  OperatorModel m;
  m.truncation = N;
  m.ops.push_back(make_op("S", N, [](std::size_t k) -> std::optional<std::size_t> {
    if (k == 0) return std::nullopt;
    return k - 1;
  }));
  m.ops.push_back(make_op("T", N, [](std::size_t k) -> std::optional<std::size_t> { return k + 1; }));
  m.ops.push_back(make_op("E00", N, [](std::size_t k) -> std::optional<std::size_t> {
    if (k != 0) return std::nullopt;
    return 0;
  }));
  m.relations.push_back({"T then S = I", {{1, {1, 0}}}, {{1, {}}}});
  m.relations.push_back({"I - (S then T) = E00", {{1, {}}, {-1, {0, 1}}}, {{1, {2}}}});
  return m;
}

namespace {

bool index_safe(const OperatorModel& m, const OperatorTerm& t, std::size_t k) {
  std::size_t at = k;
  for (std::size_t op : t.word) {
    auto next = m.ops[op].map(at);
    if (!next) return true;
    if (*next > m.truncation) return false;
    at = *next;
  }
  return true;
}

Matrix side_matrix(const OperatorModel& m, const std::vector<OperatorTerm>& side) {
  const std::size_t size = m.truncation + 1;
  Matrix out(size, size);
  for (const OperatorTerm& t : side) {
    Matrix w = Matrix::identity(size);
    for (std::size_t op : t.word) w = w * m.ops[op].truncated;
    out += t.coefficient * w;
  }
  return out;
}

}  // namespace

std::vector<OperatorCheck> check_relations(const OperatorModel& m) {
  std::vector<OperatorCheck> out;
  const std::size_t size = m.truncation + 1;
  for (const OperatorRelation& r : m.relations) {
    OperatorCheck c;
    c.relation = r.name;
    while (c.window < size) {
      bool safe = true;
      for (const auto* side : {&r.lhs, &r.rhs})
        for (const OperatorTerm& t : *side) safe = safe && index_safe(m, t, c.window);
      if (!safe) break;
      ++c.window;
    }
    const Matrix lhs = side_matrix(m, r.lhs);
    const Matrix rhs = side_matrix(m, r.rhs);
    c.passed = c.window > 0;
    for (std::size_t k = 0; k < c.window && c.passed; ++k)
      for (std::size_t j = 0; j < size; ++j)
        if (lhs(k, j) != rhs(k, j)) {
          c.passed = false;
          break;
        }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace lpa
