#include <doctest.h>

#include "lpa/error.hpp"
#include "lpa/operator_model.hpp"

using namespace lpa;

TEST_CASE("D_0 samples the even entries") {
  const OperatorModel m = updown_model(2, 10);
  RowVector a(11);
  for (std::size_t k = 0; k <= 10; ++k) a[k] = static_cast<long>(k + 100);
  const RowVector b = row_times(a, m.ops[m.op_index("D0")].truncated);
  for (std::size_t k = 0; k <= 5; ++k) CHECK(b[k] == a[2 * k]);
  for (std::size_t k = 6; k <= 10; ++k) CHECK(b[k] == 0);
  const RowVector u = row_times(a, m.ops[m.op_index("U1")].truncated);
  CHECK(u[1] == a[0]);
  CHECK(u[3] == a[1]);
  CHECK(u[0] == 0);
}

TEST_CASE("updown relations hold on their windows") {
  for (std::size_t n = 2; n <= 4; ++n) {
    const std::size_t N = 40;
    const OperatorModel m = updown_model(n, N);
    const auto checks = check_relations(m);
    CHECK(checks.size() == n * n + 1);
    for (const auto& c : checks) CHECK(c.passed);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        CHECK(checks[i * n + j].window == (N - j) / n + 1);
      }
    }
    CHECK(checks.back().window == N + 1);
  }
  CHECK_THROWS_AS(updown_model(1, 10), Error);
  CHECK_THROWS_AS(updown_model(3, 2), Error);
}

TEST_CASE("toeplitz shifts") {
  const OperatorModel m = toeplitz_model(12);
  RowVector b0(13);
  b0[0] = 1;
  const RowVector shifted = row_times(b0, m.ops[m.op_index("S")].truncated);
  CHECK(std::all_of(shifted.begin(), shifted.end(), [](const Rational& x) { return x == 0; }));
  const auto checks = check_relations(m);
  REQUIRE(checks.size() == 2);
  CHECK(checks[0].relation == "T then S = I");
  CHECK(checks[0].passed);
  CHECK(checks[0].window == 12);
  CHECK(checks[1].passed);
  CHECK(checks[1].window == 13);
  CHECK_THROWS_AS(toeplitz_model(1), Error);
}

TEST_CASE("relations fail just outside the window") {
  const OperatorModel m = toeplitz_model(8);
  const Matrix ts = m.ops[m.op_index("T")].truncated * m.ops[m.op_index("S")].truncated;
  CHECK(ts(7, 7) == 1);
  CHECK(ts(8, 8) == 0);
  const OperatorModel u = updown_model(2, 8);
  const Matrix ud = u.ops[u.op_index("U1")].truncated * u.ops[u.op_index("D1")].truncated;
  CHECK(ud(3, 3) == 1);
  CHECK(ud(4, 4) == 0);
}
