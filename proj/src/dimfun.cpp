#include "lpa/dimfun.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "lpa/error.hpp"
#include "lpa/matrix.hpp"

namespace lpa {

bool DimensionFunction::is_zero() const {
  return std::all_of(values.begin(), values.end(), [](std::uint64_t x) { return x == 0; });
}

DimensionFunction operator+(const DimensionFunction& a, const DimensionFunction& b) {
  if (a.values.size() != b.values.size()) throw Error("dimension functions of different digraphs");
  DimensionFunction out = a;
  for (std::size_t i = 0; i < b.values.size(); ++i) out.values[i] += b.values[i];
  return out;
}

RelationMatrix relation_matrix(const Digraph& g) {
  RelationMatrix m;
  m.rows = g.part_count();
  m.cols = g.vertex_count();
  m.entries.assign(m.rows, std::vector<std::int64_t>(m.cols, 0));
  for (PartIdx x = 0; x < g.part_count(); ++x) {
    m.entries[x][g.part_source(x)] += 1;
    for (ArrowIdx e : g.part(x)) m.entries[x][g.arrow(e).tgt] -= 1;
  }
  return m;
}

bool verify(const Digraph& g, const DimensionFunction& d) {
  if (d.values.size() != g.vertex_count()) {
    throw Error("dimension function must give a value for each of the " +
                std::to_string(g.vertex_count()) + " vertices");
  }
  for (PartIdx x = 0; x < g.part_count(); ++x) {
    mpz_class rhs = 0;
    for (ArrowIdx e : g.part(x)) rhs += mpz_class(std::to_string(d.values[g.arrow(e).tgt]));
    if (rhs != mpz_class(std::to_string(d.values[g.part_source(x)]))) return false;
  }
  return true;
}

namespace {

// a · x >= b
struct Inequality {
  std::vector<Rational> a;
  Rational b;

  auto operator<=>(const Inequality& o) const {
    if (a != o.a) return a < o.a ? std::strong_ordering::less : std::strong_ordering::greater;
    if (b == o.b) return std::strong_ordering::equal;
    return b < o.b ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  bool operator==(const Inequality&) const = default;
};

void normalize(Inequality& q) {
  // Scale so the first nonzero coefficient is ±1; keeps duplicates detectable.
  for (const Rational& c : q.a) {
    if (c != 0) {
      Rational s = abs(c);
      for (Rational& x : q.a) x /= s;
      q.b /= s;
      return;
    }
  }
}

bool fourier_motzkin_feasible(std::set<Inequality> system, std::size_t vars) {
  for (std::size_t k = 0; k < vars; ++k) {
    std::vector<Inequality> pos, neg;
    std::set<Inequality> next;
    for (const Inequality& q : system) {
      if (q.a[k] > 0) pos.push_back(q);
      else if (q.a[k] < 0) neg.push_back(q);
      else next.insert(q);
    }
    for (const Inequality& p : pos) {
      for (const Inequality& n : neg) {
        const Rational sp = -n.a[k];
        const Rational sn = p.a[k];
        Inequality c{std::vector<Rational>(vars), sp * p.b + sn * n.b};
        for (std::size_t i = 0; i < vars; ++i) c.a[i] = sp * p.a[i] + sn * n.a[i];
        c.a[k] = 0;
        normalize(c);
        next.insert(std::move(c));
      }
    }
    system = std::move(next);
  }
  return std::all_of(system.begin(), system.end(), [](const Inequality& q) { return q.b <= 0; });
}

}  // namespace

bool has_nonzero_dimfun(const Digraph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return false;
  const RelationMatrix rm = relation_matrix(g);

  // Row reduce A; pivot variables become affine (here linear) in the free ones.
  std::vector<std::vector<Rational>> a(rm.rows, std::vector<Rational>(n));
  for (std::size_t r = 0; r < rm.rows; ++r)
    for (std::size_t c = 0; c < n; ++c) a[r][c] = Rational(static_cast<long>(rm.entries[r][c]));
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t c = 0; c < n && row < a.size(); ++c) {
    std::size_t p = row;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[row]);
    const Rational inv = 1 / a[row][c];
    for (Rational& x : a[row]) x *= inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][c] == 0) continue;
      const Rational f = a[r][c];
      for (std::size_t j = 0; j < n; ++j) a[r][j] -= f * a[row][j];
    }
    pivot_col.push_back(c);
    ++row;
  }
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;
  std::vector<std::size_t> free_vars;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free_vars.push_back(c);
  if (free_vars.empty()) return false;

  // Express every original variable as a row over the free variables.
  const std::size_t m = free_vars.size();
  std::vector<std::vector<Rational>> expr(n, std::vector<Rational>(m));
  for (std::size_t j = 0; j < m; ++j) expr[free_vars[j]][j] = 1;
  for (std::size_t r = 0; r < pivot_col.size(); ++r)
    for (std::size_t j = 0; j < m; ++j) expr[pivot_col[r]][j] = -a[r][free_vars[j]];

  std::set<Inequality> system;
  std::vector<Rational> total(m);
  for (std::size_t v = 0; v < n; ++v) {
    Inequality q{expr[v], 0};
    for (std::size_t j = 0; j < m; ++j) total[j] += expr[v][j];
    normalize(q);
    system.insert(std::move(q));
  }
  Inequality sum{total, 1};
  normalize(sum);
  system.insert(std::move(sum));
  return fourier_motzkin_feasible(std::move(system), m);
}

HilbertBasis hilbert_basis(const Digraph& g, std::uint64_t bound) {
  if (bound == 0) throw Error("hilbert basis bound must be at least 1");
  const std::size_t n = g.vertex_count();
  const RelationMatrix rm = relation_matrix(g);
  std::vector<std::vector<std::int64_t>> col(n, std::vector<std::int64_t>(rm.rows));
  for (std::size_t r = 0; r < rm.rows; ++r)
    for (std::size_t c = 0; c < n; ++c) col[c][r] = rm.entries[r][c];

  struct Candidate {
    std::vector<std::uint64_t> x;
    std::vector<std::int64_t> ax;
    bool operator<(const Candidate& o) const { return x < o.x; }
  };
  auto dominates = [](const std::vector<std::uint64_t>& big, const std::vector<std::uint64_t>& small) {
    for (std::size_t i = 0; i < big.size(); ++i)
      if (big[i] < small[i]) return false;
    return true;
  };

  HilbertBasis out;
  std::set<Candidate> level;
  for (std::size_t j = 0; j < n; ++j) {
    Candidate c{std::vector<std::uint64_t>(n, 0), col[j]};
    c.x[j] = 1;
    level.insert(std::move(c));
  }
  std::vector<std::vector<std::uint64_t>> found;
  while (!level.empty()) {
    std::vector<const Candidate*> open;
    for (const Candidate& c : level) {
      if (std::all_of(c.ax.begin(), c.ax.end(), [](std::int64_t v) { return v == 0; })) {
        found.push_back(c.x);
      } else {
        open.push_back(&c);
      }
    }
    std::set<Candidate> next;
    for (const Candidate* c : open) {
      for (std::size_t j = 0; j < n; ++j) {
        std::int64_t dot = 0;
        for (std::size_t r = 0; r < rm.rows; ++r) dot += c->ax[r] * col[j][r];
        if (dot >= 0) continue;
        Candidate y = *c;
        y.x[j] += 1;
        if (std::any_of(found.begin(), found.end(), [&](const auto& s) { return dominates(y.x, s); })) continue;
        if (y.x[j] > bound) {
          out.complete = false;
          continue;
        }
        for (std::size_t r = 0; r < rm.rows; ++r) y.ax[r] += col[j][r];
        next.insert(std::move(y));
      }
    }
    level = std::move(next);
  }
  for (auto& x : found) out.basis.push_back(DimensionFunction{std::move(x)});
  std::sort(out.basis.begin(), out.basis.end(), [](const DimensionFunction& a, const DimensionFunction& b) {
    const auto sa = std::accumulate(a.values.begin(), a.values.end(), std::uint64_t{0});
    const auto sb = std::accumulate(b.values.begin(), b.values.end(), std::uint64_t{0});
    return sa != sb ? sa < sb : a.values < b.values;
  });
  return out;
}

bool ibn_check(const Digraph& g) {
  const RelationMatrix rm = relation_matrix(g);
  std::vector<RowVector> rows;
  for (const auto& r : rm.entries) {
    RowVector v;
    for (std::int64_t x : r) v.emplace_back(static_cast<long>(x));
    rows.push_back(std::move(v));
  }
  const std::size_t base = rank_of_rows(rows, rm.cols);
  rows.emplace_back(rm.cols, Rational(1));
  return rank_of_rows(std::move(rows), rm.cols) > base;
}

}  // namespace lpa
