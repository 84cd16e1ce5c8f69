#include <algorithm>
#include <functional>
#include <map>

#include "lpa/error.hpp"
#include "lpa/repbuild.hpp"

namespace lpa {
namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw Error("path count exceeds 64 bits");
  return out;
}

enum class Mark { fresh, active, done };

bool path_order(const Path& a, const Path& b) {
  if (a.start != b.start) return a.start < b.start;
  if (a.arrows.size() != b.arrows.size()) return a.arrows.size() < b.arrows.size();
  return a.arrows < b.arrows;
}

std::vector<std::size_t> block_offsets(const Digraph& g, const std::vector<Path>& sorted,
                                       std::vector<std::size_t>& dims) {
  dims.assign(g.vertex_count(), 0);
  for (const Path& p : sorted) ++dims[p.start];
  std::vector<std::size_t> offset(g.vertex_count() + 1, 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) offset[v + 1] = offset[v] + dims[v];
  return offset;
}

bool ends_with(const std::vector<ArrowIdx>& word, const std::vector<ArrowIdx>& suffix) {
  return word.size() >= suffix.size() &&
         std::equal(suffix.begin(), suffix.end(), word.end() - static_cast<std::ptrdiff_t>(suffix.size()));
}

// Product of the reversed in-arrow walk from the anchor with the automaton
// tracking how much of C has been matched as a suffix. States 0..n-1 count
// matched arrows; state n means the suffix can no longer become C.
struct SuffixWalk {
  const Digraph& g;
  const Cycle& c;
  std::size_t free_state() const { return c.arrows.size(); }

  std::optional<std::size_t> step(std::size_t state, ArrowIdx a) const {
    const std::size_t n = c.arrows.size();
    if (state == n) return n;
    if (a == c.arrows[n - 1 - state]) {
      if (state + 1 == n) return std::nullopt;
      return state + 1;
    }
    return n;
  }
};

void check_unique_cycle(const Digraph& g, const Cycle& c) {
  make_cycle(g, c.arrows);
  const std::vector<Vertex> preds = predecessors(g, c.anchor);
  std::vector<bool> in_preds(g.vertex_count(), false);
  for (Vertex v : preds) in_preds[v] = true;
  for (const Cycle& other : cycles(g)) {
    if (other == c) continue;
    const auto vs = other.vertices(g);
    if (std::any_of(vs.begin(), vs.end(), [&](Vertex v) { return in_preds[v]; })) {
      throw Error("another cycle " + cycle_to_string(g, other) + " connects to " + cycle_to_string(g, c));
    }
  }
  for (ArrowIdx e : exits(g, c)) {
    if (in_preds[g.arrow(e).tgt]) {
      throw Error("exit '" + g.arrow(e).id + "' of the cycle returns to it");
    }
  }
}

}  // namespace

std::uint64_t path_count_to(const Digraph& g, Vertex v) {
  if (v >= g.vertex_count()) throw Error("unknown vertex");
  std::vector<Mark> mark(g.vertex_count(), Mark::fresh);
  std::vector<std::uint64_t> memo(g.vertex_count(), 0);
  std::function<std::uint64_t(Vertex)> count = [&](Vertex u) -> std::uint64_t {
    if (mark[u] == Mark::done) return memo[u];
    if (mark[u] == Mark::active) {
      throw Error("a cycle connects to '" + g.vertex_name(v) + "', so infinitely many paths end there");
    }
    mark[u] = Mark::active;
    std::uint64_t total = 1;
    for (ArrowIdx a : g.in_arrows(u)) total = checked_add(total, count(g.arrow(a).src));
    mark[u] = Mark::done;
    return memo[u] = total;
  };
  return count(v);
}

std::uint64_t paths_to_cycle_count(const Digraph& g, const Cycle& c) {
  check_unique_cycle(g, c);
  const SuffixWalk walk{g, c};
  const std::size_t states = c.arrows.size() + 1;
  std::vector<Mark> mark(g.vertex_count() * states, Mark::fresh);
  std::vector<std::uint64_t> memo(mark.size(), 0);
  std::function<std::uint64_t(Vertex, std::size_t)> count = [&](Vertex u, std::size_t s) -> std::uint64_t {
    const std::size_t key = u * states + s;
    if (mark[key] == Mark::done) return memo[key];
    if (mark[key] == Mark::active) throw Error("infinitely many paths avoid the cycle suffix");
    mark[key] = Mark::active;
    std::uint64_t total = 1;
    for (ArrowIdx a : g.in_arrows(u)) {
      if (auto next = walk.step(s, a)) total = checked_add(total, count(g.arrow(a).src, *next));
    }
    mark[key] = Mark::done;
    return memo[key] = total;
  };
  return count(c.anchor, 0);
}

std::size_t SinkModule::index_of(const Path& p) const {
  auto it = std::find(basis.begin(), basis.end(), p);
  if (it == basis.end()) throw Error("path does not end at the sink of this module");
  return static_cast<std::size_t>(it - basis.begin());
}

Matrix SinkModule::image(const Digraph& g, const Monomial& m) const {
  Matrix out(basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    Path x = basis[i];
    if (x.start != m.source()) continue;
    bool alive = true;
    for (Letter l : m.letters()) {
      if (!l.dual) {
        if (x.arrows.empty() || x.arrows.front() != l.arrow) {
          alive = false;
          break;
        }
        x.arrows.erase(x.arrows.begin());
        x.start = g.arrow(l.arrow).tgt;
      } else {
        if (x.start != g.arrow(l.arrow).tgt) {
          alive = false;
          break;
        }
        x.arrows.insert(x.arrows.begin(), l.arrow);
        x.start = g.arrow(l.arrow).src;
      }
    }
    if (alive) out(i, index_of(x)) = 1;
  }
  return out;
}

Matrix SinkModule::elementary(const Path& p, const Path& q) const {
  Matrix out(basis.size(), basis.size());
  out(index_of(p), index_of(q)) = 1;
  return out;
}

SinkModule sink_module(const Digraph& g, Vertex w) {
  if (w >= g.vertex_count()) throw Error("unknown vertex");
  if (!g.is_sink(w)) throw Error("'" + g.vertex_name(w) + "' is not a sink");
  if (g.is_separated()) throw Error("sink modules are defined here for non-separated digraphs only");
  path_count_to(g, w);

  SinkModule m;
  m.sink = w;
  std::function<void(Path)> collect = [&](Path p) {
    m.basis.push_back(p);
    for (ArrowIdx a : g.in_arrows(p.start)) {
      Path longer{g.arrow(a).src, p.arrows};
      longer.arrows.insert(longer.arrows.begin(), a);
      collect(std::move(longer));
    }
  };
  collect(Path{w, {}});
  std::sort(m.basis.begin(), m.basis.end(), path_order);
  m.offset = block_offsets(g, m.basis, m.rep.dims);

  m.rep.arrow_mats.resize(g.arrow_count());
  m.rep.dual_mats.resize(g.arrow_count());
  for (ArrowIdx e = 0; e < g.arrow_count(); ++e) {
    const Arrow& a = g.arrow(e);
    m.rep.arrow_mats[e] = Matrix(m.rep.dims[a.src], m.rep.dims[a.tgt]);
    m.rep.dual_mats[e] = Matrix(m.rep.dims[a.tgt], m.rep.dims[a.src]);
  }
  for (std::size_t i = 0; i < m.basis.size(); ++i) {
    const Path& p = m.basis[i];
    if (p.arrows.empty()) continue;
    const ArrowIdx e = p.arrows.front();
    Path tail{g.arrow(e).tgt, std::vector<ArrowIdx>(p.arrows.begin() + 1, p.arrows.end())};
    const std::size_t j = m.index_of(tail);
    const std::size_t li = i - m.offset[p.start];
    const std::size_t lj = j - m.offset[tail.start];
    m.rep.arrow_mats[e](li, lj) = 1;
    m.rep.dual_mats[e](lj, li) = 1;
  }
  return m;
}

std::size_t ChenModule::index_of(const Path& p) const {
  auto it = std::find(tokens.begin(), tokens.end(), p);
  if (it == tokens.end()) throw Error("path is not a token of this Chen module");
  return static_cast<std::size_t>(it - tokens.begin());
}

ChenModule chen_module(const Digraph& g, const Cycle& c) {
  if (g.is_separated()) throw Error("Chen modules are defined here for non-separated digraphs only");
  const std::uint64_t count = paths_to_cycle_count(g, c);
  if (count > 100000) throw Error("token space too large: " + std::to_string(count) + " tokens");

  ChenModule m;
  m.cycle = make_cycle(g, c.arrows);
  const SuffixWalk walk{g, m.cycle};
  std::function<void(Path, std::size_t)> collect = [&](Path p, std::size_t s) {
    m.tokens.push_back(p);
    for (ArrowIdx a : g.in_arrows(p.start)) {
      if (auto next = walk.step(s, a)) {
        Path longer{g.arrow(a).src, p.arrows};
        longer.arrows.insert(longer.arrows.begin(), a);
        collect(std::move(longer), *next);
      }
    }
  };
  collect(Path{m.cycle.anchor, {}}, 0);
  std::sort(m.tokens.begin(), m.tokens.end(), path_order);
  const std::vector<std::size_t> offset = block_offsets(g, m.tokens, m.rep.dims);

  m.rep.arrow_mats.resize(g.arrow_count());
  m.rep.dual_mats.resize(g.arrow_count());
  for (ArrowIdx e = 0; e < g.arrow_count(); ++e) {
    const Arrow& a = g.arrow(e);
    Matrix fwd(m.rep.dims[a.src], m.rep.dims[a.tgt]);
    Matrix bwd(m.rep.dims[a.tgt], m.rep.dims[a.src]);
    for (std::size_t i = offset[a.src]; i < offset[a.src + 1]; ++i) {
      if (auto j = chen_act(g, m, {Generator::Kind::arrow, e}, i)) fwd(i - offset[a.src], *j - offset[a.tgt]) = 1;
    }
    for (std::size_t i = offset[a.tgt]; i < offset[a.tgt + 1]; ++i) {
      if (auto j = chen_act(g, m, {Generator::Kind::dual, e}, i)) bwd(i - offset[a.tgt], *j - offset[a.src]) = 1;
    }
    m.rep.arrow_mats[e] = std::move(fwd);
    m.rep.dual_mats[e] = std::move(bwd);
  }
  return m;
}

std::optional<std::size_t> chen_act(const Digraph& g, const ChenModule& m, Generator x, std::size_t token) {
  const Path& beta = m.tokens.at(token);
  switch (x.kind) {
    case Generator::Kind::vertex:
      if (beta.start == x.index) return token;
      return std::nullopt;
    case Generator::Kind::arrow: {
      const ArrowIdx e = x.index;
      if (!beta.arrows.empty()) {
        if (beta.arrows.front() != e) return std::nullopt;
        return m.index_of(Path{g.arrow(e).tgt, std::vector<ArrowIdx>(beta.arrows.begin() + 1, beta.arrows.end())});
      }
      const auto& ca = m.cycle.arrows;
      if (ca.front() != e) return std::nullopt;
      return m.index_of(Path{g.arrow(e).tgt, std::vector<ArrowIdx>(ca.begin() + 1, ca.end())});
    }
    case Generator::Kind::dual: {
      const ArrowIdx e = x.index;
      if (g.arrow(e).tgt != beta.start) return std::nullopt;
      Path longer{g.arrow(e).src, beta.arrows};
      longer.arrows.insert(longer.arrows.begin(), e);
      if (ends_with(longer.arrows, m.cycle.arrows)) {
        longer.arrows.resize(longer.arrows.size() - m.cycle.arrows.size());
      }
      return m.index_of(longer);
    }
  }
  return std::nullopt;
}

RowVector chen_action(const Digraph& g, const ChenModule& m, Generator x, const RowVector& vec) {
  if (vec.size() != m.tokens.size()) throw Error("vector length differs from the number of tokens");
  RowVector out(vec.size(), Rational(0));
  for (std::size_t i = 0; i < vec.size(); ++i) {
    if (vec[i] == 0) continue;
    if (auto j = chen_act(g, m, x, i)) out[*j] += vec[i];
  }
  return out;
}

}  // namespace lpa
