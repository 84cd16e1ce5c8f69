#include "lpa/quotient.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "lpa/dimfun.hpp"
#include "lpa/error.hpp"
#include "lpa/repbuild.hpp"

namespace lpa {
namespace {

void require_non_separated(const Digraph& g, const char* what) {
  if (g.is_separated()) {
    throw Error(std::string(what) +
                " is only available for non-separated digraphs; use has_nonzero_dimfun instead");
  }
}

}  // namespace

bool has_findim_quotient(const Digraph& g) {
  require_non_separated(g, "has_findim_quotient");
  const auto maximal = maximal_sinks_and_cycles(g);
  for (const auto& m : maximal) {
    if (m.predecessor_count > g.vertex_count()) throw std::logic_error("predecessor count out of range");
  }
  return !maximal.empty();
}

QuotientShape classify_quotients(const Digraph& g) {
  require_non_separated(g, "classify_quotients");
  QuotientShape shape;
  for (const MaximalElement& m : maximal_sinks_and_cycles(g)) {
    if (const Vertex* w = std::get_if<Vertex>(&m.which)) {
      shape.summands.push_back({*w, path_count_to(g, *w)});
    } else {
      const Cycle& c = std::get<Cycle>(m.which);
      shape.summands.push_back({c, paths_to_cycle_count(g, c)});
    }
  }
  return shape;
}

InstantiatedQuotient instantiate(const QuotientShape& shape,
                                 const std::map<std::size_t, std::vector<Rational>>& polys) {
  for (const auto& [k, p] : polys) {
    if (k >= shape.summands.size()) throw Error("polynomial given for a summand that does not exist");
    if (shape.summands[k].is_sink()) throw Error("sink summands take no polynomial");
  }
  InstantiatedQuotient q;
  q.shape = shape;
  q.total_dimension = 0;
  for (std::size_t k = 0; k < shape.summands.size(); ++k) {
    const Summand& s = shape.summands[k];
    std::vector<Rational> p;
    std::size_t degree = 1;
    if (!s.is_sink()) {
      auto it = polys.find(k);
      if (it == polys.end()) throw Error("cycle summand " + std::to_string(k) + " needs a polynomial");
      p = it->second;
      while (!p.empty() && p.back() == 0) p.pop_back();
      if (p.empty() || p.front() != 1) throw Error("polynomial must have constant term 1");
      if (p.size() < 2) throw Error("polynomial must be non-constant");
      degree = p.size() - 1;
    }
    const mpz_class n(std::to_string(s.n));
    q.total_dimension += n * n * static_cast<unsigned long>(degree);
    q.polynomials.push_back(std::move(p));
    q.degrees.push_back(degree);
  }
  return q;
}

std::vector<Summand> locally_finite_structure(const Digraph& g) {
  require_non_separated(g, "locally_finite_structure");
  const std::vector<Cycle> cs = cycles(g);
  for (const Cycle& c : cs) {
    const auto ex = exits(g, c);
    if (!ex.empty()) {
      throw Error("cycle " + cycle_to_string(g, c) + " has exit '" + g.arrow(ex.front()).id + "'");
    }
  }
  std::vector<Summand> out;
  for (Vertex w : sinks(g)) out.push_back({w, path_count_to(g, w)});
  for (const Cycle& c : cs) out.push_back({c, paths_to_cycle_count(g, c)});
  return out;
}

Element theta_map(const Digraph& g, const Digraph& sub, const Element& x) {
  const SubgraphFlags flags = subgraph_flags(g, sub);
  if (!flags.all()) {
    throw Error(std::string("theta needs a full, cohereditary and colorful subgraph; it is") +
                (flags.full ? "" : " not full") + (flags.cohereditary ? "" : " not cohereditary") +
                (flags.colorful ? "" : " not colorful"));
  }
  const Embedding emb = embed(g, sub);
  const std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> vmap(g.vertex_count(), none), amap(g.arrow_count(), none);
  for (std::size_t i = 0; i < emb.vertices.size(); ++i) vmap[emb.vertices[i]] = i;
  for (std::size_t i = 0; i < emb.arrows.size(); ++i) amap[emb.arrows[i]] = i;

  std::set<std::vector<ArrowIdx>> inherited, given;
  for (PartIdx p = 0; p < g.part_count(); ++p) {
    std::vector<ArrowIdx> kept;
    for (ArrowIdx e : g.part(p))
      if (amap[e] != none) kept.push_back(amap[e]);
    std::sort(kept.begin(), kept.end());
    if (!kept.empty()) inherited.insert(std::move(kept));
  }
  for (PartIdx p = 0; p < sub.part_count(); ++p) {
    std::vector<ArrowIdx> part(sub.part(p).begin(), sub.part(p).end());
    std::sort(part.begin(), part.end());
    given.insert(std::move(part));
  }
  if (inherited != given) throw Error("subgraph separation differs from the inherited one");

  RawCombination raw;
  for (const auto& [m, c] : x.terms()) {
    if (vmap[m.source()] == none) continue;
    std::vector<Letter> letters;
    bool killed = false;
    for (Letter l : m.letters()) {
      if (amap[l.arrow] == none) {
        killed = true;
        break;
      }
      letters.push_back({amap[l.arrow], l.dual});
    }
    if (!killed) raw.emplace_back(Monomial::word(vmap[m.source()], std::move(letters)), c);
  }
  return normal_form(sub, raw);
}

std::vector<std::vector<Vertex>> graded_ideals(const Digraph& g) {
  require_non_separated(g, "graded_ideals");
  const std::size_t n = g.vertex_count();
  auto closure = [&](std::vector<bool> h) {
    for (bool changed = true; changed;) {
      changed = false;
      for (ArrowIdx a = 0; a < g.arrow_count(); ++a) {
        if (h[g.arrow(a).src] && !h[g.arrow(a).tgt]) {
          h[g.arrow(a).tgt] = true;
          changed = true;
        }
      }
      for (Vertex v = 0; v < n; ++v) {
        if (h[v] || g.is_sink(v)) continue;
        const auto out = g.out_arrows(v);
        if (std::all_of(out.begin(), out.end(), [&](ArrowIdx a) { return h[g.arrow(a).tgt]; })) {
          h[v] = true;
          changed = true;
        }
      }
    }
    return h;
  };
  std::set<std::vector<bool>> seen;
  std::vector<std::vector<bool>> frontier{closure(std::vector<bool>(n, false))};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<std::vector<bool>> next;
    for (const auto& h : frontier) {
      for (Vertex v = 0; v < n; ++v) {
        if (h[v]) continue;
        auto bigger = h;
        bigger[v] = true;
        bigger = closure(std::move(bigger));
        if (seen.insert(bigger).second) next.push_back(std::move(bigger));
      }
    }
    frontier = std::move(next);
  }
  std::vector<std::vector<Vertex>> out;
  for (const auto& h : seen) {
    std::vector<Vertex> vs;
    for (Vertex v = 0; v < n; ++v)
      if (h[v]) vs.push_back(v);
    out.push_back(std::move(vs));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

AlgebraClassification classify_algebra(const Digraph& g) {
  require_non_separated(g, "classify_algebra");
  AlgebraClassification c;
  c.finite_dimensional = is_acyclic(g);
  const auto cs = cycles(g);
  c.locally_finite = std::all_of(cs.begin(), cs.end(), [&](const Cycle& x) { return exits(g, x).empty(); });
  c.finite_gk = cycles_disjoint(g);
  c.has_findim_quotient = has_findim_quotient(g);
  c.ibn = ibn_check(g);
  if (g.vertex_count() > 0) {
    const bool chain = (!c.finite_dimensional || c.locally_finite) && (!c.locally_finite || c.finite_gk) &&
                       (!c.finite_gk || c.has_findim_quotient) && (!c.has_findim_quotient || c.ibn);
    if (!chain) throw std::logic_error("classification flags break the implication chain");
  }
  return c;
}

}  // namespace lpa
