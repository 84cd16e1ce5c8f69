#include "lpa/digraph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>

#include "lpa/error.hpp"

namespace lpa {

Digraph::Digraph(std::vector<std::string> vertices, std::vector<ArrowSpec> arrows,
                 std::optional<std::vector<std::vector<std::string>>> separation)
    : vertices_(std::move(vertices)) {
  for (Vertex v = 0; v < vertices_.size(); ++v) {
    if (!vertex_lookup_.emplace(vertices_[v], v).second) {
      throw Error("duplicate id '" + vertices_[v] + "'");
    }
  }
  out_.resize(vertices_.size());
  in_.resize(vertices_.size());
  for (auto& given : arrows) {
    const ArrowIdx a = arrows_.size();
    if (vertex_lookup_.count(given.id) || !arrow_lookup_.emplace(given.id, a).second) {
      throw Error("duplicate id '" + given.id + "'");
    }
    auto src = find_vertex(given.src);
    auto tgt = find_vertex(given.tgt);
    if (!src) throw Error("arrow '" + given.id + "' has unknown source '" + given.src + "'");
    if (!tgt) throw Error("arrow '" + given.id + "' has unknown target '" + given.tgt + "'");
    arrows_.push_back(Arrow{std::move(given.id), *src, *tgt});
    out_[*src].push_back(a);
    in_[*tgt].push_back(a);
  }

  part_of_.assign(arrows_.size(), static_cast<PartIdx>(-1));
  if (separation) {
    for (const auto& ids : *separation) {
      if (ids.empty()) throw Error("separation has an empty part");
      const PartIdx x = parts_.size();
      std::vector<ArrowIdx> members;
      for (const auto& id : ids) {
        auto a = find_arrow(id);
        if (!a) throw Error("separation names unknown arrow '" + id + "'");
        if (part_of_[*a] != static_cast<PartIdx>(-1)) {
          throw Error("arrow '" + id + "' appears in more than one part");
        }
        if (arrows_[*a].src != arrows_[arrow_lookup_.at(ids.front())].src) {
          throw Error("separation part containing '" + ids.front() + "' and '" + id +
                      "' mixes sources");
        }
        part_of_[*a] = x;
        members.push_back(*a);
      }
      std::sort(members.begin(), members.end());
      parts_.push_back(std::move(members));
    }
    for (ArrowIdx a = 0; a < arrows_.size(); ++a) {
      if (part_of_[a] == static_cast<PartIdx>(-1)) {
        throw Error("arrow '" + arrows_[a].id + "' is missing from the separation");
      }
    }
  } else {
    for (Vertex v = 0; v < vertices_.size(); ++v) {
      if (out_[v].empty()) continue;
      for (ArrowIdx a : out_[v]) part_of_[a] = parts_.size();
      parts_.push_back(out_[v]);
    }
  }

  for (const auto& members : parts_) {
    special_.push_back(*std::min_element(members.begin(), members.end(), [&](ArrowIdx a, ArrowIdx b) {
      return arrows_[a].id < arrows_[b].id;
    }));
  }
}

std::optional<Vertex> Digraph::find_vertex(std::string_view name) const {
  auto it = vertex_lookup_.find(std::string(name));
  if (it == vertex_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<ArrowIdx> Digraph::find_arrow(std::string_view id) const {
  auto it = arrow_lookup_.find(std::string(id));
  if (it == arrow_lookup_.end()) return std::nullopt;
  return it->second;
}

Vertex Digraph::vertex(std::string_view name) const {
  auto v = find_vertex(name);
  if (!v) throw Error("unknown vertex '" + std::string(name) + "'");
  return *v;
}

ArrowIdx Digraph::arrow_index(std::string_view id) const {
  auto a = find_arrow(id);
  if (!a) throw Error("unknown arrow '" + std::string(id) + "'");
  return *a;
}

bool Digraph::is_separated() const noexcept {
  std::size_t emitting = 0;
  for (const auto& out : out_) emitting += out.empty() ? 0 : 1;
  return parts_.size() != emitting;
}

std::vector<std::vector<std::string>> Digraph::separation_ids() const {
  std::vector<std::vector<std::string>> out;
  for (const auto& members : parts_) {
    auto& ids = out.emplace_back();
    for (ArrowIdx a : members) ids.push_back(arrows_[a].id);
  }
  return out;
}

void validate_path(const Digraph& g, const Path& p) {
  if (p.start >= g.vertex_count()) throw Error("path starts at an unknown vertex");
  Vertex at = p.start;
  for (ArrowIdx a : p.arrows) {
    if (a >= g.arrow_count()) throw Error("path uses an unknown arrow");
    if (g.arrow(a).src != at) throw Error("arrows of path do not compose at '" + g.arrow(a).id + "'");
    at = g.arrow(a).tgt;
  }
}

std::string path_to_string(const Digraph& g, const Path& p) {
  if (p.arrows.empty()) return g.vertex_name(p.start);
  std::string s;
  for (ArrowIdx a : p.arrows) {
    if (!s.empty()) s += ' ';
    s += g.arrow(a).id;
  }
  return s;
}

std::vector<Vertex> Cycle::vertices(const Digraph& g) const {
  std::vector<Vertex> vs;
  for (ArrowIdx a : arrows) vs.push_back(g.arrow(a).src);
  return vs;
}

Cycle make_cycle(const Digraph& g, std::vector<ArrowIdx> arrows) {
  if (arrows.empty()) throw Error("a cycle needs at least one arrow");
  for (ArrowIdx a : arrows) {
    if (a >= g.arrow_count()) throw Error("cycle uses an unknown arrow");
  }
  std::set<Vertex> seen;
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    const Arrow& cur = g.arrow(arrows[i]);
    const Arrow& next = g.arrow(arrows[(i + 1) % arrows.size()]);
    if (cur.tgt != next.src) throw Error("arrows do not form a closed path");
    if (!seen.insert(cur.src).second) throw Error("cycle repeats vertex '" + g.vertex_name(cur.src) + "'");
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < arrows.size(); ++i) {
    if (g.vertex_name(g.arrow(arrows[i]).src) < g.vertex_name(g.arrow(arrows[best]).src)) best = i;
  }
  std::rotate(arrows.begin(), arrows.begin() + static_cast<std::ptrdiff_t>(best), arrows.end());
  Vertex anchor = g.arrow(arrows.front()).src;
  return Cycle{std::move(arrows), anchor};
}

std::string cycle_to_string(const Digraph& g, const Cycle& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.arrows.size(); ++i) {
    if (i) s += ' ';
    s += g.arrow(c.arrows[i]).id;
  }
  return s + ")";
}

std::vector<Vertex> sinks(const Digraph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.is_sink(v)) out.push_back(v);
  }
  return out;
}

std::vector<Cycle> cycles(const Digraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::sort(order.begin(), order.end(),
            [&](Vertex a, Vertex b) { return g.vertex_name(a) < g.vertex_name(b); });
  std::vector<std::size_t> rank(n);
  for (std::size_t i = 0; i < n; ++i) rank[order[i]] = i;

  std::vector<Cycle> found;
  std::vector<bool> on_stack(n, false);
  std::vector<ArrowIdx> stack;
  // Only vertices ranked above the root are visited, so each cycle is
  // produced exactly once: from its smallest vertex, which is its anchor.
  std::function<void(Vertex, Vertex)> dfs = [&](Vertex root, Vertex at) {
    for (ArrowIdx a : g.out_arrows(at)) {
      const Vertex t = g.arrow(a).tgt;
      if (t == root) {
        stack.push_back(a);
        found.push_back(Cycle{stack, root});
        stack.pop_back();
      } else if (rank[t] > rank[root] && !on_stack[t]) {
        on_stack[t] = true;
        stack.push_back(a);
        dfs(root, t);
        stack.pop_back();
        on_stack[t] = false;
      }
    }
  };
  for (Vertex root : order) {
    on_stack[root] = true;
    dfs(root, root);
    on_stack[root] = false;
  }
  return found;
}

namespace {

void require_cycle_of(const Digraph& g, const Cycle& c) {
  Cycle canon = make_cycle(g, c.arrows);
  if (canon.arrows != c.arrows || canon.anchor != c.anchor) {
    throw Error("cycle is not in canonical form for this digraph");
  }
}

std::vector<Vertex> vertices_of(const Digraph& g, const SinkOrCycle& u) {
  if (const Vertex* w = std::get_if<Vertex>(&u)) {
    if (*w >= g.vertex_count() || !g.is_sink(*w)) throw Error("expected a sink of the digraph");
    return {*w};
  }
  const Cycle& c = std::get<Cycle>(u);
  make_cycle(g, c.arrows);
  return c.vertices(g);
}

}  // namespace

std::vector<ArrowIdx> exits(const Digraph& g, const Cycle& c) {
  require_cycle_of(g, c);
  std::vector<ArrowIdx> out;
  for (ArrowIdx on : c.arrows) {
    for (ArrowIdx a : g.out_arrows(g.arrow(on).src)) {
      if (a != on) out.push_back(a);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vertex> predecessors(const Digraph& g, Vertex v) {
  if (v >= g.vertex_count()) throw Error("unknown vertex");
  std::vector<bool> seen(g.vertex_count(), false);
  std::deque<Vertex> queue{v};
  seen[v] = true;
  while (!queue.empty()) {
    Vertex at = queue.front();
    queue.pop_front();
    for (ArrowIdx a : g.in_arrows(at)) {
      Vertex s = g.arrow(a).src;
      if (!seen[s]) {
        seen[s] = true;
        queue.push_back(s);
      }
    }
  }
  std::vector<Vertex> out;
  for (Vertex w = 0; w < seen.size(); ++w) {
    if (seen[w]) out.push_back(w);
  }
  return out;
}

std::vector<bool> reachable_from(const Digraph& g, std::span<const Vertex> from) {
  std::vector<bool> seen(g.vertex_count(), false);
  std::deque<Vertex> queue;
  for (Vertex v : from) {
    if (!seen[v]) {
      seen[v] = true;
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    Vertex at = queue.front();
    queue.pop_front();
    for (ArrowIdx a : g.out_arrows(at)) {
      Vertex t = g.arrow(a).tgt;
      if (!seen[t]) {
        seen[t] = true;
        queue.push_back(t);
      }
    }
  }
  return seen;
}

bool connects_to(const Digraph& g, const SinkOrCycle& a, const SinkOrCycle& b) {
  auto from = vertices_of(g, a);
  auto to = vertices_of(g, b);
  auto seen = reachable_from(g, from);
  return std::any_of(to.begin(), to.end(), [&](Vertex v) { return seen[v]; });
}

std::vector<MaximalElement> maximal_sinks_and_cycles(const Digraph& g) {
  auto all_cycles = cycles(g);
  std::vector<std::vector<bool>> reach;
  for (const auto& c : all_cycles) {
    auto vs = c.vertices(g);
    reach.push_back(reachable_from(g, vs));
  }
  std::vector<MaximalElement> out;
  for (Vertex w : sinks(g)) {
    bool reached = std::any_of(reach.begin(), reach.end(), [&](const auto& r) { return r[w]; });
    if (!reached) out.push_back(MaximalElement{w, predecessors(g, w).size()});
  }
  for (std::size_t i = 0; i < all_cycles.size(); ++i) {
    const Vertex anchor = all_cycles[i].anchor;
    bool reached = false;
    for (std::size_t j = 0; j < all_cycles.size() && !reached; ++j) {
      reached = j != i && reach[j][anchor];
    }
    if (!reached) out.push_back(MaximalElement{all_cycles[i], predecessors(g, anchor).size()});
  }
  return out;
}

SubgraphFlags subgraph_flags(const Digraph& g, std::span<const Vertex> vs,
                             std::span<const ArrowIdx> es) {
  std::vector<bool> in_v(g.vertex_count(), false), in_e(g.arrow_count(), false);
  for (Vertex v : vs) {
    if (v >= g.vertex_count()) throw Error("subgraph names an unknown vertex");
    in_v[v] = true;
  }
  for (ArrowIdx a : es) {
    if (a >= g.arrow_count()) throw Error("subgraph names an unknown arrow");
    if (!in_v[g.arrow(a).src] || !in_v[g.arrow(a).tgt]) {
      throw Error("arrow '" + g.arrow(a).id + "' leaves the subgraph's vertex set");
    }
    in_e[a] = true;
  }
  SubgraphFlags flags{true, true, true};
  for (ArrowIdx a = 0; a < g.arrow_count(); ++a) {
    const Arrow& e = g.arrow(a);
    if (in_v[e.src] && in_v[e.tgt] && !in_e[a]) flags.full = false;
    if (in_v[e.tgt] && !in_v[e.src]) flags.cohereditary = false;
  }
  for (PartIdx x = 0; x < g.part_count(); ++x) {
    if (!in_v[g.part_source(x)]) continue;
    auto members = g.part(x);
    if (std::none_of(members.begin(), members.end(), [&](ArrowIdx a) { return in_e[a]; })) {
      flags.colorful = false;
    }
  }
  return flags;
}

Embedding embed(const Digraph& g, const Digraph& sub) {
  Embedding e;
  for (const auto& name : sub.vertex_names()) {
    auto v = g.find_vertex(name);
    if (!v) throw Error("'" + name + "' is not a vertex of the ambient digraph");
    e.vertices.push_back(*v);
  }
  for (const auto& arrow : sub.arrows()) {
    auto a = g.find_arrow(arrow.id);
    if (!a || g.arrow(*a).src != e.vertices[arrow.src] || g.arrow(*a).tgt != e.vertices[arrow.tgt]) {
      throw Error("'" + arrow.id + "' is not an arrow of the ambient digraph");
    }
    e.arrows.push_back(*a);
  }
  return e;
}

SubgraphFlags subgraph_flags(const Digraph& g, const Digraph& sub) {
  Embedding e = embed(g, sub);
  return subgraph_flags(g, e.vertices, e.arrows);
}

Digraph induced_subgraph(const Digraph& g, std::span<const Vertex> vs) {
  std::vector<bool> keep(g.vertex_count(), false);
  for (Vertex v : vs) keep.at(v) = true;
  std::vector<std::string> names;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (keep[v]) names.push_back(g.vertex_name(v));
  }
  std::vector<ArrowSpec> arrows;
  std::vector<bool> kept_arrow(g.arrow_count(), false);
  for (ArrowIdx a = 0; a < g.arrow_count(); ++a) {
    const Arrow& e = g.arrow(a);
    if (keep[e.src] && keep[e.tgt]) {
      arrows.push_back({e.id, g.vertex_name(e.src), g.vertex_name(e.tgt)});
      kept_arrow[a] = true;
    }
  }
  std::vector<std::vector<std::string>> separation;
  for (PartIdx x = 0; x < g.part_count(); ++x) {
    std::vector<std::string> ids;
    for (ArrowIdx a : g.part(x)) {
      if (kept_arrow[a]) ids.push_back(g.arrow(a).id);
    }
    if (!ids.empty()) separation.push_back(std::move(ids));
  }
  return Digraph(std::move(names), std::move(arrows), std::move(separation));
}

std::vector<std::vector<Vertex>> strongly_connected_components(const Digraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<int> index(n, -1), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<Vertex> stack;
  std::vector<std::vector<Vertex>> sccs;
  int counter = 0;
  std::function<void(Vertex)> visit = [&](Vertex v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (ArrowIdx a : g.out_arrows(v)) {
      Vertex t = g.arrow(a).tgt;
      if (index[t] == -1) {
        visit(t);
        low[v] = std::min(low[v], low[t]);
      } else if (on_stack[t]) {
        low[v] = std::min(low[v], index[t]);
      }
    }
    if (low[v] == index[v]) {
      auto& scc = sccs.emplace_back();
      Vertex w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        scc.push_back(w);
      } while (w != v);
      std::sort(scc.begin(), scc.end());
    }
  };
  for (Vertex v = 0; v < n; ++v) {
    if (index[v] == -1) visit(v);
  }
  return sccs;
}

namespace {

// Per component: number of arrows with both ends inside, per source vertex.
std::vector<std::vector<std::size_t>> internal_out_degrees(const Digraph& g,
                                                        const std::vector<std::vector<Vertex>>& sccs) {
  std::vector<std::size_t> comp(g.vertex_count());
  for (std::size_t c = 0; c < sccs.size(); ++c) {
    for (Vertex v : sccs[c]) comp[v] = c;
  }
  std::vector<std::vector<std::size_t>> deg;
  for (const auto& scc : sccs) {
    auto& d = deg.emplace_back();
    for (Vertex v : scc) {
      std::size_t k = 0;
      for (ArrowIdx a : g.out_arrows(v)) k += comp[g.arrow(a).tgt] == comp[v] ? 1 : 0;
      d.push_back(k);
    }
  }
  return deg;
}

}  // namespace

bool is_acyclic(const Digraph& g) {
  auto sccs = strongly_connected_components(g);
  auto deg = internal_out_degrees(g, sccs);
  for (const auto& d : deg) {
    for (std::size_t k : d) {
      if (k > 0) return false;
    }
  }
  return true;
}

bool cycles_disjoint(const Digraph& g) {
  // A cyclic component carries exactly one cycle iff every vertex in it has
  // a single arrow staying inside the component.
  auto sccs = strongly_connected_components(g);
  auto deg = internal_out_degrees(g, sccs);
  for (const auto& d : deg) {
    for (std::size_t k : d) {
      if (k > 1) return false;
    }
  }
  return true;
}

}  // namespace lpa
