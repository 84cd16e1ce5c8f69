#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

namespace lpa {

using Vertex = std::size_t;
using ArrowIdx = std::size_t;
using PartIdx = std::size_t;

struct Arrow {
  std::string id;
  Vertex src;
  Vertex tgt;
};

struct ArrowSpec {
  std::string id;
  std::string src;
  std::string tgt;
};

// A finite digraph together with a separation: a partition of the arrows into
// parts whose members share a source. Immutable once constructed. Vertices,
// arrows and parts keep the order in which they were supplied.
class Digraph {
 public:
  Digraph() = default;

  // Throws lpa::Error on duplicate ids, dangling references or an invalid
  // separation. Without a separation each nonempty s^{-1}(v) becomes one part.
  Digraph(std::vector<std::string> vertices, std::vector<ArrowSpec> arrows,
          std::optional<std::vector<std::vector<std::string>>> separation = std::nullopt);

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t arrow_count() const noexcept { return arrows_.size(); }
  std::size_t part_count() const noexcept { return parts_.size(); }

  const std::string& vertex_name(Vertex v) const { return vertices_.at(v); }
  const Arrow& arrow(ArrowIdx a) const { return arrows_.at(a); }
  const std::vector<std::string>& vertex_names() const noexcept { return vertices_; }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }

  std::optional<Vertex> find_vertex(std::string_view name) const;
  std::optional<ArrowIdx> find_arrow(std::string_view id) const;
  Vertex vertex(std::string_view name) const;   // throws on unknown
  ArrowIdx arrow_index(std::string_view id) const;  // throws on unknown

  std::span<const ArrowIdx> out_arrows(Vertex v) const { return out_.at(v); }
  std::span<const ArrowIdx> in_arrows(Vertex v) const { return in_.at(v); }

  std::span<const ArrowIdx> part(PartIdx x) const { return parts_.at(x); }
  PartIdx part_of(ArrowIdx a) const { return part_of_.at(a); }
  Vertex part_source(PartIdx x) const { return arrows_[parts_.at(x).front()].src; }
  // Lexicographically smallest arrow id in the part.
  ArrowIdx special_arrow(PartIdx x) const { return special_.at(x); }

  bool is_sink(Vertex v) const { return out_.at(v).empty(); }
  // True when the separation is finer than the grouping by source.
  bool is_separated() const noexcept;

  std::vector<std::vector<std::string>> separation_ids() const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::unordered_map<std::string, Vertex> vertex_lookup_;
  std::unordered_map<std::string, ArrowIdx> arrow_lookup_;
  std::vector<std::vector<ArrowIdx>> out_;
  std::vector<std::vector<ArrowIdx>> in_;
  std::vector<std::vector<ArrowIdx>> parts_;
  std::vector<PartIdx> part_of_;
  std::vector<ArrowIdx> special_;
};

// A path; an empty arrow list is the length-0 path at `start`.
struct Path {
  Vertex start = 0;
  std::vector<ArrowIdx> arrows;

  std::size_t length() const noexcept { return arrows.size(); }
  Vertex end(const Digraph& g) const { return arrows.empty() ? start : g.arrow(arrows.back()).tgt; }

  friend bool operator==(const Path&, const Path&) = default;
  friend auto operator<=>(const Path&, const Path&) = default;
};

// Throws lpa::Error unless consecutive arrows compose and start matches.
void validate_path(const Digraph& g, const Path& p);
std::string path_to_string(const Digraph& g, const Path& p);

// A simple cycle, rotated so that it starts at its anchor: the vertex with
// the lexicographically smallest id among the cycle's vertices.
struct Cycle {
  std::vector<ArrowIdx> arrows;
  Vertex anchor = 0;

  std::vector<Vertex> vertices(const Digraph& g) const;
  friend bool operator==(const Cycle& a, const Cycle& b) { return a.arrows == b.arrows; }
};

// Validates `arrows` as a cycle of g (any rotation) and canonicalizes it.
Cycle make_cycle(const Digraph& g, std::vector<ArrowIdx> arrows);
std::string cycle_to_string(const Digraph& g, const Cycle& c);

// Element of the set U of sinks and cycles: a sink vertex or a cycle.
using SinkOrCycle = std::variant<Vertex, Cycle>;

struct MaximalElement {
  SinkOrCycle which;
  std::size_t predecessor_count = 0;
};

struct SubgraphFlags {
  bool full = false;
  bool cohereditary = false;
  bool colorful = false;

  bool all() const noexcept { return full && cohereditary && colorful; }
  friend bool operator==(const SubgraphFlags&, const SubgraphFlags&) = default;
};

std::vector<Vertex> sinks(const Digraph& g);

// All simple cycles, each once up to rotation, ordered by anchor id and then
// by depth-first discovery. The output can be exponential in the size of g.
std::vector<Cycle> cycles(const Digraph& g);

std::vector<ArrowIdx> exits(const Digraph& g, const Cycle& c);

// {w : w connects to v}, v included, ascending vertex order.
std::vector<Vertex> predecessors(const Digraph& g, Vertex v);

// Vertices reachable from any of `from` by a path, `from` included.
std::vector<bool> reachable_from(const Digraph& g, std::span<const Vertex> from);

bool connects_to(const Digraph& g, const SinkOrCycle& a, const SinkOrCycle& b);

// Maximal sinks (vertex order) followed by maximal cycles (cycle order).
std::vector<MaximalElement> maximal_sinks_and_cycles(const Digraph& g);

// vs and es are index lists into g; throws unless every arrow of es has both
// ends in vs.
SubgraphFlags subgraph_flags(const Digraph& g, std::span<const Vertex> vs,
                             std::span<const ArrowIdx> es);
// Flags of a digraph whose ids are a subset of g's ids.
SubgraphFlags subgraph_flags(const Digraph& g, const Digraph& sub);

struct Embedding {
  std::vector<Vertex> vertices;  // g-index of each sub vertex
  std::vector<ArrowIdx> arrows;  // g-index of each sub arrow
};
// Throws unless sub is a subgraph of g (matching ids and endpoints).
Embedding embed(const Digraph& g, const Digraph& sub);

// Full subgraph on vs with separation {X ∩ E' : nonempty}.
Digraph induced_subgraph(const Digraph& g, std::span<const Vertex> vs);

std::vector<std::vector<Vertex>> strongly_connected_components(const Digraph& g);
bool is_acyclic(const Digraph& g);
// Decided from the strongly connected components, independently of cycles().
bool cycles_disjoint(const Digraph& g);

}  // namespace lpa
