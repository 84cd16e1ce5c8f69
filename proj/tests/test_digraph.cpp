#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "lpa/digraph.hpp"
#include "lpa/digraph_io.hpp"
#include "lpa/error.hpp"
#include "support/support.hpp"

using namespace lpa;
using lpa::testing::load_fixture;

namespace {

std::vector<std::string> ids(const Digraph& g, const std::vector<Vertex>& vs) {
  std::vector<std::string> out;
  for (Vertex v : vs) out.push_back(g.vertex_name(v));
  return out;
}

// reach[a][b]: a path (possibly trivial) from a to b. Floyd–Warshall closure.
std::vector<std::vector<bool>> reach_matrix(const Digraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (Vertex v = 0; v < n; ++v) r[v][v] = true;
  for (const Arrow& a : g.arrows()) r[a.src][a.tgt] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (r[i][k] && r[k][j]) r[i][j] = true;
  return r;
}

// All closed arrow sequences with distinct sources, each rotated to its
// smallest arrow-index rotation.
std::set<std::vector<ArrowIdx>> brute_force_cycles(const Digraph& g) {
  std::set<std::vector<ArrowIdx>> out;
  std::vector<ArrowIdx> seq;
  std::function<void(Vertex, Vertex, std::vector<bool>&)> grow = [&](Vertex start, Vertex at, std::vector<bool>& used) {
    for (ArrowIdx a : g.out_arrows(at)) {
      const Vertex t = g.arrow(a).tgt;
      seq.push_back(a);
      if (t == start) {
        auto rot = seq;
        std::rotate(rot.begin(), std::min_element(rot.begin(), rot.end()), rot.end());
        out.insert(rot);
      } else if (!used[t]) {
        used[t] = true;
        grow(start, t, used);
        used[t] = false;
      }
      seq.pop_back();
    }
  };
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    std::vector<bool> used(g.vertex_count(), false);
    used[v] = true;
    grow(v, v, used);
  }
  return out;
}

}  // namespace

TEST_CASE("load: Toeplitz digraph gets the default separation") {
  const Digraph g = load_fixture("toeplitz");
  REQUIRE(g.part_count() == 1);
  CHECK(g.separation_ids() == std::vector<std::vector<std::string>>{{"e", "f"}});
  CHECK_FALSE(g.is_separated());
}

TEST_CASE("load: single vertex has empty separation") {
  const Digraph g = load_digraph(R"({"vertices": ["v"]})");
  CHECK(g.part_count() == 0);
  CHECK(g.arrow_count() == 0);
}

TEST_CASE("load: invalid descriptions are rejected") {
  CHECK_THROWS_AS(load_digraph(R"({"vertices": ["v","w"], "arrows": [{"id":"e","src":"v","tgt":"v"},
      {"id":"f","src":"w","tgt":"v"}], "separation": [["e","f"]]})"),
                  Error);
  CHECK_THROWS_AS(load_digraph(R"({"vertices": ["v","v"]})"), Error);
  CHECK_THROWS_AS(load_digraph(R"({"vertices": ["v"], "arrows": [{"id":"v","src":"v","tgt":"v"}]})"), Error);
  CHECK_THROWS_AS(load_digraph(R"({"vertices": ["v"], "arrows": [{"id":"e","src":"v","tgt":"x"}]})"), Error);
  CHECK_THROWS_AS(load_digraph(R"({"vertices": ["v"], "arrows": [{"id":"e","src":"v","tgt":"v"},
      {"id":"f","src":"v","tgt":"v"}], "separation": [["e"]]})"),
                  Error);
  CHECK_THROWS_AS(load_digraph(R"({"vertices": ["v"], "colour": 1})"), Error);
  CHECK_THROWS_AS(load_digraph(R"({"vertices": ["v"], "arrows": [{"id":"e","src":"v","tgt":"v","w":2}]})"), Error);
  CHECK_THROWS_AS(load_digraph(R"({"vertices": ["v"], "arrows": [{"id":"e","src":"v","tgt":"v"}],
      "separation": [["e"], []]})"),
                  Error);
  CHECK_THROWS_AS(load_digraph("[1, 2"), Error);
}

TEST_CASE("load: explicit separation") {
  const Digraph g = load_fixture("separated_toeplitz");
  CHECK(g.part_count() == 2);
  CHECK(g.is_separated());
  CHECK(digraph_to_json(g)["separation"].size() == 2);
}

TEST_CASE("sinks") {
  CHECK(ids(load_fixture("toeplitz"), sinks(load_fixture("toeplitz"))) == std::vector<std::string>{"w"});
  CHECK(sinks(load_fixture("rose2")).empty());
  const Digraph g3 = load_fixture("gamma3");
  CHECK(ids(g3, sinks(g3)) == std::vector<std::string>{"w1", "w2"});
}

TEST_CASE("cycles") {
  const Digraph t = load_fixture("toeplitz");
  const auto ct = cycles(t);
  REQUIRE(ct.size() == 1);
  CHECK(cycle_to_string(t, ct[0]) == "(e)");
  CHECK(ct[0].anchor == t.vertex("v"));
  const auto c2 = cycles(load_fixture("gamma2"));
  CHECK(c2.size() == 2);
  CHECK(std::all_of(c2.begin(), c2.end(), [](const Cycle& c) { return c.arrows.size() == 1; }));
  CHECK(cycles(load_fixture("gamma3")).empty());
}

TEST_CASE("cycle anchors use the smallest vertex id") {
  const Digraph g = load_digraph(R"({"vertices": ["z","b","m"], "arrows": [
      {"id":"x","src":"z","tgt":"b"},{"id":"y","src":"b","tgt":"m"},{"id":"q","src":"m","tgt":"z"}]})");
  const auto cs = cycles(g);
  REQUIRE(cs.size() == 1);
  CHECK(g.vertex_name(cs[0].anchor) == "b");
  CHECK(cycle_to_string(g, cs[0]) == "(y q x)");
  CHECK(make_cycle(g, {g.arrow_index("q"), g.arrow_index("x"), g.arrow_index("y")}) == cs[0]);
  CHECK_THROWS_AS(make_cycle(g, {g.arrow_index("x")}), Error);
}

TEST_CASE("exits") {
  const Digraph t = load_fixture("toeplitz");
  const auto ex = exits(t, cycles(t)[0]);
  CHECK(ex == std::vector<ArrowIdx>{t.arrow_index("f")});
  const Digraph r = load_fixture("rose2");
  const Cycle e0 = make_cycle(r, {r.arrow_index("e0")});
  CHECK(exits(r, e0) == std::vector<ArrowIdx>{r.arrow_index("e1")});
  const Digraph loop = load_digraph(R"({"vertices": ["v"], "arrows": [{"id":"e","src":"v","tgt":"v"}]})");
  CHECK(exits(loop, cycles(loop)[0]).empty());
  CHECK_THROWS_AS(exits(loop, Cycle{{5}, 0}), Error);
}

TEST_CASE("predecessors") {
  const Digraph t = load_fixture("toeplitz");
  CHECK(ids(t, predecessors(t, t.vertex("w"))) == std::vector<std::string>{"v", "w"});
  const Digraph g1 = load_fixture("gamma1");
  CHECK(ids(g1, predecessors(g1, g1.vertex("v"))) == std::vector<std::string>{"v"});
  const Digraph single = load_digraph(R"({"vertices": ["x"]})");
  CHECK(predecessors(single, 0) == std::vector<Vertex>{0});
  CHECK_THROWS(predecessors(single, 3));
}

TEST_CASE("connects_to") {
  const Digraph t = load_fixture("toeplitz");
  CHECK(connects_to(t, cycles(t)[0], t.vertex("w")));
  const Digraph g2 = load_fixture("gamma2");
  const auto c2 = cycles(g2);
  CHECK(connects_to(g2, c2[0], c2[1]));
  CHECK(connects_to(g2, c2[1], c2[0]));
  const Digraph g3 = load_fixture("gamma3");
  CHECK_FALSE(connects_to(g3, g3.vertex("w1"), g3.vertex("w2")));
  CHECK_THROWS_AS(connects_to(g3, g3.vertex("u"), g3.vertex("w2")), Error);
}

TEST_CASE("maximal sinks and cycles") {
  const Digraph t = load_fixture("toeplitz");
  const auto mt = maximal_sinks_and_cycles(t);
  REQUIRE(mt.size() == 1);
  CHECK(std::holds_alternative<Cycle>(mt[0].which));
  CHECK(mt[0].predecessor_count == 1);

  const Digraph g1 = load_fixture("gamma1");
  const auto m1 = maximal_sinks_and_cycles(g1);
  REQUIRE(m1.size() == 1);
  CHECK(std::get<Cycle>(m1[0].which).anchor == g1.vertex("v"));
  CHECK(m1[0].predecessor_count == 1);

  CHECK(maximal_sinks_and_cycles(load_fixture("gamma2")).empty());
}

TEST_CASE("subgraph flags") {
  const Digraph t = load_fixture("toeplitz");
  const Vertex v = t.vertex("v"), w = t.vertex("w");
  const ArrowIdx e = t.arrow_index("e");
  std::vector<Vertex> vs{v};
  std::vector<ArrowIdx> es{e};
  CHECK(subgraph_flags(t, vs, es).all());
  std::vector<Vertex> ws{w};
  const auto f = subgraph_flags(t, ws, std::vector<ArrowIdx>{});
  CHECK_FALSE(f.cohereditary);
  std::vector<Vertex> all{v, w};
  std::vector<ArrowIdx> every{e, t.arrow_index("f")};
  CHECK(subgraph_flags(t, all, every).all());
  CHECK_FALSE(subgraph_flags(t, all, es).full);
  CHECK_THROWS_AS(subgraph_flags(t, vs, std::vector<ArrowIdx>{t.arrow_index("f")}), Error);
}

TEST_CASE("colorful needs one arrow per part") {
  const Digraph s = load_fixture("separated_toeplitz");
  std::vector<Vertex> vs{s.vertex("v")};
  std::vector<ArrowIdx> es{s.arrow_index("e")};
  const auto f = subgraph_flags(s, vs, es);
  CHECK(f.full);
  CHECK_FALSE(f.colorful);
}

TEST_CASE("induced subgraph") {
  const Digraph t = load_fixture("toeplitz");
  std::vector<Vertex> vs{t.vertex("v")};
  const Digraph sub = induced_subgraph(t, vs);
  CHECK(sub.vertex_count() == 1);
  CHECK(sub.arrow_count() == 1);
  CHECK(sub.separation_ids() == std::vector<std::vector<std::string>>{{"e"}});
  CHECK(induced_subgraph(t, std::vector<Vertex>{}).vertex_count() == 0);
  const Digraph g3 = load_fixture("gamma3");
  std::vector<Vertex> uw{g3.vertex("u"), g3.vertex("w1")};
  const Digraph s3 = induced_subgraph(g3, uw);
  REQUIRE(s3.arrow_count() == 1);
  CHECK(s3.arrow(0).id == "a1");
}

TEST_CASE("property: invariants over all small digraphs") {
  std::size_t count = 0;
  lpa::testing::for_each_small_digraph(3, 4, [&](const Digraph& g) {
    ++count;
    const auto reach = reach_matrix(g);
    const auto cs = cycles(g);

    // cycles() matches a brute-force enumeration.
    std::set<std::vector<ArrowIdx>> ours;
    for (const Cycle& c : cs) {
      auto rot = c.arrows;
      std::rotate(rot.begin(), std::min_element(rot.begin(), rot.end()), rot.end());
      ours.insert(rot);
    }
    REQUIRE(ours.size() == cs.size());
    CHECK(ours == brute_force_cycles(g));

    // Disjointness from components agrees with the enumeration.
    std::vector<int> on(g.vertex_count(), 0);
    for (const Cycle& c : cs)
      for (Vertex v : c.vertices(g)) ++on[v];
    const bool disjoint = std::all_of(on.begin(), on.end(), [](int k) { return k <= 1; });
    CHECK(cycles_disjoint(g) == disjoint);
    CHECK(is_acyclic(g) == cs.empty());

    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      // Predecessors are exactly reverse reachability, and cohereditary.
      std::vector<Vertex> expect;
      for (Vertex u = 0; u < g.vertex_count(); ++u)
        if (reach[u][v]) expect.push_back(u);
      const auto preds = predecessors(g, v);
      CHECK(preds == expect);
      const Digraph sub = induced_subgraph(g, preds);
      CHECK(subgraph_flags(g, sub).cohereditary);
    }

    // Preorder on sinks and cycles: reflexive and transitive.
    std::vector<SinkOrCycle> u;
    for (Vertex w : sinks(g)) u.emplace_back(w);
    for (const Cycle& c : cs) u.emplace_back(c);
    for (const auto& a : u) {
      CHECK(connects_to(g, a, a));
      for (const auto& b : u)
        for (const auto& c : u)
          if (connects_to(g, a, b) && connects_to(g, b, c)) CHECK(connects_to(g, a, c));
    }

    // A cycle reaches no other sink or cycle exactly when it has no exit.
    for (const Cycle& c : cs) {
      const Vertex a = c.anchor;
      bool reaches_other = false;
      for (Vertex w : sinks(g)) reaches_other = reaches_other || reach[a][w];
      for (const Cycle& d : cs) {
        if (d == c) continue;
        for (Vertex x : d.vertices(g)) reaches_other = reaches_other || reach[a][x];
      }
      CHECK(reaches_other == !exits(g, c).empty());
    }
  });
  // Multisets of at most 4 arrows over n*n slots, for n = 1, 2, 3.
  CHECK(count == 5 + 70 + 715);
}
