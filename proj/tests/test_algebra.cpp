#include <doctest.h>

#include <functional>
#include <set>

#include "lpa/algebra.hpp"
#include "lpa/error.hpp"
#include "support/support.hpp"

using namespace lpa;
using lpa::testing::load_fixture;
using lpa::testing::Rng;

namespace {

Element el(const Digraph& g, const std::string& text) { return parse_element(g, text); }

// Every defining relation, as lhs - rhs, built from generators by multiply.
std::vector<Element> relation_differences(const Digraph& g) {
  std::vector<Element> out;
  auto vtx = [&](Vertex v) { return generator(g, {Generator::Kind::vertex, v}); };
  auto arr = [&](ArrowIdx e) { return generator(g, {Generator::Kind::arrow, e}); };
  auto dua = [&](ArrowIdx e) { return generator(g, {Generator::Kind::dual, e}); };
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    for (Vertex w = 0; w < g.vertex_count(); ++w)
      out.push_back(multiply(g, vtx(v), vtx(w)) - (v == w ? vtx(v) : Element{}));
  for (ArrowIdx e = 0; e < g.arrow_count(); ++e) {
    const Arrow& a = g.arrow(e);
    out.push_back(multiply(g, vtx(a.src), arr(e)) - arr(e));
    out.push_back(multiply(g, arr(e), vtx(a.tgt)) - arr(e));
    out.push_back(multiply(g, vtx(a.tgt), dua(e)) - dua(e));
    out.push_back(multiply(g, dua(e), vtx(a.src)) - dua(e));
  }
  for (PartIdx x = 0; x < g.part_count(); ++x) {
    Element sum;
    for (ArrowIdx e : g.part(x)) {
      for (ArrowIdx f : g.part(x)) {
        out.push_back(multiply(g, dua(e), arr(f)) - (e == f ? vtx(g.arrow(e).tgt) : Element{}));
      }
      sum += multiply(g, arr(e), dua(e));
    }
    out.push_back(vtx(g.part_source(x)) - sum);
  }
  return out;
}

bool all_normal(const Digraph& g, const Element& a) {
  for (const auto& [m, c] : a.terms())
    if (!is_normal(g, m)) return false;
  return true;
}

}  // namespace

TEST_CASE("generators") {
  const Digraph t = load_fixture("toeplitz");
  const Element v = generator(t, "v", false);
  REQUIRE(v.size() == 1);
  CHECK(v.terms().begin()->first.is_vertex());
  const Element e = generator(t, "e", false);
  CHECK(e.terms().begin()->first.as_path_pair(t)->first.arrows == std::vector<ArrowIdx>{t.arrow_index("e")});
  const Element f = generator(t, "f", true);
  const auto pq = f.terms().begin()->first.as_path_pair(t);
  REQUIRE(pq.has_value());
  CHECK(pq->first.arrows.empty());
  CHECK(pq->first.start == t.vertex("w"));
  CHECK(pq->second.arrows == std::vector<ArrowIdx>{t.arrow_index("f")});
  CHECK_THROWS_AS(generator(t, "x", false), Error);
  CHECK_THROWS_AS(generator(t, "v", true), Error);
}

TEST_CASE("multiply: defining examples") {
  const Digraph t = load_fixture("toeplitz");
  CHECK(multiply(t, el(t, "e^"), el(t, "e")) == el(t, "v"));
  CHECK(multiply(t, el(t, "e"), el(t, "e^")) + multiply(t, el(t, "f"), el(t, "f^")) == el(t, "v"));
  CHECK(multiply(t, el(t, "e^"), el(t, "f")).is_zero());
  CHECK(multiply(t, el(t, "f"), el(t, "e")).is_zero());
  CHECK(multiply(t, el(t, "f^"), el(t, "f")) == el(t, "w"));
}

TEST_CASE("star") {
  const Digraph t = load_fixture("toeplitz");
  CHECK(star(t, el(t, "e")) == el(t, "e^"));
  CHECK(star(t, el(t, "e f f^")) == el(t, "f f^ e^"));
  CHECK(star(t, el(t, "2 v - 1/3 f")) == el(t, "2 v - 1/3 f^"));
}

TEST_CASE("grades") {
  const Digraph r = load_fixture("rose2");
  const auto g1 = grade(el(r, "e0 e1^"));
  REQUIRE(g1.has_value());
  CHECK(g1->z == 0);
  CHECK(grade_to_string(r, *g1) == "z=0 fe=e0.e1^-1");
  const auto gv = grade(el(r, "v"));
  REQUIRE(gv.has_value());
  CHECK(gv->z == 0);
  CHECK(gv->fe.empty());
  CHECK_FALSE(grade(el(r, "e0 + v")).has_value());
  CHECK(grade(Element{}).has_value());
}

TEST_CASE("normal form: rewriting examples") {
  const Digraph t = load_fixture("toeplitz");
  CHECK(to_string(t, el(t, "e e^")) == "v - f f^");
  const Digraph r = load_fixture("rose2");
  CHECK(to_string(r, el(r, "e0 e0^")) == "v - e1 e1^");
  const Element m = el(r, "e1 e0^");
  CHECK(m.size() == 1);
  CHECK(is_normal(r, m.terms().begin()->first));
  CHECK(to_string(r, m) == "e1 e0^");
}

TEST_CASE("normal form of raw combinations") {
  const Digraph t = load_fixture("toeplitz");
  const ArrowIdx e = t.arrow_index("e");
  RawCombination raw;
  raw.emplace_back(Monomial::word(t.vertex("v"), {{e, false}, {e, false}, {e, true}, {e, true}}), Rational(2));
  const Element nf = normal_form(t, raw);
  CHECK(all_normal(t, nf));
  CHECK(nf == 2 * multiply(t, el(t, "e e e^"), el(t, "e^")));
  CHECK(nf == 2 * (el(t, "v") - el(t, "f f^") - el(t, "e f f^ e^")));
  RawCombination bad;
  bad.emplace_back(Monomial::word(t.vertex("w"), {{e, false}}), Rational(1));
  CHECK_THROWS_AS(normal_form(t, bad), Error);
}

TEST_CASE("parse") {
  const Digraph t = load_fixture("toeplitz");
  CHECK(to_string(t, el(t, "e f")) == "e f");
  CHECK(to_string(t, el(t, "e f^")) == "0");
  CHECK(el(t, "v - e e^") == el(t, "f f^"));
  CHECK(el(t, "1/2 e + 1/2 e") == el(t, "e"));
  CHECK(el(t, "3") == 3 * unit(t));
  CHECK(el(t, "-e") == Rational(-1) * el(t, "e"));
  CHECK(el(t, "2/4 e") == Rational(1, 2) * el(t, "e"));
  CHECK(el(t, "e   f   f^") == multiply(t, el(t, "e"), el(t, "f f^")));
}

TEST_CASE("parse errors carry positions") {
  const Digraph t = load_fixture("toeplitz");
  auto position = [&](const std::string& text) -> long {
    try {
      parse_element(t, text);
    } catch (const ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1;
  };
  CHECK(position("") == 0);
  CHECK(position("e +") == 3);
  CHECK(position("e * f") == 2);
  CHECK(position("e + zz") == 4);
  CHECK(position("v^") == 0);
  CHECK(position("1/ e") == 2);
  CHECK(position("1/0 e") == 0);
  CHECK(position("2e") == 1);
}

TEST_CASE("is_zero") {
  const Digraph t = load_fixture("toeplitz");
  CHECK(is_zero(el(t, "e^ f")));
  CHECK_FALSE(is_zero(el(t, "e e f")));
  CHECK(is_zero(el(t, "v - e e^ - f f^")));
}

TEST_CASE("separated digraphs keep cross-part words") {
  const Digraph s = load_fixture("separated_toeplitz");
  const Element x = el(s, "e^ f");
  REQUIRE(x.size() == 1);
  CHECK_FALSE(x.terms().begin()->first.is_path_pair());
  CHECK(el(s, "e e^") == el(s, "v"));
  CHECK(el(s, "f f^") == el(s, "v"));
  CHECK(el(s, "f^ f") == el(s, "w"));
}

TEST_CASE("printing and term order") {
  const Digraph t = load_fixture("toeplitz");
  CHECK(to_string(t, el(t, "f f^ + 2 e - 1/2 v")) == "-1/2 v + 2 e + f f^");
  CHECK(to_string(t, Element{}) == "0");
}

TEST_CASE("property: defining relations normalize to zero") {
  Rng rng(11);
  for (int i = 0; i < 40; ++i) {
    const Digraph g = i % 2 ? lpa::testing::random_digraph(rng, 4, 7)
                            : lpa::testing::random_separated_digraph(rng, 4, 7);
    for (const Element& d : relation_differences(g)) CHECK(d.is_zero());
  }
}

TEST_CASE("property: associativity, involution and grading") {
  Rng rng(12);
  int products = 0;
  for (int i = 0; i < 30; ++i) {
    const Digraph g = i % 3 == 2 ? lpa::testing::random_separated_digraph(rng, 3, 5)
                                 : lpa::testing::random_digraph(rng, 3, 5);
    for (int j = 0; j < 10; ++j) {
      const Element a = lpa::testing::random_element(rng, g, 3, 3);
      const Element b = lpa::testing::random_element(rng, g, 3, 3);
      const Element c = lpa::testing::random_element(rng, g, 3, 3);
      const Element ab = multiply(g, a, b);
      CHECK(multiply(g, ab, c) == multiply(g, a, multiply(g, b, c)));
      CHECK(star(g, star(g, a)) == a);
      CHECK(star(g, ab) == multiply(g, star(g, b), star(g, a)));
      CHECK(all_normal(g, ab));
      CHECK(multiply(g, unit(g), a) == a);
      CHECK(multiply(g, a, unit(g)) == a);

      const Element ma = lpa::testing::random_monomial(rng, g, 3);
      const Element mb = lpa::testing::random_monomial(rng, g, 3);
      const Element p = multiply(g, ma, mb);
      if (!p.is_zero()) {
        ++products;
        const auto gp = grade(p);
        REQUIRE(gp.has_value());
        CHECK(*gp == grade_product(*grade(ma), *grade(mb)));
      }
    }
  }
  CHECK(products > 20);
}

TEST_CASE("property: paths are linearly independent and nonzero") {
  Rng rng(13);
  for (int i = 0; i < 20; ++i) {
    const Digraph g = lpa::testing::random_digraph(rng, 4, 6);
    std::set<std::vector<std::pair<ArrowIdx, int>>> grades;
    std::size_t paths = 0;
    std::function<void(Path)> walk = [&](Path p) {
      const Monomial m = Monomial::from_paths(g, p, Path{p.end(g), {}});
      const Element nf = normal_form(g, m);
      REQUIRE(nf.size() == 1);
      CHECK(nf.terms().begin()->first == m);
      CHECK(nf.terms().begin()->second == 1);
      CHECK_FALSE(is_zero(star(g, nf)));
      std::vector<std::pair<ArrowIdx, int>> key;
      for (const FreeLetter& f : monomial_grade(m).fe) key.emplace_back(f.arrow, f.exponent);
      if (!p.arrows.empty()) {
        CHECK(grades.insert(key).second);
      }
      ++paths;
      if (p.arrows.size() == 3) return;
      for (ArrowIdx a : g.out_arrows(p.end(g))) {
        Path q = p;
        q.arrows.push_back(a);
        walk(q);
      }
    };
    for (Vertex v = 0; v < g.vertex_count(); ++v) walk(Path{v, {}});
    CHECK(paths >= g.vertex_count());
  }
}

TEST_CASE("property: normal_words lists exactly the irreducible words") {
  Rng rng(14);
  for (int i = 0; i < 20; ++i) {
    const Digraph g = i % 2 ? lpa::testing::random_separated_digraph(rng, 3, 4)
                            : lpa::testing::random_digraph(rng, 3, 4);
    std::size_t brute = 0;
    std::vector<Letter> w;
    std::function<void(Vertex, Vertex)> all = [&](Vertex start, Vertex at) {
      if (is_normal(g, Monomial::word(start, w))) ++brute;
      if (w.size() == 3) return;
      for (ArrowIdx a = 0; a < g.arrow_count(); ++a) {
        for (bool dual : {false, true}) {
          const Letter l{a, dual};
          if (letter_source(g, l) != at) continue;
          w.push_back(l);
          all(start, letter_target(g, l));
          w.pop_back();
        }
      }
    };
    for (Vertex v = 0; v < g.vertex_count(); ++v) all(v, v);
    const auto words = normal_words(g, 3);
    CHECK(words.size() == brute);
    CHECK(std::is_sorted(words.begin(), words.end()));
    for (const Monomial& m : words) {
      Element single;
      single.add(m, 1);
      CHECK(normal_form(g, m) == single);
    }
  }
}

TEST_CASE("idempotents") {
  const Digraph g = load_fixture("gamma1");
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    for (Vertex w = 0; w < g.vertex_count(); ++w) {
      const Element vv = generator(g, {Generator::Kind::vertex, v});
      const Element ww = generator(g, {Generator::Kind::vertex, w});
      CHECK(multiply(g, vv, ww) == (v == w ? vv : Element{}));
    }
  }
}
