#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lpa/digraph.hpp"
#include "lpa/rational.hpp"

namespace lpa {

// One generator letter of a word in the extended digraph: e, or e* when dual.
struct Letter {
  ArrowIdx arrow = 0;
  bool dual = false;

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

Vertex letter_source(const Digraph& g, Letter l);
Vertex letter_target(const Digraph& g, Letter l);

// A word in V ⊔ E ⊔ E* that is a path of the extended digraph. An empty
// word is the vertex `source()`. For non-separated digraphs every reduced
// word has the shape p q* (arrows, then duals); for separated digraphs a
// dual e* may be followed by an arrow f from a different part, which no
// relation simplifies.
class Monomial {
 public:
  Monomial() = default;
  static Monomial vertex(Vertex v) { return Monomial(v, {}); }
  // Unchecked; use validate_monomial when the letters come from outside.
  static Monomial word(Vertex start, std::vector<Letter> letters) {
    return Monomial(start, std::move(letters));
  }
  // p q*; throws unless t(p) = t(q).
  static Monomial from_paths(const Digraph& g, const Path& p, const Path& q);

  Vertex source() const noexcept { return start_; }
  Vertex target(const Digraph& g) const;
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool is_vertex() const noexcept { return letters_.empty(); }
  bool is_path_pair() const noexcept { return path_pair_; }
  // (p, q) with this word equal to p q*, when it has that shape.
  std::optional<std::pair<Path, Path>> as_path_pair(const Digraph& g) const;

  // Term order: by length; p q* words before other shapes; then p arrows,
  // q arrows, start vertex (or letters, start vertex).
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.start_ == b.start_ && a.letters_ == b.letters_;
  }

 private:
  Monomial(Vertex start, std::vector<Letter> letters);

  Vertex start_ = 0;
  std::vector<Letter> letters_;
  std::size_t split_ = 0;  // number of leading non-dual letters
  bool path_pair_ = true;
};

void validate_monomial(const Digraph& g, const Monomial& m);
// No adjacent e* f with e, f in one part, and no adjacent γ γ* for a special γ.
bool is_normal(const Digraph& g, const Monomial& m);

// Finite rational combination of normal-form monomials; no zero coefficients.
class Element {
 public:
  using Terms = std::map<Monomial, Rational>;

  Element() = default;

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  Rational coefficient(const Monomial& m) const;

  // Caller keeps m in normal form.
  void add(const Monomial& m, const Rational& c);

  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  Element& operator*=(const Rational& s);

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Rational& s, Element a) { return a *= s; }
  friend bool operator==(const Element&, const Element&) = default;

 private:
  Terms terms_;
};

inline bool is_zero(const Element& a) { return a.is_zero(); }

// A generator of the algebra: vertex, arrow or dual arrow.
struct Generator {
  enum class Kind { vertex, arrow, dual };
  Kind kind = Kind::vertex;
  std::size_t index = 0;

  friend bool operator==(const Generator&, const Generator&) = default;
};

// Looks up id among vertices and arrows; dual is only valid for arrows.
Generator resolve_generator(const Digraph& g, std::string_view id, bool dual);
Element generator(const Digraph& g, std::string_view id, bool dual);
Element generator(const Digraph& g, Generator gen);
// Sum of all vertices.
Element unit(const Digraph& g);

using RawCombination = std::vector<std::pair<Monomial, Rational>>;

// Applies e* f -> δ_{e,f} t(e) within a part and
// γ γ* -> s(X) - Σ_{e∈X, e≠γ} e e* for the special arrow γ of X until
// no redex remains.
Element normal_form(const Digraph& g, const RawCombination& raw);
Element normal_form(const Digraph& g, const Monomial& m);

Element multiply(const Digraph& g, const Element& a, const Element& b);
// Linear extension of (x_1 ... x_k)* = x_k* ... x_1*.
Element star(const Digraph& g, const Element& a);

struct FreeLetter {
  ArrowIdx arrow = 0;
  int exponent = 1;  // +1 or -1

  friend bool operator==(const FreeLetter&, const FreeLetter&) = default;
};

// Z-grade and the universal free-group grade (reduced word over E).
struct Grade {
  long z = 0;
  std::vector<FreeLetter> fe;

  friend bool operator==(const Grade&, const Grade&) = default;
};

Grade monomial_grade(const Monomial& m);
Grade grade_product(const Grade& a, const Grade& b);
// Common grade of all terms, nullopt when inhomogeneous. Zero reports the
// trivial grade.
std::optional<Grade> grade(const Element& a);

// element := [sign] term (('+'|'-') term)*
// term    := [rational] factor+ | rational
// factor  := ID | ID '^'
// A bare rational r stands for r·1.
Element parse_element(const Digraph& g, std::string_view text);

std::string monomial_to_string(const Digraph& g, const Monomial& m);
std::string to_string(const Digraph& g, const Element& a);
std::string grade_to_string(const Digraph& g, const Grade& gr);

// All normal-form words of length <= max_length, in term order.
std::vector<Monomial> normal_words(const Digraph& g, std::size_t max_length);

}  // namespace lpa
