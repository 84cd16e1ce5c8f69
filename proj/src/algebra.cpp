#include "lpa/algebra.hpp"

#include <algorithm>

#include "lpa/error.hpp"

namespace lpa {

Vertex letter_source(const Digraph& g, Letter l) {
  const Arrow& a = g.arrow(l.arrow);
  return l.dual ? a.tgt : a.src;
}

Vertex letter_target(const Digraph& g, Letter l) {
  const Arrow& a = g.arrow(l.arrow);
  return l.dual ? a.src : a.tgt;
}

Monomial::Monomial(Vertex start, std::vector<Letter> letters)
    : start_(start), letters_(std::move(letters)) {
  while (split_ < letters_.size() && !letters_[split_].dual) ++split_;
  path_pair_ = std::all_of(letters_.begin() + static_cast<std::ptrdiff_t>(split_), letters_.end(),
                           [](Letter l) { return l.dual; });
}

Monomial Monomial::from_paths(const Digraph& g, const Path& p, const Path& q) {
  validate_path(g, p);
  validate_path(g, q);
  if (p.end(g) != q.end(g)) throw Error("p q* needs t(p) = t(q)");
  std::vector<Letter> letters;
  for (ArrowIdx a : p.arrows) letters.push_back({a, false});
  for (auto it = q.arrows.rbegin(); it != q.arrows.rend(); ++it) letters.push_back({*it, true});
  return Monomial(p.start, std::move(letters));
}

Vertex Monomial::target(const Digraph& g) const {
  return letters_.empty() ? start_ : letter_target(g, letters_.back());
}

std::optional<std::pair<Path, Path>> Monomial::as_path_pair(const Digraph& g) const {
  if (!path_pair_) return std::nullopt;
  Path p{start_, {}};
  for (std::size_t i = 0; i < split_; ++i) p.arrows.push_back(letters_[i].arrow);
  Path q{p.end(g), {}};
  for (std::size_t i = letters_.size(); i > split_; --i) q.arrows.push_back(letters_[i - 1].arrow);
  if (!q.arrows.empty()) q.start = g.arrow(q.arrows.front()).src;
  return std::make_pair(std::move(p), std::move(q));
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.letters_.size() <=> b.letters_.size(); c != 0) return c;
  if (a.path_pair_ != b.path_pair_) return a.path_pair_ ? std::strong_ordering::less : std::strong_ordering::greater;
  if (a.path_pair_) {
    // p arrows, then q arrows (q is the reversed dual tail).
    auto pa = std::span(a.letters_).first(a.split_);
    auto pb = std::span(b.letters_).first(b.split_);
    auto pcmp = std::lexicographical_compare_three_way(
        pa.begin(), pa.end(), pb.begin(), pb.end(),
        [](Letter x, Letter y) { return x.arrow <=> y.arrow; });
    if (pcmp != 0) return pcmp;
    auto qa = std::span(a.letters_).subspan(a.split_);
    auto qb = std::span(b.letters_).subspan(b.split_);
    auto qcmp = std::lexicographical_compare_three_way(
        qa.rbegin(), qa.rend(), qb.rbegin(), qb.rend(),
        [](Letter x, Letter y) { return x.arrow <=> y.arrow; });
    if (qcmp != 0) return qcmp;
  } else if (auto c = a.letters_ <=> b.letters_; c != 0) {
    return c;
  }
  return a.start_ <=> b.start_;
}

void validate_monomial(const Digraph& g, const Monomial& m) {
  if (m.source() >= g.vertex_count()) throw Error("monomial starts at an unknown vertex");
  Vertex at = m.source();
  for (Letter l : m.letters()) {
    if (l.arrow >= g.arrow_count()) throw Error("monomial uses an unknown arrow");
    if (letter_source(g, l) != at) throw Error("letters of monomial do not compose");
    at = letter_target(g, l);
  }
}

namespace {

enum class RedexKind { none, cancel, expand };

struct Redex {
  RedexKind kind = RedexKind::none;
  std::size_t at = 0;
};

Redex find_redex(const Digraph& g, const std::vector<Letter>& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    const Letter x = w[i], y = w[i + 1];
    if (x.dual && !y.dual && g.part_of(x.arrow) == g.part_of(y.arrow)) {
      return {RedexKind::cancel, i};
    }
    if (!x.dual && y.dual && x.arrow == y.arrow && g.special_arrow(g.part_of(x.arrow)) == x.arrow) {
      return {RedexKind::expand, i};
    }
  }
  return {};
}

// Worklist rewriting. The source vertex of a word never changes under
// either rule, so it is carried along unchanged.
void reduce_into(const Digraph& g, const Monomial& m, const Rational& c, Element& out) {
  std::vector<std::pair<std::vector<Letter>, Rational>> work;
  work.emplace_back(m.letters(), c);
  const Vertex start = m.source();
  while (!work.empty()) {
    auto [w, coef] = std::move(work.back());
    work.pop_back();
    Redex r = find_redex(g, w);
    if (r.kind == RedexKind::none) {
      out.add(Monomial::word(start, std::move(w)), coef);
      continue;
    }
    const Letter x = w[r.at], y = w[r.at + 1];
    std::vector<Letter> shorter;
    shorter.reserve(w.size() - 2);
    shorter.insert(shorter.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(r.at));
    shorter.insert(shorter.end(), w.begin() + static_cast<std::ptrdiff_t>(r.at + 2), w.end());
    if (r.kind == RedexKind::cancel) {
      if (x.arrow == y.arrow) work.emplace_back(std::move(shorter), coef);
      continue;
    }
    for (ArrowIdx e : g.part(g.part_of(x.arrow))) {
      if (e == x.arrow) continue;
      std::vector<Letter> replaced = w;
      replaced[r.at] = Letter{e, false};
      replaced[r.at + 1] = Letter{e, true};
      work.emplace_back(std::move(replaced), -coef);
    }
    work.emplace_back(std::move(shorter), coef);
  }
}

}  // namespace

bool is_normal(const Digraph& g, const Monomial& m) {
  return find_redex(g, m.letters()).kind == RedexKind::none;
}

Rational Element::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Element::add(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Element& Element::operator+=(const Element& other) {
  for (const auto& [m, c] : other.terms_) add(m, c);
  return *this;
}

Element& Element::operator-=(const Element& other) {
  for (const auto& [m, c] : other.terms_) add(m, -c);
  return *this;
}

Element& Element::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

Generator resolve_generator(const Digraph& g, std::string_view id, bool dual) {
  if (auto v = g.find_vertex(id)) {
    if (dual) throw Error("'" + std::string(id) + "' is a vertex and has no dual");
    return {Generator::Kind::vertex, *v};
  }
  if (auto a = g.find_arrow(id)) {
    return {dual ? Generator::Kind::dual : Generator::Kind::arrow, *a};
  }
  throw Error("unknown id '" + std::string(id) + "'");
}

Element generator(const Digraph& g, Generator gen) {
  Element out;
  switch (gen.kind) {
    case Generator::Kind::vertex:
      if (gen.index >= g.vertex_count()) throw Error("unknown vertex");
      out.add(Monomial::vertex(gen.index), 1);
      break;
    case Generator::Kind::arrow:
    case Generator::Kind::dual: {
      if (gen.index >= g.arrow_count()) throw Error("unknown arrow");
      Letter l{gen.index, gen.kind == Generator::Kind::dual};
      out.add(Monomial::word(letter_source(g, l), {l}), 1);
      break;
    }
  }
  return out;
}

Element generator(const Digraph& g, std::string_view id, bool dual) {
  return generator(g, resolve_generator(g, id, dual));
}

Element unit(const Digraph& g) {
  Element out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) out.add(Monomial::vertex(v), 1);
  return out;
}

Element normal_form(const Digraph& g, const RawCombination& raw) {
  Element out;
  for (const auto& [m, c] : raw) {
    if (c == 0) continue;
    validate_monomial(g, m);
    reduce_into(g, m, c, out);
  }
  return out;
}

Element normal_form(const Digraph& g, const Monomial& m) {
  return normal_form(g, RawCombination{{m, Rational(1)}});
}

Element multiply(const Digraph& g, const Element& a, const Element& b) {
  Element out;
  for (const auto& [ma, ca] : a.terms()) {
    const Vertex joint = ma.target(g);
    for (const auto& [mb, cb] : b.terms()) {
      if (mb.source() != joint) continue;
      std::vector<Letter> w = ma.letters();
      w.insert(w.end(), mb.letters().begin(), mb.letters().end());
      reduce_into(g, Monomial::word(ma.source(), std::move(w)), ca * cb, out);
    }
  }
  return out;
}

Element star(const Digraph& g, const Element& a) {
  // Reversal maps both redex patterns onto themselves, so reduced words
  // stay reduced.
  Element out;
  for (const auto& [m, c] : a.terms()) {
    std::vector<Letter> rev(m.letters().rbegin(), m.letters().rend());
    for (auto& l : rev) l.dual = !l.dual;
    out.add(Monomial::word(m.target(g), std::move(rev)), c);
  }
  return out;
}

Grade monomial_grade(const Monomial& m) {
  Grade gr;
  for (Letter l : m.letters()) {
    const int e = l.dual ? -1 : 1;
    gr.z += e;
    if (!gr.fe.empty() && gr.fe.back().arrow == l.arrow && gr.fe.back().exponent == -e) {
      gr.fe.pop_back();
    } else {
      gr.fe.push_back({l.arrow, e});
    }
  }
  return gr;
}

Grade grade_product(const Grade& a, const Grade& b) {
  Grade out = a;
  out.z += b.z;
  for (const FreeLetter& f : b.fe) {
    if (!out.fe.empty() && out.fe.back().arrow == f.arrow && out.fe.back().exponent == -f.exponent) {
      out.fe.pop_back();
    } else {
      out.fe.push_back(f);
    }
  }
  return out;
}

std::optional<Grade> grade(const Element& a) {
  if (a.is_zero()) return Grade{};
  std::optional<Grade> common;
  for (const auto& [m, c] : a.terms()) {
    Grade gr = monomial_grade(m);
    if (!common) {
      common = std::move(gr);
    } else if (!(*common == gr)) {
      return std::nullopt;
    }
  }
  return common;
}

std::string monomial_to_string(const Digraph& g, const Monomial& m) {
  if (m.is_vertex()) return g.vertex_name(m.source());
  std::string s;
  for (Letter l : m.letters()) {
    if (!s.empty()) s += ' ';
    s += g.arrow(l.arrow).id;
    if (l.dual) s += '^';
  }
  return s;
}

std::string to_string(const Digraph& g, const Element& a) {
  if (a.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : a.terms()) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    if (mag != 1) s += mag.get_str() + " ";
    s += monomial_to_string(g, m);
    first = false;
  }
  return s;
}

std::string grade_to_string(const Digraph& g, const Grade& gr) {
  std::string s = "z=" + std::to_string(gr.z) + " fe=";
  if (gr.fe.empty()) return s + "1";
  for (std::size_t i = 0; i < gr.fe.size(); ++i) {
    if (i) s += '.';
    s += g.arrow(gr.fe[i].arrow).id;
    if (gr.fe[i].exponent < 0) s += "^-1";
  }
  return s;
}

std::vector<Monomial> normal_words(const Digraph& g, std::size_t max_length) {
  std::vector<Monomial> out;
  std::vector<Letter> w;
  auto extend = [&](auto&& self, Vertex start, Vertex at) -> void {
    out.push_back(Monomial::word(start, w));
    if (w.size() == max_length) return;
    auto try_letter = [&](Letter l) {
      if (!w.empty()) {
        const Letter x = w.back();
        if (x.dual && !l.dual && g.part_of(x.arrow) == g.part_of(l.arrow)) return;
        if (!x.dual && l.dual && x.arrow == l.arrow && g.special_arrow(g.part_of(x.arrow)) == x.arrow) return;
      }
      w.push_back(l);
      self(self, start, letter_target(g, l));
      w.pop_back();
    };
    for (ArrowIdx a : g.out_arrows(at)) try_letter({a, false});
    for (ArrowIdx a : g.in_arrows(at)) try_letter({a, true});
  };
  for (Vertex v = 0; v < g.vertex_count(); ++v) extend(extend, v, v);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace lpa
