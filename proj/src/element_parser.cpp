#include <cctype>
#include <optional>
#include <string>

#include "lpa/algebra.hpp"
#include "lpa/error.hpp"

namespace lpa {
namespace {

bool id_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool id_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '\'';
}
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Parser {
 public:
  Parser(const Digraph& g, std::string_view text) : g_(g), text_(text) {}

  Element parse() {
    skip_space();
    if (at_end()) throw ParseError("empty expression", pos_);
    Element out;
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
      skip_space();
    }
    out += signed_term(negative);
    while (true) {
      skip_space();
      if (at_end()) break;
      const char c = peek();
      if (c != '+' && c != '-') throw ParseError("expected '+' or '-'", pos_);
      ++pos_;
      skip_space();
      out += signed_term(c == '-');
    }
    return out;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  std::optional<Rational> rational() {
    if (at_end() || !digit(peek())) return std::nullopt;
    const std::size_t begin = pos_;
    while (!at_end() && digit(peek())) ++pos_;
    if (!at_end() && peek() == '/') {
      ++pos_;
      if (at_end() || !digit(peek())) throw ParseError("expected denominator", pos_);
      while (!at_end() && digit(peek())) ++pos_;
    }
    if (!at_end() && id_char(peek())) throw ParseError("malformed number", pos_);
    try {
      return parse_rational(text_.substr(begin, pos_ - begin));
    } catch (const Error&) {
      throw ParseError("invalid rational", begin);
    }
  }

  Element factor() {
    const std::size_t begin = pos_;
    if (at_end() || !id_start(peek())) throw ParseError("expected identifier", pos_);
    while (!at_end() && id_char(peek())) ++pos_;
    const std::string_view id = text_.substr(begin, pos_ - begin);
    bool dual = false;
    if (!at_end() && peek() == '^') {
      dual = true;
      ++pos_;
    }
    try {
      return generator(g_, id, dual);
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(e.what(), begin);
    }
  }

  Element signed_term(bool negative) {
    if (at_end()) throw ParseError("expected term", pos_);
    std::optional<Rational> coef = rational();
    skip_space();
    Element product;
    bool have_factor = false;
    while (!at_end() && id_start(peek())) {
      Element f = factor();
      product = have_factor ? multiply(g_, product, f) : f;
      have_factor = true;
      skip_space();
    }
    if (!coef && !have_factor) throw ParseError("expected term", pos_);
    if (!have_factor) product = unit(g_);
    Rational c = coef.value_or(Rational(1));
    if (negative) c = -c;
    product *= c;
    return product;
  }

  const Digraph& g_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Element parse_element(const Digraph& g, std::string_view text) {
  return Parser(g, text).parse();
}

}  // namespace lpa
