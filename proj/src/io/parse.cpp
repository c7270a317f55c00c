#include "cmreg/parse.hpp"

#include <cctype>

namespace cmreg {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const PolyRing& ring) : text_(text), ring_(ring) {}

  Polynomial parse() {
    std::vector<Term> terms;
    skip();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        throw ParseError(std::string("expected '+' or '-' but found '") + peek() + "'", pos_);
      }
      terms.push_back(term(sign));
      first = false;
    }
    return Polynomial::from_terms(ring_, std::move(terms));
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  mpz_class integer() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) throw ParseError("expected a number", start);
    mpz_class v(std::string(text_.substr(start, pos_ - start)));
    skip();
    return v;
  }

  Term term(int sign) {
    Scalar coefficient(sign);
    Monomial monomial;
    bool need_factor = true;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      mpz_class num = integer();
      mpz_class den = 1;
      if (!at_end() && peek() == '/') {
        ++pos_;
        skip();
        const std::size_t at = pos_;
        den = integer();
        if (den == 0) throw ParseError("division by zero in coefficient", at);
      }
      Scalar c(num, den);
      c.canonicalize();
      coefficient *= c;
      need_factor = false;
      if (at_end() || peek() != '*') return Term{monomial, coefficient};
      ++pos_;
      skip();
      need_factor = true;
    }
    while (need_factor) {
      factor(monomial);
      need_factor = !at_end() && peek() == '*';
      if (need_factor) {
        ++pos_;
        skip();
      }
    }
    return Term{monomial, coefficient};
  }

  void factor(Monomial& monomial) {
    const std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
      ++pos_;
    }
    if (start == pos_) {
      if (at_end()) throw ParseError("expected a variable", pos_);
      throw ParseError(std::string("unexpected character '") + peek() + "'", pos_);
    }
    const std::string name(text_.substr(start, pos_ - start));
    auto index = ring_.index_of(name);
    if (!index) throw ParseError("unknown variable '" + name + "'", start);
    skip();
    long exponent = 1;
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip();
      const std::size_t at = pos_;
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
        throw ParseError("malformed exponent", at);
      }
      mpz_class e = integer();
      if (e <= 0 || e > 1000000) throw ParseError("malformed exponent", at);
      exponent = e.get_si();
    }
    monomial.set(*index, monomial[*index] + static_cast<int>(exponent));
  }

  std::string_view text_;
  const PolyRing& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const PolyRing& ring) {
  return Parser(text, ring).parse();
}

}  // namespace cmreg
