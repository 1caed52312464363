#include "quadcomp/poly_io.hpp"

#include <cctype>
#include <limits>
#include <sstream>

#include "quadcomp/errors.hpp"

namespace quadcomp {

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  SparsePoly parse() {
    skip_space();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    SparsePoly result;
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    parse_term(result, negative);
    while (true) {
      skip_space();
      if (at_end()) break;
      const char op = peek();
      if (op != '+' && op != '-') throw ParseError(std::string("expected '+' or '-', found '") + op + "'", pos_);
      ++pos_;
      parse_term(result, op == '-');
    }
    return result;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek())) != 0) ++pos_;
  }

  bool digit_ahead() const { return !at_end() && std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  std::string digits() {
    const std::size_t start = pos_;
    while (digit_ahead()) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void parse_term(SparsePoly& into, bool negative) {
    skip_space();
    const std::size_t term_start = pos_;
    Rational coeff = 1;
    bool have_coeff = false;
    if (digit_ahead()) {
      BigInt num(digits(), 10);
      BigInt den = 1;
      skip_space();
      if (!at_end() && peek() == '/') {
        ++pos_;
        skip_space();
        const std::size_t den_pos = pos_;
        if (!digit_ahead()) throw ParseError("expected denominator", pos_);
        den = BigInt(digits(), 10);
        if (den == 0) throw DomainError("division by zero in coefficient at position " + std::to_string(den_pos));
      }
      coeff = Rational(num, den);
      have_coeff = true;
      skip_space();
    }

    bool have_x = false;
    if (!at_end() && peek() == '*') {
      if (!have_coeff) throw ParseError("'*' without a coefficient", pos_);
      ++pos_;
      skip_space();
      if (at_end() || peek() != 'x') throw ParseError("expected 'x' after '*'", pos_);
    }
    Exponent exponent = 0;
    if (!at_end() && peek() == 'x') {
      ++pos_;
      have_x = true;
      exponent = 1;
      skip_space();
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_space();
        if (!digit_ahead()) throw ParseError("expected exponent", pos_);
        const std::size_t exp_pos = pos_;
        const BigInt value(digits(), 10);
        if (value > std::numeric_limits<Exponent>::max()) throw ParseError("exponent too large", exp_pos);
        exponent = static_cast<Exponent>(value.get_ui());
      }
    }
    if (!have_coeff && !have_x) {
      if (at_end()) throw ParseError("expected a term", term_start);
      throw ParseError(std::string("unexpected character '") + peek() + "'", pos_);
    }
    into.add_to_coefficient(exponent, negative ? -coeff : coeff);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

SparsePoly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

std::string format_poly(const SparsePoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const Rational magnitude = c.abs();
    if (e == 0) {
      os << magnitude.to_string();
      continue;
    }
    if (magnitude != 1) os << magnitude.to_string() << '*';
    os << 'x';
    if (e > 1) os << '^' << e;
  }
  return os.str();
}

}  // namespace quadcomp
