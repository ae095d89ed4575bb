// Recursive-descent parser for oracle expressions:
//
//   expr   := term (('+' | '-') term)*
//   term   := number '*' term | atom
//   atom   := 'binomial' '(' number ',' number ',' number ')'
//           | 'rational' '(' number ',' number [',' ('1' | 'z')] ')'
//           | 'exp_times' '(' expr ')'
//           | '(' expr ')'
//   number := ['+' | '-'] decimal ['/' decimal]

#include <cctype>
#include <charconv>
#include <string>

#include "algser/errors.hpp"
#include "algser/oracle.hpp"

namespace algser {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  OracleSpec parse() {
    OracleSpec result = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return result;
  }

 private:
  OracleSpec expr() {
    std::vector<OracleSpec> terms;
    terms.push_back(term());
    for (;;) {
      if (consume('+')) {
        terms.push_back(term());
      } else if (consume('-')) {
        terms.push_back(OracleSpec::scale(-1, term()));
      } else {
        break;
      }
    }
    if (terms.size() == 1) return std::move(terms.front());
    return OracleSpec::sum(std::move(terms));
  }

  OracleSpec term() {
    skip_space();
    if (pos_ < text_.size() && starts_number(text_[pos_])) {
      const Real factor = number();
      expect('*');
      return OracleSpec::scale(factor, term());
    }
    return atom();
  }

  OracleSpec atom() {
    skip_space();
    if (consume('(')) {
      OracleSpec inner = expr();
      expect(')');
      return inner;
    }
    const std::string name = identifier();
    expect('(');
    if (name == "binomial") {
      const Real a = number();
      expect(',');
      const Real b = number();
      expect(',');
      const Real alpha = number();
      expect(')');
      return OracleSpec::binomial(a, b, alpha);
    }
    if (name == "rational") {
      const Real c = number();
      expect(',');
      const Real d = number();
      bool numerator_z = false;
      if (consume(',')) {
        skip_space();
        if (consume('z')) {
          numerator_z = true;
        } else if (!consume('1')) {
          fail("rational numerator must be 1 or z");
        }
      }
      expect(')');
      return OracleSpec::rational(c, d, numerator_z);
    }
    if (name == "exp_times") {
      OracleSpec inner = expr();
      expect(')');
      return OracleSpec::exp_times(std::move(inner));
    }
    fail("unknown function '" + name + "'");
  }

  Real number() {
    Real value = decimal();
    if (consume('/')) {
      const Real denominator = decimal();
      if (denominator == Real{0}) fail("division by zero");
      value /= denominator;
    }
    return value;
  }

  Real decimal() {
    skip_space();
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    Real value = 0;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr == first) fail("expected a number");
    pos_ += static_cast<std::size_t>(ptr - first);
    return negative ? -value : value;
  }

  std::string identifier() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    if (pos_ == start) fail("expected a function name");
    return std::string(text_.substr(start, pos_ - start));
  }

  static bool starts_number(char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '-' || c == '+';
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool consume(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!consume(c)) fail(std::string("expected '") + c + "'");
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw Error(ErrorKind::InvalidInput,
                "oracle expression, column " + std::to_string(pos_ + 1) + ": " + message);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

OracleSpec parse_oracle_expression(std::string_view text) { return Parser(text).parse(); }

}  // namespace algser
