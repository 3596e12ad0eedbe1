#include "linkbound/laurent.hpp"

#include <cctype>

#include "linkbound/errors.hpp"

namespace linkbound {
namespace {

class TermReader {
 public:
  TermReader(const std::string& text, char var) : s_(text), var_(var) {}

  Laurent read() {
    Laurent out;
    skip_space();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      out += term(sign);
      first = false;
      skip_space();
    }
    return out;
  }

 private:
  Laurent term(int sign) {
    Integer coeff(1);
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = Integer(digits());
      have_coeff = true;
      skip_space();
      if (peek() == '*') {
        ++pos_;
        skip_space();
        if (peek() != var_) fail(std::string("expected '") + var_ + "' after '*'");
      }
    }
    int exponent = 0;
    if (peek() == var_) {
      ++pos_;
      exponent = 1;
      skip_space();
      if (peek() == '^') {
        ++pos_;
        skip_space();
        exponent = bracketed_exponent();
      }
    } else if (!have_coeff) {
      fail("expected a coefficient or '" + std::string(1, var_) + "'");
    }
    return Laurent::monomial(Integer(sign) * coeff, exponent);
  }

  int bracketed_exponent() {
    char close = 0;
    if (peek() == '{') close = '}';
    if (peek() == '(') close = ')';
    if (close != 0) {
      ++pos_;
      skip_space();
    }
    int sign = 1;
    if (peek() == '-' || peek() == '+') {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an exponent");
    std::string d = digits();
    if (d.size() > 6) fail("exponent too large");
    int e = sign * std::stoi(d);
    if (close != 0) {
      skip_space();
      if (peek() != close) fail(std::string("expected '") + close + "'");
      ++pos_;
    }
    return e;
  }

  std::string digits() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    int column = static_cast<int>(pos_) + 1;
    throw ParseError("polynomial, column " + std::to_string(column) + ": " + what, 1, column);
  }

  const std::string& s_;
  char var_;
  std::size_t pos_ = 0;
};

}  // namespace

Laurent parse_laurent(const std::string& text, char var) { return TermReader(text, var).read(); }

}  // namespace linkbound
