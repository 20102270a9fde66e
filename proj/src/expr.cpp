#include "symforms/expr.hpp"

#include <cctype>
#include <string>

#include "symforms/error.hpp"

namespace symforms {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  QuasiElement parse() {
    QuasiElement x = sum();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return x;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError, what + " at offset " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  QuasiElement sum() {
    QuasiElement x = product();
    for (;;) {
      if (eat('+')) x += product();
      else if (eat('-')) x -= product();
      else return x;
    }
  }

  QuasiElement product() {
    QuasiElement x = power();
    for (;;) {
      if (eat('*')) {
        x = x * power();
      } else if (eat('/')) {
        QuasiElement d = power();
        if (d.weight() != 0 || d.terms().size() != 1 || !d.terms().begin()->second.is_monomial())
          fail("division only by nonzero constants");
        x = x * d.terms().begin()->second.inverse();
      } else {
        return x;
      }
    }
  }

  QuasiElement power() {
    QuasiElement x = unary();
    if (eat('^')) {
      skip();
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a nonnegative exponent");
      x = pow(x, static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start)))));
    }
    return x;
  }

  QuasiElement unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return primary();
  }

  QuasiElement primary() {
    skip();
    if (eat('(')) {
      QuasiElement x = sum();
      expect(')');
      return x;
    }
    if (pos_ >= s_.size()) fail("unexpected end of input");
    if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return QuasiElement::constant(PiPoly(Rational(mpz_class(std::string(s_.substr(start, pos_ - start))))));
    }
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    const std::string name(s_.substr(start, pos_ - start));
    if (name.empty()) fail("expected an operand");
    if (name == "D" || name == "theta") {
      expect('(');
      QuasiElement x = sum();
      expect(')');
      return name == "D" ? z_derive(x) : quasi_derive(x);
    }
    if (name == "E2") return QuasiElement::E2();
    if (name == "E4") return QuasiElement::E4();
    if (name == "E6") return QuasiElement::E6();
    if (name == "delta") return QuasiElement::delta();
    if (name == "Pi") return QuasiElement::constant(PiPoly::pi());
    throw Error(ErrorCode::UnknownName, "unknown name \"" + name + "\"");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

QuasiElement parse_quasi(std::string_view text) { return Parser(text).parse(); }

}  // namespace symforms
