#include "symforms/rational.hpp"

#include "symforms/error.hpp"

namespace symforms {

Integer factorial(long n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "factorial of negative integer");
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

Rational inverse_factorial(long n) {
  if (n < 0) return Rational(0);
  Rational out(Integer(1), factorial(n));
  out.canonicalize();
  return out;
}

Integer binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return Integer(0);
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty rational");
  auto valid = [](const std::string& part) {
    std::size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (i >= part.size()) return false;
    for (; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') return false;
    }
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid(num) || !valid(den)) throw Error(ErrorCode::ParseError, "bad rational '" + s + "'");
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  Integer d(den);
  if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + s + "'");
  Rational out(Integer(num), d);
  out.canonicalize();
  return out;
}

}  // namespace symforms
