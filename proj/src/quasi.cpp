#include "symforms/quasi.hpp"

#include <algorithm>
#include <sstream>

#include "symforms/error.hpp"
#include "symforms/modular.hpp"

namespace symforms {

QuasiElement QuasiElement::constant(const PiPoly& c) { return monomial({0, 0, 0}, c); }

QuasiElement QuasiElement::monomial(const QuasiMonomial& m, const PiPoly& c) {
  if (m.e2 < 0 || m.e4 < 0 || m.e6 < 0) throw Error(ErrorCode::InvalidArgument, "negative generator exponent");
  QuasiElement x(m.weight());
  x.add(m, c);
  return x;
}

QuasiElement QuasiElement::delta() {
  QuasiElement x(12);
  x.add({0, 3, 0}, PiPoly(Rational(1, 1728)));
  x.add({0, 0, 2}, PiPoly(Rational(-1, 1728)));
  return x;
}

int QuasiElement::depth() const {
  int d = 0;
  for (const auto& entry : terms_) d = std::max(d, entry.first.e2);
  return d;
}

PiPoly QuasiElement::coeff(const QuasiMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? PiPoly() : it->second;
}

void QuasiElement::add(const QuasiMonomial& m, const PiPoly& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

QSeries QuasiElement::to_qexp(long order) const {
  QSeries out = QSeries::zero(order);
  for (const auto& [m, c] : terms_) out += monomial_expansion(m, order) * c;
  return out;
}

QuasiElement& QuasiElement::operator+=(const QuasiElement& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) {
    *this = rhs;
    return *this;
  }
  if (weight_ != rhs.weight_)
    throw Error(ErrorCode::WeightMismatch,
                "adding weights " + std::to_string(weight_) + " and " + std::to_string(rhs.weight_));
  for (const auto& [m, c] : rhs.terms_) add(m, c);
  return *this;
}

QuasiElement& QuasiElement::operator-=(const QuasiElement& rhs) { return *this += -rhs; }

QuasiElement& QuasiElement::operator*=(const PiPoly& rhs) {
  if (rhs.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& entry : terms_) entry.second = entry.second * rhs;
  return *this;
}

QuasiElement operator*(const QuasiElement& a, const QuasiElement& b) {
  QuasiElement out(a.weight_ + b.weight_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add({ma.e2 + mb.e2, ma.e4 + mb.e4, ma.e6 + mb.e6}, ca * cb);
  return out;
}

QuasiElement operator-(QuasiElement a) {
  for (auto& entry : a.terms_) entry.second = -entry.second;
  return a;
}

bool operator==(const QuasiElement& a, const QuasiElement& b) {
  if (a.terms_ != b.terms_) return false;
  return a.is_zero() || a.weight_ == b.weight_;
}

std::string QuasiElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << "(";
    bool first_pi = true;
    for (const auto& [p, r] : c.terms()) {
      if (!first_pi) out << " + ";
      first_pi = false;
      out << symforms::to_string(r);
      if (p != 0) out << "*Pi^" << p;
    }
    out << ")";
    if (m.e2) out << "*E2^" << m.e2;
    if (m.e4) out << "*E4^" << m.e4;
    if (m.e6) out << "*E6^" << m.e6;
  }
  return out.str();
}

QuasiElement quasi_derive(const QuasiElement& x) {
  static const QuasiElement theta_e2 = (QuasiElement::E2() * QuasiElement::E2() - QuasiElement::E4()) * PiPoly(Rational(1, 12));
  static const QuasiElement theta_e4 = (QuasiElement::E2() * QuasiElement::E4() - QuasiElement::E6()) * PiPoly(Rational(1, 3));
  static const QuasiElement theta_e6 = (QuasiElement::E2() * QuasiElement::E6() - QuasiElement::E4() * QuasiElement::E4()) * PiPoly(Rational(1, 2));
  QuasiElement out(x.weight() + 2);
  for (const auto& [m, c] : x.terms()) {
    if (m.e2 > 0)
      out += QuasiElement::monomial({m.e2 - 1, m.e4, m.e6}, c * Rational(m.e2)) * theta_e2;
    if (m.e4 > 0)
      out += QuasiElement::monomial({m.e2, m.e4 - 1, m.e6}, c * Rational(m.e4)) * theta_e4;
    if (m.e6 > 0)
      out += QuasiElement::monomial({m.e2, m.e4, m.e6 - 1}, c * Rational(m.e6)) * theta_e6;
  }
  return out;
}

QuasiElement z_derive(const QuasiElement& x, int r) {
  if (r < 0) throw Error(ErrorCode::InvalidArgument, "negative derivative order");
  QuasiElement out = x;
  for (int i = 0; i < r; ++i) out = quasi_derive(out) * PiPoly::pi(1);
  return out;
}

QuasiElement pow(const QuasiElement& x, unsigned e) {
  QuasiElement out = QuasiElement::constant(PiPoly(1));
  for (unsigned i = 0; i < e; ++i) out = out * x;
  return out;
}

}  // namespace symforms
