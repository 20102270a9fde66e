#include "symforms/pi_poly.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "symforms/error.hpp"

namespace symforms {

PiRational::PiRational(Rational v, int p) : value(std::move(v)), pi_power(p) {
  value.canonicalize();
  if (value == 0) pi_power = 0;
}

PiPoly::PiPoly(const Rational& value, int pi_power) {
  if (value != 0) {
    terms_.emplace_back(pi_power, value);
    terms_.back().second.canonicalize();
  }
}

PiPoly::PiPoly(long value) : PiPoly(Rational(value)) {}

PiPoly::PiPoly(const PiRational& term) : PiPoly(term.value, term.pi_power) {}

PiPoly PiPoly::pi(int power) { return PiPoly(Rational(1), power); }

Rational PiPoly::coeff(int pi_power) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), pi_power,
                             [](const Term& t, int p) { return t.first < p; });
  if (it != terms_.end() && it->first == pi_power) return it->second;
  return 0;
}

PiPoly PiPoly::shifted(int shift) const {
  PiPoly out = *this;
  for (auto& t : out.terms_) t.first += shift;
  return out;
}

PiPoly PiPoly::inverse() const {
  if (terms_.size() != 1) throw Error(ErrorCode::InvalidArgument, "only single-term Π-values are invertible");
  return PiPoly(1 / terms_[0].second, -terms_[0].first);
}

std::complex<double> PiPoly::evaluate() const {
  const std::complex<double> two_pi_i(0.0, 2.0 * std::numbers::pi);
  std::complex<double> sum = 0.0;
  for (const auto& [p, c] : terms_) sum += c.get_d() * std::pow(two_pi_i, p);
  return sum;
}

void PiPoly::add_term(int pi_power, const Rational& value) {
  if (value == 0) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), pi_power,
                             [](const Term& t, int p) { return t.first < p; });
  if (it != terms_.end() && it->first == pi_power) {
    it->second += value;
    if (it->second == 0) terms_.erase(it);
  } else {
    terms_.insert(it, Term(pi_power, value));
  }
}

PiPoly& PiPoly::operator+=(const PiPoly& rhs) {
  if (terms_.empty()) {
    terms_ = rhs.terms_;
    return *this;
  }
  for (const auto& [p, c] : rhs.terms_) add_term(p, c);
  return *this;
}

PiPoly& PiPoly::operator-=(const PiPoly& rhs) {
  for (const auto& [p, c] : rhs.terms_) add_term(p, -c);
  return *this;
}

PiPoly& PiPoly::operator*=(const Rational& rhs) {
  if (rhs == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= rhs;
  return *this;
}

PiPoly& PiPoly::operator*=(const PiPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

PiPoly operator*(const PiPoly& a, const PiPoly& b) {
  PiPoly out;
  if (a.terms_.size() == 1 && b.terms_.size() == 1) {
    out.terms_.emplace_back(a.terms_[0].first + b.terms_[0].first, a.terms_[0].second * b.terms_[0].second);
    return out;
  }
  for (const auto& [pa, ca] : a.terms_)
    for (const auto& [pb, cb] : b.terms_) out.add_term(pa + pb, ca * cb);
  return out;
}

PiPoly operator-(PiPoly a) {
  for (auto& t : a.terms_) t.second = -t.second;
  return a;
}

}  // namespace symforms
