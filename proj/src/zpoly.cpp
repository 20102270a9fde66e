#include "symforms/zpoly.hpp"

#include "symforms/error.hpp"

namespace symforms {

ZPoly::ZPoly(QSeries constant) : coeffs_{std::move(constant)} {}

ZPoly::ZPoly(std::vector<QSeries> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.emplace_back();
  trim();
}

ZPoly ZPoly::monomial(int degree, const QSeries& c) {
  if (degree < 0) throw Error(ErrorCode::InvalidArgument, "negative z-degree");
  QSeries zero = c * PiPoly();
  std::vector<QSeries> coeffs(static_cast<std::size_t>(degree) + 1, zero);
  coeffs.back() = c;
  return ZPoly(std::move(coeffs));
}

const QSeries& ZPoly::coeff(int d) const {
  static const QSeries kZero;
  if (d < 0 || d > degree()) return kZero;
  return coeffs_[static_cast<std::size_t>(d)];
}

bool ZPoly::is_zero() const { return degree() == 0 && coeffs_[0].is_zero(); }

void ZPoly::trim() {
  while (coeffs_.size() > 1 && coeffs_.back().is_zero()) {
    // Fold the truncation order of the dropped coefficient into z^0 so that
    // a zero with finite precision keeps its order.
    QSeries dropped = coeffs_.back();
    coeffs_.pop_back();
    coeffs_[0] += dropped;
  }
}

ZPoly ZPoly::derive() const {
  std::vector<QSeries> out;
  out.reserve(coeffs_.size());
  for (std::size_t d = 0; d < coeffs_.size(); ++d) {
    QSeries c = coeffs_[d].derive();
    if (d + 1 < coeffs_.size()) c += coeffs_[d + 1] * PiPoly(static_cast<long>(d + 1));
    out.push_back(std::move(c));
  }
  return ZPoly(std::move(out));
}

ZPoly ZPoly::truncated(long order) const {
  std::vector<QSeries> out;
  for (const auto& c : coeffs_) out.push_back(c.truncated(order));
  return ZPoly(std::move(out));
}

ZPoly& ZPoly::operator+=(const ZPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) {
    QSeries zero = coeffs_[0] * PiPoly();
    coeffs_.resize(rhs.coeffs_.size(), zero);
  }
  for (std::size_t d = 0; d < rhs.coeffs_.size(); ++d) coeffs_[d] += rhs.coeffs_[d];
  // A shorter rhs still limits the precision of the higher coefficients.
  const QSeries rhs_zero = rhs.coeffs_[0] * PiPoly();
  for (std::size_t d = rhs.coeffs_.size(); d < coeffs_.size(); ++d) coeffs_[d] += rhs_zero;
  trim();
  return *this;
}

ZPoly& ZPoly::operator-=(const ZPoly& rhs) { return *this += -rhs; }

ZPoly& ZPoly::operator*=(const QSeries& rhs) {
  for (auto& c : coeffs_) c = c * rhs;
  trim();
  return *this;
}

ZPoly& ZPoly::operator*=(const PiPoly& rhs) {
  for (auto& c : coeffs_) c *= rhs;
  trim();
  return *this;
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
  QSeries zero = (a.coeffs_[0] * b.coeffs_[0]) * PiPoly();
  std::vector<QSeries> out(a.coeffs_.size() + b.coeffs_.size() - 1, zero);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return ZPoly(std::move(out));
}

ZPoly operator-(ZPoly a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

bool agree_to_order(const ZPoly& a, const ZPoly& b) { return (a - b).is_zero(); }

}  // namespace symforms
