#include "symforms/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "symforms/error.hpp"

namespace symforms {

Complex q_of(Complex z) {
  if (z.imag() <= 0.0) throw Error(ErrorCode::ImaginaryPartTooSmall, "point is not in the upper half plane");
  const Complex two_pi_i(0.0, 2.0 * std::numbers::pi);
  Complex q = std::exp(two_pi_i * z);
  if (std::abs(q) >= kMaxAbsQ) throw Error(ErrorCode::ImaginaryPartTooSmall, "|q| >= 0.95, tail bound meaningless");
  return q;
}

NumericValue eval_numeric(const QSeries& s, Complex z) {
  const double abs_q = std::abs(q_of(z));
  const Complex two_pi_i(0.0, 2.0 * std::numbers::pi);
  const Complex step = two_pi_i * z / static_cast<double>(s.den());
  NumericValue out{0.0, 0.0};
  for (const auto& [num, c] : s.coeffs()) out.value += c.evaluate() * std::exp(step * static_cast<double>(num));
  if (!s.is_exact()) {
    const double order = static_cast<double>(s.order_num()) / s.den();
    out.tail_bound = std::pow(abs_q, order) / (1.0 - abs_q);
  }
  return out;
}

NumericValue eval_numeric(const ZPoly& p, Complex z) {
  NumericValue out{0.0, 0.0};
  Complex zd = 1.0;
  for (int d = 0; d <= p.degree(); ++d) {
    NumericValue c = eval_numeric(p.coeff(d), z);
    out.value += zd * c.value;
    out.tail_bound += std::abs(zd) * c.tail_bound;
    zd *= z;
  }
  return out;
}

TransformReport make_report(const std::vector<Complex>& lhs, const std::vector<Complex>& rhs, double tail, double tol) {
  TransformReport report;
  double scale = 1.0;
  for (const auto& x : lhs) scale = std::max(scale, std::abs(x));
  for (const auto& x : rhs) scale = std::max(scale, std::abs(x));
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    const double r = std::abs(lhs[i] - rhs[i]) / scale;
    report.residuals.push_back(r);
    report.max_residual = std::max(report.max_residual, r);
  }
  report.tail_bound = tail / scale;
  report.pass = std::isfinite(report.max_residual) && report.max_residual <= tol;
  return report;
}

TransformReport verify_scalar_transform(const QSeries& f, int weight, const GroupElt& g, Complex z, double tol) {
  const Complex jk = std::pow(cocycle_J(g, z), -weight);
  NumericValue at_gz = eval_numeric(f, g.act(z));
  NumericValue at_z = eval_numeric(f, z);
  const double tail = std::max(std::abs(jk) * at_gz.tail_bound, at_z.tail_bound);
  return make_report({jk * at_gz.value}, {at_z.value}, tail, tol);
}

}  // namespace symforms
