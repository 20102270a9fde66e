#include "../support/oracles.hpp"
#include "report.hpp"
#include "symforms/correspondences.hpp"

using namespace symforms;

int main() {
  return acceptance::run(1, "U_2^{-1}(V_{14,2,0}(Delta)) = 1/2 Delta'' + 13 Delta' X + 78 Delta X^2", 5.0, [] {
    const long order = 20;
    const QuasiElement d = QuasiElement::delta();
    QuasiPolynomial F = U_inverse(V_map(d, 14, 2, 0, order), 14, 2);

    // τ(n) from the product; Δ' and Δ'' carry Π and Π².
    const auto tau = oracle::naive_delta(order);
    std::vector<QSeries> want(3, QSeries::zero(order));
    for (long e = 1; e < order; ++e) {
      const Rational t(tau[static_cast<std::size_t>(e)]);
      want[0].set_coeff(Rational(e), PiPoly(t * e * e / 2, 2));
      want[1].set_coeff(Rational(e), PiPoly(t * e * 13, 1));
      want[2].set_coeff(Rational(e), PiPoly(t * 78, 0));
    }
    acceptance::Outcome out;
    out.pass = F.weight == 16 && F.coeffs.size() == 3;
    long compared = 0;
    for (std::size_t r = 0; out.pass && r < 3; ++r) {
      const QSeries got = F.coeffs[r].to_qexp(order);
      for (long e = 0; e < order; ++e, ++compared)
        if (!(got.coeff(Rational(e)) == want[r].coeff(Rational(e)))) {
          out.pass = false;
          out.detail = "X^" + std::to_string(r) + " differs at q^" + std::to_string(e);
        }
    }
    const QuasiPolynomial symbolic{16, {z_derive(d, 2) * PiPoly(Rational(1, 2)), z_derive(d, 1) * PiPoly(13), d * PiPoly(78)}};
    out.pass = out.pass && F == symbolic;
    if (out.pass) out.detail = std::to_string(compared) + " coefficients exact to q^20, symbolic match";
    return out;
  });
}
