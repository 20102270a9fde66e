#include "report.hpp"
#include "symforms/correspondences.hpp"
#include "symforms/modular.hpp"

using namespace symforms;

int main() {
  return acceptance::run(2, "Lambda o Xi = Xi o Lambda = id on full bases, lambda <= 20, m <= 4", 30.0, [] {
    acceptance::Outcome out;
    long checked = 0, spaces = 0;
    for (int m = 0; m <= 4; ++m)
      for (int lam = 2 * m + 1; lam <= 20; ++lam) {
        const int base = lam - 2 * m;
        std::size_t mp_dim = 0;
        for (int r = 0; r <= m; ++r) {
          MkBasis b = basis_Mk(base + 2 * r);
          mp_dim += b.dimension();
          for (std::size_t i = 0; i < b.dimension(); ++i) {
            ModPolynomial F{base, {}};
            for (int s = 0; s <= m; ++s) F.coeffs.push_back(s == r ? b.element(i) : QuasiElement(base + 2 * s));
            ++checked;
            if (!(Xi_map(Lambda_map(F, m, lam), m, lam) == F)) {
              out.pass = false;
              out.detail = "Xi(Lambda(F)) != F at lambda=" + std::to_string(lam) + ", m=" + std::to_string(m);
            }
          }
        }
        const auto qp_basis = basis_QMk(lam, m);
        if (qp_basis.size() != mp_dim) {
          out.pass = false;
          out.detail = "dimension mismatch at lambda=" + std::to_string(lam) + ", m=" + std::to_string(m);
        }
        for (const auto& mono : qp_basis) {
          QuasiPolynomial F = Q_map(QuasiElement::monomial(mono), m);
          ++checked;
          if (!(Lambda_map(Xi_map(F, m, lam), m, lam) == F)) {
            out.pass = false;
            out.detail = "Lambda(Xi(F)) != F at lambda=" + std::to_string(lam) + ", m=" + std::to_string(m);
          }
        }
        ++spaces;
      }
    if (out.pass) out.detail = std::to_string(checked) + " basis elements over " + std::to_string(spaces) + " (lambda, m)";
    return out;
  });
}
