#include <random>

#include "../support/forms.hpp"
#include "report.hpp"
#include "symforms/correspondences.hpp"

using namespace symforms;

int main() {
  return acceptance::run(3, "decompose recovers every g_l from 50 random sums; dimension identity", 0, [] {
    const long order = 30;
    std::mt19937 rng(20240611);
    std::vector<std::pair<int, int>> shapes;
    for (int n = 1; n <= 4; ++n)
      for (int k = n + 2; k <= 18; k += 2) shapes.emplace_back(k, n);

    acceptance::Outcome out;
    std::uniform_int_distribution<std::size_t> pick(0, shapes.size() - 1);
    int nonzero_parts = 0;
    for (int trial = 0; trial < 50; ++trial) {
      const auto [k, n] = shapes[pick(rng)];
      std::vector<QuasiElement> g;
      VVForm F;
      for (int l = 0; l <= n; ++l) {
        g.push_back(forms::random_modular(rng, k - n + 2 * l));
        nonzero_parts += !g.back().is_zero();
        VVForm v = V_map(g.back(), k, n, l, order);
        if (l == 0) F = v;
        else F += v;
      }
      if (decompose(F, k, n) != g) {
        out.pass = false;
        out.detail = "trial " + std::to_string(trial) + " (k=" + std::to_string(k) + ", n=" + std::to_string(n) + ")";
      }
    }

    int dims_ok = 0;
    for (const auto& [k, n] : shapes) {
      std::vector<std::vector<Rational>> rows;
      for (int l = 0; l <= n; ++l) {
        MkBasis b = basis_Mk(k - n + 2 * l);
        for (std::size_t i = 0; i < b.dimension(); ++i) rows.push_back(forms::flatten(V_map(b.element(i), k, n, l, 16), 16, n));
      }
      if (forms::rank_of(rows) == forms::sum_dims(k, n)) ++dims_ok;
      else {
        out.pass = false;
        out.detail += " dimension identity fails at k=" + std::to_string(k) + ", n=" + std::to_string(n);
      }
    }
    if (out.pass)
      out.detail = "50 sums (" + std::to_string(nonzero_parts) + " nonzero parts) recovered; dimension identity on " +
                   std::to_string(dims_ok) + " (k, n)";
    return out;
  });
}
