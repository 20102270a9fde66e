#include "symforms/modular.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <tuple>

#include "symforms/error.hpp"
#include "symforms/linalg.hpp"

namespace symforms {
namespace {

Integer divisor_power_sum(long n, unsigned power) {
  Integer sum = 0;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    Integer t;
    mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(d), power);
    sum += t;
    long e = n / d;
    if (e != d) {
      mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(e), power);
      sum += t;
    }
  }
  return sum;
}

// Memoized expansions. Entries are never erased, so references stay valid.
template <typename Key>
class ExpansionCache {
 public:
  template <typename Make>
  const QSeries& get(const Key& key, Make make) {
    {
      std::shared_lock lock(mutex_);
      auto it = entries_.find(key);
      if (it != entries_.end()) return *it->second;
    }
    auto value = std::make_unique<QSeries>(make());
    std::unique_lock lock(mutex_);
    auto [it, inserted] = entries_.emplace(key, std::move(value));
    return *it->second;
  }

 private:
  std::shared_mutex mutex_;
  std::map<Key, std::unique_ptr<QSeries>> entries_;
};

ExpansionCache<std::tuple<int, unsigned, long>>& power_cache() {
  static ExpansionCache<std::tuple<int, unsigned, long>> cache;
  return cache;
}

ExpansionCache<std::tuple<int, int, int, long>>& monomial_cache() {
  static ExpansionCache<std::tuple<int, int, int, long>> cache;
  return cache;
}

}  // namespace

QSeries eisenstein(int k, long order) {
  if (order < 1) throw Error(ErrorCode::InvalidArgument, "order must be >= 1");
  long scale = 0;
  switch (k) {
    case 2: scale = -24; break;
    case 4: scale = 240; break;
    case 6: scale = -504; break;
    default: throw Error(ErrorCode::UnsupportedWeight, "Eisenstein series of weight " + std::to_string(k));
  }
  std::vector<Rational> c(static_cast<std::size_t>(order));
  c[0] = 1;
  for (long n = 1; n < order; ++n) c[static_cast<std::size_t>(n)] = Rational(scale * divisor_power_sum(n, static_cast<unsigned>(k - 1)));
  return QSeries::from_coefficients(c, order);
}

QSeries delta(long order) {
  if (order < 1) throw Error(ErrorCode::InvalidArgument, "order must be >= 1");
  QSeries prod = QSeries::constant(PiPoly(1)).truncated(order);
  for (long n = 1; n < order; ++n) {
    std::vector<Rational> factor(static_cast<std::size_t>(n) + 1);
    factor[0] = 1;
    factor[static_cast<std::size_t>(n)] = -1;
    prod = prod * QSeries::from_coefficients(factor, order);
  }
  return prod.pow(24).shifted(Rational(1)).truncated(order);
}

const QSeries& generator_power(int k, unsigned power, long order) {
  return power_cache().get({k, power, order}, [&] {
    if (power == 0) return QSeries::constant(PiPoly(1)).truncated(order);
    if (power == 1) return eisenstein(k, order);
    return generator_power(k, power - 1, order) * eisenstein(k, order);
  });
}

const QSeries& monomial_expansion(const QuasiMonomial& m, long order) {
  return monomial_cache().get({m.e2, m.e4, m.e6, order}, [&] {
    return generator_power(2, static_cast<unsigned>(m.e2), order) *
           generator_power(4, static_cast<unsigned>(m.e4), order) *
           generator_power(6, static_cast<unsigned>(m.e6), order);
  });
}

QuasiElement MkBasis::element(std::size_t i) const {
  const auto& [a, b] = monomials.at(i);
  return QuasiElement::monomial({0, a, b});
}

MkBasis basis_Mk(int k) {
  MkBasis basis{k, {}};
  if (k < 0 || k % 2 != 0) return basis;
  for (int a = k / 4; a >= 0; --a) {
    int rest = k - 4 * a;
    if (rest % 6 == 0) basis.monomials.emplace_back(a, rest / 6);
  }
  return basis;
}

std::vector<QuasiMonomial> basis_QMk(int k, int max_depth) {
  std::vector<QuasiMonomial> out;
  if (k < 0 || k % 2 != 0) return out;
  for (int e2 = 0; e2 <= max_depth && 2 * e2 <= k; ++e2) {
    MkBasis rest = basis_Mk(k - 2 * e2);
    for (const auto& [a, b] : rest.monomials) out.push_back({e2, a, b});
  }
  return out;
}

namespace {

std::optional<QuasiElement> recognize(const QSeries& f, int k, const std::vector<QuasiMonomial>& basis) {
  if (f.den() != 1) return std::nullopt;
  if (basis.empty()) {
    if (f.is_zero()) return QuasiElement(k);
    return std::nullopt;
  }
  long order = f.order_num();
  if (f.is_exact()) {
    long top = f.coeffs().empty() ? 0 : f.coeffs().rbegin()->first;
    order = std::max<long>(top + 1, static_cast<long>(basis.size()) + 4);
  }
  RationalMatrix m(static_cast<std::size_t>(order), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const QSeries& e = monomial_expansion(basis[j], order);
    for (const auto& [n, c] : e.coeffs()) m(static_cast<std::size_t>(n), j) = c.coeff(0);
  }
  if (m.rank() < basis.size())
    throw Error(ErrorCode::InsufficientOrder,
                "order " + std::to_string(order) + " cannot separate the weight " + std::to_string(k) + " basis");
  std::vector<int> pi_powers;
  for (const auto& entry : f.coeffs())
    for (const auto& term : entry.second.terms())
      if (std::find(pi_powers.begin(), pi_powers.end(), term.first) == pi_powers.end()) pi_powers.push_back(term.first);
  QuasiElement out(k);
  for (int p : pi_powers) {
    std::vector<Rational> rhs(static_cast<std::size_t>(order));
    for (const auto& [n, c] : f.coeffs()) rhs[static_cast<std::size_t>(n)] = c.coeff(p);
    auto x = solve(m, rhs);
    if (!x) return std::nullopt;
    for (std::size_t j = 0; j < basis.size(); ++j) out += QuasiElement::monomial(basis[j], PiPoly((*x)[j], p));
  }
  return out;
}

}  // namespace

std::optional<QuasiElement> recognize_modular(const QSeries& f, int k) { return recognize(f, k, basis_QMk(k, 0)); }

std::optional<QuasiElement> recognize_quasimodular(const QSeries& f, int k, int max_depth) {
  return recognize(f, k, basis_QMk(k, max_depth));
}

}  // namespace symforms
