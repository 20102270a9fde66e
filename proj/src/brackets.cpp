#include "symforms/brackets.hpp"

#include "symforms/error.hpp"

namespace symforms {

namespace {

void check_rank(const VVForm& phi) {
  if (phi.rep.dimension() != phi.rank())
    throw Error(ErrorCode::RankMismatch, "representation of dimension " + std::to_string(phi.rep.dimension()) +
                                             " but " + std::to_string(phi.rank()) + " components");
}

void check_order(int w) {
  if (w < 0) throw Error(ErrorCode::InvalidArgument, "negative bracket order");
}

std::vector<VVForm> derivatives(const VVForm& phi, int w) {
  std::vector<VVForm> out{phi};
  for (int r = 1; r <= w; ++r) out.push_back(out.back().derive());
  return out;
}

}  // namespace

Rational gen_binom(const Integer& k, long r) {
  if (r < 0) return 0;
  Integer num = 1;
  for (long i = 0; i < r; ++i) num *= k - i;
  Rational out(num, factorial(r));
  out.canonicalize();
  return out;
}

Rational bracket_coeff(int w, int lam1, int lam2, int r) {
  Rational c = gen_binom(lam1 + w - 1, w - r) * gen_binom(lam2 + w - 1, r);
  return r % 2 ? Rational(-c) : c;
}

VVForm rc_tensor(const VVForm& phi1, const VVForm& phi2, int w, int lam1, int lam2) {
  check_order(w);
  check_rank(phi1);
  check_rank(phi2);
  auto d1 = derivatives(phi1, w), d2 = derivatives(phi2, w);
  VVForm out{lam1 + lam2 + 2 * w, tensor(phi1.rep, phi2.rep), std::vector<ZPoly>(phi1.rank() * phi2.rank())};
  for (int r = 0; r <= w; ++r) {
    const Rational c = bracket_coeff(w, lam1, lam2, r);
    if (c == 0) continue;
    const auto& a = d1[static_cast<std::size_t>(r)];
    const auto& b = d2[static_cast<std::size_t>(w - r)];
    for (std::size_t i = 0; i < a.rank(); ++i)
      for (std::size_t j = 0; j < b.rank(); ++j)
        out.components[i * b.rank() + j] += a.components[i] * b.components[j] * PiPoly(c);
  }
  return out;
}

VVForm rc_scalar_vector(const QSeries& f, const VVForm& phi, int w, int lam, int mu) {
  check_order(w);
  auto d = derivatives(phi, w);
  VVForm out{lam + mu + 2 * w, phi.rep, std::vector<ZPoly>(phi.rank())};
  QSeries fr = f;
  for (int r = 0; r <= w; ++r) {
    if (r > 0) fr = fr.derive();
    const Rational c = bracket_coeff(w, lam, mu, r);
    if (c == 0) continue;
    const QSeries scaled = fr * PiPoly(c);
    const auto& v = d[static_cast<std::size_t>(w - r)];
    for (std::size_t i = 0; i < v.rank(); ++i) out.components[i] += v.components[i] * scaled;
  }
  return out;
}

QSeries rc_scalar(const QSeries& f, const QSeries& g, int w, int lam, int mu) {
  check_order(w);
  std::vector<QSeries> dg{g};
  for (int r = 1; r <= w; ++r) dg.push_back(dg.back().derive());
  QSeries out = (f * g) * PiPoly();
  QSeries fr = f;
  for (int r = 0; r <= w; ++r) {
    if (r > 0) fr = fr.derive();
    const Rational c = bracket_coeff(w, lam, mu, r);
    if (c != 0) out += fr * dg[static_cast<std::size_t>(w - r)] * PiPoly(c);
  }
  return out;
}

QSeries rc_pair(const VVForm& phi, const VVForm& psi, int w, int alpha, int beta) {
  check_order(w);
  if (phi.rank() != psi.rank()) throw Error(ErrorCode::RankMismatch, "pairing forms of different rank");
  auto d1 = derivatives(phi, w), d2 = derivatives(psi, w);
  ZPoly sum;
  for (int r = 0; r <= w; ++r) {
    const Rational c = bracket_coeff(w, alpha, beta, r);
    if (c == 0) continue;
    const auto& a = d1[static_cast<std::size_t>(r)];
    const auto& b = d2[static_cast<std::size_t>(w - r)];
    ZPoly dot;
    for (std::size_t i = 0; i < a.rank(); ++i) dot += a.components[i] * b.components[i];
    sum += dot * PiPoly(c);
  }
  if (!sum.is_z_free())
    throw Error(ErrorCode::ResidualZDependence, "pairing keeps z-degree " + std::to_string(sum.degree()));
  return sum.coeff(0);
}

}  // namespace symforms
