#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"
#include "operands.hpp"
#include "symforms/brackets.hpp"
#include "symforms/cache.hpp"
#include "symforms/error.hpp"
#include "symforms/expr.hpp"
#include "symforms/modular.hpp"

using namespace symforms;
using cli::Config;

namespace {

const std::vector<std::pair<std::string, GroupElt>> kGammas{{"T", GroupElt::T()}, {"S", GroupElt::S()}, {"ST", GroupElt::ST()}};
const std::vector<std::pair<std::string, Complex>> kPoints{{"i", {0, 1}}, {"1/4+i", {0.25, 1}}, {"2i", {0, 2}}};

void emit(const Config& cfg, const Json& j, const std::string& text) {
  if (cfg.json)
    std::cout << j.dump() << "\n";
  else
    std::cout << text;
}

struct Table {
  Json rows = Json::array();
  std::string text;
  double max_residual = 0.0;
  bool pass = true;

  void add(const std::string& label, const std::string& point, const TransformReport& r) {
    rows.push_back({{"gamma", label}, {"z", point}, {"residual", r.max_residual}, {"tail", r.tail_bound}, {"pass", r.pass}});
    char buf[160];
    std::snprintf(buf, sizeof buf, "  %-10s z=%-6s residual=%.3e tail=%.1e %s\n", label.c_str(), point.c_str(),
                  r.max_residual, r.tail_bound, r.pass ? "PASS" : "FAIL");
    text += buf;
    max_residual = std::max(max_residual, r.max_residual);
    pass = pass && r.pass;
  }

  int finish(const Config& cfg, const std::string& title) const {
    emit(cfg, {{"target", title}, {"samples", rows}, {"max_residual", max_residual}, {"pass", pass}},
         title + "\n" + text + (pass ? "PASS\n" : "FAIL\n"));
    return pass ? 0 : 1;
  }
};

template <class F>
Table sweep(F&& check) {
  Table t;
  for (const auto& [gname, g] : kGammas)
    for (const auto& [zname, z] : kPoints) t.add(gname, zname, check(g, z));
  return t;
}

std::optional<ExpansionCache> open_cache(const Config& cfg) {
  std::string dir = cfg.cache_dir;
  if (dir.empty())
    if (const char* env = std::getenv("SYMFORMS_CACHE")) dir = env;
  if (dir.empty()) return std::nullopt;
  return ExpansionCache(dir);
}

int cmd_expand(const Config& cfg, const std::string& name) {
  auto cache = open_cache(cfg);
  const std::string key = "expand|" + name + "|" + std::to_string(cfg.order);
  std::optional<cli::Named> value;
  if (cache) {
    auto hit = cache->load(key);
    if (hit.status == ExpansionCache::Status::hit) {
      try {
        value = cli::named_from_json(hit.payload);
      } catch (const Error& e) {
        std::cerr << "warning: " << to_string(ErrorCode::CacheCorrupt) << ": " << e.what() << "; recomputing\n";
      }
    } else if (hit.status != ExpansionCache::Status::miss) {
      std::cerr << "warning: " << to_string(ErrorCode::CacheCorrupt) << ": " << hit.detail << "; recomputing\n";
    }
  }
  if (!value) {
    value = cli::expand_named(name, cfg.order);
    if (cache) cache->store(key, cli::named_to_json(*value));
  }
  emit(cfg, cli::named_to_json(*value), cli::describe(*value));
  return 0;
}

int cmd_bracket(const Config& cfg, const std::string& kind, const std::string& a, const std::string& b, int w,
                std::optional<int> lam1, std::optional<int> lam2) {
  if (kind == "pair") {
    VVForm phi = cli::vector_operand(a, cfg.order), psi = cli::vector_operand(b, cfg.order);
    QSeries s = rc_pair(phi, psi, w, lam1.value_or(phi.weight), lam2.value_or(psi.weight));
    emit(cfg, to_json(s), format_series(s) + "\n");
    return 0;
  }
  VVForm out;
  if (kind == "sv") {
    cli::ScalarForm f = cli::scalar_operand(a, cfg.order);
    VVForm phi = cli::vector_operand(b, cfg.order);
    if (!lam1 && !f.weight) throw Error(ErrorCode::UnsupportedWeight, "scalar operand needs --lam1");
    out = rc_scalar_vector(f.series, phi, w, lam1.value_or(f.weight.value_or(0)), lam2.value_or(phi.weight));
  } else {
    VVForm x = cli::vector_operand(a, cfg.order), y = cli::vector_operand(b, cfg.order);
    out = rc_tensor(x, y, w, lam1.value_or(x.weight), lam2.value_or(y.weight));
  }
  emit(cfg, to_json(out), cli::describe(cli::Named(out)));
  return 0;
}

struct MapArgs {
  std::string operand;
  std::optional<int> k, n, l, m, lam;
};

int need(const std::optional<int>& v, const char* flag) {
  if (!v) throw Error(ErrorCode::InvalidArgument, std::string("missing ") + flag);
  return *v;
}

int cmd_map(const Config& cfg, const std::string& kind, const MapArgs& a) {
  if (kind == "v") {
    VVForm F = V_map(cli::quasi_operand(a.operand), need(a.k, "--k"), need(a.n, "--n"), need(a.l, "--l"), cfg.order);
    emit(cfg, to_json(F), cli::describe(cli::Named(F)));
  } else if (kind == "w") {
    auto ws = W_map(cli::vector_operand(a.operand, cfg.order), need(a.k, "--k"), need(a.n, "--n"));
    Json j = Json::array();
    std::string text;
    for (std::size_t i = 0; i < ws.size(); ++i) {
      j.push_back(to_json(ws[i]));
      text += "[" + std::to_string(i) + "] " + format_series(ws[i]) + "\n";
    }
    emit(cfg, j, text);
  } else if (kind == "u") {
    QuasiPolynomial F = cli::quasi_poly_operand(a.operand);
    VVForm G = U_map(F, a.n.value_or(F.degree()), cfg.order, cfg.allow_small_weight);
    emit(cfg, to_json(G), cli::describe(cli::Named(G)));
  } else if (kind == "uinv") {
    QuasiPolynomial F =
        U_inverse(cli::vector_operand(a.operand, cfg.order), need(a.k, "--k"), need(a.n, "--n"), cfg.allow_small_weight);
    emit(cfg, to_json(F), cli::describe(F));
  } else if (kind == "lambda") {
    ModPolynomial F = cli::mod_poly_operand(a.operand);
    const int m = a.m.value_or(F.degree());
    QuasiPolynomial G = Lambda_map(F, m, a.lam.value_or(F.weight + 2 * m));
    emit(cfg, to_json(G), cli::describe(G));
  } else if (kind == "xi") {
    QuasiPolynomial F = cli::quasi_poly_operand(a.operand);
    ModPolynomial G = Xi_map(F, a.m.value_or(F.degree()), a.lam.value_or(F.weight));
    emit(cfg, to_json(G), cli::describe(G));
  } else if (kind == "q") {
    QuasiElement f = cli::quasi_operand(a.operand);
    QuasiPolynomial G = Q_map(f, a.m.value_or(f.depth()));
    emit(cfg, to_json(G), cli::describe(G));
  } else {
    QuasiElement f = Q_inverse(cli::quasi_poly_operand(a.operand));
    emit(cfg, to_json(f), f.to_string() + "\n");
  }
  return 0;
}

int x_order_for(const Config& cfg, int n) { return cfg.x_order > 0 ? cfg.x_order : n + 5; }

int cmd_lift(const Config& cfg, const std::string& kind, const std::string& operand, std::optional<int> n) {
  JLSeries s = kind == "vhat" ? ck_lift_vhat(need(n, "--n"), x_order_for(cfg, *n))
                              : ck_lift_scalar(cli::quasi_operand(operand), x_order_for(cfg, 0), cfg.order);
  emit(cfg, to_json(s), cli::describe(s));
  return 0;
}

int cmd_jl(const Config& cfg, int j, const std::string& g, std::optional<int> vhat, bool negate) {
  std::optional<JLSeries> s;
  if (!g.empty() && vhat) {
    const int m = x_order_for(cfg, *vhat);
    s = jl_multiply(ck_lift_scalar(cli::quasi_operand(g), m, cfg.order), ck_lift_vhat(*vhat, m), negate);
  } else if (vhat) {
    s = ck_lift_vhat(*vhat, x_order_for(cfg, *vhat));
  } else if (!g.empty()) {
    s = ck_lift_scalar(cli::quasi_operand(g), x_order_for(cfg, 0), cfg.order);
  } else {
    throw Error(ErrorCode::InvalidArgument, "jl coeff needs --g and/or --vhat");
  }
  VVForm c = jl_coefficient(*s, j);
  emit(cfg, to_json(c), cli::describe(cli::Named(c)));
  return 0;
}

int cmd_verify(const Config& cfg, const std::string& kind, const std::string& target) {
  if (kind == "scalar") {
    cli::ScalarForm f = cli::scalar_operand(target, cfg.order);
    if (!f.weight) throw Error(ErrorCode::UnsupportedWeight, target + " has no integral weight");
    return sweep([&](const GroupElt& g, Complex z) { return verify_scalar_transform(f.series, *f.weight, g, z, cfg.tol); })
        .finish(cfg, "scalar " + target + " (weight " + std::to_string(*f.weight) + ")");
  }
  if (kind == "vv") {
    VVForm F = cli::vector_operand(target, cfg.order);
    return sweep([&](const GroupElt& g, Complex z) { return verify_vv_transform(F, g, z, cfg.tol); })
        .finish(cfg, "vector-valued " + target + " (weight " + std::to_string(F.weight) + ")");
  }
  if (kind == "quasi") {
    QuasiPolynomial F;
    if (target.find(';') != std::string::npos || (!target.empty() && target[0] == '@')) {
      F = cli::quasi_poly_operand(target);
    } else {
      QuasiElement f = parse_quasi(target);
      F = Q_map(f, f.depth());
    }
    return sweep([&](const GroupElt& g, Complex z) { return verify_quasi_polynomial(F, g, z, cfg.tol, cfg.order); })
        .finish(cfg, "quasimodular polynomial " + target);
  }
  if (kind == "jacobi") {
    JacSeries phi = cli::jacobi_operand(target, cfg.order);
    const double tol = cfg.tol_given ? cfg.tol : 1e-6;
    const Complex w(0.2, 0.1);
    Table t = sweep([&](const GroupElt& g, Complex z) { return verify_jacobi_transform(phi, g, z, w, 0, 0, tol).modular; });
    for (auto [mu, nu] : {std::pair{1, 0}, std::pair{0, 1}, std::pair{1, 1}})
      for (const auto& [zname, z] : kPoints)
        t.add("(" + std::to_string(mu) + "," + std::to_string(nu) + ")", zname,
              verify_jacobi_transform(phi, GroupElt::identity(), z, w, mu, nu, tol).elliptic);
    return t.finish(cfg, "Jacobi " + target);
  }
  // jl
  if (auto n = std::optional<int>{}; target.rfind("vhat(", 0) == 0) {
    n = std::stoi(target.substr(5));
    JLSeries s = ck_lift_vhat(*n, x_order_for(cfg, *n));
    return sweep([&](const GroupElt& g, Complex z) { return verify_jl_transform(s, g, z, cfg.tol, *n); })
        .finish(cfg, "Jacobi-like lifting of " + target + " (through X^" + std::to_string(*n) + ")");
  }
  JLSeries s = ck_lift_scalar(cli::quasi_operand(target), x_order_for(cfg, 0), cfg.order);
  return sweep([&](const GroupElt& g, Complex z) { return verify_jl_transform(s, g, z, cfg.tol); })
      .finish(cfg, "Jacobi-like lifting of " + target);
}

struct RoundtripArgs {
  std::optional<int> k, n, m, lam;
};

int cmd_roundtrip(const Config& cfg, const std::string& kind, const RoundtripArgs& a) {
  Table t;
  std::size_t cases = 0, exact_ok = 0;
  auto numeric = [&](auto&& check) {
    for (const auto& [gname, g] : kGammas)
      for (const auto& [zname, z] : kPoints) {
        TransformReport r = check(g, z);
        t.max_residual = std::max(t.max_residual, r.max_residual);
        t.pass = t.pass && r.pass;
      }
  };
  if (kind == "vu") {
    const int k = need(a.k, "--k"), n = need(a.n, "--n");
    for (int l = 0; l <= n; ++l) {
      MkBasis b = basis_Mk(k - n + 2 * l);
      for (std::size_t i = 0; i < b.dimension(); ++i) {
        VVForm F = V_map(b.element(i), k, n, l, cfg.order);
        QuasiPolynomial G = U_inverse(F, k, n, cfg.allow_small_weight);
        auto parts = decompose(F, k, n);
        bool ok = agree_to_order(U_map(G, n, cfg.order, cfg.allow_small_weight), F) && parts[l] == b.element(i);
        for (int o = 0; o <= n; ++o) ok = ok && (o == l || parts[o].is_zero());
        ++cases;
        exact_ok += ok;
        numeric([&](const GroupElt& g, Complex z) { return verify_vv_transform(F, g, z, cfg.tol); });
      }
    }
  } else if (kind == "lambdaxi") {
    const int m = need(a.m, "--m"), lam = need(a.lam, "--lam");
    for (int r = 0; r <= m; ++r) {
      MkBasis b = basis_Mk(lam - 2 * m + 2 * r);
      for (std::size_t i = 0; i < b.dimension(); ++i) {
        ModPolynomial F{lam - 2 * m, {}};
        for (int s = 0; s <= m; ++s) F.coeffs.push_back(s == r ? b.element(i) : QuasiElement(lam - 2 * m + 2 * s));
        QuasiPolynomial G = Lambda_map(F, m, lam);
        ++cases;
        exact_ok += Xi_map(G, m, lam) == F;
        numeric([&](const GroupElt& g, Complex z) { return verify_quasi_polynomial(G, g, z, cfg.tol, cfg.order); });
      }
    }
    for (const auto& mono : basis_QMk(lam, m)) {
      QuasiPolynomial F = Q_map(QuasiElement::monomial(mono), m);
      ++cases;
      exact_ok += Lambda_map(Xi_map(F, m, lam), m, lam) == F;
    }
  } else {
    const int k = need(a.k, "--k"), m = need(a.m, "--m");
    for (const auto& mono : basis_QMk(k, m)) {
      QuasiElement f = QuasiElement::monomial(mono);
      QuasiPolynomial F = Q_map(f, m);
      ++cases;
      exact_ok += Q_inverse(F) == f;
      numeric([&](const GroupElt& g, Complex z) { return verify_quasi_polynomial(F, g, z, cfg.tol, cfg.order); });
    }
  }
  const bool pass = t.pass && exact_ok == cases;
  char buf[200];
  std::snprintf(buf, sizeof buf, "roundtrip %s: %zu/%zu exact, max residual %.3e\n%s\n", kind.c_str(), exact_ok, cases,
                t.max_residual, pass ? "PASS" : "FAIL");
  emit(cfg, {{"roundtrip", kind}, {"cases", cases}, {"exact", exact_ok}, {"max_residual", t.max_residual}, {"pass", pass}},
       buf);
  return pass ? 0 : 1;
}

void assert_same(const QSeries& got, const QSeries& want, long order, const std::string& what) {
  for (long e = 0; e < order; ++e) {
    PiPoly a = got.coeff(Rational(e)), b = want.coeff(Rational(e));
    if (!(a == b))
      throw Error(ErrorCode::AssertionFailure, what + " differs at q^" + std::to_string(e) + ": got " + format_pipoly(a) +
                                                   ", expected " + format_pipoly(b));
  }
}

int cmd_demo(const Config& cfg, bool perturb) {
  const long order = cfg.order;
  const QuasiElement d = QuasiElement::delta();
  std::string text;
  text += "Delta = " + format_series(delta(std::min<long>(order, 4))) + "\n";

  VVForm v = V_map(d, 14, 2, 0, order);
  text += "V_{14,2,0}(Delta) = Delta''(z^2,z,1) + 13 Delta'(2z,1,0) + 78 Delta(2,0,0):\n" + cli::describe(cli::Named(v.truncated(std::min<long>(order, 4))));

  FrameCoords fc = frame_coords(v);
  text += "frame coordinates L_2(z)^{-1} V:\n";
  for (std::size_t i = 0; i < fc.entries.size(); ++i)
    text += "  [" + std::to_string(i) + "] " + format_series(fc.entries[i].truncated(std::min<long>(order, 4))) + "\n";

  QuasiPolynomial F = U_inverse(v, 14, 2);
  text += "U_2^{-1}(V_{14,2,0}(Delta)):\n" + cli::describe(F);

  const std::vector<QuasiElement> want{z_derive(d, 2) * PiPoly(Rational(1, 2)), z_derive(d, 1) * PiPoly(13),
                                       d * PiPoly(78)};
  if (F.weight != 16 || F.coeffs.size() != want.size())
    throw Error(ErrorCode::AssertionFailure, "unexpected shape of the recovered polynomial");
  for (std::size_t r = 0; r < want.size(); ++r) {
    QSeries expect = want[r].to_qexp(order);
    if (perturb && r == 2) expect += QSeries::monomial(Rational(1), PiPoly(1));
    assert_same(F.coeffs[r].to_qexp(order), expect, order, "X^" + std::to_string(r) + " coefficient");
  }
  if (!perturb && !(F == QuasiPolynomial{16, want}))
    throw Error(ErrorCode::AssertionFailure, "recovered polynomial differs symbolically");

  text += "X^2 coefficient: " + format_series(F.coeffs[2].to_qexp(std::min<long>(order, 5))) + "\n";
  text += "matches 1/2 Delta'' + 13 Delta' X + 78 Delta X^2 to q^" + std::to_string(order) + "\nPASS\n";
  emit(cfg, {{"demo", "delta"}, {"order", order}, {"polynomial", to_json(F)}, {"pass", true}}, text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with vector-valued modular forms, quasimodular polynomials and Jacobi forms"};
  app.require_subcommand(1);
  Config cfg;
  app.add_option("--order", cfg.order, "q-order of expansions")->check(CLI::Range(1L, 100000L));
  app.add_option("--x-order", cfg.x_order, "X-truncation of Jacobi-like series (default n+5)");
  auto* tol_opt = app.add_option("--tol", cfg.tol, "numeric tolerance");
  app.add_flag("--json", cfg.json, "emit JSON");
  app.add_option("--cache-dir", cfg.cache_dir, "expansion cache directory (default $SYMFORMS_CACHE)");
  app.add_flag("--allow-small-weight", cfg.allow_small_weight, "permit U and its inverse with k <= n");

  std::string name, kind, a, b;
  int w = 0, j = 0;
  std::optional<int> lam1, lam2, vhat_n;
  bool negate = false, perturb = false;
  MapArgs margs;
  RoundtripArgs rargs;

  auto* expand = app.add_subcommand("expand", "print the expansion of a named object")->fallthrough();
  expand->add_option("name", name, "E2, E4, E6, delta, eta, phi-2,1, phi0,1, E4,1, E6,1, vhat(n), uhat(n) or an expression")
      ->required();

  auto* bracket = app.add_subcommand("bracket", "Rankin-Cohen brackets")->fallthrough();
  bracket->add_option("kind", kind)->required()->check(CLI::IsMember({"tensor", "sv", "pair"}));
  bracket->add_option("a", a)->required();
  bracket->add_option("b", b)->required();
  bracket->add_option("--w", w)->required();
  bracket->add_option("--lam1", lam1);
  bracket->add_option("--lam2", lam2);

  auto* map = app.add_subcommand("map", "correspondences between forms and polynomials")->fallthrough();
  map->add_option("kind", kind)->required()->check(CLI::IsMember({"v", "w", "u", "uinv", "lambda", "xi", "q", "qinv"}));
  map->add_option("operand", margs.operand)->required();
  map->add_option("--k", margs.k);
  map->add_option("--n", margs.n);
  map->add_option("--l", margs.l);
  map->add_option("--m", margs.m);
  map->add_option("--lam", margs.lam);

  auto* lift = app.add_subcommand("lift", "Cohen-Kuznetsov liftings")->fallthrough();
  lift->add_option("kind", kind)->required()->check(CLI::IsMember({"scalar", "vhat"}));
  lift->add_option("operand", a);
  lift->add_option("--n", vhat_n);

  auto* jl = app.add_subcommand("jl", "coefficients of Jacobi-like series")->fallthrough();
  jl->add_option("kind", kind)->required()->check(CLI::IsMember({"coeff"}));
  jl->add_option("--j", j)->required();
  jl->add_option("--g", a, "scalar lifting of this modular form");
  jl->add_option("--vhat", vhat_n, "vector lifting of vhat(n)");
  jl->add_flag("--negate-x", negate, "use g~(z,-X) in the product");

  auto* verify = app.add_subcommand("verify", "numeric transformation-law checks")->fallthrough();
  verify->add_option("kind", kind)->required()->check(CLI::IsMember({"scalar", "vv", "quasi", "jacobi", "jl"}));
  verify->add_option("target", a)->required();

  auto* roundtrip = app.add_subcommand("roundtrip", "exact round trips on full bases")->fallthrough();
  roundtrip->add_option("kind", kind)->required()->check(CLI::IsMember({"vu", "lambdaxi", "q"}));
  roundtrip->add_option("--k", rargs.k);
  roundtrip->add_option("--n", rargs.n);
  roundtrip->add_option("--m", rargs.m);
  roundtrip->add_option("--lam", rargs.lam);

  auto* demo = app.add_subcommand("demo", "reproduce the Delta example end to end")->fallthrough();
  demo->add_flag("--perturb", perturb)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  cfg.tol_given = tol_opt->count() > 0;

  try {
    if (*expand) return cmd_expand(cfg, name);
    if (*bracket) return cmd_bracket(cfg, kind, a, b, w, lam1, lam2);
    if (*map) return cmd_map(cfg, kind, margs);
    if (*lift) {
      if (kind == "scalar" && a.empty()) throw Error(ErrorCode::InvalidArgument, "lift scalar needs an operand");
      return cmd_lift(cfg, kind, a, vhat_n);
    }
    if (*jl) return cmd_jl(cfg, j, a, vhat_n, negate);
    if (*verify) return cmd_verify(cfg, kind, a);
    if (*roundtrip) return cmd_roundtrip(cfg, kind, rargs);
    if (*demo) return cmd_demo(cfg, perturb);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::ParseError:
      case ErrorCode::UnknownName:
      case ErrorCode::InvalidArgument: return 2;
      default: return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
