#include "symforms/serialize.hpp"

#include <sstream>

#include "symforms/error.hpp"

namespace symforms {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

Rational rat(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  bad("expected a rational string");
}

long integer(const Json& j) {
  if (j.is_number_integer()) return j.get<long>();
  if (j.is_string()) {
    Rational r = parse_rational(j.get<std::string>());
    if (r.get_den() != 1 || !r.get_num().fits_slong_p()) bad("expected an integer");
    return r.get_num().get_si();
  }
  bad("expected an integer");
}

const char* kind_name(RepKind k) {
  switch (k) {
    case RepKind::symmetric: return "sym";
    case RepKind::contragredient: return "dual";
    case RepKind::symmetric_transpose_inverse: return "sym-ti";
  }
  return "sym";
}

RepKind kind_from(const std::string& s) {
  if (s == "sym") return RepKind::symmetric;
  if (s == "dual") return RepKind::contragredient;
  if (s == "sym-ti") return RepKind::symmetric_transpose_inverse;
  bad("unknown representation kind " + s);
}

Json rep_json(const Representation& r) {
  Json out = Json::array();
  for (const auto& f : r.factors) out.push_back({kind_name(f.kind), f.n});
  return out;
}

Representation rep_from(const Json& j) {
  Representation r;
  if (!j.is_array()) bad("representation must be an array");
  for (const auto& f : j) {
    if (!f.is_array() || f.size() != 2) bad("representation factor must be [kind, n]");
    r.factors.push_back({kind_from(f[0].get<std::string>()), static_cast<int>(integer(f[1]))});
  }
  return r;
}

}  // namespace

Json to_json(const PiPoly& p) {
  Json out = Json::array();
  for (const auto& [power, c] : p.terms()) out.push_back({power, to_string(c)});
  return out;
}

PiPoly pipoly_from_json(const Json& j) {
  if (j.is_string() || j.is_number_integer()) return PiPoly(rat(j));
  if (!j.is_array()) bad("Π-polynomial must be an array of [power, \"p/q\"]");
  PiPoly out;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2) bad("Π-term must be [power, \"p/q\"]");
    out += PiPoly(rat(t[1]), static_cast<int>(integer(t[0])));
  }
  return out;
}

Json to_json(const QSeries& s) {
  Json coeffs = Json::array();
  for (const auto& [e, c] : s.coeffs()) coeffs.push_back({std::to_string(e), to_json(c)});
  Json order = s.is_exact() ? Json(nullptr) : Json(to_string(*s.order()));
  return {{"den", s.den()}, {"order", order}, {"coeffs", coeffs}};
}

QSeries qseries_from_json(const Json& j) {
  const long den = integer(field(j, "den"));
  if (den <= 0 || 24 % den != 0) bad("den must divide 24");
  const Json& o = field(j, "order");
  long order_num = QSeries::kUnbounded;
  if (!o.is_null()) {
    Rational r = rat(o) * Rational(den);
    if (r.get_den() != 1) bad("order not a multiple of 1/den");
    order_num = r.get_num().get_si();
  }
  QSeries out(static_cast<int>(den), order_num);
  for (const auto& t : field(j, "coeffs")) {
    if (!t.is_array() || t.size() != 2) bad("coefficient entry must be [exp_num, terms]");
    Rational e(integer(t[0]), den);
    e.canonicalize();
    if (!o.is_null() && e >= *out.order()) bad("coefficient at or beyond the order");
    out.set_coeff(e, pipoly_from_json(t[1]));
  }
  return out;
}

Json to_json(const JacSeries& s) {
  Json rows = Json::array();
  for (const auto& [e, row] : s.rows()) {
    Json entries = Json::array();
    for (const auto& [r, c] : row) {
      if (c.is_monomial() && c.terms()[0].first == 0)
        entries.push_back({r, to_string(c.terms()[0].second)});
      else
        entries.push_back({r, to_json(c)});
    }
    rows.push_back({to_string(e), entries});
  }
  Json order = s.order() == QSeries::kUnbounded ? Json(nullptr) : Json(s.order());
  return {{"weight", s.weight()}, {"index", s.index()}, {"order", order}, {"rows", rows}};
}

JacSeries jacseries_from_json(const Json& j) {
  const Json& o = field(j, "order");
  const long order = o.is_null() ? QSeries::kUnbounded : integer(o);
  JacSeries out(static_cast<int>(integer(field(j, "weight"))), static_cast<int>(integer(field(j, "index"))), order);
  std::map<long, QSeries> by_zeta;
  for (const auto& row : field(j, "rows")) {
    if (!row.is_array() || row.size() != 2) bad("row must be [q_exp, entries]");
    const Rational e = rat(row[0]);
    for (const auto& t : row[1]) {
      if (!t.is_array() || t.size() != 2) bad("row entry must be [zeta_pow, coeff]");
      const long r = integer(t[0]);
      auto it = by_zeta.find(r);
      if (it == by_zeta.end()) it = by_zeta.emplace(r, order == QSeries::kUnbounded ? QSeries() : QSeries::zero(order)).first;
      it->second.set_coeff(e, pipoly_from_json(t[1]));
    }
  }
  for (const auto& [r, c] : by_zeta) out.set_coeff(r, c);
  return out;
}

Json to_json(const VVForm& F) {
  Json comps = Json::array();
  for (const auto& c : F.components) {
    Json zs = Json::array();
    for (const auto& s : c.coeffs()) zs.push_back(to_json(s));
    comps.push_back(zs);
  }
  return {{"weight", F.weight}, {"rep", rep_json(F.rep)}, {"components", comps}};
}

VVForm vvform_from_json(const Json& j) {
  VVForm out{static_cast<int>(integer(field(j, "weight"))), rep_from(field(j, "rep")), {}};
  for (const auto& c : field(j, "components")) {
    std::vector<QSeries> zs;
    for (const auto& s : c) zs.push_back(qseries_from_json(s));
    if (zs.empty()) bad("component without coefficients");
    out.components.emplace_back(zs);
  }
  if (out.rep.dimension() != out.components.size()) bad("component count does not match the representation");
  return out;
}

Json to_json(const QuasiElement& x) {
  Json terms = Json::array();
  for (const auto& [m, c] : x.terms()) terms.push_back({{m.e2, m.e4, m.e6}, to_json(c)});
  return {{"weight", x.weight()}, {"terms", terms}};
}

QuasiElement quasi_from_json(const Json& j) {
  const int w = static_cast<int>(integer(field(j, "weight")));
  QuasiElement out(w);
  for (const auto& t : field(j, "terms")) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_array() || t[0].size() != 3) bad("term must be [[e2,e4,e6], coeff]");
    QuasiMonomial m{static_cast<int>(integer(t[0][0])), static_cast<int>(integer(t[0][1])),
                    static_cast<int>(integer(t[0][2]))};
    if (m.e2 < 0 || m.e4 < 0 || m.e6 < 0) bad("negative exponent");
    if (m.weight() != w) throw Error(ErrorCode::WeightMismatch, "term weight differs from the declared weight");
    out += QuasiElement::monomial(m, pipoly_from_json(t[1]));
  }
  return out;
}

namespace {

template <class P>
Json poly_json(const P& F, const char* kind) {
  Json coeffs = Json::array();
  for (const auto& c : F.coeffs) coeffs.push_back(to_json(c));
  return {{"kind", kind}, {"weight", F.weight}, {"coeffs", coeffs}};
}

template <class P>
P poly_from(const Json& j, const char* kind) {
  if (j.contains("kind") && j.at("kind") != kind) bad(std::string("expected a polynomial of kind ") + kind);
  P out{static_cast<int>(integer(field(j, "weight"))), {}};
  for (const auto& c : field(j, "coeffs")) out.coeffs.push_back(quasi_from_json(c));
  return out;
}

}  // namespace

Json to_json(const QuasiPolynomial& F) { return poly_json(F, "quasi"); }
Json to_json(const ModPolynomial& F) { return poly_json(F, "mod"); }
QuasiPolynomial quasi_polynomial_from_json(const Json& j) { return poly_from<QuasiPolynomial>(j, "quasi"); }
ModPolynomial mod_polynomial_from_json(const Json& j) { return poly_from<ModPolynomial>(j, "mod"); }

Json to_json(const JLSeries& s) {
  Json coeffs = Json::array();
  for (const auto& c : s.coeffs) coeffs.push_back(to_json(c));
  return {{"weight", s.weight}, {"x_order", s.x_order}, {"exp_sign", s.exp_sign}, {"rep", rep_json(s.rep)}, {"coeffs", coeffs}};
}

JLSeries jlseries_from_json(const Json& j) {
  JLSeries out{static_cast<int>(integer(field(j, "weight"))), static_cast<int>(integer(field(j, "x_order"))),
               static_cast<int>(integer(field(j, "exp_sign"))), rep_from(field(j, "rep")), {}};
  for (const auto& c : field(j, "coeffs")) out.coeffs.push_back(vvform_from_json(c));
  if (out.coeffs.size() != static_cast<std::size_t>(out.x_order)) bad("coefficient count does not match x_order");
  return out;
}

std::string format_pipoly(const PiPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [power, c] : p.terms()) {
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    first = false;
    const Rational a = abs(c);
    if (power == 0) {
      out << to_string(a);
      continue;
    }
    if (a != 1) out << to_string(a) << "*";
    out << "Pi";
    if (power != 1) out << "^" << power;
  }
  return out.str();
}

std::string format_series(const QSeries& s) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : s.coeffs()) {
    Rational ex(e, s.den());
    ex.canonicalize();
    std::string coeff = format_pipoly(c);
    const bool compound = c.terms().size() > 1;
    const bool neg = !compound && coeff[0] == '-';
    if (neg) coeff = coeff.substr(1);
    if (!first) out << (neg ? " - " : " + ");
    else if (neg) out << "-";
    first = false;
    if (compound) coeff = "(" + coeff + ")";
    if (ex == 0) {
      out << coeff;
      continue;
    }
    if (coeff != "1") out << coeff << (coeff.find("Pi") != std::string::npos ? "*" : "");
    out << "q";
    if (ex != 1) out << "^" << to_string(ex);
  }
  if (first) out << "0";
  if (!s.is_exact()) out << " + O(q^" << to_string(*s.order()) << ")";
  return out.str();
}

}  // namespace symforms
