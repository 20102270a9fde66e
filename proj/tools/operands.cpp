#include "operands.hpp"

#include <fstream>
#include <regex>
#include <sstream>

#include "symforms/error.hpp"
#include "symforms/expr.hpp"
#include "symforms/modular.hpp"

namespace cli {

namespace {

std::optional<int> indexed(const std::string& name, const std::string& fn) {
  static const std::regex re(R"(^\s*(\w+)\s*\(\s*(\d+)\s*\)\s*$)");
  std::smatch m;
  if (std::regex_match(name, m, re) && m[1] == fn) return std::stoi(m[2]);
  return std::nullopt;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

std::string zpoly_text(const ZPoly& p) {
  std::string out;
  for (int d = 0; d <= p.degree(); ++d) {
    if (p.coeff(d).is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string c = format_series(p.coeff(d));
    const std::string z = "z" + (d > 1 ? "^" + std::to_string(d) : std::string());
    const bool simple = c.find(" + ") == std::string::npos && c.find(" - ") == std::string::npos;
    out += d == 0 ? c : c == "1" ? z : simple ? c + "*" + z : "(" + c + ")*" + z;
  }
  return out.empty() ? "0" : out;
}

std::string vv_text(const VVForm& F) {
  std::string out = "weight " + std::to_string(F.weight) + ", rank " + std::to_string(F.rank()) + "\n";
  for (std::size_t i = 0; i < F.rank(); ++i) out += "  [" + std::to_string(i) + "] " + zpoly_text(F.components[i]) + "\n";
  return out;
}

template <class P>
P poly_from_list(const std::string& text, int step) {
  auto parts = split(text, ';');
  if (parts.empty()) throw Error(ErrorCode::ParseError, "empty polynomial");
  std::vector<QuasiElement> cs;
  for (const auto& p : parts) cs.push_back(parse_quasi(p));
  std::optional<int> w;
  for (std::size_t r = 0; r < cs.size(); ++r)
    if (!cs[r].is_zero()) w = cs[r].weight() - step * static_cast<int>(r);
  if (!w) throw Error(ErrorCode::InvalidArgument, "cannot infer the weight of an all-zero polynomial");
  P out{*w, {}};
  for (std::size_t r = 0; r < cs.size(); ++r) {
    const int wr = *w + step * static_cast<int>(r);
    if (cs[r].is_zero()) cs[r] = QuasiElement(wr);
    if (cs[r].weight() != wr)
      throw Error(ErrorCode::WeightMismatch, "coefficient " + std::to_string(r) + " has weight " +
                                                 std::to_string(cs[r].weight()) + ", expected " + std::to_string(wr));
    out.coeffs.push_back(cs[r]);
  }
  return out;
}

template <class P>
std::string poly_text(const P& F, const char* kind) {
  std::string out = std::string(kind) + " polynomial of weight " + std::to_string(F.weight) + "\n";
  for (std::size_t r = 0; r < F.coeffs.size(); ++r)
    out += "  X^" + std::to_string(r) + ": " + F.coeffs[r].to_string() + "\n";
  return out;
}

}  // namespace

std::optional<Json> json_operand(const std::string& text) {
  if (text.empty() || text[0] != '@') return std::nullopt;
  std::ifstream in(text.substr(1));
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read " + text.substr(1));
  Json j = Json::parse(in, nullptr, false);
  if (j.is_discarded()) throw Error(ErrorCode::ParseError, "malformed JSON in " + text.substr(1));
  return j;
}

Named expand_named(const std::string& name, long order) {
  if (name == "eta") return ScalarForm{eta(order), std::nullopt};
  if (name == "phi-2,1") return phi_tilde(-2, order);
  if (name == "phi0,1") return phi_tilde(0, order);
  if (name == "E4,1") return jacobi_eisenstein(4, order);
  if (name == "E6,1") return jacobi_eisenstein(6, order);
  if (auto n = indexed(name, "vhat")) return v_hat(*n);
  if (auto n = indexed(name, "uhat")) return u_hat(*n);
  if (auto n = indexed(name, "udual")) return u_hat_dual(*n);
  QuasiElement x = parse_quasi(name);
  return ScalarForm{x.to_qexp(order), x.weight()};
}

Json named_to_json(const Named& x) {
  if (auto* s = std::get_if<ScalarForm>(&x)) {
    Json j = to_json(s->series);
    if (s->weight) j["weight"] = *s->weight;
    return {{"type", "series"}, {"value", j}};
  }
  if (auto* p = std::get_if<JacSeries>(&x)) return {{"type", "jacobi"}, {"value", to_json(*p)}};
  return {{"type", "vector"}, {"value", to_json(std::get<VVForm>(x))}};
}

Named named_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("type") || !j.contains("value")) throw Error(ErrorCode::ParseError, "untyped payload");
  const std::string type = j["type"];
  const Json& v = j["value"];
  if (type == "series") {
    ScalarForm s{qseries_from_json(v), std::nullopt};
    if (v.contains("weight")) s.weight = v["weight"].get<int>();
    return s;
  }
  if (type == "jacobi") return jacseries_from_json(v);
  if (type == "vector") return vvform_from_json(v);
  throw Error(ErrorCode::ParseError, "unknown payload type " + type);
}

std::string describe(const Named& x) {
  if (auto* s = std::get_if<ScalarForm>(&x)) return format_series(s->series) + "\n";
  if (auto* p = std::get_if<JacSeries>(&x)) {
    std::string out = "weight " + std::to_string(p->weight()) + ", index " + std::to_string(p->index()) + "\n";
    for (const auto& [e, row] : p->rows()) {
      out += "  q^" + to_string(e) + ":";
      for (const auto& [r, c] : row) out += " [" + std::to_string(r) + "] " + format_pipoly(c);
      out += "\n";
    }
    out += "  + O(q^" + std::to_string(p->order()) + ")\n";
    return out;
  }
  return vv_text(std::get<VVForm>(x));
}

QuasiElement quasi_operand(const std::string& text) {
  if (auto j = json_operand(text)) return quasi_from_json(*j);
  return parse_quasi(text);
}

ScalarForm scalar_operand(const std::string& text, long order) {
  if (auto j = json_operand(text)) {
    if (j->contains("terms")) {
      QuasiElement x = quasi_from_json(*j);
      return {x.to_qexp(order), x.weight()};
    }
    ScalarForm s{qseries_from_json(*j), std::nullopt};
    if (j->contains("weight")) s.weight = (*j)["weight"].get<int>();
    return s;
  }
  Named x = expand_named(text, order);
  if (auto* s = std::get_if<ScalarForm>(&x)) return *s;
  throw Error(ErrorCode::InvalidArgument, text + " is not a scalar series");
}

VVForm vector_operand(const std::string& text, long order) {
  if (auto j = json_operand(text)) return vvform_from_json(*j);
  static const std::regex vre(R"(^\s*V\s*\(\s*(-?\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,(.*)\)\s*$)");
  std::smatch m;
  if (std::regex_match(text, m, vre))
    return V_map(parse_quasi(m[4].str()), std::stoi(m[1]), std::stoi(m[2]), std::stoi(m[3]), order);
  Named x = expand_named(text, order);
  if (auto* v = std::get_if<VVForm>(&x)) return *v;
  if (auto* s = std::get_if<ScalarForm>(&x)) {
    if (!s->weight) throw Error(ErrorCode::UnsupportedWeight, text + " has no integral weight");
    return {*s->weight, Representation::trivial(), {ZPoly(s->series)}};
  }
  throw Error(ErrorCode::InvalidArgument, text + " is not a vector-valued form");
}

JacSeries jacobi_operand(const std::string& text, long order) {
  if (auto j = json_operand(text)) return jacseries_from_json(*j);
  Named x = expand_named(text, order);
  if (auto* p = std::get_if<JacSeries>(&x)) return *p;
  throw Error(ErrorCode::InvalidArgument, text + " is not a Jacobi series");
}

QuasiPolynomial quasi_poly_operand(const std::string& text) {
  if (auto j = json_operand(text)) return quasi_polynomial_from_json(*j);
  return poly_from_list<QuasiPolynomial>(text, -2);
}

ModPolynomial mod_poly_operand(const std::string& text) {
  if (auto j = json_operand(text)) return mod_polynomial_from_json(*j);
  return poly_from_list<ModPolynomial>(text, 2);
}

std::string describe(const QuasiPolynomial& F) { return poly_text(F, "quasimodular"); }
std::string describe(const ModPolynomial& F) { return poly_text(F, "modular"); }

std::string describe(const JLSeries& s) {
  std::string out = "weight " + std::to_string(s.weight) + ", X-order " + std::to_string(s.x_order) + "\n";
  for (std::size_t j = 0; j < s.coeffs.size(); ++j) {
    out += "X^" + std::to_string(j) + ": ";
    out += s.is_scalar() ? zpoly_text(s.coeffs[j].components[0]) + "\n" : "\n" + vv_text(s.coeffs[j]);
  }
  return out;
}

}  // namespace cli
