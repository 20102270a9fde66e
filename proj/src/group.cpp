#include "symforms/group.hpp"

#include <sstream>
#include <vector>

#include "symforms/error.hpp"

namespace symforms {

GroupElt::GroupElt(Integer a, Integer b, Integer c, Integer d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (a_ * d_ - b_ * c_ != 1) throw Error(ErrorCode::InvalidArgument, "matrix " + to_string() + " has determinant != 1");
}

GroupElt GroupElt::parse(std::string_view text) {
  std::string s(text);
  if (s == "T") return T();
  if (s == "S") return S();
  if (s == "ST") return ST();
  if (s == "I" || s == "identity") return identity();
  std::vector<Integer> entries;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      Rational r = parse_rational(item);
      if (r.get_den() != 1) throw Error(ErrorCode::ParseError, "non-integer matrix entry");
      entries.push_back(r.get_num());
    } catch (const Error&) {
      throw Error(ErrorCode::ParseError, "bad group element '" + s + "', expected a,b,c,d");
    }
  }
  if (entries.size() != 4) throw Error(ErrorCode::ParseError, "bad group element '" + s + "', expected a,b,c,d");
  return GroupElt(entries[0], entries[1], entries[2], entries[3]);
}

Complex GroupElt::act(Complex z) const {
  return (a_.get_d() * z + b_.get_d()) / cocycle_J(*this, z);
}

std::string GroupElt::to_string() const {
  return "(" + a_.get_str() + "," + b_.get_str() + ";" + c_.get_str() + "," + d_.get_str() + ")";
}

GroupElt operator*(const GroupElt& x, const GroupElt& y) {
  return GroupElt(x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_, x.c_ * y.a_ + x.d_ * y.c_,
                  x.c_ * y.b_ + x.d_ * y.d_);
}

Complex cocycle_J(const GroupElt& g, Complex z) {
  Complex j = g.c().get_d() * z + g.d().get_d();
  if (std::abs(j) == 0.0) throw Error(ErrorCode::DegeneratePoint, "cz + d vanishes");
  return j;
}

Complex cocycle_K(const GroupElt& g, Complex z) { return g.c().get_d() / cocycle_J(g, z); }

}  // namespace symforms
