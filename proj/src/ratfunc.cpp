#include "coronae/ratfunc.hpp"

#include <stdexcept>

namespace coronae {

RatFunc reduce(IntPoly num, IntPoly den) {
  if (den.is_zero()) throw std::domain_error("reduce: zero denominator");
  const Integer lead = den.leading();
  if (lead == -1) {
    num = -num;
    den = -den;
  } else if (lead != 1) {
    throw std::invalid_argument("reduce: denominator must be monic");
  }
  if (num.is_zero()) return RatFunc(IntPoly{}, IntPoly::constant(1));
  // den is monic, so the primitive gcd is monic and divides both exactly.
  const IntPoly g = gcd(num, den);
  if (g.degree() > 0) {
    num = exact_div(num, g);
    den = exact_div(den, g);
  }
  return RatFunc(std::move(num), std::move(den));
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  return reduce(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
  return reduce(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) { return reduce(a.num_ * b.num_, a.den_ * b.den_); }

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_); }

namespace {

bool single_term(const IntPoly& p) {
  int nonzero = 0;
  for (const auto& c : p.coefficients()) nonzero += (c != 0);
  return nonzero <= 1;
}

}  // namespace

std::string to_string(const RatFunc& r, const PolyFormat& fmt) {
  const std::string num = to_string(r.num(), fmt);
  if (r.den().degree() == 0) return num;
  const std::string den = to_string(r.den(), fmt);
  if (fmt.tex) return "\\frac{" + num + "}{" + den + "}";
  const std::string n = single_term(r.num()) ? num : "(" + num + ")";
  const std::string d = single_term(r.den()) ? den : "(" + den + ")";
  return n + "/" + d;
}

}  // namespace coronae
