#include "coronae/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "coronae/errors.hpp"

namespace coronae {

IntPoly::IntPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  c_.reserve(coeffs.size());
  for (long c : coeffs) c_.emplace_back(c);
  trim();
}

IntPoly IntPoly::constant(Integer c) { return IntPoly(std::vector<Integer>{std::move(c)}); }

IntPoly IntPoly::monomial(Integer c, std::size_t k) {
  std::vector<Integer> v(k + 1);
  v[k] = std::move(c);
  return IntPoly(std::move(v));
}

IntPoly IntPoly::linear_root(const Integer& a) { return IntPoly(std::vector<Integer>{-a, 1}); }

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return IntPoly(std::move(out));
}

IntPoly& IntPoly::operator*=(const IntPoly& o) { return *this = *this * o; }

IntPoly& IntPoly::operator*=(const Integer& k) {
  if (k == 0) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= k;
  return *this;
}

IntPoly IntPoly::operator-() const {
  IntPoly out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

IntPoly IntPoly::pow(unsigned e) const {
  IntPoly result = constant(1);
  IntPoly base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

IntPoly pow(const IntPoly& p, unsigned e) { return p.pow(e); }

IntPoly IntPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Integer> out(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) out[k - 1] = c_[k] * static_cast<unsigned long>(k);
  return IntPoly(std::move(out));
}

Integer IntPoly::eval(const Integer& t) const {
  Integer acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

int IntPoly::sign_at(const Rational& t) const {
  if (c_.empty()) return 0;
  const Integer& a = t.get_num();
  const Integer& b = t.get_den();
  Integer acc = c_.back();
  Integer bpow = 1;
  for (std::size_t k = c_.size() - 1; k-- > 0;) {
    bpow *= b;
    acc = acc * a + c_[k] * bpow;
  }
  return sgn(acc);
}

Rational IntPoly::eval(const Rational& t) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + Rational(*it);
  return acc;
}

Integer IntPoly::content() const {
  Integer g = 0;
  for (const auto& c : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (c_.empty()) return {};
  Integer g = content();
  if (c_.back() < 0) g = -g;
  return divided_by(g);
}

IntPoly IntPoly::divided_by(const Integer& k) const {
  if (k == 0) throw std::domain_error("division of a polynomial by zero");
  std::vector<Integer> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!mpz_divisible_p(c_[i].get_mpz_t(), k.get_mpz_t()))
      throw NotDivisibleError("coefficient not divisible by scalar");
    mpz_divexact(out[i].get_mpz_t(), c_[i].get_mpz_t(), k.get_mpz_t());
  }
  return IntPoly(std::move(out));
}

IntPoly exact_div(const IntPoly& p, const IntPoly& q) {
  if (q.is_zero()) throw std::domain_error("exact_div: division by the zero polynomial");
  if (p.is_zero()) return {};
  if (p.degree() < q.degree()) throw NotDivisibleError("exact_div: divisor has larger degree than dividend");
  std::vector<Integer> rem(p.coefficients().begin(), p.coefficients().end());
  const auto qc = q.coefficients();
  const std::size_t dq = qc.size() - 1;
  const Integer& lq = qc.back();
  std::vector<Integer> quot(rem.size() - dq);
  for (std::size_t k = quot.size(); k-- > 0;) {
    Integer& top = rem[k + dq];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lq.get_mpz_t()))
      throw NotDivisibleError("exact_div: quotient has non-integral coefficient");
    mpz_divexact(quot[k].get_mpz_t(), top.get_mpz_t(), lq.get_mpz_t());
    for (std::size_t j = 0; j <= dq; ++j) rem[k + j] -= quot[k] * qc[j];
  }
  for (const auto& r : rem)
    if (r != 0) throw NotDivisibleError("exact_div: nonzero remainder");
  return IntPoly(std::move(quot));
}

IntPoly pseudo_remainder(const IntPoly& p, const IntPoly& q) {
  if (q.is_zero()) throw std::domain_error("pseudo_remainder: zero divisor");
  if (p.degree() < q.degree()) return p;
  std::vector<Integer> rem(p.coefficients().begin(), p.coefficients().end());
  const auto qc = q.coefficients();
  const std::size_t dq = qc.size() - 1;
  const Integer& lq = qc.back();
  while (rem.size() > dq) {
    // rem <- lq * rem - rem[top] x^(top-dq) q
    const std::size_t top = rem.size() - 1;
    const Integer lead = rem[top];
    for (auto& r : rem) r *= lq;
    for (std::size_t j = 0; j <= dq; ++j) rem[top - dq + j] -= lead * qc[j];
    rem.pop_back();
  }
  return IntPoly(std::move(rem));
}

IntPoly gcd(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero() && q.is_zero()) throw std::invalid_argument("gcd: both arguments are zero");
  IntPoly a = p.primitive_part();
  IntPoly b = q.primitive_part();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPoly r = pseudo_remainder(a, b).primitive_part();
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

IntPoly compose_into(const IntPoly& f, const IntPoly& rho_num, const IntPoly& rho_den, int extra_den_power) {
  if (extra_den_power < 0) throw std::invalid_argument("compose_into: extra_den_power must be non-negative");
  if (rho_den.is_zero()) throw std::domain_error("compose_into: zero denominator");
  if (f.is_zero()) return {};
  const auto m = static_cast<unsigned>(f.degree());
  // Horner in homogeneous form: acc_k = acc_{k+1} * num + c_k * den^(m-k).
  IntPoly acc = IntPoly::constant(f.leading());
  IntPoly den_pow = IntPoly::constant(1);
  for (unsigned k = m; k-- > 0;) {
    den_pow *= rho_den;
    acc = acc * rho_num + f.coeff(k) * den_pow;
  }
  if (extra_den_power > 0) acc *= rho_den.pow(static_cast<unsigned>(extra_den_power));
  return acc;
}

IntPoly interpolate(std::span<const std::pair<Integer, Integer>> points, std::size_t degree_bound) {
  const std::size_t count = points.size();
  if (count < degree_bound + 1) throw std::invalid_argument("interpolate: too few points for the degree bound");
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = i + 1; j < count; ++j)
      if (points[i].first == points[j].first) throw std::invalid_argument("interpolate: duplicate abscissa");

  // Divided differences in place.
  std::vector<Rational> dd(count);
  for (std::size_t i = 0; i < count; ++i) dd[i] = Rational(points[i].second);
  for (std::size_t level = 1; level < count; ++level)
    for (std::size_t i = count - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / Rational(points[i].first - points[i - level].first);
      if (i == level) break;
    }

  // Expand the Newton form from the innermost coefficient outwards.
  std::vector<Rational> acc{dd[count - 1]};
  for (std::size_t i = count - 1; i-- > 0;) {
    std::vector<Rational> next(acc.size() + 1);
    const Rational xi(points[i].first);
    for (std::size_t k = 0; k < acc.size(); ++k) {
      next[k + 1] += acc[k];
      next[k] -= acc[k] * xi;
    }
    next[0] += dd[i];
    acc = std::move(next);
  }

  std::vector<Integer> coeffs(acc.size());
  for (std::size_t k = 0; k < acc.size(); ++k) {
    acc[k].canonicalize();
    if (acc[k].get_den() != 1) throw InvariantError("interpolate: interpolant has a non-integral coefficient");
    coeffs[k] = acc[k].get_num();
  }
  IntPoly out(std::move(coeffs));
  if (out.degree() > static_cast<int>(degree_bound))
    throw InvariantError("interpolate: points are inconsistent with the degree bound");
  return out;
}

std::vector<IntPoly> squarefree_decomposition(const IntPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree_decomposition: zero polynomial");
  std::vector<IntPoly> out;
  const IntPoly f = p.primitive_part();
  if (f.degree() == 0) return out;
  const IntPoly df = f.derivative();
  const IntPoly a0 = gcd(f, df);
  IntPoly b = exact_div(f, a0);
  IntPoly c = exact_div(df, a0);
  IntPoly d = c - b.derivative();
  while (b.degree() > 0) {
    IntPoly a = gcd(b, d);
    out.push_back(a);
    b = exact_div(b, a);
    c = exact_div(d, a);
    d = c - b.derivative();
  }
  while (!out.empty() && out.back().degree() == 0) out.pop_back();
  return out;
}

std::string to_string(const IntPoly& p, const PolyFormat& fmt) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    const Integer c = p.coeff(static_cast<std::size_t>(k));
    if (c == 0) continue;
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    const Integer a = abs(c);
    if (k == 0) {
      out << a;
      continue;
    }
    if (a != 1) out << a << (fmt.tex ? "" : "*");
    out << fmt.var;
    if (k > 1) {
      if (fmt.tex)
        out << "^{" << k << '}';
      else
        out << '^' << k;
    }
  }
  return out.str();
}

}  // namespace coronae
