#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace coronae {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense univariate polynomial over the integers; coefficient k multiplies x^k.
///
/// The coefficient vector never carries trailing zeros, so the zero
/// polynomial has an empty vector and degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  /// Coefficients in increasing degree: {c0, c1, c2, ...}.
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(Integer c);
  static IntPoly monomial(Integer c, std::size_t k);
  /// The indeterminate x (λ in the algebra).
  static IntPoly x() { return monomial(1, 1); }
  /// x - a.
  static IntPoly linear_root(const Integer& a);

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  /// Coefficient of x^k; zero past the degree.
  Integer coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Integer(0); }
  /// Leading coefficient; zero for the zero polynomial.
  Integer leading() const { return c_.empty() ? Integer(0) : c_.back(); }
  std::span<const Integer> coefficients() const noexcept { return c_; }

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const IntPoly& o);
  IntPoly& operator*=(const Integer& k);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const Integer& k) { return a *= k; }
  friend IntPoly operator*(const Integer& k, IntPoly a) { return a *= k; }
  IntPoly operator-() const;

  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

  IntPoly pow(unsigned e) const;
  IntPoly derivative() const;
  /// Horner evaluation at an integer point.
  Integer eval(const Integer& t) const;
  /// Sign of p(a/b), computed without leaving the integers.
  int sign_at(const Rational& t) const;
  Rational eval(const Rational& t) const;

  /// gcd of the coefficients, non-negative.
  Integer content() const;
  /// p / content(p) with a positive leading coefficient; zero stays zero.
  IntPoly primitive_part() const;
  /// Divide every coefficient by k; throws NotDivisibleError if k does not divide them all.
  IntPoly divided_by(const Integer& k) const;

 private:
  void trim();
  std::vector<Integer> c_;
};

IntPoly pow(const IntPoly& p, unsigned e);

/// Exact quotient p / q. Throws NotDivisibleError when q does not divide p in Z[x],
/// std::domain_error when q is zero.
IntPoly exact_div(const IntPoly& p, const IntPoly& q);

/// Pseudo-remainder: lc(q)^(deg p - deg q + 1) * p mod q, computed in Z[x].
IntPoly pseudo_remainder(const IntPoly& p, const IntPoly& q);

/// Greatest common divisor over Q, scaled to a primitive integer polynomial
/// with positive leading coefficient. If either argument is monic the result
/// is monic. Throws std::invalid_argument if both are zero.
IntPoly gcd(const IntPoly& p, const IntPoly& q);

/// Σ_k c_k · num^k · den^(deg f - k + extra_den_power) where f = Σ c_k x^k,
/// i.e. den^(deg f + extra) · f(num/den) with denominators cleared.
IntPoly compose_into(const IntPoly& f, const IntPoly& rho_num, const IntPoly& rho_den, int extra_den_power = 0);

inline Integer eval_at_integer(const IntPoly& p, const Integer& t) { return p.eval(t); }

/// Unique interpolant of degree <= degree_bound through `points`. Requires at
/// least degree_bound + 1 points with distinct abscissae. Throws
/// std::invalid_argument on duplicates or too few points and InvariantError if
/// the interpolant is not an integer polynomial of degree <= degree_bound.
IntPoly interpolate(std::span<const std::pair<Integer, Integer>> points, std::size_t degree_bound);

/// Square-free factorisation p = c · Π s_i^i (Yun). Entry i-1 holds s_i; the
/// factors are primitive and pairwise coprime. Trailing entries equal to 1 are dropped.
std::vector<IntPoly> squarefree_decomposition(const IntPoly& p);

struct PolyFormat {
  std::string var = "x";
  bool tex = false;
};

/// Canonical rendering, descending degree with explicit signs:
/// "x^4 - 4*x^2", "5*x + 8", "-x", "0". TeX mode writes "\lambda^{4} - 4\lambda^{2}".
std::string to_string(const IntPoly& p, const PolyFormat& fmt = {});

}  // namespace coronae
