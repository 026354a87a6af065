#pragma once

#include <string>

#include "coronae/poly.hpp"

namespace coronae {

/// Reduced quotient num/den of integer polynomials with den monic.
///
/// Every instance is canonical: gcd(num, den) = 1 and den is monic, so two
/// equal rational functions compare equal member-wise. The zero function is 0/1.
class RatFunc {
 public:
  /// The zero function.
  RatFunc() : den_(IntPoly::constant(1)) {}
  explicit RatFunc(const IntPoly& p) : num_(p), den_(IntPoly::constant(1)) {}

  const IntPoly& num() const noexcept { return num_; }
  const IntPoly& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }

  friend RatFunc reduce(IntPoly num, IntPoly den);

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  RatFunc operator-() const;

  friend bool operator==(const RatFunc&, const RatFunc&) = default;

 private:
  RatFunc(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) {}

  IntPoly num_;
  IntPoly den_;
};

/// Cancels gcd(num, den). `den` must be nonzero with leading coefficient ±1;
/// throws std::domain_error for a zero denominator and std::invalid_argument
/// for a denominator that cannot be made monic over the integers.
RatFunc reduce(IntPoly num, IntPoly den);

/// "(5*x + 8)/(x^2 - 4)", "1/x", "4/(x - 2)", "x^2 - 1". TeX mode emits \frac{..}{..}.
std::string to_string(const RatFunc& r, const PolyFormat& fmt = {});

}  // namespace coronae
