#pragma once

#include <span>
#include <vector>

#include "coronae/poly.hpp"

namespace coronae {

/// A real root known by an isolating interval: the root lies in (lo, hi],
/// or equals lo when lo == hi (an exactly located rational root).
struct RealRoot {
  Rational lo;
  Rational hi;
  unsigned multiplicity = 1;

  bool exact() const { return lo == hi; }
  double approx() const { return Rational((lo + hi) / 2).get_d(); }
  friend bool operator==(const RealRoot&, const RealRoot&) = default;
};

/// Sturm sequence of a square-free polynomial.
class SturmSequence {
 public:
  explicit SturmSequence(const IntPoly& squarefree);
  /// Number of distinct roots in (a, b].
  int count(const Rational& a, const Rational& b) const;
  const IntPoly& poly() const { return seq_.front(); }

 private:
  int variations(const Rational& x) const;
  std::vector<IntPoly> seq_;
};

struct RootIsolation {
  std::vector<RealRoot> roots;  ///< increasing, pairwise disjoint
  int nonreal = 0;              ///< number of non-real roots, with multiplicity
};

constexpr int kDefaultRootWidthLog2 = 40;

/// Square-free decomposition followed by Sturm bisection; every interval has
/// width at most 2^-width_log2.
RootIsolation isolate_real_roots(const IntPoly& p, int width_log2 = kDefaultRootWidthLog2);

/// Same, for a polynomial that must have only real roots (characteristic
/// polynomials of symmetric matrices). Throws InvariantError otherwise.
std::vector<RealRoot> isolate_spectrum(const IntPoly& p, int width_log2 = kDefaultRootWidthLog2);

/// A root of Π factors[i], with the multiplicity it has in each factor.
struct SharedRoot {
  RealRoot root;  ///< root.multiplicity is Σ weights[i] * per_factor[i]
  std::vector<unsigned> per_factor;
};

/// Isolates the distinct real roots of the product of `factors` and reports,
/// for each, its multiplicity in every factor. Factors must be nonzero.
std::vector<SharedRoot> isolate_shared_roots(std::span<const IntPoly> factors, std::span<const unsigned> weights,
                                             int width_log2 = kDefaultRootWidthLog2);

/// Whether `interval` contains the root isolated by `root`. The Sturm
/// sequence must belong to a square-free polynomial for which `root` is an
/// isolating interval.
bool contains_root(const SturmSequence& s, const RealRoot& interval, const RealRoot& root);

}  // namespace coronae
