#pragma once

#include <cstddef>
#include <vector>

#include "coronae/engine.hpp"
#include "coronae/graph.hpp"
#include "coronae/poly.hpp"
#include "coronae/roots.hpp"

namespace coronae {

/// f_{G∘H} assembled from f_G, f_H and the coronal of H.
struct CoronaCharPoly {
  IntPoly total;     ///< f_{G∘H}
  std::size_t m = 0;  ///< |G|
  std::size_t n = 0;  ///< |H|
  Coronal coronal;   ///< coronal of H, χ = p/q
  IntPoly old_part;  ///< g(λ)^m, the factor carrying the inherited eigenvalues
  /// Π_μ (q(λ)(λ − μ) − p(λ)) over the eigenvalues μ of G, i.e. q^m · f_G(λ − p/q).
  IntPoly new_part;
};

struct AssemblyOptions {
  /// Also build G∘H explicitly and compare with its characteristic polynomial.
  bool cross_check = true;
};

/// f_{G∘H}(λ) = f_H(λ)^m · f_G(λ − χ_H(λ)) with denominators cleared:
/// writing χ_H = p/q and f_H = g·q, the result is g^m · Σ_k c_k (λq − p)^k q^(m−k).
/// Throws InvariantError if any exactness check fails.
CoronaCharPoly corona_char_poly(const Graph& g, const Graph& h, const AssemblyOptions& opts = {});

/// Roots of q(λ)(λ − μ) − p(λ) for one eigenvalue μ of G.
struct NewRootGroup {
  RealRoot mu;                    ///< eigenvalue of G with its multiplicity
  std::vector<RealRoot> roots;    ///< multiplicities as they appear in f_{G∘H}
};

struct SpectrumReport {
  std::size_t m = 0;
  std::size_t n = 0;
  int d = 0;
  /// Roots of g(λ); each carries m times its multiplicity in g.
  std::vector<RealRoot> old_roots;
  std::vector<NewRootGroup> new_root_groups;
  /// Merged multiset, increasing. Multiplicity = m·mult_g + mult_new.
  std::vector<RealRoot> all_roots;
  /// Roots that are simultaneously old and new.
  std::vector<RealRoot> stacked;
  /// False when the numeric μ-grouping could not give every μ of
  /// multiplicity k exactly k(d+1) roots; the exact multisets are unaffected.
  bool grouping_consistent = true;

  unsigned total_multiplicity() const;
};

/// Old/new decomposition of the spectrum of G∘H.
SpectrumReport decompose(const Graph& g, const Graph& h, int width_log2 = kDefaultRootWidthLog2);
SpectrumReport decompose(const Graph& g, const CoronaCharPoly& assembled, int width_log2 = kDefaultRootWidthLog2);

}  // namespace coronae
