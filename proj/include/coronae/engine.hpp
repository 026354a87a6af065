#pragma once

#include <cstddef>

#include "coronae/graph.hpp"
#include "coronae/poly.hpp"
#include "coronae/ratfunc.hpp"

namespace coronae {

/// Characteristic polynomial det(λI − A). The empty graph has polynomial 1.
IntPoly char_poly(const Graph& g);

/// χ̃_H(λ) = 1ᵀ adj(λI − B) 1, the sum of all cofactors of λI − B.
/// Computed as det(λI − B + J) − det(λI − B) with J the all-ones matrix.
IntPoly adjugate_sum(const Graph& h);

/// The coronal χ_H = 1ᵀ(λI − B)⁻¹1 together with the bookkeeping of its reduction.
struct Coronal {
  RatFunc chi;        ///< reduced coronal p/q
  IntPoly chi_tilde;  ///< unreduced numerator, sum of cofactors
  IntPoly f_h;        ///< characteristic polynomial of H
  IntPoly g;          ///< gcd(chi_tilde, f_h) = f_h / q
  int d = 0;          ///< degree of the reduced denominator q

  friend bool operator==(const Coronal&, const Coronal&) = default;
};

/// Builds the Coronal from χ̃_H and f_H.
Coronal make_coronal(IntPoly chi_tilde, IntPoly f_h);

/// Throws InvariantError unless every structural identity of `c` holds for a
/// graph on `n` vertices (degrees, leading coefficients, f_H = g·q).
void check_coronal(const Coronal& c, std::size_t n);

/// Generic engine: two determinant evaluations per sample point.
Coronal coronal(const Graph& h);

struct SchwenkOptions {
  /// Maximum number of (directed) paths visited before giving up with ResourceError.
  std::size_t path_budget = 1'000'000;
};

/// adj(λI − B)_{ij} = Σ over simple i–j paths P of f_{H−P}(λ). For i = j the
/// only path is the single vertex i.
IntPoly schwenk_adjugate_entry(const Graph& h, Vertex i, Vertex j, const SchwenkOptions& opts = {});

/// Coronal from cofactors obtained by path deletion; independent of coronal().
/// Requires |H| <= 63.
Coronal coronal_via_schwenk(const Graph& h, const SchwenkOptions& opts = {});

/// Near-regular route: with v_i = r − deg(i),
///   χ_H = [n·f_H − 1ᵀadj(λI − B)v] / ((λ − r)·f_H),
/// where 1ᵀadj(λI − B)v = det(λI − B + v1ᵀ) − det(λI − B). Valid for any integer r.
Coronal coronal_near_regular(const Graph& h, long r);

}  // namespace coronae
