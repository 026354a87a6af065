#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "coronae/graph.hpp"
#include "coronae/poly.hpp"
#include "coronae/ratfunc.hpp"

namespace coronae {

/// Part sizes of a complete multipartite graph with their elementary
/// symmetric sums C_1..C_k (C_1 = n).
class PartitionSpec {
 public:
  /// Throws std::invalid_argument for an empty list or a zero part.
  explicit PartitionSpec(std::vector<std::size_t> parts);

  std::span<const std::size_t> parts() const noexcept { return parts_; }
  std::size_t k() const noexcept { return parts_.size(); }
  /// C_j for 0 <= j <= k (C_0 = 1).
  const Integer& elementary(std::size_t j) const { return elementary_.at(j); }

 private:
  std::vector<std::size_t> parts_;
  std::vector<Integer> elementary_;
};

/// n/(λ − r) for any r-regular graph on n vertices.
RatFunc coronal_regular(std::size_t n, std::size_t r);

/// The two corona eigenvalues (μ + r ± √((r − μ)² + 4n))/2 attached to an
/// eigenvalue μ of G when H is r-regular on n vertices.
std::pair<double, double> regular_corona_new_eigs(double mu, long r, long n);

/// ((p+q)λ + 2pq)/(λ² − pq).
RatFunc coronal_complete_bipartite(std::size_t p, std::size_t q);

/// x³ − μx² − (p+q+pq)x + pq(μ−2), multiplied by the denominator of μ so the
/// coefficients are integers. Monic when μ is an integer.
IntPoly bipartite_new_eig_cubic(const Rational& mu, std::size_t p, std::size_t q);

/// Σ_j j·C_j λ^(k−j) / (λ^k − Σ_{j≥2} (j−1)·C_j λ^(k−j)), reduced.
RatFunc coronal_complete_multipartite(const PartitionSpec& spec);

/// The same coronal from Π(n_i + λ) and Σ_j n_j Π_{i≠j}(n_i + λ):
/// χ = S / (P − S). Used to cross-check the C_j form.
RatFunc coronal_complete_multipartite_product_form(const PartitionSpec& spec);

/// f_0 = 1, f_1 = λ, f_j = λ f_{j−1} − f_{j−2}; f_j is the characteristic polynomial of P_j.
std::vector<IntPoly> path_charpoly_sequence(std::size_t n);

/// (n f_n − 2 Σ_{j<n} f_j) / ((λ − 2) f_n), reduced.
RatFunc coronal_path(std::size_t n);

enum class Family { regular, complete_bipartite, complete_multipartite, path };

/// Part sizes if `g` is complete multipartite (its non-adjacency relation is an
/// equivalence), in order of first vertex.
std::optional<std::vector<std::size_t>> multipartite_parts(const Graph& g);
bool is_path_graph(const Graph& g);

/// Closed-form coronal of `h` if it belongs to `family`, otherwise nullopt.
std::optional<RatFunc> closed_form_coronal(const Graph& h, Family family);
/// First applicable family in the order regular, complete bipartite, complete multipartite, path.
std::optional<RatFunc> closed_form_coronal(const Graph& h);

}  // namespace coronae
