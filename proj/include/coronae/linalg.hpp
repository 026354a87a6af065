#pragma once

#include <cstddef>
#include <vector>

#include "coronae/graph.hpp"
#include "coronae/poly.hpp"

namespace coronae {

/// Square row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), a_(n * n) {}
  static IntMatrix adjacency(const Graph& g);

  std::size_t dim() const noexcept { return n_; }
  Integer& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

 private:
  std::size_t n_ = 0;
  std::vector<Integer> a_;
};

/// Exact determinant by fraction-free (Bareiss) elimination with row pivoting.
/// The 0×0 determinant is 1.
Integer determinant(IntMatrix m);

/// det(λI − C) as a polynomial, by evaluating at λ = 0..n and interpolating.
IntPoly char_poly(const IntMatrix& c);

}  // namespace coronae
