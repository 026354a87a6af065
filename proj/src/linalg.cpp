#include "coronae/linalg.hpp"

#include <utility>

namespace coronae {

IntMatrix IntMatrix::adjacency(const Graph& g) {
  IntMatrix a(g.order());
  const auto adj = g.adjacency();
  for (std::size_t k = 0; k < adj.size(); ++k) a.a_[k] = adj[k];
  return a;
}

Integer determinant(IntMatrix m) {
  const std::size_t n = m.dim();
  if (n == 0) return 1;
  Integer prev_pivot = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t j = k; j < n; ++j) std::swap(m(k, j), m(swap_row, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev_pivot.get_mpz_t());
      }
    }
    prev_pivot = m(k, k);
  }
  return sign > 0 ? m(n - 1, n - 1) : Integer(-m(n - 1, n - 1));
}

IntPoly char_poly(const IntMatrix& c) {
  const std::size_t n = c.dim();
  std::vector<std::pair<Integer, Integer>> points;
  points.reserve(n + 1);
  for (std::size_t t = 0; t <= n; ++t) {
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = -c(i, j);
    for (std::size_t i = 0; i < n; ++i) m(i, i) += static_cast<unsigned long>(t);
    points.emplace_back(Integer(static_cast<unsigned long>(t)), determinant(std::move(m)));
  }
  return interpolate(points, n);
}

}  // namespace coronae
