#include "coronae/closed_forms.hpp"

#include <cmath>
#include <stdexcept>

namespace coronae {

namespace {

Integer to_integer(std::size_t v) { return Integer(static_cast<unsigned long>(v)); }

}  // namespace

PartitionSpec::PartitionSpec(std::vector<std::size_t> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("PartitionSpec: need at least one part");
  elementary_.assign(parts_.size() + 1, Integer(0));
  elementary_[0] = 1;
  for (const std::size_t part : parts_) {
    if (part == 0) throw std::invalid_argument("PartitionSpec: parts must be positive");
    for (std::size_t j = elementary_.size() - 1; j >= 1; --j) elementary_[j] += elementary_[j - 1] * to_integer(part);
  }
}

RatFunc coronal_regular(std::size_t n, std::size_t r) {
  if (n == 0) throw std::invalid_argument("coronal_regular: n must be positive");
  if (r >= n) throw std::invalid_argument("coronal_regular: need 0 <= r <= n-1");
  return reduce(IntPoly::constant(to_integer(n)), IntPoly::linear_root(to_integer(r)));
}

std::pair<double, double> regular_corona_new_eigs(double mu, long r, long n) {
  const double rr = static_cast<double>(r);
  const double root = std::sqrt((rr - mu) * (rr - mu) + 4.0 * static_cast<double>(n));
  return {(mu + rr + root) / 2.0, (mu + rr - root) / 2.0};
}

RatFunc coronal_complete_bipartite(std::size_t p, std::size_t q) {
  if (p == 0 || q == 0) throw std::invalid_argument("coronal_complete_bipartite: parts must be positive");
  const Integer pq = to_integer(p) * to_integer(q);
  return reduce(IntPoly(std::vector<Integer>{2 * pq, to_integer(p + q)}),
                IntPoly(std::vector<Integer>{-pq, 0, 1}));
}

IntPoly bipartite_new_eig_cubic(const Rational& mu, std::size_t p, std::size_t q) {
  if (p == 0 || q == 0) throw std::invalid_argument("bipartite_new_eig_cubic: parts must be positive");
  Rational m = mu;
  m.canonicalize();
  const Integer& a = m.get_num();
  const Integer& b = m.get_den();
  const Integer pq = to_integer(p) * to_integer(q);
  // b · (x³ − (a/b)x² − (p+q+pq)x + pq(a/b − 2))
  return IntPoly(std::vector<Integer>{pq * (a - 2 * b), -b * (to_integer(p + q) + pq), -a, b});
}

RatFunc coronal_complete_multipartite(const PartitionSpec& spec) {
  const std::size_t k = spec.k();
  std::vector<Integer> num(k), den(k + 1);
  den[k] = 1;
  for (std::size_t j = 1; j <= k; ++j) {
    num[k - j] = to_integer(j) * spec.elementary(j);
    if (j >= 2) den[k - j] = -to_integer(j - 1) * spec.elementary(j);
  }
  return reduce(IntPoly(std::move(num)), IntPoly(std::move(den)));
}

RatFunc coronal_complete_multipartite_product_form(const PartitionSpec& spec) {
  IntPoly product = IntPoly::constant(1);
  for (const std::size_t part : spec.parts()) product *= IntPoly::linear_root(-to_integer(part));
  IntPoly weighted;
  for (std::size_t j = 0; j < spec.k(); ++j) {
    IntPoly others = IntPoly::constant(to_integer(spec.parts()[j]));
    for (std::size_t i = 0; i < spec.k(); ++i)
      if (i != j) others *= IntPoly::linear_root(-to_integer(spec.parts()[i]));
    weighted += others;
  }
  return reduce(weighted, product - weighted);
}

std::vector<IntPoly> path_charpoly_sequence(std::size_t n) {
  std::vector<IntPoly> f{IntPoly::constant(1)};
  if (n >= 1) f.push_back(IntPoly::x());
  for (std::size_t j = 2; j <= n; ++j) f.push_back(IntPoly::x() * f[j - 1] - f[j - 2]);
  return f;
}

RatFunc coronal_path(std::size_t n) {
  if (n == 0) throw std::invalid_argument("coronal_path: n must be positive");
  const auto f = path_charpoly_sequence(n);
  IntPoly partial;
  for (std::size_t j = 0; j < n; ++j) partial += f[j];
  IntPoly num = to_integer(n) * f[n] - Integer(2) * partial;
  return reduce(std::move(num), IntPoly::linear_root(2) * f[n]);
}

std::optional<std::vector<std::size_t>> multipartite_parts(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) return std::nullopt;
  std::vector<int> part(n, -1);
  std::vector<std::size_t> sizes;
  for (Vertex v = 0; v < n; ++v) {
    if (part[v] >= 0) continue;
    const int id = static_cast<int>(sizes.size());
    sizes.push_back(0);
    for (Vertex u = v; u < n; ++u) {
      if (u != v && g.adjacent(u, v)) continue;
      if (part[u] >= 0) return std::nullopt;
      part[u] = id;
      ++sizes.back();
    }
  }
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (g.adjacent(u, v) == (part[u] == part[v])) return std::nullopt;
  return sizes;
}

bool is_path_graph(const Graph& g) {
  if (g.order() == 0 || g.size() + 1 != g.order() || !g.is_connected()) return false;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) > 2) return false;
  return true;
}

std::optional<RatFunc> closed_form_coronal(const Graph& h, Family family) {
  if (h.empty()) return std::nullopt;
  switch (family) {
    case Family::regular:
      if (!h.is_regular()) return std::nullopt;
      return coronal_regular(h.order(), h.degree(0));
    case Family::complete_bipartite: {
      const auto parts = multipartite_parts(h);
      if (!parts || parts->size() != 2) return std::nullopt;
      return coronal_complete_bipartite((*parts)[0], (*parts)[1]);
    }
    case Family::complete_multipartite: {
      auto parts = multipartite_parts(h);
      if (!parts) return std::nullopt;
      return coronal_complete_multipartite(PartitionSpec(std::move(*parts)));
    }
    case Family::path:
      if (!is_path_graph(h)) return std::nullopt;
      return coronal_path(h.order());
  }
  return std::nullopt;
}

std::optional<RatFunc> closed_form_coronal(const Graph& h) {
  for (Family f : {Family::regular, Family::complete_bipartite, Family::complete_multipartite, Family::path})
    if (auto chi = closed_form_coronal(h, f)) return chi;
  return std::nullopt;
}

}  // namespace coronae
