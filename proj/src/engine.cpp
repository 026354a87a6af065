#include "coronae/engine.hpp"

#include <cstdint>
#include <string>
#include <unordered_map>

#include "coronae/errors.hpp"
#include "coronae/linalg.hpp"

namespace coronae {

IntPoly char_poly(const Graph& g) { return char_poly(IntMatrix::adjacency(g)); }

namespace {

void require_nonempty(const Graph& h, const char* what) {
  if (h.empty()) throw std::invalid_argument(std::string(what) + ": graph must have at least one vertex");
}

/// B − u wᵀ for integer vectors u, w; the rank-one shift behind both the
/// all-ones and the near-regular cofactor sums.
IntMatrix rank_one_shift(const Graph& h, const std::vector<long>& u) {
  IntMatrix c = IntMatrix::adjacency(h);
  const std::size_t n = h.order();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c(i, j) -= u[i];
  return c;
}

}  // namespace

IntPoly adjugate_sum(const Graph& h) {
  require_nonempty(h, "adjugate_sum");
  const std::vector<long> ones(h.order(), 1);
  return char_poly(rank_one_shift(h, ones)) - char_poly(h);
}

Coronal make_coronal(IntPoly chi_tilde, IntPoly f_h) {
  Coronal c;
  c.chi = reduce(chi_tilde, f_h);
  c.g = exact_div(f_h, c.chi.den());
  c.d = c.chi.den().degree();
  c.chi_tilde = std::move(chi_tilde);
  c.f_h = std::move(f_h);
  return c;
}

void check_coronal(const Coronal& c, std::size_t n) {
  const Integer lead(static_cast<unsigned long>(n));
  const int deg = static_cast<int>(n);
  auto fail = [](const std::string& what) { throw InvariantError("coronal bookkeeping: " + what); };
  if (c.f_h.degree() != deg || !c.f_h.is_monic()) fail("f_H is not monic of degree n");
  if (c.chi_tilde.degree() != deg - 1 || c.chi_tilde.leading() != lead)
    fail("chi_tilde must have degree n-1 and leading coefficient n");
  if (!c.chi.den().is_monic() || c.chi.den().degree() != c.d) fail("reduced denominator is not monic of degree d");
  if (c.chi.num().degree() != c.d - 1 || c.chi.num().leading() != lead)
    fail("reduced numerator must have degree d-1 and leading coefficient n");
  if (c.g * c.chi.den() != c.f_h) fail("f_H != g * den(chi)");
  if (c.g.degree() != deg - c.d) fail("deg g != n - d");
  if (c.chi.num() * c.g != c.chi_tilde) fail("chi_tilde != num(chi) * g");
}

Coronal coronal(const Graph& h) {
  require_nonempty(h, "coronal");
  IntPoly f_h = char_poly(h);
  const std::vector<long> ones(h.order(), 1);
  IntPoly chi_tilde = char_poly(rank_one_shift(h, ones)) - f_h;
  return make_coronal(std::move(chi_tilde), std::move(f_h));
}

namespace {

/// Depth-first enumeration of simple paths with memoised f_{H−P}.
class PathDeletion {
 public:
  PathDeletion(const Graph& h, const SchwenkOptions& opts) : h_(h), budget_(opts.path_budget) {
    if (h.order() > 63) throw ResourceError("Schwenk cofactors support at most 63 vertices");
    full_ = (std::uint64_t{1} << h.order()) - 1;
  }

  /// Σ over paths starting at `start` (and ending at `only_end` when given) of f_{H−P}.
  IntPoly sum_from(Vertex start, const Vertex* only_end) {
    IntPoly total;
    walk(start, std::uint64_t{1} << start, only_end, total);
    return total;
  }

 private:
  void walk(Vertex at, std::uint64_t used, const Vertex* only_end, IntPoly& total) {
    if (++visited_ > budget_)
      throw ResourceError("Schwenk path enumeration exceeded budget of " + std::to_string(budget_) + " paths");
    if (only_end == nullptr || *only_end == at) total += remainder_poly(used);
    if (only_end != nullptr && *only_end == at) return;
    for (Vertex next = 0; next < h_.order(); ++next) {
      const std::uint64_t bit = std::uint64_t{1} << next;
      if ((used & bit) == 0 && h_.adjacent(at, next)) walk(next, used | bit, only_end, total);
    }
  }

  const IntPoly& remainder_poly(std::uint64_t used) {
    auto it = memo_.find(used);
    if (it != memo_.end()) return it->second;
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < h_.order(); ++v)
      if (((full_ & ~used) >> v) & 1u) keep.push_back(v);
    return memo_.emplace(used, char_poly(h_.induced(keep))).first->second;
  }

  const Graph& h_;
  std::size_t budget_;
  std::size_t visited_ = 0;
  std::uint64_t full_ = 0;
  std::unordered_map<std::uint64_t, IntPoly> memo_;
};

}  // namespace

IntPoly schwenk_adjugate_entry(const Graph& h, Vertex i, Vertex j, const SchwenkOptions& opts) {
  if (i >= h.order() || j >= h.order()) throw std::out_of_range("schwenk_adjugate_entry: vertex out of range");
  PathDeletion paths(h, opts);
  return paths.sum_from(i, &j);
}

Coronal coronal_via_schwenk(const Graph& h, const SchwenkOptions& opts) {
  require_nonempty(h, "coronal_via_schwenk");
  PathDeletion paths(h, opts);
  IntPoly chi_tilde;
  for (Vertex i = 0; i < h.order(); ++i) chi_tilde += paths.sum_from(i, nullptr);
  return make_coronal(std::move(chi_tilde), char_poly(h));
}

Coronal coronal_near_regular(const Graph& h, long r) {
  require_nonempty(h, "coronal_near_regular");
  const std::size_t n = h.order();
  std::vector<long> v(n);
  for (Vertex i = 0; i < n; ++i) v[i] = r - static_cast<long>(h.degree(i));
  const IntPoly f_h = char_poly(h);
  const IntPoly weighted = char_poly(rank_one_shift(h, v)) - f_h;
  IntPoly numerator = Integer(static_cast<unsigned long>(n)) * f_h - weighted;
  IntPoly denominator = IntPoly::linear_root(Integer(r)) * f_h;
  Coronal c;
  c.chi = reduce(std::move(numerator), std::move(denominator));
  try {
    c.g = exact_div(f_h, c.chi.den());
  } catch (const NotDivisibleError&) {
    throw InvariantError("near-regular coronal has a pole outside the spectrum of H");
  }
  c.d = c.chi.den().degree();
  c.chi_tilde = c.chi.num() * c.g;
  c.f_h = f_h;
  return c;
}

}  // namespace coronae
