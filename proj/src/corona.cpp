#include "coronae/corona.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "coronae/errors.hpp"

namespace coronae {

CoronaCharPoly corona_char_poly(const Graph& g, const Graph& h, const AssemblyOptions& opts) {
  if (g.empty() || h.empty()) throw std::invalid_argument("corona_char_poly: graphs must be nonempty");
  CoronaCharPoly out;
  out.m = g.order();
  out.n = h.order();
  out.coronal = coronal(h);
  const IntPoly& p = out.coronal.chi.num();
  const IntPoly& q = out.coronal.chi.den();
  try {
    if (exact_div(out.coronal.f_h, q) != out.coronal.g) throw InvariantError("f_H != g * q");
  } catch (const NotDivisibleError&) {
    throw InvariantError("reduced coronal denominator does not divide f_H");
  }
  const IntPoly rho_num = IntPoly::x() * q - p;
  out.new_part = compose_into(char_poly(g), rho_num, q);
  out.old_part = out.coronal.g.pow(static_cast<unsigned>(out.m));
  out.total = out.old_part * out.new_part;

  const auto total_degree = static_cast<int>(out.m * (out.n + 1));
  if (out.total.degree() != total_degree || !out.total.is_monic())
    throw InvariantError("assembled corona polynomial is not monic of degree m(n+1)");
  if (opts.cross_check && out.total != char_poly(corona(g, h)))
    throw InvariantError("assembled corona polynomial differs from the direct characteristic polynomial");
  return out;
}

unsigned SpectrumReport::total_multiplicity() const {
  unsigned total = 0;
  for (const auto& r : all_roots) total += r.multiplicity;
  return total;
}

SpectrumReport decompose(const Graph& g, const Graph& h, int width_log2) {
  return decompose(g, corona_char_poly(g, h), width_log2);
}

SpectrumReport decompose(const Graph& g, const CoronaCharPoly& assembled, int width_log2) {
  SpectrumReport report;
  report.m = assembled.m;
  report.n = assembled.n;
  report.d = assembled.coronal.d;
  const auto m = static_cast<unsigned>(assembled.m);
  const IntPoly& old_factor = assembled.coronal.g;
  const IntPoly& p = assembled.coronal.chi.num();
  const IntPoly& q = assembled.coronal.chi.den();

  // The exact multisets: roots of g^m · new_part with per-factor multiplicities.
  const IntPoly factors[] = {old_factor, assembled.new_part};
  const unsigned weights[] = {m, 1};
  const auto shared = isolate_shared_roots(factors, weights, width_log2);
  unsigned found = 0;
  for (const auto& s : shared) {
    report.all_roots.push_back(s.root);
    found += s.root.multiplicity;
    if (s.per_factor[0] > 0) {
      RealRoot old = s.root;
      old.multiplicity = m * s.per_factor[0];
      report.old_roots.push_back(old);
    }
    if (s.per_factor[0] > 0 && s.per_factor[1] > 0) report.stacked.push_back(s.root);
  }
  if (found != static_cast<unsigned>(assembled.total.degree()))
    throw InvariantError("corona spectrum has non-real roots");

  // Group the new roots by μ = λ − p(λ)/q(λ), matched to the nearest eigenvalue of G.
  const auto mus = isolate_spectrum(char_poly(g), width_log2);
  for (const auto& mu : mus) report.new_root_groups.push_back({mu, {}});
  for (const auto& s : shared) {
    if (s.per_factor[1] == 0) continue;
    RealRoot r = s.root;
    r.multiplicity = s.per_factor[1];
    Rational at = (r.lo + r.hi) / 2;
    if (q.sign_at(at) == 0) at = r.hi;
    const double mu_value = Rational(at - p.eval(at) / q.eval(at)).get_d();
    std::size_t best = 0;
    double best_gap = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < mus.size(); ++i) {
      const double gap = std::abs(mus[i].approx() - mu_value);
      if (gap < best_gap) {
        best_gap = gap;
        best = i;
      }
    }
    report.new_root_groups[best].roots.push_back(r);
  }
  for (const auto& group : report.new_root_groups) {
    unsigned count = 0;
    for (const auto& r : group.roots) count += r.multiplicity;
    if (count != group.mu.multiplicity * static_cast<unsigned>(report.d + 1)) report.grouping_consistent = false;
  }
  return report;
}

}  // namespace coronae
