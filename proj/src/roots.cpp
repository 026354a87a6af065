#include "coronae/roots.hpp"

#include <algorithm>
#include <stdexcept>

#include "coronae/errors.hpp"

namespace coronae {

SturmSequence::SturmSequence(const IntPoly& squarefree) {
  if (squarefree.is_zero()) throw std::invalid_argument("SturmSequence: zero polynomial");
  seq_.push_back(squarefree);
  if (squarefree.degree() == 0) return;
  seq_.push_back(squarefree.derivative());
  while (seq_.back().degree() > 0) {
    const IntPoly& a = seq_[seq_.size() - 2];
    const IntPoly& b = seq_.back();
    // prem = lc(b)^(δ+1) · rem; flip so that the next term is a positive multiple of −rem.
    IntPoly r = pseudo_remainder(a, b);
    const int delta = a.degree() - b.degree();
    const bool flip = b.leading() < 0 && (delta + 1) % 2 == 1;
    r = flip ? r : -r;
    if (r.is_zero()) break;
    const Integer c = r.content();
    seq_.push_back(r.divided_by(c));
  }
}

int SturmSequence::variations(const Rational& x) const {
  int changes = 0;
  int last = 0;
  for (const auto& p : seq_) {
    const int s = p.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int SturmSequence::count(const Rational& a, const Rational& b) const {
  if (!(a < b)) return 0;
  return variations(a) - variations(b);
}

namespace {

Rational root_bound(const IntPoly& p) {
  // Every root satisfies |x| < 1 + max|c_i| / |lc| <= 2^(bits(max|c_i|) + 1).
  Integer top = 0;
  for (const auto& c : p.coefficients()) top = std::max<Integer>(top, abs(c));
  const auto bits = mpz_sizeinbase(top.get_mpz_t(), 2);
  Integer bound = 1;
  bound <<= static_cast<mp_bitcnt_t>(bits + 1);
  return Rational(bound);
}

/// Shrinks a count-1 interval (lo, hi] until hi − lo <= width, or until the
/// root is hit exactly.
RealRoot refine(const SturmSequence& s, Rational lo, Rational hi, const Rational& width) {
  if (s.poly().sign_at(hi) == 0) return RealRoot{hi, hi, 1};
  while (hi - lo > width) {
    Rational mid = (lo + hi) / 2;
    if (s.poly().sign_at(mid) == 0) return RealRoot{mid, mid, 1};
    if (s.count(lo, mid) == 1)
      hi = mid;
    else
      lo = mid;
  }
  return RealRoot{lo, hi, 1};
}

std::vector<RealRoot> isolate_squarefree(const SturmSequence& s, int width_log2) {
  std::vector<RealRoot> out;
  if (s.poly().degree() <= 0) return out;
  Rational width = 1;
  width /= Rational(Integer(1) << static_cast<mp_bitcnt_t>(width_log2));
  const Rational bound = root_bound(s.poly());

  struct Pending {
    Rational lo, hi;
    int count;
  };
  std::vector<Pending> stack{{-bound, bound, s.count(-bound, bound)}};
  while (!stack.empty()) {
    Pending cur = std::move(stack.back());
    stack.pop_back();
    if (cur.count == 0) continue;
    if (cur.count == 1) {
      out.push_back(refine(s, cur.lo, cur.hi, width));
      continue;
    }
    Rational mid = (cur.lo + cur.hi) / 2;
    const int left = s.count(cur.lo, mid);
    stack.push_back({mid, cur.hi, cur.count - left});
    stack.push_back({cur.lo, mid, left});
  }
  std::sort(out.begin(), out.end(), [](const RealRoot& a, const RealRoot& b) { return a.hi < b.hi; });
  return out;
}

/// Multiplicity of the root isolated by `r` in the polynomial whose Yun
/// factors have Sturm sequences `yun` (entry i belongs to multiplicity i+1).
unsigned multiplicity_in(const std::vector<SturmSequence>& yun, const RealRoot& r) {
  for (std::size_t i = 0; i < yun.size(); ++i) {
    const bool hit = r.exact() ? yun[i].poly().sign_at(r.lo) == 0 : yun[i].count(r.lo, r.hi) > 0;
    if (hit) return static_cast<unsigned>(i + 1);
  }
  return 0;
}

std::vector<SturmSequence> yun_sequences(const IntPoly& p) {
  std::vector<SturmSequence> out;
  for (const auto& s : squarefree_decomposition(p)) out.emplace_back(s);
  return out;
}

IntPoly squarefree_part(const IntPoly& p) {
  IntPoly out = IntPoly::constant(1);
  for (const auto& s : squarefree_decomposition(p)) out *= s;
  return out;
}

}  // namespace

std::vector<SharedRoot> isolate_shared_roots(std::span<const IntPoly> factors, std::span<const unsigned> weights,
                                             int width_log2) {
  if (factors.size() != weights.size()) throw std::invalid_argument("isolate_shared_roots: size mismatch");
  IntPoly product = IntPoly::constant(1);
  std::vector<std::vector<SturmSequence>> yun;
  for (const auto& f : factors) {
    if (f.is_zero()) throw std::invalid_argument("isolate_shared_roots: zero factor");
    product *= f;
    yun.push_back(yun_sequences(f));
  }
  const SturmSequence s(squarefree_part(product));
  std::vector<SharedRoot> out;
  for (auto& r : isolate_squarefree(s, width_log2)) {
    SharedRoot shared{r, {}};
    shared.root.multiplicity = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      const unsigned k = multiplicity_in(yun[i], r);
      shared.per_factor.push_back(k);
      shared.root.multiplicity += weights[i] * k;
    }
    out.push_back(std::move(shared));
  }
  return out;
}

RootIsolation isolate_real_roots(const IntPoly& p, int width_log2) {
  if (p.is_zero()) throw std::invalid_argument("isolate_real_roots: zero polynomial");
  const IntPoly factors[] = {p};
  const unsigned weights[] = {1};
  RootIsolation out;
  int real = 0;
  for (auto& shared : isolate_shared_roots(factors, weights, width_log2)) {
    real += static_cast<int>(shared.root.multiplicity);
    out.roots.push_back(std::move(shared.root));
  }
  out.nonreal = p.degree() - real;
  return out;
}

std::vector<RealRoot> isolate_spectrum(const IntPoly& p, int width_log2) {
  auto iso = isolate_real_roots(p, width_log2);
  if (iso.nonreal != 0)
    throw InvariantError("characteristic polynomial has " + std::to_string(iso.nonreal) + " non-real roots");
  return std::move(iso.roots);
}

bool contains_root(const SturmSequence& s, const RealRoot& interval, const RealRoot& root) {
  if (root.exact()) {
    const Rational& x = root.lo;
    return interval.exact() ? x == interval.lo : (interval.lo < x && x <= interval.hi);
  }
  if (interval.exact()) {
    const Rational& x = interval.lo;
    return root.lo < x && x <= root.hi && s.poly().sign_at(x) == 0;
  }
  const Rational lo = std::max(root.lo, interval.lo);
  const Rational hi = std::min(root.hi, interval.hi);
  return lo < hi && s.count(lo, hi) == 1;
}

}  // namespace coronae
