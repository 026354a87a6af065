#include <doctest.h>

#include <cmath>
#include <random>

#include "coronae/engine.hpp"
#include "coronae/errors.hpp"
#include "coronae/roots.hpp"
#include "oracle.hpp"

using namespace coronae;

namespace {

Rational max_width(const std::vector<RealRoot>& roots) {
  Rational w = 0;
  for (const auto& r : roots) w = std::max(w, Rational(r.hi - r.lo));
  return w;
}

const Rational kWidth(1, Integer(1) << 40);

}  // namespace

TEST_CASE("sturm counts") {
  const SturmSequence s(IntPoly{-4, 0, 1});
  CHECK(s.count(-3, 3) == 2);
  CHECK(s.count(-2, 2) == 1);  // (-2, 2] holds only 2
  CHECK(s.count(0, 1) == 0);
  CHECK(s.count(-10, -2) == 1);
}

TEST_CASE("exact rational roots and multiplicities") {
  const IntPoly p = IntPoly{0, 0, -4, 0, 1};  // x^2 (x-2)(x+2)
  const auto roots = isolate_spectrum(p);
  REQUIRE(roots.size() == 3);
  CHECK(roots[1].multiplicity == 2);
  CHECK(roots[0].multiplicity == 1);
  for (const auto& r : roots) CHECK(r.lo <= r.hi);
  CHECK(std::abs(roots[0].approx() + 2) < 1e-12);
  CHECK(std::abs(roots[1].approx()) < 1e-12);
  CHECK(std::abs(roots[2].approx() - 2) < 1e-12);
  CHECK(max_width(roots) <= kWidth);
}

TEST_CASE("irrational roots are bracketed tightly") {
  const auto roots = isolate_spectrum(IntPoly{-2, 0, 1});
  REQUIRE(roots.size() == 2);
  for (const auto& r : roots) {
    CHECK_FALSE(r.exact());
    CHECK(r.hi - r.lo <= kWidth);
    CHECK(IntPoly{-2, 0, 1}.sign_at(r.lo) != IntPoly{-2, 0, 1}.sign_at(r.hi));
  }
  CHECK(std::abs(roots[1].approx() - std::sqrt(2.0)) < 1e-11);
}

TEST_CASE("non-real roots are counted") {
  const auto iso = isolate_real_roots(IntPoly{1, 0, 1} * IntPoly{-1, 1});
  CHECK(iso.roots.size() == 1);
  CHECK(iso.nonreal == 2);
  CHECK_THROWS_AS((isolate_spectrum(IntPoly{1, 0, 1})), InvariantError);
}

TEST_CASE("spectra agree with a floating point eigensolver") {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = oracle::random_graph(rng, 1 + rng() % 9);
    const auto roots = isolate_spectrum(char_poly(g));
    std::vector<double> flat;
    for (const auto& r : roots)
      for (unsigned k = 0; k < r.multiplicity; ++k) flat.push_back(r.approx());
    const auto numeric = oracle::numeric_spectrum(g);
    REQUIRE(flat.size() == numeric.size());
    for (std::size_t i = 0; i < flat.size(); ++i) CHECK(std::abs(flat[i] - numeric[i]) < 1e-8);
    CHECK(max_width(roots) <= kWidth);
    for (std::size_t i = 1; i < roots.size(); ++i) CHECK(roots[i - 1].hi < roots[i].lo);
  }
}

TEST_CASE("shared roots report per-factor multiplicities") {
  const IntPoly a = IntPoly{-1, 1}.pow(2) * IntPoly{-2, 0, 1};  // (x-1)^2 (x^2-2)
  const IntPoly b = IntPoly{-1, 1} * IntPoly{3, 1};             // (x-1)(x+3)
  const std::vector<IntPoly> factors{a, b};
  const std::vector<unsigned> weights{3, 1};
  const auto shared = isolate_shared_roots(factors, weights);
  REQUIRE(shared.size() == 4);
  // Ascending: -3, -√2, 1, √2.
  CHECK(shared[0].per_factor == std::vector<unsigned>{0, 1});
  CHECK(shared[0].root.multiplicity == 1);
  CHECK(shared[2].per_factor == std::vector<unsigned>{2, 1});
  CHECK(shared[2].root.multiplicity == 7);
  CHECK(shared[3].root.multiplicity == 3);
}

TEST_CASE("contains_root") {
  const IntPoly p{-2, 0, 1};
  const SturmSequence s(p);
  const auto roots = isolate_spectrum(p);
  CHECK(contains_root(s, RealRoot{1, 2, 1}, roots[1]));
  CHECK_FALSE(contains_root(s, RealRoot{-2, 1, 1}, roots[1]));
  CHECK(contains_root(s, RealRoot{-2, 1, 1}, roots[0]));
}
