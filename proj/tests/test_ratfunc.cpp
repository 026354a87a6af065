#include <doctest.h>

#include <random>

#include "coronae/ratfunc.hpp"
#include "oracle.hpp"

using namespace coronae;

namespace {

IntPoly random_monicish(std::mt19937& rng) {
  IntPoly d = oracle::random_poly(rng, 3, 4);
  d += IntPoly::monomial(1, 4);  // forces leading coefficient 1
  return d;
}

}  // namespace

TEST_CASE("reduce produces the canonical form") {
  const RatFunc r = reduce(IntPoly{-4, 0, 1} * IntPoly{8, 5}, IntPoly{-4, 0, 1} * IntPoly{-4, 0, 1});
  CHECK(r.num() == IntPoly{8, 5});
  CHECK(r.den() == IntPoly{-4, 0, 1});

  const RatFunc neg = reduce(IntPoly{1}, IntPoly{0, -1});
  CHECK(neg.num() == IntPoly{-1});
  CHECK(neg.den() == IntPoly{0, 1});

  const RatFunc zero = reduce(IntPoly{}, IntPoly{2, 3, 1});
  CHECK(zero.is_zero());
  CHECK(zero.den() == IntPoly{1});
  CHECK(zero == RatFunc());

  CHECK_THROWS_AS((reduce(IntPoly{1}, IntPoly{})), std::domain_error);
  CHECK_THROWS_AS((reduce(IntPoly{1}, IntPoly{1, 2})), std::invalid_argument);
  CHECK(reduce(IntPoly{0, 2}, IntPoly{0, 1}) == RatFunc(IntPoly{2}));
}

TEST_CASE("rendering") {
  CHECK(to_string(reduce(IntPoly{8, 5}, IntPoly{-4, 0, 1})) == "(5*x + 8)/(x^2 - 4)");
  CHECK(to_string(reduce(IntPoly{1}, IntPoly{0, 1})) == "1/x");
  CHECK(to_string(reduce(IntPoly{4}, IntPoly{-2, 1})) == "4/(x - 2)");
  CHECK(to_string(RatFunc(IntPoly{-1, 0, 1})) == "x^2 - 1");
  CHECK(to_string(RatFunc()) == "0");
  CHECK(to_string(reduce(IntPoly{1}, IntPoly{0, 1}), {"\\lambda", true}) == "\\frac{1}{\\lambda}");
}

TEST_CASE("field operations agree pointwise") {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const RatFunc a = reduce(oracle::random_poly(rng, 4), random_monicish(rng));
    const RatFunc b = reduce(oracle::random_poly(rng, 4), random_monicish(rng));
    const RatFunc sum = a + b, diff = a - b, prod = a * b;
    for (const RatFunc* r : {&a, &b, &sum, &diff, &prod}) {
      CHECK(r->den().is_monic());
      CHECK(gcd(r->num().is_zero() ? IntPoly{1} : r->num(), r->den()) == IntPoly{1});
    }
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a - a == RatFunc());
    CHECK(-(-a) == a);
    CHECK(diff + b == a);
    for (long t = -4; t <= 4; ++t) {
      if (a.den().eval(Integer(t)) == 0 || b.den().eval(Integer(t)) == 0) continue;
      auto value = [&](const RatFunc& r) {
        Rational v(r.num().eval(Integer(t)), r.den().eval(Integer(t)));
        v.canonicalize();
        return v;
      };
      const Rational va = value(a), vb = value(b);
      CHECK(value(sum) == Rational(va + vb));
      CHECK(value(prod) == Rational(va * vb));
    }
  }
}
