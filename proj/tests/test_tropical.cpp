#include <catch_amalgamated.hpp>

#include <random>

#include "tropscheme/linear_space.hpp"
#include "tropscheme/tropical.hpp"

using namespace tropscheme;

namespace {
TropicalValue q(long n, long d = 1) { return TropicalValue(Rational(n, d)); }
const TropicalValue kNeg = TropicalValue::zero();
}  // namespace

TEST_CASE("trop_add takes the maximum") {
  CHECK(trop_add(q(3), q(5)) == q(5));
  CHECK(trop_add(kNeg, q(7)) == q(7));
  CHECK(trop_add(q(2), q(2)) == q(2));
}

TEST_CASE("trop_mul adds rationals and absorbs -inf") {
  CHECK(trop_mul(q(3), q(5)) == q(8));
  CHECK(trop_mul(kNeg, q(5)).is_zero());
  CHECK(trop_mul(q(0), q(9)) == q(9));
}

TEST_CASE("trop_leq is the canonical order") {
  for (long x : {-4L, 0L, 9L}) CHECK(trop_leq(kNeg, q(x)));
  CHECK(trop_leq(q(3), q(5)));
  CHECK_FALSE(trop_leq(q(5), q(3)));
}

TEST_CASE("to_boolean collapses finite values") {
  CHECK(to_boolean(kNeg) == BooleanValue::zero());
  CHECK(to_boolean(q(17, 3)) == BooleanValue::one());
  CHECK(to_boolean(q(0)) == BooleanValue::one());
}

TEST_CASE("semiring axioms hold exactly on random samples") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-20, 20), den(1, 6), coin(0, 5);
  auto draw = [&] { return coin(rng) == 0 ? kNeg : q(num(rng), den(rng)); };
  for (int i = 0; i < 2000; ++i) {
    TropicalValue a = draw(), b = draw(), c = draw();
    CHECK(a + (b + c) == (a + b) + c);
    CHECK(a * (b * c) == (a * b) * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + a == a);
    CHECK((trop_leq(a, b) || trop_leq(b, a)));
    CHECK(a + b == std::max(a, b));
    CHECK(to_boolean(a + b) == to_boolean(a) + to_boolean(b));
    CHECK(to_boolean(a * b) == to_boolean(a) * to_boolean(b));
    if (a.is_finite()) CHECK(a * a.inverse() == TropicalValue::one());
  }
}

TEST_CASE("parse and print tropical literals") {
  CHECK(parse_tropical("-inf").is_zero());
  CHECK(parse_tropical("3/6") == q(1, 2));
  CHECK(q(-7, 2).to_string() == "-7/2");
  CHECK_THROWS_AS(parse_tropical("abc"), std::invalid_argument);
}

TEST_CASE("circuits of a small plane") {
  Matrix<Rational> rows{{1, 1, 0}, {0, 1, 1}};
  auto cs = circuits(rows, 3);
  CHECK(cs.size() == 3);
}
