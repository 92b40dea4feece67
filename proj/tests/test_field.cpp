#include <catch_amalgamated.hpp>

#include <random>

#include "helpers.hpp"

using namespace tropscheme;
using namespace testing_helpers;

TEST_CASE("trivial valuation") {
  auto v = Valuation::trivial();
  CHECK(valuate(v, Rational(5)) == q(0));
  CHECK(valuate(v, Rational(0)).is_zero());
  CHECK(valuate(v, Rational(-7, 3)) == q(0));
}

TEST_CASE("p-adic valuation uses the max-plus sign") {
  auto v = Valuation::padic(2);
  CHECK(valuate(v, Rational(12)) == q(-2));
  CHECK(valuate(v, Rational(1, 2)) == q(1));
  CHECK(valuate(v, Rational(3)) == q(0));
  CHECK(valuate(Valuation::padic(5), Rational(50, 3)) == q(-2));
  CHECK_THROWS_AS(Valuation::padic(6), std::invalid_argument);
}

TEST_CASE("t-adic valuation reads lowest exponents") {
  auto v = Valuation::tadic();
  CHECK(valuate(v, RF("t^2 + t^3")) == q(-2));
  CHECK(valuate(v, RF("t")) == q(-1));
  CHECK(valuate(v, RF("1 - t")) == q(0));
  CHECK(valuate(v, RF("1/t")) == q(1));
  CHECK(valuate(v, RF("(t + t^2)/(t^3 + 5)")) == q(-1));
  CHECK(valuate(v, RF("0")).is_zero());
}

TEST_CASE("boolean target collapses values") {
  auto v = Valuation::tadic().to_boolean_target();
  CHECK(valuate(v, RF("t^4")) == q(0));
  CHECK(valuate(v, RF("0")).is_zero());
  CHECK(Valuation::padic(3).to_boolean_target().name() == "3-adic->B");
}

TEST_CASE("rational functions stay reduced") {
  RationalFunction a = RF("(t^2 - 1)/(2*t - 2)");
  CHECK(a == RF("1/2*t + 1/2"));
  CHECK(a.denominator() == UniPoly(Rational(1)));
  RationalFunction b = RF("1/(t + 1)");
  CHECK(b * RF("t + 1") == RationalFunction(1L));
  CHECK(b - b == RationalFunction());
  CHECK_THROWS_AS(RF("1") / RF("0"), std::domain_error);
}

TEST_CASE("valuation axiom checks on the worked samples") {
  CHECK(check_valuation_axioms<Rational>(Valuation::trivial(), {{2, 3}, {-1, 1}}));
  CHECK(check_valuation_axioms<Rational>(Valuation::padic(2), {{1, 1}}));
  CHECK(valuate(Valuation::padic(2), Rational(2)) == q(-1));
  CHECK(check_valuation_axioms<RationalFunction>(Valuation::tadic(), {{RF("t"), RF("-t")}}));
}

namespace {

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-200, 200), den(1, 60);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

RationalFunction random_rf(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> deg(0, 3), coin(0, 2);
  auto poly = [&] {
    std::vector<Rational> c(deg(rng) + 1);
    for (auto& x : c) x = coin(rng) == 0 ? Rational(0) : random_rational(rng);
    return UniPoly(c);
  };
  UniPoly den = poly();
  if (den.is_zero()) den = UniPoly(Rational(1));
  return RationalFunction(poly(), den);
}

}  // namespace

TEST_CASE("valuation axioms hold on 1000 random pairs") {
  std::mt19937_64 rng(2024);
  std::vector<std::pair<Rational, Rational>> qs;
  std::vector<std::pair<RationalFunction, RationalFunction>> fs;
  for (int i = 0; i < 1000; ++i) {
    Rational a = random_rational(rng), b = random_rational(rng);
    if (i % 7 == 0) b = Rational(-a);
    if (i % 11 == 0) b = Rational(a * 4);
    qs.emplace_back(a, b);
    RationalFunction f = random_rf(rng), g = random_rf(rng);
    if (i % 5 == 0) g = -f;
    fs.emplace_back(f, g);
  }
  CHECK(check_valuation_axioms(Valuation::trivial(), qs));
  CHECK(check_valuation_axioms(Valuation::padic(2), qs));
  CHECK(check_valuation_axioms(Valuation::padic(3), qs));
  CHECK(check_valuation_axioms(Valuation::tadic(), fs));
  CHECK(check_valuation_axioms(Valuation::trivial(), fs));

  for (const auto& [a, b] : fs) {
    TropicalValue va = valuate(Valuation::tadic(), a), vb = valuate(Valuation::tadic(), b);
    if (va < vb) CHECK(valuate(Valuation::tadic(), RationalFunction(a + b)) == vb);
    if (va.is_zero()) CHECK(a.is_zero());
  }
}
