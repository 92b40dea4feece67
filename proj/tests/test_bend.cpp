#include <catch_amalgamated.hpp>

#include <random>

#include "helpers.hpp"

using namespace tropscheme;
using namespace testing_helpers;

namespace {

TropPoly<TropicalValue> random_trop(std::mt19937_64& rng, std::size_t nvars, unsigned deg, std::size_t max_terms) {
  std::uniform_int_distribution<long> coef(-6, 6);
  auto ms = monomials_of_degree(nvars, deg);
  std::shuffle(ms.begin(), ms.end(), rng);
  TropPoly<TropicalValue> f(nvars);
  std::size_t k = std::uniform_int_distribution<std::size_t>(1, std::min(max_terms, ms.size()))(rng);
  for (std::size_t i = 0; i < k; ++i) f.add_term(ms[i], q(coef(rng)));
  return f;
}

std::vector<TropicalValue> random_point(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long> c(-8, 8);
  std::vector<TropicalValue> p;
  for (std::size_t i = 0; i < n; ++i) p.push_back(q(c(rng), 2));
  return p;
}

}  // namespace

TEST_CASE("bend relations delete one term at a time") {
  auto f = TP("x^2 + x*y + y^2");
  auto B = bend_relations(f);
  REQUIRE(B.pairs.size() == 3);
  CHECK(B.pairs[0].first == f);
  CHECK(B.pairs[0].second == TP("x*y + y^2"));
  CHECK(B.pairs[2].second == TP("x^2 + x*y"));
  auto m = bend_relations(TP("3*x"));
  REQUIRE(m.pairs.size() == 1);
  CHECK(m.pairs[0].second.is_zero());
  CHECK_THROWS_AS(bend_relations(TropPoly<TropicalValue>(3)), std::invalid_argument);
}

TEST_CASE("tropical vanishing needs a tied maximum") {
  auto f = TP("x + y + 0", kXY);
  CHECK(tropically_vanishes(f, {q(0), q(0)}));
  CHECK(tropically_vanishes(f, {q(2), q(2)}));
  CHECK(tropically_vanishes(f, {q(-1), q(0)}));
  CHECK_FALSE(tropically_vanishes(f, {q(1), q(0)}));
  CHECK_FALSE(tropically_vanishes(f, {q(-1), q(-1)}));
  CHECK(tropically_vanishes(TP("x", kXY), {kNegInf, q(3)}));
  CHECK_THROWS_AS(tropically_vanishes(f, {q(0)}), std::invalid_argument);
}

TEST_CASE("univariate canonical forms") {
  auto c = univariate_canonical_form(TP("x^2 + 3*x + 0", {"x"}));
  CHECK(c.scalar == q(0));
  CHECK(c.roots == std::vector{q(3), q(-3)});
  auto d = univariate_canonical_form(TP("x^3 + (-1)*x^2", {"x"}));
  CHECK(d.roots == std::vector{q(-1), kNegInf, kNegInf});
  auto e = univariate_canonical_form(TP("x^2 + (-5)*x + 0", {"x"}));
  CHECK(e.roots == std::vector{q(0), q(0)});
  CHECK(e.expand() == TP("x^2 + 0*x + 0", {"x"}));
}

TEST_CASE("canonical form agrees with f as a function") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 40; ++i) {
    TropPoly<TropicalValue> f(1);
    for (unsigned k = 0; k <= 4; ++k)
      if (rng() % 3 != 0) f.add_term(Monomial::variable(1, 0, k), q(static_cast<long>(rng() % 13) - 6));
    if (f.is_zero()) continue;
    auto g = univariate_canonical_form(f).expand();
    for (int s = 0; s < 200; ++s) {
      std::vector<TropicalValue> p{q(static_cast<long>(rng() % 81) - 40, 4)};
      REQUIRE(evaluate(f, p) == evaluate(g, p));
    }
  }
}

TEST_CASE("vanishing means the point respects every bend relation") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    auto f = random_trop(rng, 3, 2, 5);
    auto p = random_point(rng, 3);
    p[2] = q(0);
    bool respects = true;
    for (const auto& [u, w] : bend_relations(f).pairs) respects = respects && evaluate(u, p) == evaluate(w, p);
    CHECK(respects == tropically_vanishes(f, p));
  }
}

TEST_CASE("recovery from bend relations") {
  auto f = TP("x^2 + 1*x*y + (-2)*y^2");
  auto g = recover_from_bend(bend_relations(f), f.support());
  CHECK(proportional(f, g));

  std::mt19937_64 rng(17);
  for (int i = 0; i < 100; ++i) {
    auto h = random_trop(rng, 3, 2, 6);
    if (h.size() < 2) continue;
    CHECK(proportional(h, recover_from_bend(bend_relations(h), h.support())));
  }
}

TEST_CASE("bend relations are invariant under scaling") {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 30; ++i) {
    auto f = random_trop(rng, 2, 3, 4);
    if (f.size() < 2) continue;
    auto g = q(5, 3) * f;
    CHECK(proportional(recover_from_bend(bend_relations(f), f.support()),
                       recover_from_bend(bend_relations(g), g.support())));
  }
}

TEST_CASE("recovery rejects relations that do not pin down f") {
  auto f = TP("x + y", kXY);
  std::vector<PolyPair<TropicalValue>> none;
  CHECK_THROWS_AS(recover_from_bend(none, f.support()), RecoveryError);
  CHECK_FALSE(proportional(f, TP("x + 1*y", kXY)));
  CHECK(proportional(f, TP("2*x + 2*y", kXY)));
}
