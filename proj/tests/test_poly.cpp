#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "helpers.hpp"

using namespace tropscheme;
using namespace testing_helpers;

TEST_CASE("classical polynomial arithmetic") {
  CHECK(P("(x + y) * (x - y)", kXY) == P("x^2 - y^2", kXY));
  CHECK(P("x - x", kXY).is_zero());
  CHECK(P("x^2 + x*y + y^2").to_string(kXYZ) == "x^2 + x*y + y^2");
  CHECK(P("1/2*x - 3*z").to_string(kXYZ) == "1/2*x - 3*z");
}

TEST_CASE("tropical polynomial arithmetic never cancels") {
  CHECK(TP("x + y", kXY) * TP("x + y", kXY) == TP("x^2 + x*y + y^2", kXY));
  auto three = TropPoly<TropicalValue>::monomial(Monomial::one(2), q(3));
  CHECK(three * TP("x + 0*y", kXY) == TP("3*x + 3*y", kXY));
  CHECK(TP("x + 2*x", kXY) == TP("2*x", kXY));
  CHECK(TP("(-5)*x + 0", {"x"}).to_string({"x"}) == "(-5)*x + 0");
}

TEST_CASE("monomials of a degree come largest first") {
  auto ms = monomials_of_degree(3, 2);
  REQUIRE(ms.size() == 6);
  CHECK(ms.front() == Monomial({2, 0, 0}));
  CHECK(ms.back() == Monomial({0, 0, 2}));
  CHECK(std::is_sorted(ms.rbegin(), ms.rend()));
  CHECK(count_monomials(3, 5) == 21);
  CHECK(monomials_of_degree(4, 3).size() == count_monomials(4, 3));
}

TEST_CASE("coefficient-wise valuation") {
  CHECK(tropicalize_poly(Valuation::trivial(), P("x^2 + x*y + y^2")) == TP("x^2 + x*y + y^2"));
  auto f = P<RationalFunction>("x^2 + x*y + t*y^2");
  CHECK(tropicalize_poly(Valuation::tadic(), f) == TP("x^2 + x*y + (-1)*y^2"));
  CHECK(tropicalize_poly(Valuation::padic(3), P("0")).is_zero());
  CHECK(tropicalize_poly(Valuation::padic(3), P("9*x + 1/3*y")) == TP("(-2)*x + 1*y"));
}

TEST_CASE("monomial multiples commute with valuation") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> c(-30, 30);
  auto v = Valuation::padic(2);
  for (int i = 0; i < 50; ++i) {
    Poly<Rational> g(3);
    for (const auto& m : monomials_of_degree(3, 2))
      if (long k = c(rng); k % 3 != 0) g.add_term(m, Rational(k));
    Monomial m({static_cast<unsigned>(i % 3), 1, 0});
    CHECK(tropicalize_poly(v, m * g) == m * tropicalize_poly(v, g));
  }
}

TEST_CASE("graded pieces of ideals") {
  auto p = ideal_graded_piece(std::vector{P("x + y", kXY)}, 2, 2);
  CHECK(p.rank() == 2);
  CHECK(p.row_poly(0) == P("x^2 - y^2", kXY));
  CHECK(p.row_poly(1) == P("x*y + y^2", kXY));
  CHECK(ideal_graded_piece(std::vector{P("x^2 + x*y + y^2")}, 3, 2).rank() == 1);
  CHECK(ideal_graded_piece(std::vector{P("x^2 + x*y + y^2"), P("x - z")}, 3, 0).rank() == 0);
  CHECK_THROWS_AS(ideal_graded_piece(std::vector{P("x^2 + y")}, 3, 2), std::invalid_argument);
}

TEST_CASE("classical Hilbert function") {
  std::vector f{P("x^2 + x*y + y^2")};
  CHECK(classical_hilbert(f, 3, 2) == 5);
  CHECK(classical_hilbert(f, 3, 3) == 7);
  CHECK(classical_hilbert(std::vector<Poly<Rational>>{}, 2, 3) == 4);
}

TEST_CASE("echelon form ignores generator order") {
  std::vector a{P("x^2 - y*z"), P("x*y + z^2"), P("x - y + 3*z")};
  std::vector b{a[2], a[0], a[1]};
  for (unsigned d = 0; d <= 4; ++d) CHECK(ideal_graded_piece(a, 3, d).basis_matrix == ideal_graded_piece(b, 3, d).basis_matrix);
}

TEST_CASE("hypersurface Hilbert function is C(d+n,n) - C(d-e+n,n)") {
  auto binom = [](long n, long k) -> long {
    if (k < 0 || n < k) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r.get_si();
  };
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> c(-4, 4);
  for (std::size_t n = 1; n <= 3; ++n)
    for (unsigned e = 1; e <= 3; ++e) {
      Poly<Rational> f(n + 1);
      for (const auto& m : monomials_of_degree(n + 1, e)) f.add_term(m, Rational(c(rng)));
      f.add_term(Monomial::variable(n + 1, 0, e), Rational(1));
      if (f.is_zero()) continue;
      for (unsigned d = e; d <= 8; ++d)
        CHECK(static_cast<long>(classical_hilbert(std::vector{f}, n + 1, d)) ==
              binom(d + n, n) - binom(d - e + n, n));
    }
}

TEST_CASE("homogenize and dehomogenize") {
  auto f = P("x^2 + y + 1", kXY);
  auto h = homogenize(f);
  CHECK(h == P("x^2 + y*z + z^2"));
  CHECK(dehomogenize(h) == f);
}
