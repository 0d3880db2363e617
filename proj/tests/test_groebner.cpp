#include "lur/groebner.hpp"

#include <random>
#include <vector>

#include "doctest.h"
#include "support.hpp"

using namespace lur;

namespace {

Monomial mono(std::vector<std::uint32_t> e) { return Monomial(std::move(e)); }

MultiPoly poly2(std::vector<std::pair<std::vector<std::uint32_t>, long>> t) {
  MultiPoly p(t.front().first.size());
  for (auto& [e, c] : t) p.set_coeff(Monomial(std::move(e)), Rational(c));
  return p;
}

// S-polynomial of two generators; the completion criterion says every one
// of these must reduce to zero against a true basis
MultiPoly s_poly(const MultiPoly& f, const MultiPoly& g) {
  Monomial l = f.leading_monomial().lcm(g.leading_monomial());
  MultiPoly a = MultiPoly::term(l.div(f.leading_monomial()),
                                Rational(1) / f.leading_coeff());
  MultiPoly b = MultiPoly::term(l.div(g.leading_monomial()),
                                Rational(1) / g.leading_coeff());
  return a * f - b * g;
}

}  // namespace

TEST_CASE("linear circle intersection has the textbook basis") {
  // x^2 + y^2 - 1 and x - y
  MultiPoly f = poly2({{{2, 0}, 1}, {{0, 2}, 1}, {{0, 0}, -1}});
  MultiPoly g = poly2({{{1, 0}, 1}, {{0, 1}, -1}});
  GroebnerBasis gb = buchberger({f, g});
  REQUIRE(gb.generators.size() == 2);
  // ascending by leading monomial: x - y, then 2y^2 - 1
  CHECK(gb.generators[0] == poly2({{{1, 0}, 1}, {{0, 1}, -1}}));
  CHECK(gb.generators[1] == poly2({{{0, 2}, 2}, {{0, 0}, -1}}));
  MonomialBasis basis = monomial_basis(gb);
  REQUIRE(basis.size() == 2);
  CHECK(basis.monomials[0] == mono({0, 0}));
  CHECK(basis.monomials[1] == mono({0, 1}));
}

TEST_CASE("buchberger output is a reduced basis") {
  std::mt19937 rng(103);
  for (int iter = 0; iter < 12; ++iter) {
    auto sys = testing::random_zero_dim_system(rng, 2, 3, 4);
    GroebnerBasis gb = buchberger(sys);
    REQUIRE(!gb.generators.empty());
    for (std::size_t i = 0; i < gb.generators.size(); ++i) {
      const MultiPoly& gi = gb.generators[i];
      // primitive integer coefficients, positive lead
      CHECK(gi.leading_coeff().sign() == 1);
      for (auto& [m, c] : gi.terms()) CHECK(c.is_integer());
      // ascending order of leading monomials
      if (i > 0)
        CHECK(grevlex_cmp(gb.generators[i - 1].leading_monomial(),
                          gi.leading_monomial()) < 0);
      // fully interreduced: no term divisible by another lead
      for (std::size_t j = 0; j < gb.generators.size(); ++j) {
        if (i == j) continue;
        for (auto& [m, c] : gi.terms())
          CHECK(!gb.generators[j].leading_monomial().divides(m));
      }
    }
  }
}

TEST_CASE("every s-polynomial reduces to zero") {
  std::mt19937 rng(107);
  for (int iter = 0; iter < 8; ++iter) {
    auto sys = testing::random_zero_dim_system(rng, 2, 3, 4);
    GroebnerBasis gb = buchberger(sys);
    for (std::size_t i = 0; i < gb.generators.size(); ++i)
      for (std::size_t j = i + 1; j < gb.generators.size(); ++j) {
        MultiPoly s = s_poly(gb.generators[i], gb.generators[j]);
        CHECK(normal_form(s, gb).is_zero());
      }
    // the input generates the same ideal: all inputs reduce to zero
    for (const MultiPoly& p : sys) CHECK(normal_form(p, gb).is_zero());
  }
}

TEST_CASE("normal_form is linear and idempotent") {
  std::mt19937 rng(109);
  auto sys = testing::random_zero_dim_system(rng, 3, 2, 3);
  GroebnerBasis gb = buchberger(sys);
  for (int iter = 0; iter < 15; ++iter) {
    MultiPoly a = sys[0] * testing::random_rational(rng, 5, 3) +
                  MultiPoly::term(mono({1, 1, 0}), Rational(iter + 1));
    MultiPoly b = MultiPoly::term(mono({0, 2, 1}), Rational(3));
    MultiPoly na = normal_form(a, gb);
    CHECK(normal_form(na, gb) == na);
    CHECK(normal_form(a + b, gb) == na + normal_form(b, gb));
    // no term of a normal form is reducible
    for (auto& [m, c] : na.terms())
      for (const MultiPoly& g : gb.generators)
        CHECK(!g.leading_monomial().divides(m));
  }
}

TEST_CASE("staircase dimension is the product of pure-power degrees") {
  // x^3 - 1 and y^2 - x: leads x^3 and y^2, dimension 6
  MultiPoly f = poly2({{{3, 0}, 1}, {{0, 0}, -1}});
  MultiPoly g = poly2({{{0, 2}, 1}, {{1, 0}, -1}});
  GroebnerBasis gb = buchberger({f, g});
  MonomialBasis basis = monomial_basis(gb);
  CHECK(basis.size() == 6);
  CHECK(basis.monomials[0].is_one());
}

TEST_CASE("positive-dimensional ideals are detected") {
  // a single product xy leaves both axes as solutions
  MultiPoly f = poly2({{{1, 1}, 1}});
  GroebnerBasis gb = buchberger({f});
  CHECK_THROWS_AS(monomial_basis(gb), NotZeroDimensionalError);
  // so does an ideal mentioning only one of two variables
  MultiPoly g = poly2({{{2, 0}, 1}, {{0, 0}, -2}});
  CHECK_THROWS_AS(monomial_basis(buchberger({g})), NotZeroDimensionalError);
}

TEST_CASE("inconsistent systems collapse to the unit ideal") {
  MultiPoly f = poly2({{{1, 0}, 1}, {{0, 0}, -1}});  // x - 1
  MultiPoly g = poly2({{{1, 0}, 1}, {{0, 0}, -2}});  // x - 2
  GroebnerBasis gb = buchberger({f, g});
  CHECK(gb.is_trivial());
  CHECK_THROWS_AS(monomial_basis(gb), TrivialIdealError);
}

TEST_CASE("zero polynomials are ignored") {
  MultiPoly z(2);
  MultiPoly f = poly2({{{1, 0}, 1}, {{0, 1}, 1}});
  GroebnerBasis gb = buchberger({z, f, z});
  REQUIRE(gb.generators.size() == 1);
  CHECK(gb.generators[0] == f);
  CHECK(buchberger({z, z}).generators.empty());
}

TEST_CASE("basis is invariant under generator scaling and order") {
  std::mt19937 rng(113);
  auto sys = testing::random_zero_dim_system(rng, 2, 3, 4);
  GroebnerBasis gb1 = buchberger(sys);
  std::vector<MultiPoly> shuffled{sys[1] * Rational(-3, 7), sys[0] * Rational(2)};
  GroebnerBasis gb2 = buchberger(shuffled);
  CHECK(gb1.generators == gb2.generators);
}
