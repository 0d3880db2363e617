#include "lur/multipoly.hpp"

#include <random>
#include <vector>

#include "doctest.h"
#include "lur/monomial.hpp"
#include "support.hpp"

using namespace lur;

namespace {

Monomial mono(std::vector<std::uint32_t> e) { return Monomial(std::move(e)); }

MultiPoly random_multipoly(std::mt19937& rng, std::size_t nvars, int maxdeg,
                           int terms) {
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::uniform_int_distribution<std::uint32_t> expo(0, maxdeg);
  MultiPoly p(nvars);
  for (int t = 0; t < terms; ++t) {
    std::vector<std::uint32_t> e(nvars);
    for (auto& x : e) x = expo(rng);
    int c = coeff(rng);
    if (c != 0) p = p + MultiPoly::term(Monomial(std::move(e)), Rational(c));
  }
  return p;
}

}  // namespace

TEST_CASE("grevlex orders degree first, then reverse lex") {
  // ascending chain of the degree-2 monomials in three variables
  std::vector<Monomial> chain{
      mono({2, 0, 0}), mono({1, 1, 0}), mono({0, 2, 0}),
      mono({1, 0, 1}), mono({0, 1, 1}), mono({0, 0, 2})};
  for (std::size_t i = 0; i < chain.size(); ++i)
    for (std::size_t j = 0; j < chain.size(); ++j) {
      int c = grevlex_cmp(chain[i], chain[j]);
      CHECK(c == (i < j ? -1 : i > j ? 1 : 0));
    }
  // degree dominates everything else
  CHECK(grevlex_cmp(mono({0, 0, 1}), mono({3, 0, 0})) < 0);
  CHECK(grevlex_cmp(mono({5, 0, 0}), mono({0, 0, 4})) > 0);
}

TEST_CASE("monomial divisibility and quotients") {
  Monomial a = mono({2, 1, 0});
  Monomial b = mono({1, 0, 0});
  CHECK(b.divides(a));
  CHECK(!a.divides(b));
  CHECK(a.div(b) == mono({1, 1, 0}));
  CHECK(a.lcm(mono({0, 2, 1})) == mono({2, 2, 1}));
  CHECK((a * b) == mono({3, 1, 0}));
  CHECK(mono({0, 0, 0}).is_one());
  std::size_t which = 99;
  CHECK(mono({0, 3, 0}).is_pure_power(&which));
  CHECK(which == 1);
  CHECK(!mono({1, 1, 0}).is_pure_power());
  CHECK(!mono({0, 0, 0}).is_pure_power());
}

TEST_CASE("ring identities on random sparse polynomials") {
  std::mt19937 rng(79);
  for (int i = 0; i < 40; ++i) {
    MultiPoly a = random_multipoly(rng, 3, 3, 4);
    MultiPoly b = random_multipoly(rng, 3, 3, 4);
    MultiPoly c = random_multipoly(rng, 3, 3, 4);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) * (a + b) == a * a + a * b * Rational(2) + b * b);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  std::mt19937 rng(83);
  for (int i = 0; i < 30; ++i) {
    MultiPoly a = random_multipoly(rng, 2, 3, 4);
    MultiPoly b = random_multipoly(rng, 2, 3, 4);
    std::vector<Rational> pt{testing::random_rational(rng, 5, 3),
                             testing::random_rational(rng, 5, 3)};
    CHECK((a * b).eval(pt) == a.eval(pt) * b.eval(pt));
    CHECK((a + b).eval(pt) == a.eval(pt) + b.eval(pt));
  }
}

TEST_CASE("leading term follows the grevlex order") {
  MultiPoly p(3);
  p.set_coeff(mono({1, 1, 0}), Rational(2));   // xy
  p.set_coeff(mono({0, 0, 1}), Rational(-1));  // z
  p.set_coeff(mono({3, 0, 0}), Rational(5));   // x^3
  CHECK(p.leading_monomial() == mono({3, 0, 0}));
  CHECK(p.leading_coeff() == Rational(5));
  p.set_coeff(mono({3, 0, 0}), Rational(0));  // deleting the lead re-sorts
  CHECK(p.leading_monomial() == mono({1, 1, 0}));
}

TEST_CASE("add_scaled matches explicit arithmetic") {
  std::mt19937 rng(89);
  for (int i = 0; i < 30; ++i) {
    MultiPoly f = random_multipoly(rng, 3, 3, 4);
    MultiPoly g = random_multipoly(rng, 3, 2, 3);
    Rational c = testing::random_rational(rng, 7, 4);
    Monomial m = mono({1, 0, 2});
    MultiPoly expect = f + MultiPoly::term(m, c) * g;
    MultiPoly got = f;
    got.add_scaled(g, c, m);
    CHECK(got == expect);
  }
}

TEST_CASE("interval evaluation contains point evaluations") {
  std::mt19937 rng(97);
  for (int i = 0; i < 25; ++i) {
    MultiPoly p = random_multipoly(rng, 2, 3, 5);
    // a fat box per variable and rational sample points inside
    std::vector<ComplexInterval> boxes;
    std::vector<std::vector<Rational>> res, ims;
    for (int v = 0; v < 2; ++v) {
      Rational a = testing::random_rational(rng, 4, 4);
      Rational w(1, 3);
      Rational c = testing::random_rational(rng, 2, 4);
      boxes.push_back({{a, a + w}, {c, c + w}});
      res.push_back({a, a + w, a + w / 2});
      ims.push_back({c, c + w, c + w / 3});
    }
    ComplexInterval enc = eval_interval(p, boxes);
    for (const Rational& x : res[0])
      for (const Rational& xi : ims[0])
        for (const Rational& y : res[1])
          for (const Rational& yi : ims[1]) {
            // exact value via degenerate-box evaluation
            std::vector<ComplexInterval> pt{{{x, x}, {xi, xi}},
                                            {{y, y}, {yi, yi}}};
            ComplexInterval v = eval_interval(p, pt);
            CHECK(v.re.is_point());
            CHECK(v.im.is_point());
            CHECK(enc.re.contains(v.re.lo));
            CHECK(enc.im.contains(v.im.lo));
          }
  }
}

TEST_CASE("degenerate real boxes evaluate to the rational value") {
  std::mt19937 rng(101);
  for (int i = 0; i < 25; ++i) {
    MultiPoly p = random_multipoly(rng, 3, 3, 5);
    std::vector<Rational> pt{testing::random_rational(rng, 5, 3),
                             testing::random_rational(rng, 5, 3),
                             testing::random_rational(rng, 5, 3)};
    std::vector<ComplexInterval> boxes;
    for (const Rational& x : pt)
      boxes.push_back({{x, x}, {Rational(0), Rational(0)}});
    ComplexInterval v = eval_interval(p, boxes);
    CHECK(v.re.is_point());
    CHECK(v.re.lo == p.eval(pt));
    CHECK(v.im.is_point());
    CHECK(v.im.lo == Rational(0));
  }
}

TEST_CASE("primitive_normalize on multivariate input") {
  MultiPoly p(2);
  p.set_coeff(mono({1, 0}), Rational(4, 6));
  p.set_coeff(mono({0, 1}), Rational(-2, 3));
  MultiPoly n = primitive_normalize(p);
  // leading monomial is y (grevlex: x < y); its coefficient turns positive
  CHECK(n.coeff(mono({0, 1})) == Rational(1));
  CHECK(n.coeff(mono({1, 0})) == Rational(-1));
  CHECK(primitive_normalize(p * Rational(-5, 7)) == n);
}

TEST_CASE("str uses declared names") {
  MultiPoly p(2);
  p.set_coeff(mono({2, 0}), Rational(1));
  p.set_coeff(mono({0, 1}), Rational(-3));
  CHECK(p.str({"x", "y"}) == "x^2 - 3*y");
}
