#pragma once

// Shared fixtures for the test binaries: seeded generators for random
// polynomials and systems, and small exact helpers the assertions reuse.

#include <random>
#include <vector>

#include "lur/interval.hpp"
#include "lur/lur.hpp"
#include "lur/monomial.hpp"
#include "lur/multipoly.hpp"
#include "lur/rational.hpp"
#include "lur/unipoly.hpp"

namespace lur::testing {

inline UniPoly poly_from_roots(const std::vector<Rational>& roots) {
  UniPoly p = UniPoly::constant(Rational(1));
  for (const Rational& r : roots)
    p = p * UniPoly::from_coeffs({-r, Rational(1)});
  return p;
}

// x^2 - 2 a x + (a^2 + b^2), the real quadratic with roots a +- b i
inline UniPoly conjugate_pair_factor(const Rational& a, const Rational& b) {
  return UniPoly::from_coeffs({a * a + b * b, Rational(-2) * a, Rational(1)});
}

inline UniPoly random_int_poly(std::mt19937& rng, int deg, int coeff_range) {
  std::uniform_int_distribution<int> coeff(-coeff_range, coeff_range);
  std::vector<Rational> c(deg + 1);
  for (int k = 0; k < deg; ++k) c[k] = Rational(coeff(rng));
  int lead = 0;
  while (lead == 0) lead = coeff(rng);
  c[deg] = Rational(lead);
  return UniPoly::from_coeffs(std::move(c));
}

inline Rational random_rational(std::mt19937& rng, int num_range,
                                int den_max) {
  std::uniform_int_distribution<int> num(-num_range, num_range);
  std::uniform_int_distribution<int> den(1, den_max);
  return Rational(num(rng), den(rng));
}

// One defining polynomial per variable: x_k^{d_k} plus random terms of
// lower total degree. The pure top powers make the leading-term staircase
// finite, so the system is zero-dimensional by construction, with at most
// prod d_k solutions.
inline std::vector<MultiPoly> random_zero_dim_system(std::mt19937& rng,
                                                     std::size_t nvars,
                                                     int maxdeg,
                                                     int coeff_range) {
  std::uniform_int_distribution<int> degree(1, maxdeg);
  std::uniform_int_distribution<int> coeff(-coeff_range, coeff_range);
  std::uniform_int_distribution<int> nterms(1, 4);
  std::vector<MultiPoly> sys;
  for (std::size_t k = 0; k < nvars; ++k) {
    int d = degree(rng);
    MultiPoly p = MultiPoly::term(
        Monomial::var(nvars, k, static_cast<std::uint32_t>(d)), Rational(1));
    int extra = nterms(rng);
    for (int t = 0; t < extra; ++t) {
      // a random monomial of total degree < d
      Monomial m(nvars);
      int budget = d - 1;
      for (std::size_t v = 0; v < nvars && budget > 0; ++v) {
        std::uniform_int_distribution<int> e(0, budget);
        int ev = e(rng);
        if (ev > 0) m = m * Monomial::var(nvars, v, ev);
        budget -= ev;
      }
      int c = coeff(rng);
      if (c != 0) p = p + MultiPoly::term(m, Rational(c));
    }
    sys.push_back(p);
  }
  return sys;
}

// interval sum s_1 b_1 + ... over the first `levels` coordinates; encloses
// the value of the level linear form on the recovered box
inline ComplexInterval value_box(const LurResult& res, const RootBox& rb,
                                 std::size_t levels) {
  ComplexInterval acc({Rational(0), Rational(0)}, {Rational(0), Rational(0)});
  for (std::size_t j = 0; j < levels; ++j) {
    const Rational& s = res.prefixes[j];
    ComplexInterval scaled({min(s * rb.coords[j].re.lo, s * rb.coords[j].re.hi),
                            max(s * rb.coords[j].re.lo, s * rb.coords[j].re.hi)},
                           {min(s * rb.coords[j].im.lo, s * rb.coords[j].im.hi),
                            max(s * rb.coords[j].im.lo, s * rb.coords[j].im.hi)});
    acc = acc + scaled;
  }
  return acc;
}

}  // namespace lur::testing
