#pragma once

#include <vector>

#include "lur/errors.hpp"
#include "lur/multipoly.hpp"

namespace lur {

// Reduced basis in ascending leading-monomial order; every generator is
// primitive-normalized (integer, content 1, positive leading coefficient)
// and fully reduced against the others. Unique for a given ideal and
// variable order.
struct GroebnerBasis {
  std::size_t nvars = 0;
  std::vector<MultiPoly> generators;

  bool is_trivial() const {
    return generators.size() == 1 && generators.front().is_constant() &&
           !generators.front().is_zero();
  }
};

// Buchberger completion with the coprime-lcm and chain pair criteria.
// Zero input polynomials are ignored; an empty or all-zero input yields the
// zero ideal (no generators).
GroebnerBasis buchberger(const std::vector<MultiPoly>& input);

// Remainder of f on full division by the basis: no term of the result is
// divisible by any leading monomial. Linear in f and idempotent.
MultiPoly normal_form(const MultiPoly& f, const GroebnerBasis& gb);

// Standard monomials (those outside the leading-term ideal), ascending.
// Always contains 1 at index 0.
struct MonomialBasis {
  std::vector<Monomial> monomials;

  std::size_t size() const { return monomials.size(); }
};

// Throws TrivialIdealError when the basis is {constant}, and
// NotZeroDimensionalError when some variable has no pure-power leading
// monomial (infinite staircase).
MonomialBasis monomial_basis(const GroebnerBasis& gb);

}  // namespace lur
