#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "lur/interval.hpp"
#include "lur/rational.hpp"

namespace lur {

// Dense univariate polynomial over the rationals. Coefficient k multiplies
// x^k; the vector never ends in a zero, and the zero polynomial is the empty
// vector (degree -1).
class UniPoly {
 public:
  UniPoly() = default;
  static UniPoly zero() { return UniPoly(); }
  static UniPoly constant(Rational c);
  static UniPoly identity();  // x
  static UniPoly from_coeffs(std::vector<Rational> coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Rational& operator[](std::size_t k) const { return c_[k]; }
  const Rational& leading() const { return c_.back(); }
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational eval(const Rational& x) const;
  ComplexPoint eval(const ComplexPoint& z) const;

  UniPoly derivative() const;

  UniPoly operator-() const;
  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly operator*(const Rational& s) const;

  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  // Quotient and remainder over Q; o must be nonzero.
  std::pair<UniPoly, UniPoly> divrem(const UniPoly& o) const;
  // Division known to be exact; throws std::domain_error on nonzero remainder.
  UniPoly exact_div(const UniPoly& o) const;
  bool divisible_by(const UniPoly& o) const;

  // p scaled by a positive rational so coefficients are integers with
  // overall gcd 1. Keeps the sign of the leading coefficient.
  std::vector<mpz_class> integer_scaled() const;

  // Largest coefficient bit length after integer scaling.
  std::size_t coeff_bit_length() const;

  std::string str(const std::string& var) const;

 private:
  std::vector<Rational> c_;
  void trim();
};

// Same roots, integer coefficients, content 1, positive leading coefficient.
// The canonical generator scaling used for printed eliminants.
UniPoly primitive_normalize(const UniPoly& p);

// Primitive positive-leading gcd via a primitive pseudo-remainder sequence.
UniPoly poly_gcd(const UniPoly& a, const UniPoly& b);

// p / gcd(p, p'), primitive-normalized: same distinct roots, all simple.
UniPoly squarefree_part(const UniPoly& p);

// Yun decomposition: list of (factor, multiplicity) with factors squarefree,
// pairwise coprime, primitive-normalized, and prod factor^mult = p up to a
// rational constant. Multiplicities strictly increasing.
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p);

std::ostream& operator<<(std::ostream& os, const UniPoly& p);

}  // namespace lur
