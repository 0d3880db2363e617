#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "lur/interval.hpp"
#include "lur/monomial.hpp"
#include "lur/rational.hpp"

namespace lur {

// Sparse multivariate polynomial over Q, terms kept sorted by the grevlex
// order so the leading term is the last map entry. Zero coefficients are
// never stored.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Rational, GrevlexLess>;

  explicit MultiPoly(std::size_t nvars = 0) : nvars_(nvars) {}
  static MultiPoly constant(std::size_t nvars, Rational c);
  static MultiPoly var(std::size_t nvars, std::size_t k);
  static MultiPoly term(Monomial m, Rational c);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  const Monomial& leading_monomial() const;
  const Rational& leading_coeff() const;

  void set_coeff(const Monomial& m, const Rational& c);
  Rational coeff(const Monomial& m) const;

  MultiPoly operator-() const;
  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator*(const Rational& s) const;

  // this += c * m * g; the inner loop of polynomial reduction.
  void add_scaled(const MultiPoly& g, const Rational& c, const Monomial& m);

  Rational eval(const std::vector<Rational>& point) const;

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

  std::string str(const std::vector<std::string>& names) const;

 private:
  std::size_t nvars_;
  TermMap terms_;
};

// Interval extension by Horner recursion on the highest variable. The result
// encloses p(z) for every z in the box product; a product of degenerate
// boxes evaluates exactly.
ComplexInterval eval_interval(const MultiPoly& p,
                              const std::vector<ComplexInterval>& boxes);

// Integer coefficients, content 1, positive leading coefficient.
MultiPoly primitive_normalize(const MultiPoly& p);

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

}  // namespace lur
