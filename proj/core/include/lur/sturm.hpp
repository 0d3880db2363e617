#pragma once

#include <gmpxx.h>

#include <vector>

#include "lur/interval.hpp"
#include "lur/rational.hpp"
#include "lur/unipoly.hpp"

namespace lur {

// Dense integer polynomial, c[k]*x^k, no trailing zero, empty = 0. The
// subdivision hot path works on these: a sign at a rational a/b is an
// integer Horner sum, no mpq churn.
using IntPoly = std::vector<mpz_class>;

IntPoly ip_from(const UniPoly& p);  // positive scaling, sign preserved
UniPoly ip_to_unipoly(const IntPoly& p);
IntPoly ip_derivative(const IntPoly& p);
IntPoly ip_primitive(IntPoly p);  // divide by content, keep signs
int ip_sign_at(const IntPoly& p, const Rational& x);
bool ip_is_zero(const IntPoly& p);

// Sturm sequence of p: p, p', then negated remainders, each member scaled
// by a positive constant only, so sign variation counts are those of the
// exact rational chain.
class SturmChain {
 public:
  explicit SturmChain(IntPoly p);

  int variations_at(const Rational& x) const;
  // distinct real roots in (a, b]; requires p(a) != 0 and p(b) != 0, which
  // makes it the open-interval count as well
  int count(const Rational& a, const Rational& b) const;
  const IntPoly& poly() const { return seq_.front(); }

 private:
  std::vector<IntPoly> seq_;
};

// Real-root isolation and refinement for one fixed polynomial. Intervals
// returned are sorted, have pairwise positive gaps, carry exactly one
// distinct root each, and have non-root endpoints except for degenerate
// intervals marking exact rational roots.
class RealRootIsolator {
 public:
  explicit RealRootIsolator(IntPoly p);  // p nonzero

  std::vector<RealInterval> isolate(const Rational& lo,
                                    const Rational& hi) const;
  // interval holds exactly one distinct root with non-root endpoints
  RealInterval refine(RealInterval iv, const Rational& width) const;
  // shrink until hi < limit resp. lo > limit while keeping the root
  RealInterval shrink_below(RealInterval iv, const Rational& limit) const;
  RealInterval shrink_above(RealInterval iv, const Rational& limit) const;

  int sign_at(const Rational& x) const { return ip_sign_at(p_, x); }
  // distinct roots in the open interval; non-root endpoints required
  int count_open(const Rational& a, const Rational& b) const;

 private:
  IntPoly p_;
  int deg_;
  SturmChain chain_;

  // a point in (a, b) that is not a root; tries the midpoint first
  Rational pick_nonroot(const Rational& a, const Rational& b) const;
  RealInterval bisect_step(const RealInterval& iv) const;
};

}  // namespace lur
