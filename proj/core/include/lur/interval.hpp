#pragma once

#include <iosfwd>

#include "lur/rational.hpp"

namespace lur {

// Closed interval [lo, hi] with exact rational endpoints. Degenerate
// (lo == hi) intervals are legal and stand for exactly known points.
struct RealInterval {
  Rational lo, hi;

  RealInterval() = default;
  RealInterval(Rational l, Rational h);

  Rational length() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool is_point() const { return lo == hi; }

  friend bool operator==(const RealInterval&, const RealInterval&) = default;
};

// Gap between two closed intervals; 0 when they touch or overlap.
Rational interval_dis(const RealInterval& a, const RealInterval& b);
bool intervals_overlap(const RealInterval& a, const RealInterval& b);

// Exact interval arithmetic: the result is the image set of the operation.
RealInterval operator+(const RealInterval& a, const RealInterval& b);
RealInterval operator-(const RealInterval& a, const RealInterval& b);
RealInterval operator*(const RealInterval& a, const RealInterval& b);

struct ComplexPoint {
  Rational re, im;
  friend bool operator==(const ComplexPoint&, const ComplexPoint&) = default;
};

// Max norm |x + iy| = max(|x|, |y|). The whole pipeline measures distances
// in this norm; boxes are its balls.
Rational cnorm(const ComplexPoint& p);

// Axis-aligned rectangle re x im in the complex plane.
struct ComplexInterval {
  RealInterval re, im;

  ComplexInterval() = default;
  ComplexInterval(RealInterval r, RealInterval i)
      : re(std::move(r)), im(std::move(i)) {}

  Rational width() const { return max(re.length(), im.length()); }
  bool contains(const ComplexPoint& p) const {
    return re.contains(p.re) && im.contains(p.im);
  }
  ComplexPoint center() const { return {re.midpoint(), im.midpoint()}; }
  bool is_real() const { return im.lo.is_zero() && im.hi.is_zero(); }

  friend bool operator==(const ComplexInterval&,
                         const ComplexInterval&) = default;
};

// Rectangle arithmetic. Sums are exact; products enclose the image set
// (the true image of a product of rectangles need not be a rectangle).
ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b);
ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b);
ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b);

// Componentwise max of the real/imaginary interval gaps; exact lower bound
// for max-norm distances between points of the two boxes.
Rational box_dis(const ComplexInterval& a, const ComplexInterval& b);
bool boxes_overlap(const ComplexInterval& a, const ComplexInterval& b);

// (k - i) / s with the natural interval difference. Requires s > 0. Encloses
// (x - y)/s for every x in k, y in i.
ComplexInterval box_sub_scale(const ComplexInterval& k,
                              const ComplexInterval& i, const Rational& s);

// Box grown by delta in every direction. Requires delta >= 0.
ComplexInterval pad(const ComplexInterval& b, const Rational& delta);

// Reflection across the real axis.
ComplexInterval conj(const ComplexInterval& b);

std::ostream& operator<<(std::ostream& os, const RealInterval& i);
std::ostream& operator<<(std::ostream& os, const ComplexInterval& b);

}  // namespace lur
