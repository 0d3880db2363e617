#include "lur/interval.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

namespace lur {

RealInterval::RealInterval(Rational l, Rational h)
    : lo(std::move(l)), hi(std::move(h)) {
  if (hi < lo) throw std::invalid_argument("interval with hi < lo");
}

Rational interval_dis(const RealInterval& a, const RealInterval& b) {
  if (a.hi < b.lo) return b.lo - a.hi;
  if (b.hi < a.lo) return a.lo - b.hi;
  return Rational(0);
}

bool intervals_overlap(const RealInterval& a, const RealInterval& b) {
  return !(a.hi < b.lo || b.hi < a.lo);
}

RealInterval operator+(const RealInterval& a, const RealInterval& b) {
  return RealInterval(a.lo + b.lo, a.hi + b.hi);
}

RealInterval operator-(const RealInterval& a, const RealInterval& b) {
  return RealInterval(a.lo - b.hi, a.hi - b.lo);
}

RealInterval operator*(const RealInterval& a, const RealInterval& b) {
  Rational p1 = a.lo * b.lo;
  Rational p2 = a.lo * b.hi;
  Rational p3 = a.hi * b.lo;
  Rational p4 = a.hi * b.hi;
  return RealInterval(min(min(p1, p2), min(p3, p4)),
                      max(max(p1, p2), max(p3, p4)));
}

Rational cnorm(const ComplexPoint& p) { return max(abs(p.re), abs(p.im)); }

ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b) {
  return {a.re + b.re, a.im + b.im};
}

ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b) {
  return {a.re - b.re, a.im - b.im};
}

ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

Rational box_dis(const ComplexInterval& a, const ComplexInterval& b) {
  return max(interval_dis(a.re, b.re), interval_dis(a.im, b.im));
}

bool boxes_overlap(const ComplexInterval& a, const ComplexInterval& b) {
  return intervals_overlap(a.re, b.re) && intervals_overlap(a.im, b.im);
}

ComplexInterval box_sub_scale(const ComplexInterval& k,
                              const ComplexInterval& i, const Rational& s) {
  if (s.sign() <= 0) throw std::invalid_argument("box_sub_scale needs s > 0");
  return {RealInterval((k.re.lo - i.re.hi) / s, (k.re.hi - i.re.lo) / s),
          RealInterval((k.im.lo - i.im.hi) / s, (k.im.hi - i.im.lo) / s)};
}

ComplexInterval pad(const ComplexInterval& b, const Rational& delta) {
  if (delta.sign() < 0) throw std::invalid_argument("pad needs delta >= 0");
  return {RealInterval(b.re.lo - delta, b.re.hi + delta),
          RealInterval(b.im.lo - delta, b.im.hi + delta)};
}

ComplexInterval conj(const ComplexInterval& b) {
  return {b.re, RealInterval(-b.im.hi, -b.im.lo)};
}

std::ostream& operator<<(std::ostream& os, const RealInterval& i) {
  return os << "[" << i.lo << ", " << i.hi << "]";
}

std::ostream& operator<<(std::ostream& os, const ComplexInterval& b) {
  return os << "<" << b.re << ", " << b.im << ">";
}

}  // namespace lur
