#include "lur/unipoly.hpp"

#include <ostream>
#include <stdexcept>

namespace lur {

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::constant(Rational c) {
  UniPoly p;
  p.c_.push_back(std::move(c));
  p.trim();
  return p;
}

UniPoly UniPoly::identity() {
  UniPoly p;
  p.c_ = {Rational(0), Rational(1)};
  return p;
}

UniPoly UniPoly::from_coeffs(std::vector<Rational> coeffs) {
  UniPoly p;
  p.c_ = std::move(coeffs);
  p.trim();
  return p;
}

Rational UniPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

ComplexPoint UniPoly::eval(const ComplexPoint& z) const {
  Rational re(0), im(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    Rational nre = re * z.re - im * z.im + *it;
    im = re * z.im + im * z.re;
    re = std::move(nre);
  }
  return {re, im};
}

UniPoly UniPoly::derivative() const {
  UniPoly d;
  for (std::size_t k = 1; k < c_.size(); ++k)
    d.c_.push_back(c_[k] * Rational(static_cast<long>(k)));
  d.trim();
  return d;
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  UniPoly r;
  r.c_.resize(std::max(c_.size(), o.c_.size()), Rational(0));
  for (std::size_t k = 0; k < c_.size(); ++k) r.c_[k] += c_[k];
  for (std::size_t k = 0; k < o.c_.size(); ++k) r.c_[k] += o.c_[k];
  r.trim();
  return r;
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return zero();
  UniPoly r;
  r.c_.assign(c_.size() + o.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      r.c_[i + j] += c_[i] * o.c_[j];
  r.trim();
  return r;
}

UniPoly UniPoly::operator*(const Rational& s) const {
  UniPoly r = *this;
  for (auto& c : r.c_) c *= s;
  r.trim();
  return r;
}

std::pair<UniPoly, UniPoly> UniPoly::divrem(const UniPoly& o) const {
  if (o.is_zero()) throw std::domain_error("polynomial division by zero");
  UniPoly q, r = *this;
  int dq = degree() - o.degree();
  if (dq < 0) return {q, r};
  q.c_.assign(static_cast<std::size_t>(dq) + 1, Rational(0));
  while (!r.is_zero() && r.degree() >= o.degree()) {
    std::size_t shift = static_cast<std::size_t>(r.degree() - o.degree());
    Rational f = r.leading() / o.leading();
    q.c_[shift] += f;
    for (std::size_t k = 0; k < o.c_.size(); ++k)
      r.c_[shift + k] -= f * o.c_[k];
    r.trim();
  }
  q.trim();
  return {q, r};
}

UniPoly UniPoly::exact_div(const UniPoly& o) const {
  auto [q, r] = divrem(o);
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return q;
}

bool UniPoly::divisible_by(const UniPoly& o) const {
  return divrem(o).second.is_zero();
}

std::vector<mpz_class> UniPoly::integer_scaled() const {
  std::vector<mpz_class> out;
  if (is_zero()) return out;
  mpz_class l = 1;
  for (const auto& c : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(),
                                   c.den().get_mpz_t());
  mpz_class g = 0;
  out.reserve(c_.size());
  for (const auto& c : c_) {
    mpz_class v = c.num() * (l / c.den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    out.push_back(std::move(v));
  }
  for (auto& v : out) v /= g;  // g > 0 since some coefficient is nonzero
  return out;
}

std::size_t UniPoly::coeff_bit_length() const {
  std::size_t best = 0;
  for (const auto& v : integer_scaled()) {
    std::size_t b = mpz_sizeinbase(v.get_mpz_t(), 2);
    if (b > best) best = b;
  }
  return best;
}

std::string UniPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string s;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = c_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    Rational a = abs(c);
    if (s.empty()) {
      if (c.sign() < 0) s += "-";
    } else {
      s += c.sign() < 0 ? " - " : " + ";
    }
    bool unit = a == Rational(1);
    if (k == 0 || !unit) s += a.str();
    if (k > 0) {
      if (!unit) s += "*";
      s += var;
      if (k > 1) s += "^" + std::to_string(k);
    }
  }
  return s;
}

UniPoly primitive_normalize(const UniPoly& p) {
  if (p.is_zero()) return p;
  auto ints = p.integer_scaled();
  if (ints.back() < 0)
    for (auto& v : ints) v = -v;
  std::vector<Rational> coeffs;
  coeffs.reserve(ints.size());
  for (auto& v : ints) coeffs.emplace_back(mpq_class(v));
  return UniPoly::from_coeffs(std::move(coeffs));
}

UniPoly poly_gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = primitive_normalize(a), y = primitive_normalize(b);
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    UniPoly r = x.divrem(y).second;
    x = std::move(y);
    y = r.is_zero() ? UniPoly::zero() : primitive_normalize(r);
  }
  return x;  // primitive with positive leading coefficient
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.is_zero()) return p;
  if (p.degree() == 0) return UniPoly::constant(Rational(1));
  UniPoly g = poly_gcd(p, p.derivative());
  return primitive_normalize(p.exact_div(g));
}

std::vector<std::pair<UniPoly, int>> squarefree_decomposition(
    const UniPoly& p) {
  std::vector<std::pair<UniPoly, int>> out;
  if (p.is_zero() || p.degree() == 0) return out;
  UniPoly g = poly_gcd(p, p.derivative());
  if (g.degree() == 0) {
    out.emplace_back(primitive_normalize(p), 1);
    return out;
  }
  UniPoly w = p.exact_div(g);
  UniPoly z = p.derivative().exact_div(g) - w.derivative();
  int i = 1;
  while (w.degree() > 0) {
    UniPoly gi = poly_gcd(w, z);
    if (gi.degree() > 0) out.emplace_back(primitive_normalize(gi), i);
    w = w.exact_div(gi);
    z = z.exact_div(gi) - w.derivative();
    ++i;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const UniPoly& p) {
  return os << p.str("t");
}

}  // namespace lur
