#include "lur/multipoly.hpp"

#include <ostream>
#include <stdexcept>

namespace lur {

MultiPoly MultiPoly::constant(std::size_t nvars, Rational c) {
  MultiPoly p(nvars);
  p.set_coeff(Monomial(nvars), c);
  return p;
}

MultiPoly MultiPoly::var(std::size_t nvars, std::size_t k) {
  MultiPoly p(nvars);
  p.set_coeff(Monomial::var(nvars, k), Rational(1));
  return p;
}

MultiPoly MultiPoly::term(Monomial m, Rational c) {
  MultiPoly p(m.nvars());
  p.set_coeff(m, c);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first.is_one());
}

const Monomial& MultiPoly::leading_monomial() const {
  if (terms_.empty()) throw std::domain_error("leading term of zero");
  return terms_.rbegin()->first;
}

const Rational& MultiPoly::leading_coeff() const {
  if (terms_.empty()) throw std::domain_error("leading term of zero");
  return terms_.rbegin()->second;
}

void MultiPoly::set_coeff(const Monomial& m, const Rational& c) {
  if (c.is_zero())
    terms_.erase(m);
  else
    terms_[m] = c;
}

Rational MultiPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly r = *this;
  for (const auto& [m, c] : o.terms_) {
    auto [it, fresh] = r.terms_.try_emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) r.terms_.erase(it);
    }
  }
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  return *this + (-o);
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  MultiPoly r(nvars_);
  for (const auto& [ma, ca] : terms_)
    r.add_scaled(o, ca, ma);
  return r;
}

MultiPoly MultiPoly::operator*(const Rational& s) const {
  MultiPoly r(nvars_);
  if (s.is_zero()) return r;
  r = *this;
  for (auto& [m, c] : r.terms_) c *= s;
  return r;
}

void MultiPoly::add_scaled(const MultiPoly& g, const Rational& c,
                           const Monomial& m) {
  if (c.is_zero()) return;
  for (const auto& [mg, cg] : g.terms_) {
    Monomial prod = mg * m;
    Rational add = cg * c;
    auto [it, fresh] = terms_.try_emplace(prod, add);
    if (!fresh) {
      it->second += add;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
}

Rational MultiPoly::eval(const std::vector<Rational>& point) const {
  if (point.size() != nvars_)
    throw std::invalid_argument("eval point arity mismatch");
  Rational acc(0);
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t k = 0; k < nvars_; ++k)
      for (std::uint32_t e = 0; e < m[k]; ++e) t *= point[k];
    acc += t;
  }
  return acc;
}

namespace {

ComplexInterval ci_point(const Rational& x) {
  return {RealInterval(x, x), RealInterval(0, 0)};
}

// Terms restricted to variables < nv, evaluated by Horner on variable nv-1.
ComplexInterval horner(const std::vector<std::pair<Monomial, Rational>>& terms,
                       std::size_t nv,
                       const std::vector<ComplexInterval>& boxes) {
  if (nv == 0) {
    Rational acc(0);
    for (const auto& [m, c] : terms) acc += c;
    return ci_point(acc);
  }
  std::uint32_t top = 0;
  for (const auto& [m, c] : terms)
    if (m[nv - 1] > top) top = m[nv - 1];
  // bucket[e] = terms with x_{nv}^e, exponent stripped
  std::vector<std::vector<std::pair<Monomial, Rational>>> bucket(top + 1);
  for (const auto& [m, c] : terms) {
    std::uint32_t e = m[nv - 1];
    Monomial stripped = m.div(Monomial::var(m.nvars(), nv - 1, e));
    bucket[e].emplace_back(stripped, c);
  }
  ComplexInterval acc = ci_point(Rational(0));
  for (std::uint32_t e = top + 1; e-- > 0;) {
    acc = acc * boxes[nv - 1];
    if (!bucket[e].empty())
      acc = acc + horner(bucket[e], nv - 1, boxes);
  }
  return acc;
}

}  // namespace

ComplexInterval eval_interval(const MultiPoly& p,
                              const std::vector<ComplexInterval>& boxes) {
  if (boxes.size() != p.nvars())
    throw std::invalid_argument("eval_interval arity mismatch");
  std::vector<std::pair<Monomial, Rational>> terms(p.terms().begin(),
                                                   p.terms().end());
  return horner(terms, p.nvars(), boxes);
}

MultiPoly primitive_normalize(const MultiPoly& p) {
  if (p.is_zero()) return p;
  mpz_class l = 1;
  for (const auto& [m, c] : p.terms())
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
  mpz_class g = 0;
  for (const auto& [m, c] : p.terms()) {
    mpz_class v = c.num() * (l / c.den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  Rational scale{mpq_class(l, g)};
  if (p.leading_coeff().sign() < 0) scale = -scale;
  return p * scale;
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) {
  std::vector<std::string> names;
  for (std::size_t k = 0; k < p.nvars(); ++k)
    names.push_back("x" + std::to_string(k + 1));
  return os << p.str(names);
}

std::string MultiPoly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string s;
  // leading term first, then descending
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational a = abs(c);
    if (s.empty()) {
      if (c.sign() < 0) s += "-";
    } else {
      s += c.sign() < 0 ? " - " : " + ";
    }
    bool unit = a == Rational(1);
    if (m.is_one() || !unit) s += a.str();
    if (!m.is_one()) {
      if (!unit) s += "*";
      s += m.str(names);
    }
  }
  return s;
}

}  // namespace lur
