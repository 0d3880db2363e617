#include "lur/monomial.hpp"

#include <ostream>
#include <stdexcept>

namespace lur {

Monomial Monomial::var(std::size_t nvars, std::size_t k, std::uint32_t power) {
  Monomial m(nvars);
  m.exps_.at(k) = power;
  return m;
}

std::uint64_t Monomial::total_degree() const {
  std::uint64_t d = 0;
  for (auto e : exps_) d += e;
  return d;
}

bool Monomial::is_pure_power(std::size_t* which) const {
  std::size_t hits = 0, last = 0;
  for (std::size_t k = 0; k < exps_.size(); ++k)
    if (exps_[k] != 0) { ++hits; last = k; }
  if (hits != 1) return false;
  if (which) *which = last;
  return true;
}

bool Monomial::divides(const Monomial& m) const {
  for (std::size_t k = 0; k < exps_.size(); ++k)
    if (exps_[k] > m.exps_[k]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r = *this;
  for (std::size_t k = 0; k < exps_.size(); ++k) r.exps_[k] += o.exps_[k];
  return r;
}

Monomial Monomial::div(const Monomial& o) const {
  Monomial r = *this;
  for (std::size_t k = 0; k < exps_.size(); ++k) {
    if (o.exps_[k] > r.exps_[k])
      throw std::invalid_argument("monomial division underflow");
    r.exps_[k] -= o.exps_[k];
  }
  return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
  Monomial r = *this;
  for (std::size_t k = 0; k < exps_.size(); ++k)
    if (o.exps_[k] > r.exps_[k]) r.exps_[k] = o.exps_[k];
  return r;
}

std::string Monomial::str(const std::vector<std::string>& names) const {
  std::string s;
  for (std::size_t k = 0; k < exps_.size(); ++k) {
    if (exps_[k] == 0) continue;
    if (!s.empty()) s += "*";
    s += names.at(k);
    if (exps_[k] > 1) s += "^" + std::to_string(exps_[k]);
  }
  return s.empty() ? "1" : s;
}

int grevlex_cmp(const Monomial& a, const Monomial& b) {
  auto da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t k = 0; k < a.nvars(); ++k) {
    if (a[k] != b[k]) return a[k] < b[k] ? 1 : -1;
  }
  return 0;
}

std::ostream& operator<<(std::ostream& os, const Monomial& m) {
  std::vector<std::string> names;
  names.reserve(m.nvars());
  for (std::size_t k = 0; k < m.nvars(); ++k)
    names.push_back("x" + std::to_string(k + 1));
  return os << m.str(names);
}

}  // namespace lur
