#include "lur/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace lur {

namespace {
bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}
}  // namespace

Rational::Rational(long n, long d) : v_(n, d) {
  if (d == 0) throw std::domain_error("rational with zero denominator");
  v_.canonicalize();
}

Rational::Rational(const mpz_class& n, const mpz_class& d) : v_(n, d) {
  if (d == 0) throw std::domain_error("rational with zero denominator");
  v_.canonicalize();
}

Rational::Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

std::optional<Rational> Rational::parse(std::string_view text) {
  std::string_view num = text, den;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    if (!all_digits(den)) return std::nullopt;
    if (den.find_first_not_of('0') == std::string_view::npos)
      return std::nullopt;  // "0", "00", ...: zero denominator
  }
  std::string_view digits = num;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+'))
    digits.remove_prefix(1);
  if (!all_digits(digits)) return std::nullopt;
  mpq_class q;
  if (q.set_str(std::string(text), 10) != 0) return std::nullopt;
  q.canonicalize();
  return Rational(std::move(q));
}

std::string Rational::str() const {
  return is_integer() ? v_.get_num().get_str() : v_.get_str();
}

std::size_t Rational::bit_length() const {
  std::size_t n = mpz_sizeinbase(v_.get_num().get_mpz_t(), 2);
  std::size_t d = mpz_sizeinbase(v_.get_den().get_mpz_t(), 2);
  return n > d ? n : d;
}

Rational Rational::pow2(long k) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(k < 0 ? -k : k));
  return k < 0 ? Rational(mpq_class(1, p)) : Rational(mpq_class(p));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  v_ /= o.v_;
  return *this;
}

Rational abs(const Rational& a) { return a.sign() < 0 ? -a : a; }
const Rational& min(const Rational& a, const Rational& b) {
  return b < a ? b : a;
}
const Rational& max(const Rational& a, const Rational& b) {
  return a < b ? b : a;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace lur
