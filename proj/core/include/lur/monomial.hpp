#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace lur {

// Power product over a fixed variable list. exps[k] is the exponent of the
// k-th declared variable; declaration order is lowest-to-highest in the
// monomial order below.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

  static Monomial var(std::size_t nvars, std::size_t k,
                      std::uint32_t power = 1);

  std::size_t nvars() const { return exps_.size(); }
  std::uint32_t operator[](std::size_t k) const { return exps_[k]; }
  std::uint64_t total_degree() const;
  bool is_one() const { return total_degree() == 0; }

  // x_k^e for exactly one k (e >= 1); the zero-dimensionality test looks for
  // these among leading monomials.
  bool is_pure_power(std::size_t* which = nullptr) const;

  bool divides(const Monomial& m) const;
  Monomial operator*(const Monomial& o) const;
  Monomial div(const Monomial& o) const;  // requires o.divides(*this)
  Monomial lcm(const Monomial& o) const;

  std::string str(const std::vector<std::string>& names) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::uint32_t> exps_;
};

// Graded reverse lexicographic comparison with the first declared variable
// lowest. Returns -1, 0, 1 for a < b, a == b, a > b. Ties in total degree
// break on the first nonzero exponent difference scanning from the lowest
// variable: negative difference means the larger monomial.
int grevlex_cmp(const Monomial& a, const Monomial& b);

struct GrevlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return grevlex_cmp(a, b) < 0;
  }
};

std::ostream& operator<<(std::ostream& os, const Monomial& m);

}  // namespace lur
