#pragma once

#include <vector>

#include "lur/groebner.hpp"
#include "lur/unipoly.hpp"

namespace lur {

// Dense exact matrix, row major, square in every use here.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const {
    return a_[r * cols_ + c];
  }

  RationalMatrix operator*(const RationalMatrix& o) const;
  RationalMatrix operator+(const RationalMatrix& o) const;
  RationalMatrix scaled(const Rational& s) const;
  Rational trace() const;

  // row vector v -> v * M
  std::vector<Rational> apply_left(const std::vector<Rational>& v) const;

  friend bool operator==(const RationalMatrix&,
                         const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

// x_1 + c_2 x_2 + ... + c_n x_n; the separating forms used level by level.
struct LinearForm {
  std::vector<Rational> coeffs;  // one per variable

  MultiPoly to_poly() const;
};

// Matrix of multiplication by f on the residue ring: row k holds the
// basis coordinates of normal_form(f * basis[k]).
RationalMatrix mult_matrix(const MultiPoly& f, const GroebnerBasis& gb,
                           const MonomialBasis& basis);

// Monic minimal polynomial of the multiplication-by-f map, found as the
// first linear dependency in the Krylov sequence of the coset of 1. Equals
// the generator of the ideal's intersection with Q[f]; returned
// primitive-normalized. Annihilating the coset of 1 already annihilates the
// whole ring, so no second vector is ever needed.
UniPoly eliminant(const MultiPoly& f, const GroebnerBasis& gb,
                  const MonomialBasis& basis);

// Exact characteristic polynomial det(tI - M) by the Faddeev-LeVerrier
// recurrence; monic, degree = dimension.
UniPoly char_poly(const RationalMatrix& m);

}  // namespace lur
