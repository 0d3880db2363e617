#include "lur/quotient.hpp"

#include <map>
#include <stdexcept>

namespace lur {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m.at(k, k) = Rational(1);
  return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
  RationalMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& v = at(i, k);
      if (v.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        r.at(i, j) += v * o.at(k, j);
    }
  return r;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix shape mismatch");
  RationalMatrix r = *this;
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] += o.a_[k];
  return r;
}

RationalMatrix RationalMatrix::scaled(const Rational& s) const {
  RationalMatrix r = *this;
  for (auto& v : r.a_) v *= s;
  return r;
}

Rational RationalMatrix::trace() const {
  Rational t(0);
  for (std::size_t k = 0; k < rows_; ++k) t += at(k, k);
  return t;
}

std::vector<Rational> RationalMatrix::apply_left(
    const std::vector<Rational>& v) const {
  if (v.size() != rows_) throw std::invalid_argument("vector length mismatch");
  std::vector<Rational> r(cols_, Rational(0));
  for (std::size_t i = 0; i < rows_; ++i) {
    if (v[i].is_zero()) continue;
    for (std::size_t j = 0; j < cols_; ++j) r[j] += v[i] * at(i, j);
  }
  return r;
}

MultiPoly LinearForm::to_poly() const {
  MultiPoly p(coeffs.size());
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    p.set_coeff(Monomial::var(coeffs.size(), k), coeffs[k]);
  return p;
}

namespace {

std::map<Monomial, std::size_t, GrevlexLess> index_map(
    const MonomialBasis& basis) {
  std::map<Monomial, std::size_t, GrevlexLess> idx;
  for (std::size_t k = 0; k < basis.size(); ++k) idx[basis.monomials[k]] = k;
  return idx;
}

std::vector<Rational> coords_of(const MultiPoly& nf,
                                const std::map<Monomial, std::size_t,
                                               GrevlexLess>& idx,
                                std::size_t dim) {
  std::vector<Rational> v(dim, Rational(0));
  for (const auto& [m, c] : nf.terms()) {
    auto it = idx.find(m);
    if (it == idx.end())
      throw std::logic_error("normal form left the standard monomial span");
    v[it->second] = c;
  }
  return v;
}

}  // namespace

RationalMatrix mult_matrix(const MultiPoly& f, const GroebnerBasis& gb,
                           const MonomialBasis& basis) {
  auto idx = index_map(basis);
  std::size_t dim = basis.size();
  RationalMatrix m(dim, dim);
  for (std::size_t k = 0; k < dim; ++k) {
    MultiPoly prod = f * MultiPoly::term(basis.monomials[k], Rational(1));
    auto v = coords_of(normal_form(prod, gb), idx, dim);
    for (std::size_t j = 0; j < dim; ++j) m.at(k, j) = std::move(v[j]);
  }
  return m;
}

UniPoly eliminant(const MultiPoly& f, const GroebnerBasis& gb,
                  const MonomialBasis& basis) {
  auto idx = index_map(basis);
  std::size_t dim = basis.size();
  RationalMatrix m = mult_matrix(f, gb, basis);

  // coset of 1
  std::vector<Rational> v(dim, Rational(0));
  v[idx.at(Monomial(gb.nvars))] = Rational(1);

  // incremental echelon basis with expressions in the Krylov vectors
  struct Row {
    std::vector<Rational> vec;
    std::vector<Rational> expr;
    std::size_t pivot;
  };
  std::vector<Row> rows;

  for (std::size_t step = 0;; ++step) {
    if (step > dim)
      throw std::logic_error("Krylov sequence failed to close");
    std::vector<Rational> r = v;
    std::vector<Rational> e(step + 1, Rational(0));
    e[step] = Rational(1);
    for (const Row& row : rows) {
      Rational c = r[row.pivot];
      if (c.is_zero()) continue;
      for (std::size_t k = 0; k < dim; ++k) r[k] -= c * row.vec[k];
      for (std::size_t k = 0; k < row.expr.size(); ++k)
        e[k] -= c * row.expr[k];
    }
    std::size_t pivot = dim;
    for (std::size_t k = 0; k < dim; ++k)
      if (!r[k].is_zero()) { pivot = k; break; }
    if (pivot == dim) {
      // dependency: sum e_j f^j annihilates the coset of 1
      return primitive_normalize(UniPoly::from_coeffs(std::move(e)));
    }
    Rational inv = Rational(1) / r[pivot];
    for (auto& x : r) x *= inv;
    for (auto& x : e) x *= inv;
    rows.push_back({std::move(r), std::move(e), pivot});
    v = m.apply_left(v);
  }
}

UniPoly char_poly(const RationalMatrix& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("characteristic polynomial of non-square");
  std::size_t n = m.rows();
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = Rational(1);
  if (n == 0) return UniPoly::from_coeffs(std::move(c));
  RationalMatrix mk = m;
  c[n - 1] = -mk.trace();
  for (std::size_t k = 2; k <= n; ++k) {
    mk = m * (mk + RationalMatrix::identity(n).scaled(c[n - k + 1]));
    c[n - k] = -(mk.trace() / Rational(static_cast<long>(k)));
  }
  return UniPoly::from_coeffs(std::move(c));
}

}  // namespace lur
