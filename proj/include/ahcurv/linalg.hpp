// Copyright 2026 The ahcurv Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ahcurv/scalar.hpp"

namespace ahcurv {

/// Dense matrix over an exact field.  Everything here is plain Gaussian
/// elimination with exact pivots; sizes stay in the low thousands.
template <class S>
class Matrix {
 public:
  Matrix() : r_(0), c_(0) {}
  Matrix(std::size_t r, std::size_t c) : r_(r), c_(c), a_(r * c, scalar_traits<S>::zero()) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = scalar_traits<S>::one();
    return m;
  }

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }

  const S& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
  S& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }

  const std::vector<S>& data() const { return a_; }
  std::vector<S>& data() { return a_; }

  Matrix transpose() const {
    Matrix t(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix operator*(const Matrix& o) const {
    if (c_ != o.r_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix out(r_, o.c_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t k = 0; k < c_; ++k) {
        const S& x = (*this)(i, k);
        if (scalar_traits<S>::is_zero(x)) continue;
        for (std::size_t j = 0; j < o.c_; ++j) {
          const S& y = o(k, j);
          if (!scalar_traits<S>::is_zero(y)) out(i, j) += x * y;
        }
      }
    return out;
  }

  std::vector<S> apply(const std::vector<S>& v) const {
    if (v.size() != c_) throw std::invalid_argument("matrix apply shape mismatch");
    std::vector<S> out(r_, scalar_traits<S>::zero());
    for (std::size_t i = 0; i < r_; ++i) {
      S acc = scalar_traits<S>::zero();
      for (std::size_t j = 0; j < c_; ++j) {
        const S& x = (*this)(i, j);
        if (!scalar_traits<S>::is_zero(x)) acc += x * v[j];
      }
      out[i] = std::move(acc);
    }
    return out;
  }

  Matrix& operator+=(const Matrix& o) {
    if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("matrix sum shape mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("matrix sum shape mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  Matrix& operator*=(const S& s) {
    for (auto& x : a_) x *= s;
    return *this;
  }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!scalar_traits<S>::is_zero(x)) return false;
    return true;
  }

  S frobenius_sq() const {
    S acc = scalar_traits<S>::zero();
    for (const auto& x : a_) acc += x * x;
    return acc;
  }

  Matrix column(std::size_t j) const {
    Matrix v(r_, 1);
    for (std::size_t i = 0; i < r_; ++i) v(i, 0) = (*this)(i, j);
    return v;
  }

  void set_column(std::size_t j, const std::vector<S>& v) {
    for (std::size_t i = 0; i < r_; ++i) (*this)(i, j) = v[i];
  }

  std::vector<S> column_vec(std::size_t j) const {
    std::vector<S> v(r_);
    for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  static Matrix hstack(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack shape mismatch");
    Matrix out(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
    }
    return out;
  }

  static Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack shape mismatch");
    Matrix out(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) out(a.rows() + i, j) = b(i, j);
    return out;
  }

 private:
  std::size_t r_, c_;
  std::vector<S> a_;
};

using QMatrix = Matrix<Rational>;

namespace linalg {

/// Row echelon reduction in place; returns pivot columns.
template <class S>
std::vector<std::size_t> row_reduce(Matrix<S>& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && scalar_traits<S>::is_zero(m(p, col))) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t j = col; j < m.cols(); ++j) std::swap(m(row, j), m(p, j));
    const S inv = scalar_traits<S>::one() / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row) continue;
      const S f = m(i, col);
      if (scalar_traits<S>::is_zero(f)) continue;
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class S>
std::size_t rank(Matrix<S> m) {
  return row_reduce(m).size();
}

/// Basis of ker(m) as columns.
template <class S>
Matrix<S> nullspace(Matrix<S> m) {
  const std::size_t n = m.cols();
  const auto pivots = row_reduce(m);
  std::vector<char> is_pivot(n, 0);
  for (auto p : pivots) is_pivot[p] = 1;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < n; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  Matrix<S> ker(n, free_cols.size());
  for (std::size_t fi = 0; fi < free_cols.size(); ++fi) {
    const std::size_t fc = free_cols[fi];
    ker(fc, fi) = scalar_traits<S>::one();
    for (std::size_t r = 0; r < pivots.size(); ++r) ker(pivots[r], fi) = -m(r, fc);
  }
  return ker;
}

/// Columns of m that form a basis of its column space.
template <class S>
Matrix<S> column_space(const Matrix<S>& m) {
  Matrix<S> reduced = m;
  const auto pivots = row_reduce(reduced);
  Matrix<S> out(m.rows(), pivots.size());
  for (std::size_t j = 0; j < pivots.size(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i) out(i, j) = m(i, pivots[j]);
  return out;
}

/// Solves A x = b for every column of b; throws if inconsistent.
template <class S>
Matrix<S> solve(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve shape mismatch");
  Matrix<S> aug = Matrix<S>::hstack(a, b);
  const auto pivots = row_reduce(aug);
  for (auto p : pivots)
    if (p >= a.cols()) throw std::domain_error("inconsistent linear system");
  Matrix<S> x(a.cols(), b.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (std::size_t j = 0; j < b.cols(); ++j) x(pivots[r], j) = aug(r, a.cols() + j);
  return x;
}

template <class S>
Matrix<S> inverse(const Matrix<S>& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse of non-square");
  Matrix<S> x = solve(a, Matrix<S>::identity(a.rows()));
  return x;
}

/// Orthogonal projector onto span(columns of b) w.r.t. Gram matrix g on the
/// ambient coordinates: P = B (B^T G B)^{-1} B^T G.  Self-adjoint w.r.t. g.
template <class S>
Matrix<S> gram_projector(const Matrix<S>& b, const Matrix<S>& g) {
  if (b.cols() == 0) return Matrix<S>(b.rows(), b.rows());
  const Matrix<S> bt = b.transpose();
  const Matrix<S> btg = bt * g;
  const Matrix<S> gram = btg * b;
  const Matrix<S> coeff = solve(gram, btg);  // (B^T G B)^{-1} B^T G
  return b * coeff;
}

/// Coefficients of v in the basis given by the columns of b (Gram g), i.e.
/// the G-orthogonal projection expressed in that basis.
template <class S>
Matrix<S> gram_coefficients(const Matrix<S>& b, const Matrix<S>& g) {
  const Matrix<S> btg = b.transpose() * g;
  return solve(btg * b, btg);
}

/// Intersection of two column-span subspaces.
template <class S>
Matrix<S> intersect(const Matrix<S>& a, const Matrix<S>& b) {
  // x = a u = b v  <=>  [a | -b] (u;v) = 0
  Matrix<S> neg = b;
  neg *= -scalar_traits<S>::one();
  Matrix<S> ker = nullspace(Matrix<S>::hstack(a, neg));
  Matrix<S> u(a.cols(), ker.cols());
  for (std::size_t i = 0; i < a.cols(); ++i)
    for (std::size_t j = 0; j < ker.cols(); ++j) u(i, j) = ker(i, j);
  return column_space(a * u);
}

/// G-orthogonal complement of span(b) inside span(whole).
template <class S>
Matrix<S> complement_within(const Matrix<S>& whole, const Matrix<S>& b,
                            const Matrix<S>& g) {
  // vectors w = whole * u with b^T G w = 0
  Matrix<S> cond = (b.transpose() * g) * whole;
  Matrix<S> u = nullspace(cond);
  return column_space(whole * u);
}

// --- small polynomial helpers over Q (coefficients low degree first) ---

inline void poly_trim(std::vector<Rational>& p) {
  while (p.size() > 1 && scalar_traits<Rational>::is_zero(p.back())) p.pop_back();
}

inline std::vector<Rational> poly_mul(const std::vector<Rational>& a,
                                      const std::vector<Rational>& b) {
  std::vector<Rational> out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

inline std::vector<Rational> poly_mod(std::vector<Rational> a,
                                      const std::vector<Rational>& b) {
  poly_trim(a);
  while (a.size() >= b.size() && !(a.size() == 1 && scalar_traits<Rational>::is_zero(a[0]))) {
    const Rational f = a.back() / b.back();
    const std::size_t off = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
    poly_trim(a);
    if (a.size() < b.size()) break;
  }
  return a;
}

inline std::vector<Rational> poly_gcd(std::vector<Rational> a, std::vector<Rational> b) {
  poly_trim(a);
  poly_trim(b);
  while (!(b.size() == 1 && scalar_traits<Rational>::is_zero(b[0]))) {
    auto r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  for (auto& c : a) c /= a.back();
  return a;
}

inline std::vector<Rational> poly_div_exact(std::vector<Rational> a,
                                            const std::vector<Rational>& b) {
  poly_trim(a);
  std::vector<Rational> q(a.size() >= b.size() ? a.size() - b.size() + 1 : 1, Rational(0));
  while (a.size() >= b.size() && !(a.size() == 1 && scalar_traits<Rational>::is_zero(a[0]))) {
    const Rational f = a.back() / b.back();
    const std::size_t off = a.size() - b.size();
    q[off] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
    poly_trim(a);
    if (a.size() < b.size()) break;
  }
  return q;
}

/// Minimal monic polynomial of the vector v under m (Krylov dependence).
inline std::vector<Rational> vector_minpoly(const QMatrix& m, const std::vector<Rational>& v) {
  const std::size_t n = m.rows();
  QMatrix krylov(n, 1);
  krylov.set_column(0, v);
  std::vector<Rational> cur = v;
  while (true) {
    cur = m.apply(cur);
    QMatrix cb(n, 1);
    cb.set_column(0, cur);
    QMatrix ext = QMatrix::hstack(krylov, cb);
    if (rank(ext) == krylov.cols()) {
      QMatrix coeffs = solve(krylov, cb);
      std::vector<Rational> p(krylov.cols() + 1);
      for (std::size_t i = 0; i < krylov.cols(); ++i) p[i] = -coeffs(i, 0);
      p[krylov.cols()] = Rational(1);
      return p;
    }
    krylov = std::move(ext);
  }
}

/// Monic minimal polynomial of m: lcm of per-vector minimal polynomials over
/// canonical seeds, stopping once the polynomial annihilates m.
inline std::vector<Rational> minimal_polynomial(const QMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("minpoly of non-square");
  const std::size_t n = m.rows();
  if (n == 0) return {Rational(1)};
  std::vector<Rational> p{Rational(1)};
  auto apply_poly = [&](const std::vector<Rational>& q, std::vector<Rational> v) {
    // Horner: q(m) v
    std::vector<Rational> acc(n, Rational(0));
    for (std::size_t k = q.size(); k-- > 0;) {
      acc = m.apply(acc);
      for (std::size_t i = 0; i < n; ++i) acc[i] += q[k] * v[i];
    }
    return acc;
  };
  for (std::size_t seed = 0; seed < n; ++seed) {
    std::vector<Rational> e(n, Rational(0));
    e[seed] = Rational(1);
    std::vector<Rational> w = apply_poly(p, e);
    bool zero = true;
    for (const auto& x : w)
      if (!scalar_traits<Rational>::is_zero(x)) {
        zero = false;
        break;
      }
    if (zero) continue;
    const auto q = vector_minpoly(m, w);
    // lcm(p, q) = p * q / gcd(p, q)
    p = poly_div_exact(poly_mul(p, q), poly_gcd(p, q));
    for (auto& c : p) c /= p.back();
  }
  return p;
}

/// Rational roots of a monic rational polynomial (low-first coefficients)
/// that is known to split over Q; throws if it does not split.
inline std::vector<Rational> rational_roots_of_split_poly(std::vector<Rational> p) {
  std::vector<Rational> roots;
  // deflate by synthetic division as roots are found
  auto eval = [](const std::vector<Rational>& q, const Rational& x) {
    Rational acc(0);
    for (std::size_t i = q.size(); i-- > 0;) acc = acc * x + q[i];
    return acc;
  };
  while (p.size() > 1) {
    // clear denominators -> integer polynomial; candidate roots p/q with
    // p | a0, q | a_lead
    mpz_class den(1);
    for (const auto& c : p) den = den * c.get_den() / gcd(den, mpz_class(c.get_den()));
    std::vector<mpz_class> ip;
    for (const auto& c : p) {
      Rational scaled = c * Rational(den);
      ip.push_back(scaled.get_num());
    }
    // strip zero constant terms: root 0
    if (ip.front() == 0) {
      roots.emplace_back(0);
    } else {
      mpz_class a0 = abs(ip.front()), al = abs(ip.back());
      std::optional<Rational> found;
      // enumerate divisors (values here are small products of module data)
      std::vector<mpz_class> divs0, divsl;
      for (mpz_class d(1); d * d <= a0; ++d)
        if (a0 % d == 0) {
          divs0.push_back(d);
          divs0.push_back(a0 / d);
        }
      for (mpz_class d(1); d * d <= al; ++d)
        if (al % d == 0) {
          divsl.push_back(d);
          divsl.push_back(al / d);
        }
      for (const auto& dn : divs0) {
        for (const auto& dd : divsl) {
          for (int s : {1, -1}) {
            Rational cand(s * dn, dd);
            cand.canonicalize();
            if (scalar_traits<Rational>::is_zero(eval(p, cand))) {
              found = cand;
              break;
            }
          }
          if (found) break;
        }
        if (found) break;
      }
      if (!found) throw std::domain_error("polynomial does not split over Q");
      roots.push_back(*found);
    }
    // synthetic division by (x - root)
    const Rational r = roots.back();
    std::vector<Rational> q(p.size() - 1);
    Rational carry = p.back();
    for (std::size_t i = p.size() - 1; i-- > 0;) {
      q[i] = carry;
      carry = p[i] + carry * r;
    }
    if (!scalar_traits<Rational>::is_zero(carry))
      throw std::domain_error("deflation failed");
    p = std::move(q);
  }
  return roots;
}

}  // namespace linalg
}  // namespace ahcurv
