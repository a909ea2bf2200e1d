// Copyright 2026 The ahcurv Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <utility>
#include <vector>

#include "ahcurv/linalg.hpp"
#include "ahcurv/structure.hpp"
#include "ahcurv/tensor.hpp"

namespace ahcurv {

using QTensor = Tensor<Rational>;

/// Coordinate tables for Lambda^2, S^2 Lambda^2 and Lambda^4 over R^{2n}.
/// Lambda^2 coordinates are taken w.r.t. the orthonormal basis {e^i ^ e^j},
/// i<j.  S^2 Lambda^2 coordinates use B_ab = E_a (x) E_b + E_b (x) E_a for
/// a<b and E_a (x) E_a on the diagonal, so the coordinate of a curvature-type
/// tensor T at (a,b) is just T(i_a, j_a, i_b, j_b); the Gram is diag(1 or 2).
class SpaceTables {
 public:
  explicit SpaceTables(int n) : n_(n), dim_(2 * n) {
    pair_idx_.assign(dim_ * dim_, -1);
    for (int i = 0; i < dim_; ++i)
      for (int j = i + 1; j < dim_; ++j) {
        pair_idx_[i * dim_ + j] = static_cast<int>(pairs_.size());
        pairs_.emplace_back(i, j);
      }
    n2_ = static_cast<int>(pairs_.size());
    sym_idx_.assign(static_cast<std::size_t>(n2_) * n2_, -1);
    for (int a = 0; a < n2_; ++a)
      for (int b = a; b < n2_; ++b) {
        sym_idx_[static_cast<std::size_t>(a) * n2_ + b] = static_cast<int>(sym_pairs_.size());
        sym_idx_[static_cast<std::size_t>(b) * n2_ + a] = sym_idx_[static_cast<std::size_t>(a) * n2_ + b];
        sym_pairs_.emplace_back(a, b);
      }
    for (int i = 0; i < dim_; ++i)
      for (int j = i + 1; j < dim_; ++j)
        for (int k = j + 1; k < dim_; ++k)
          for (int l = k + 1; l < dim_; ++l) quads_.push_back({i, j, k, l});
  }

  int n() const { return n_; }
  int dim() const { return dim_; }
  int n2() const { return n2_; }
  int ns() const { return static_cast<int>(sym_pairs_.size()); }
  int n4() const { return static_cast<int>(quads_.size()); }

  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
  const std::vector<std::pair<int, int>>& sym_pairs() const { return sym_pairs_; }
  const std::vector<std::array<int, 4>>& quads() const { return quads_; }

  int pair_index(int i, int j) const { return pair_idx_[i * dim_ + j]; }  // requires i<j
  int sym_index(int a, int b) const { return sym_idx_[static_cast<std::size_t>(a) * n2_ + b]; }

  // ---- conversions ----

  std::vector<Rational> form2_to_coords(const QTensor& t) const {
    std::vector<Rational> c(n2_);
    for (int a = 0; a < n2_; ++a) c[a] = t(pairs_[a].first, pairs_[a].second);
    return c;
  }

  QTensor coords_to_form2(const std::vector<Rational>& c) const {
    QTensor t(dim_, 2, Sym::alternating);
    for (int a = 0; a < n2_; ++a) {
      t(pairs_[a].first, pairs_[a].second) = c[a];
      t(pairs_[a].second, pairs_[a].first) = -c[a];
    }
    return t;
  }

  std::vector<Rational> form4_to_coords(const QTensor& t) const {
    std::vector<Rational> c(quads_.size());
    for (std::size_t q = 0; q < quads_.size(); ++q) {
      const auto& v = quads_[q];
      c[q] = t(v[0], v[1], v[2], v[3]);
    }
    return c;
  }

  std::vector<Rational> curvature_to_s2(const QTensor& t) const {
    std::vector<Rational> c(sym_pairs_.size());
    for (std::size_t s = 0; s < sym_pairs_.size(); ++s) {
      const auto& [a, b] = sym_pairs_[s];
      c[s] = t(pairs_[a].first, pairs_[a].second, pairs_[b].first, pairs_[b].second);
    }
    return c;
  }

  QTensor s2_to_curvature(const std::vector<Rational>& c) const {
    QTensor t(dim_, 4, Sym::symmetric_pair);
    for (int a = 0; a < n2_; ++a)
      for (int b = 0; b < n2_; ++b) {
        const Rational& v = c[sym_index(a, b)];
        if (scalar_traits<Rational>::is_zero(v)) continue;
        const auto [i, j] = pairs_[a];
        const auto [k, l] = pairs_[b];
        t(i, j, k, l) = v;
        t(j, i, k, l) = -v;
        t(i, j, l, k) = -v;
        t(j, i, l, k) = v;
      }
    return t;
  }

  /// Rank-4 tensor alternating in both index pairs -> Lambda^2 (x) Lambda^2
  /// coordinates (a,b) flattened as a*n2+b.
  std::vector<Rational> tensor4_to_l2l2(const QTensor& t) const {
    std::vector<Rational> c(static_cast<std::size_t>(n2_) * n2_);
    for (int a = 0; a < n2_; ++a)
      for (int b = 0; b < n2_; ++b)
        c[static_cast<std::size_t>(a) * n2_ + b] =
            t(pairs_[a].first, pairs_[a].second, pairs_[b].first, pairs_[b].second);
    return c;
  }

  /// Gram diagonal for S^2 Lambda^2 coordinates.
  std::vector<Rational> s2_gram_diag() const {
    std::vector<Rational> g(sym_pairs_.size());
    for (std::size_t s = 0; s < sym_pairs_.size(); ++s)
      g[s] = (sym_pairs_[s].first == sym_pairs_[s].second) ? 1 : 2;
    return g;
  }

  QMatrix s2_gram() const {
    QMatrix g(sym_pairs_.size(), sym_pairs_.size());
    auto d = s2_gram_diag();
    for (std::size_t i = 0; i < d.size(); ++i) g(i, i) = d[i];
    return g;
  }

  /// Matrix of the wedge map S^2 Lambda^2 -> Lambda^4 (kernel = R).
  QMatrix wedge_matrix() const {
    QMatrix w(quads_.size(), sym_pairs_.size());
    for (std::size_t s = 0; s < sym_pairs_.size(); ++s) {
      const auto& [a, b] = sym_pairs_[s];
      if (a == b) continue;  // e^{ij} ^ e^{ij} = 0
      QTensor ea(dim_, 2, Sym::alternating), eb(dim_, 2, Sym::alternating);
      ea(pairs_[a].first, pairs_[a].second) = 1;
      ea(pairs_[a].second, pairs_[a].first) = -1;
      eb(pairs_[b].first, pairs_[b].second) = 1;
      eb(pairs_[b].second, pairs_[b].first) = -1;
      QTensor wf = wedge(ea, eb);
      auto col = form4_to_coords(wf);
      for (std::size_t q = 0; q < col.size(); ++q) w(q, s) = Rational(2) * col[q];
    }
    return w;
  }

  /// Basis of the (1,1)-forms u(n) inside Lambda^2, as coordinate columns.
  QMatrix u_basis() const {
    std::vector<std::vector<Rational>> cols;
    for (int k = 0; k < n_; ++k) {
      std::vector<Rational> c(n2_, Rational(0));
      c[pair_index(2 * k, 2 * k + 1)] = 1;
      cols.push_back(std::move(c));
    }
    for (int k = 0; k < n_; ++k)
      for (int l = k + 1; l < n_; ++l) {
        std::vector<Rational> c1(n2_, Rational(0)), c2(n2_, Rational(0));
        c1[pair_index(2 * k, 2 * l)] = 1;
        c1[pair_index(2 * k + 1, 2 * l + 1)] = 1;
        c2[pair_index(2 * k, 2 * l + 1)] = 1;
        c2[pair_index(2 * k + 1, 2 * l)] = -1;
        cols.push_back(std::move(c1));
        cols.push_back(std::move(c2));
      }
    return cols_to_matrix(cols);
  }

  /// Basis of u(n)^perp (the (2,0)+(0,2)-forms) inside Lambda^2.
  QMatrix uperp_basis() const {
    std::vector<std::vector<Rational>> cols;
    for (int k = 0; k < n_; ++k)
      for (int l = k + 1; l < n_; ++l) {
        std::vector<Rational> c1(n2_, Rational(0)), c2(n2_, Rational(0));
        c1[pair_index(2 * k, 2 * l)] = 1;
        c1[pair_index(2 * k + 1, 2 * l + 1)] = -1;
        c2[pair_index(2 * k, 2 * l + 1)] = 1;
        c2[pair_index(2 * k + 1, 2 * l)] = 1;
        cols.push_back(std::move(c1));
        cols.push_back(std::move(c2));
      }
    return cols_to_matrix(cols);
  }

 private:
  QMatrix cols_to_matrix(const std::vector<std::vector<Rational>>& cols) const {
    QMatrix m(n2_, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (int i = 0; i < n2_; ++i) m(i, j) = cols[j][i];
    return m;
  }

  int n_, dim_, n2_ = 0;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<int> pair_idx_;
  std::vector<std::pair<int, int>> sym_pairs_;
  std::vector<int> sym_idx_;
  std::vector<std::array<int, 4>> quads_;
};

}  // namespace ahcurv
