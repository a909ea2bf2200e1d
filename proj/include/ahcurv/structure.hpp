// Copyright 2026 The ahcurv Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ahcurv/tensor.hpp"

namespace ahcurv {

/// Convention string recorded by fixtures, reports and jet files.
inline const char* kConvention =
    "adapted basis e(2k)=I e(2k-1), I e(2k)=-e(2k-1); omega(X,Y)=<X,IY>; "
    "Psi=(e1+ie2)^...^(e(2n-1)+ie(2n)); R(X,Y,Z,W)=<R_{X,Y}Z,W>, "
    "R_{X,Y}=nabla_{[X,Y]}-[nabla_X,nabla_Y]; shuffle wedge; unnormalized alternation";

/// Index of I e_j and its sign in the adapted basis (0-based).
inline int I_index(int j) { return (j % 2 == 0) ? j + 1 : j - 1; }
inline int I_sign(int j) { return (j % 2 == 0) ? 1 : -1; }

/// The pointwise U(n)/SU(n) model: metric g (identity in the adapted basis),
/// orthogonal almost complex structure I, Kaehler form omega(X,Y) = <X,IY>,
/// and the real/imaginary parts psi+, psi- of the complex volume form.
template <class S>
class UnStructure {
 public:
  explicit UnStructure(int n) : n_(n), dim_(2 * n) {
    if (n < 2 || n > 5) throw std::invalid_argument("n out of range [2,5]");
    g_ = Tensor<S>(dim_, 2, Sym::symmetric_pair);
    for (int i = 0; i < dim_; ++i) g_(i, i) = scalar_traits<S>::one();
    omega_ = Tensor<S>(dim_, 2, Sym::alternating);
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j)
        if (I_index(j) == i) omega_(i, j) = S(I_sign(j));
    auto [re, im] = complex_volume();
    psi_plus_ = std::move(re);
    psi_minus_ = std::move(im);
  }

  int n() const { return n_; }
  int dim() const { return dim_; }
  const Tensor<S>& g() const { return g_; }
  const Tensor<S>& omega() const { return omega_; }
  const Tensor<S>& psi_plus() const { return psi_plus_; }
  const Tensor<S>& psi_minus() const { return psi_minus_; }

  std::vector<S> apply_I(const std::vector<S>& v) const {
    std::vector<S> out(v.size(), scalar_traits<S>::zero());
    for (int j = 0; j < dim_; ++j) {
      if (scalar_traits<S>::is_zero(v[j])) continue;
      out[I_index(j)] += S(I_sign(j)) * v[j];
    }
    return out;
  }

  std::vector<S> basis_vector(int i) const {
    std::vector<S> v(dim_, scalar_traits<S>::zero());
    v[i] = scalar_traits<S>::one();
    return v;
  }

  /// Real basis of [[lambda^{p,0}]]: real and imaginary parts of the wedges of
  /// (e^{2k-1} + i e^{2k}) over p-element subsets.
  std::vector<Tensor<S>> lambda_p0_basis(int p) const {
    std::vector<Tensor<S>> out;
    std::vector<int> subset;
    build_lambda(p, 0, subset, out);
    return out;
  }

 private:
  std::pair<Tensor<S>, Tensor<S>> complex_volume() const {
    Tensor<S> re(dim_, 0), im(dim_, 0);
    re.data()[0] = scalar_traits<S>::one();
    re.set_sym(Sym::alternating);
    im.set_sym(Sym::alternating);
    for (int k = 0; k < n_; ++k) {
      Tensor<S> a(dim_, 1, Sym::alternating), b(dim_, 1, Sym::alternating);
      a(2 * k) = scalar_traits<S>::one();
      b(2 * k + 1) = scalar_traits<S>::one();
      Tensor<S> re2 = wedge(re, a) - wedge(im, b);
      Tensor<S> im2 = wedge(re, b) + wedge(im, a);
      re = std::move(re2);
      im = std::move(im2);
    }
    return {re, im};
  }

  void build_lambda(int p, int from, std::vector<int>& subset,
                    std::vector<Tensor<S>>& out) const {
    if (static_cast<int>(subset.size()) == p) {
      Tensor<S> re(dim_, 0), im(dim_, 0);
      re.data()[0] = scalar_traits<S>::one();
      re.set_sym(Sym::alternating);
      im.set_sym(Sym::alternating);
      for (int k : subset) {
        Tensor<S> a(dim_, 1, Sym::alternating), b(dim_, 1, Sym::alternating);
        a(2 * k) = scalar_traits<S>::one();
        b(2 * k + 1) = scalar_traits<S>::one();
        Tensor<S> re2 = wedge(re, a) - wedge(im, b);
        Tensor<S> im2 = wedge(re, b) + wedge(im, a);
        re = std::move(re2);
        im = std::move(im2);
      }
      out.push_back(re);
      if (p > 0) out.push_back(im);
      return;
    }
    for (int k = from; k < n_; ++k) {
      subset.push_back(k);
      build_lambda(p, k + 1, subset, out);
      subset.pop_back();
    }
  }

  int n_;
  int dim_;
  Tensor<S> g_, omega_, psi_plus_, psi_minus_;
};

/// I_{(i)} b (X_1,..,X_i,..,X_s) = -b(X_1,..,I X_i,..,X_s); slot is 1-based.
template <class S>
Tensor<S> I_slot(const Tensor<S>& b, int slot) {
  if (slot < 1 || slot > b.rank()) throw std::invalid_argument("slot out of range");
  Tensor<S> out(b.dim(), b.rank(), b.sym() == Sym::alternating ? Sym::alternating : Sym::none);
  std::vector<int> idx(b.rank(), 0), src(b.rank());
  if (b.rank() == 0) return b;
  do {
    src = idx;
    src[slot - 1] = I_index(idx[slot - 1]);
    const S v = b.at(src);
    out.at(idx) = (I_sign(idx[slot - 1]) > 0) ? -v : v;
  } while (detail::next_multi_index(idx, b.dim()));
  return out;
}

/// I b (X_1,..,X_s) = (-1)^s b(I X_1,..,I X_s).
template <class S>
Tensor<S> I_total(const Tensor<S>& b) {
  Tensor<S> out(b.dim(), b.rank(), b.sym());
  if (b.rank() == 0) return b;
  std::vector<int> idx(b.rank(), 0), src(b.rank());
  const bool odd = b.rank() % 2 != 0;
  do {
    int sign = odd ? -1 : 1;
    for (int p = 0; p < b.rank(); ++p) {
      src[p] = I_index(idx[p]);
      sign *= I_sign(idx[p]);
    }
    out.at(idx) = (sign > 0) ? b.at(src) : -b.at(src);
  } while (detail::next_multi_index(idx, b.dim()));
  return out;
}

enum class FormType { type11, type20 };  // (1,1) vs (2,0)+(0,2)

/// (1,1)-part = (a + I a)/2; real (2,0)+(0,2)-part = (a - I a)/2.
template <class S>
Tensor<S> type_project(const Tensor<S>& a, FormType part) {
  if (a.rank() != 2) throw std::invalid_argument("type_project needs a 2-form");
  Tensor<S> ia = I_total(a);
  Tensor<S> out = (part == FormType::type11) ? a + ia : a - ia;
  const S half = scalar_traits<S>::one() / S(2);
  out *= half;
  out.set_sym(a.sym());
  return out;
}

}  // namespace ahcurv
