// Copyright 2026 The ahcurv Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "ahcurv/scalar.hpp"

namespace ahcurv {

enum class Sym { none, alternating, symmetric_pair };

/// Dense real multilinear array of rank k over R^{2n}, indexed in the
/// adapted orthonormal basis.  Values are immutable in spirit: operations
/// return fresh tensors and never mutate shared state.
template <class S>
class Tensor {
 public:
  Tensor() : dim_(0), rank_(0) {}
  Tensor(int dim, int rank, Sym sym = Sym::none)
      : dim_(dim), rank_(rank), sym_(sym), c_(size_of(dim, rank), scalar_traits<S>::zero()) {
    if (dim <= 0 || rank < 0) throw std::invalid_argument("bad tensor shape");
  }

  static std::size_t size_of(int dim, int rank) {
    std::size_t s = 1;
    for (int i = 0; i < rank; ++i) s *= static_cast<std::size_t>(dim);
    return s;
  }

  int dim() const { return dim_; }
  int rank() const { return rank_; }
  Sym sym() const { return sym_; }
  void set_sym(Sym s) { sym_ = s; }

  const std::vector<S>& data() const { return c_; }
  std::vector<S>& data() { return c_; }

  std::size_t flat(const std::vector<int>& idx) const {
    std::size_t f = 0;
    for (int i = 0; i < rank_; ++i) f = f * dim_ + static_cast<std::size_t>(idx[i]);
    return f;
  }

  const S& at(const std::vector<int>& idx) const { return c_[flat(idx)]; }
  S& at(const std::vector<int>& idx) { return c_[flat(idx)]; }

  // convenience accessors up to rank 4 (0-based indices)
  const S& operator()(int i) const { return c_[static_cast<std::size_t>(i)]; }
  S& operator()(int i) { return c_[static_cast<std::size_t>(i)]; }
  const S& operator()(int i, int j) const { return c_[idx2(i, j)]; }
  S& operator()(int i, int j) { return c_[idx2(i, j)]; }
  const S& operator()(int i, int j, int k) const { return c_[idx3(i, j, k)]; }
  S& operator()(int i, int j, int k) { return c_[idx3(i, j, k)]; }
  const S& operator()(int i, int j, int k, int l) const { return c_[idx4(i, j, k, l)]; }
  S& operator()(int i, int j, int k, int l) { return c_[idx4(i, j, k, l)]; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (!scalar_traits<S>::is_zero(x)) return false;
    return true;
  }

  Tensor& operator+=(const Tensor& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  Tensor& operator-=(const Tensor& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Tensor& operator*=(const S& s) {
    for (auto& x : c_) x *= s;
    return *this;
  }

  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(const S& s, Tensor a) { return a *= s; }

  friend bool operator==(const Tensor& a, const Tensor& b) {
    if (a.dim_ != b.dim_ || a.rank_ != b.rank_) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!scalar_traits<S>::is_zero(a.c_[i] - b.c_[i])) return false;
    return true;
  }

 private:
  std::size_t idx2(int i, int j) const {
    return static_cast<std::size_t>(i) * dim_ + j;
  }
  std::size_t idx3(int i, int j, int k) const {
    return (static_cast<std::size_t>(i) * dim_ + j) * dim_ + k;
  }
  std::size_t idx4(int i, int j, int k, int l) const {
    return ((static_cast<std::size_t>(i) * dim_ + j) * dim_ + k) * dim_ + l;
  }
  void check_same_shape(const Tensor& o) const {
    if (dim_ != o.dim_ || rank_ != o.rank_)
      throw std::invalid_argument("tensor shape mismatch");
  }

  int dim_;
  int rank_;
  Sym sym_ = Sym::none;
  std::vector<S> c_;
};

namespace detail {

// Iterates over all rank-tuples of indices in {0..dim-1}.
inline bool next_multi_index(std::vector<int>& idx, int dim) {
  for (int p = static_cast<int>(idx.size()) - 1; p >= 0; --p) {
    if (++idx[p] < dim) return true;
    idx[p] = 0;
  }
  return false;
}

inline int permutation_sign(std::vector<int> p) {
  int sign = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    while (p[i] != static_cast<int>(i)) {
      std::swap(p[i], p[p[i]]);
      sign = -sign;
    }
  }
  return sign;
}

inline std::vector<std::pair<std::vector<int>, int>> all_permutations(int k) {
  std::vector<int> p(k);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::pair<std::vector<int>, int>> out;
  do {
    out.emplace_back(p, permutation_sign(p));
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace detail

/// Unnormalized signed permutation sum: any normalization a formula needs is
/// applied at the call site.  Alternating on alternating input multiplies by
/// k!.  Rank 0 is the identity.
template <class S>
Tensor<S> alternate(const Tensor<S>& t) {
  if (t.rank() == 0) return t;
  Tensor<S> out(t.dim(), t.rank(), Sym::alternating);
  const auto perms = detail::all_permutations(t.rank());
  std::vector<int> idx(t.rank(), 0), pidx(t.rank());
  do {
    S acc = scalar_traits<S>::zero();
    for (const auto& [p, sign] : perms) {
      for (int i = 0; i < t.rank(); ++i) pidx[i] = idx[p[i]];
      if (sign > 0)
        acc += t.at(pidx);
      else
        acc -= t.at(pidx);
    }
    out.at(idx) = acc;
  } while (detail::next_multi_index(idx, t.dim()));
  return out;
}

/// Antisymmetrizes the first two slots only:
/// (skew_pair t)(X,Y,...) = t(X,Y,...) - t(Y,X,...).
template <class S>
Tensor<S> skew_pair(const Tensor<S>& t) {
  if (t.rank() < 2) throw std::invalid_argument("rank too small");
  Tensor<S> out(t.dim(), t.rank());
  std::vector<int> idx(t.rank(), 0), sidx(t.rank());
  do {
    sidx = idx;
    std::swap(sidx[0], sidx[1]);
    out.at(idx) = t.at(idx) - t.at(sidx);
  } while (detail::next_multi_index(idx, t.dim()));
  return out;
}

/// Shuffle-convention wedge, no 1/(p!q!) factor; with the paper's 1/p! inner
/// product this gives <e1^e2, e1^e2> = 1.
template <class S>
Tensor<S> wedge(const Tensor<S>& a, const Tensor<S>& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
  if (a.sym() != Sym::alternating && a.rank() > 1)
    throw std::invalid_argument("wedge: first factor not alternating");
  if (b.sym() != Sym::alternating && b.rank() > 1)
    throw std::invalid_argument("wedge: second factor not alternating");
  const int p = a.rank(), q = b.rank(), k = p + q;
  Tensor<S> out(a.dim(), k, Sym::alternating);

  // enumerate (p,q)-shuffles once
  std::vector<std::vector<int>> shuffles;
  std::vector<int> comb(p);
  std::iota(comb.begin(), comb.end(), 0);
  if (p == 0 || q == 0) {
    shuffles.push_back(comb);
  } else {
    while (true) {
      shuffles.push_back(comb);
      int i = p - 1;
      while (i >= 0 && comb[i] == k - p + i) --i;
      if (i < 0) break;
      ++comb[i];
      for (int j = i + 1; j < p; ++j) comb[j] = comb[j - 1] + 1;
    }
  }

  std::vector<int> idx(k, 0), aidx(p), bidx(q);
  std::vector<char> taken(k);
  do {
    S acc = scalar_traits<S>::zero();
    for (const auto& sel : shuffles) {
      std::fill(taken.begin(), taken.end(), 0);
      int sign = 1;
      for (int i = 0; i < p; ++i) taken[sel[i]] = 1;
      // sign of the shuffle: inversions = unselected slots left of each selected
      int seen_rest = 0;
      for (int pos = 0; pos < k; ++pos) {
        if (taken[pos])
          sign = (seen_rest % 2 == 0) ? sign : -sign;
        else
          ++seen_rest;
      }
      for (int i = 0; i < p; ++i) aidx[i] = idx[sel[i]];
      int bj = 0;
      for (int pos = 0; pos < k; ++pos)
        if (!taken[pos]) bidx[bj++] = idx[pos];
      const S term = a.at(aidx) * b.at(bidx);
      if (sign > 0)
        acc += term;
      else
        acc -= term;
    }
    out.at(idx) = acc;
  } while (detail::next_multi_index(idx, a.dim()));
  return out;
}

/// <a,b> = (1/p!) sum a(e_i1..e_ip) b(e_i1..e_ip) over all index tuples.
template <class S>
S form_inner(const Tensor<S>& a, const Tensor<S>& b) {
  if (a.rank() != b.rank() || a.dim() != b.dim())
    throw std::invalid_argument("rank mismatch");
  S acc = scalar_traits<S>::zero();
  for (std::size_t i = 0; i < a.data().size(); ++i) acc += a.data()[i] * b.data()[i];
  S fact = scalar_traits<S>::one();
  for (int i = 2; i <= a.rank(); ++i) fact *= S(i);
  return acc / fact;
}

/// Metric trace over two slots in the orthonormal basis (0-based slots).
template <class S>
Tensor<S> contract(const Tensor<S>& t, int s1, int s2) {
  if (s1 == s2 || s1 < 0 || s2 < 0 || s1 >= t.rank() || s2 >= t.rank())
    throw std::invalid_argument("out-of-range slots");
  if (s1 > s2) std::swap(s1, s2);
  Tensor<S> out(t.dim(), t.rank() - 2);
  std::vector<int> oidx(std::max(t.rank() - 2, 0), 0), fidx(t.rank());
  bool more = true;
  while (more) {
    S acc = scalar_traits<S>::zero();
    for (int e = 0; e < t.dim(); ++e) {
      int oj = 0;
      for (int p = 0; p < t.rank(); ++p) {
        if (p == s1 || p == s2)
          fidx[p] = e;
        else
          fidx[p] = oidx[oj++];
      }
      acc += t.at(fidx);
    }
    out.at(oidx) = acc;
    if (oidx.empty()) break;
    more = detail::next_multi_index(oidx, t.dim());
  }
  return out;
}

/// Interior product in the first slot: (x -| a)(...) = a(x, ...).
template <class S>
Tensor<S> interior(const std::vector<S>& x, const Tensor<S>& a) {
  if (a.rank() < 1) throw std::invalid_argument("interior: rank 0");
  if (static_cast<int>(x.size()) != a.dim()) throw std::invalid_argument("interior: bad vector");
  Tensor<S> out(a.dim(), a.rank() - 1, a.sym() == Sym::alternating ? Sym::alternating : Sym::none);
  std::vector<int> oidx(std::max(a.rank() - 1, 0), 0), fidx(a.rank());
  bool more = true;
  while (more) {
    S acc = scalar_traits<S>::zero();
    for (int e = 0; e < a.dim(); ++e) {
      if (scalar_traits<S>::is_zero(x[e])) continue;
      fidx[0] = e;
      for (int p = 1; p < a.rank(); ++p) fidx[p] = oidx[p - 1];
      acc += x[e] * a.at(fidx);
    }
    out.at(oidx) = acc;
    if (oidx.empty()) break;
    more = detail::next_multi_index(oidx, a.dim());
  }
  return out;
}

template <class S>
Tensor<S> tensor_product(const Tensor<S>& a, const Tensor<S>& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
  Tensor<S> out(a.dim(), a.rank() + b.rank());
  std::vector<int> idx(out.rank(), 0), aidx(a.rank()), bidx(b.rank());
  do {
    for (int i = 0; i < a.rank(); ++i) aidx[i] = idx[i];
    for (int j = 0; j < b.rank(); ++j) bidx[j] = idx[a.rank() + j];
    out.at(idx) = a.at(aidx) * b.at(bidx);
  } while (detail::next_multi_index(idx, a.dim()));
  return out;
}

/// True antisymmetry check under every transposition of slots.
template <class S>
bool is_alternating(const Tensor<S>& t) {
  std::vector<int> idx(t.rank(), 0), sidx(t.rank());
  if (t.rank() < 2) return true;
  do {
    for (int s = 0; s + 1 < t.rank(); ++s) {
      sidx = idx;
      std::swap(sidx[s], sidx[s + 1]);
      if (!scalar_traits<S>::is_zero(t.at(idx) + t.at(sidx))) return false;
    }
  } while (detail::next_multi_index(idx, t.dim()));
  return true;
}

}  // namespace ahcurv
