// Copyright 2026 The ahcurv Authors
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ahcurv/structure.hpp"
#include "ahcurv/tensor.hpp"

using namespace ahcurv;
using QT = Tensor<Rational>;

namespace {

QT basis_one_form(int dim, int i) {
  QT t(dim, 1, Sym::alternating);
  t(i) = 1;
  return t;
}

QT random_tensor(int dim, int rank, std::mt19937_64& rng) {
  QT t(dim, rank);
  std::uniform_int_distribution<int> d(-9, 9);
  for (auto& x : t.data()) x = d(rng);
  return t;
}

QT random_form(int dim, int rank, std::mt19937_64& rng) {
  QT t = alternate(random_tensor(dim, rank, rng));
  t.set_sym(Sym::alternating);
  return t;
}

}  // namespace

TEST_CASE("alternate on rank 2") {
  const int dim = 4;
  QT e1 = basis_one_form(dim, 0), e2 = basis_one_form(dim, 1);
  QT t = tensor_product(e1, e2);
  QT a = alternate(t);
  CHECK(a(0, 1) == Rational(1));
  CHECK(a(1, 0) == Rational(-1));
  CHECK(alternate(tensor_product(e1, e1)).is_zero());
}

TEST_CASE("alternate twice is k! alternate") {
  std::mt19937_64 rng(7);
  QT t = random_tensor(4, 4, rng);
  QT a = alternate(t);
  QT aa = alternate(a);
  QT scaled = Rational(24) * a;
  CHECK(aa == scaled);
}

TEST_CASE("skew_pair") {
  std::mt19937_64 rng(11);
  QT t = random_tensor(4, 3, rng);
  QT s = skew_pair(t);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) CHECK(s(i, j, k) == t(i, j, k) - t(j, i, k));
  // symmetric-in-first-two input dies
  QT sym(4, 2);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) sym(i, j) = Rational(i + j);
  CHECK(skew_pair(sym).is_zero());
  CHECK_THROWS_AS(skew_pair(QT(4, 1)), std::invalid_argument);
}

TEST_CASE("wedge convention anchor") {
  const int dim = 4;
  QT e1 = basis_one_form(dim, 0), e2 = basis_one_form(dim, 1);
  QT w = wedge(e1, e2);
  CHECK(w(0, 1) == Rational(1));
  CHECK(w(1, 0) == Rational(-1));
  CHECK(form_inner(w, w) == Rational(1));
}

TEST_CASE("omega wedge omega at n=2") {
  UnStructure<Rational> u(2);
  QT w2 = wedge(u.omega(), u.omega());
  // omega = -(e12 + e34); omega^omega = 2 e1234
  CHECK(w2(0, 1, 2, 3) == Rational(2));
}

TEST_CASE("graded commutativity") {
  std::mt19937_64 rng(3);
  QT a = random_form(4, 1, rng);
  QT b = random_form(4, 2, rng);
  QT lhs = wedge(a, b);
  QT rhs = wedge(b, a);
  CHECK(lhs == rhs);  // (-1)^{1*2} = +1
}

TEST_CASE("wedge associativity at 2n=4") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 5; ++trial) {
    QT a = random_form(4, 1, rng);
    QT b = random_form(4, 1, rng);
    QT c = random_form(4, 2, rng);
    CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
  }
}

TEST_CASE("form_inner examples") {
  UnStructure<Rational> u2(2), u3(3);
  CHECK(form_inner(u2.omega(), u2.omega()) == Rational(2));
  CHECK(form_inner(u3.omega(), u3.omega()) == Rational(3));
  CHECK(form_inner(u2.psi_plus(), u2.psi_plus()) == Rational(2));
  CHECK(form_inner(u3.psi_plus(), u3.psi_plus()) == Rational(4));
  CHECK(form_inner(u3.psi_plus(), u3.psi_minus()) == Rational(0));
}

TEST_CASE("form_inner positive definite by sampling") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    QT a = random_form(6, 2, rng);
    if (a.is_zero()) continue;
    CHECK(form_inner(a, a) > 0);
  }
}

TEST_CASE("contract") {
  UnStructure<Rational> u(3);
  QT trg = contract(u.g(), 0, 1);
  CHECK(trg.data()[0] == Rational(6));
  CHECK(contract(u.omega(), 0, 1).data()[0] == Rational(0));
  std::mt19937_64 rng(17);
  QT a = random_form(6, 1, rng), b = random_form(6, 1, rng);
  QT ab = tensor_product(a, b);
  CHECK(contract(ab, 0, 1).data()[0] == form_inner(a, b));
  CHECK_THROWS_AS(contract(ab, 0, 2), std::invalid_argument);
}

TEST_CASE("interior product") {
  UnStructure<Rational> u(2);
  QT e12 = wedge(basis_one_form(4, 0), basis_one_form(4, 1));
  auto x = u.basis_vector(0);
  QT r = interior(x, e12);
  CHECK(r(1) == Rational(1));
  CHECK(r(0) == Rational(0));
  CHECK_THROWS_AS(interior(x, QT(4, 0)), std::invalid_argument);
}

TEST_CASE("interior psi identities at n=3") {
  // <X -| psi+, Y -| psi+> = 2<X,Y>, <X -| psi+, Y -| psi-> = -2 omega(X,Y)
  UnStructure<Rational> u(3);
  for (int xi = 0; xi < 6; ++xi)
    for (int yi = 0; yi < 6; ++yi) {
      auto X = u.basis_vector(xi);
      auto Y = u.basis_vector(yi);
      QT xp = interior(X, u.psi_plus());
      QT yp = interior(Y, u.psi_plus());
      QT ym = interior(Y, u.psi_minus());
      Rational g = (xi == yi) ? 1 : 0;
      CHECK(form_inner(xp, yp) == Rational(2) * g);
      CHECK(form_inner(xp, ym) == Rational(-2) * u.omega()(xi, yi));
    }
}

TEST_CASE("float mode tracks exact mode") {
  std::mt19937_64 rng(23);
  QT a = random_form(4, 2, rng), b = random_form(4, 2, rng);
  Tensor<double> af(4, 2, Sym::alternating), bf(4, 2, Sym::alternating);
  for (std::size_t i = 0; i < a.data().size(); ++i) {
    af.data()[i] = a.data()[i].get_d();
    bf.data()[i] = b.data()[i].get_d();
  }
  const double exact = form_inner(a, b).get_d();
  const double approx = form_inner(af, bf);
  CHECK(std::abs(exact - approx) <= 1e-9 * (1.0 + std::abs(exact)));
}
