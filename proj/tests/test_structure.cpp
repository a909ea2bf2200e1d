// Copyright 2026 The ahcurv Authors
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include "ahcurv/structure.hpp"

using namespace ahcurv;
using QT = Tensor<Rational>;

TEST_CASE("build invariants") {
  for (int n = 2; n <= 5; ++n) {
    UnStructure<Rational> u(n);
    const int dim = 2 * n;
    // I^2 = -1 and orthogonality on basis vectors
    for (int j = 0; j < dim; ++j) {
      auto v = u.basis_vector(j);
      auto iiv = u.apply_I(u.apply_I(v));
      for (int i = 0; i < dim; ++i) CHECK(iiv[i] == -v[i]);
    }
    // omega(X,Y) = <X, IY>
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) {
        auto iy = u.apply_I(u.basis_vector(j));
        CHECK(u.omega()(i, j) == iy[i]);
      }
    CHECK(u.omega()(0, 1) == Rational(-1));
    // psi norms
    Rational pw2 = 1;
    for (int k = 1; k < n; ++k) pw2 *= 2;
    CHECK(form_inner(u.psi_plus(), u.psi_plus()) == pw2);
    CHECK(form_inner(u.psi_minus(), u.psi_minus()) == pw2);
    CHECK(form_inner(u.psi_plus(), u.psi_minus()) == Rational(0));
    CHECK(is_alternating(u.psi_plus()));
    CHECK(is_alternating(u.psi_minus()));
  }
  CHECK_THROWS_AS(UnStructure<Rational>(1), std::invalid_argument);
  CHECK_THROWS_AS(UnStructure<Rational>(6), std::invalid_argument);
}

TEST_CASE("psi at n=2 matches hand expansion") {
  UnStructure<Rational> u(2);
  QT psip(4, 2, Sym::alternating), psim(4, 2, Sym::alternating);
  psip(0, 2) = 1;
  psip(2, 0) = -1;
  psip(1, 3) = -1;
  psip(3, 1) = 1;
  psim(0, 3) = 1;
  psim(3, 0) = -1;
  psim(1, 2) = 1;
  psim(2, 1) = -1;
  CHECK(u.psi_plus() == psip);
  CHECK(u.psi_minus() == psim);
}

TEST_CASE("I_slot sends psi+ to psi-") {
  for (int n = 2; n <= 4; ++n) {
    UnStructure<Rational> u(n);
    for (int slot = 1; slot <= n; ++slot)
      CHECK(I_slot(u.psi_plus(), slot) == u.psi_minus());
  }
  UnStructure<Rational> u(2);
  CHECK_THROWS_AS(I_slot(u.omega(), 3), std::invalid_argument);
}

TEST_CASE("I_slot on omega and g") {
  UnStructure<Rational> u(3);
  // I_(1) omega (X,Y) = -omega(IX,Y) = -<X,Y>
  QT neg_g = Rational(-1) * u.g();
  CHECK(I_slot(u.omega(), 1) == neg_g);
  // I_(1) g (X,Y) = -<IX,Y> = omega(X,Y)
  CHECK(I_slot(u.g(), 1) == u.omega());
}

TEST_CASE("I_total fixes omega and g") {
  UnStructure<Rational> u(3);
  CHECK(I_total(u.omega()) == u.omega());
  CHECK(I_total(u.g()) == u.g());
  // psi+ has type (n,0)+(0,n); at n=3, I Psi = (-1)^3 i^3 Psi = i Psi, so
  // I psi+ = -psi- and I psi- = psi+
  UnStructure<Rational> u3(3);
  CHECK(I_total(u3.psi_plus()) == Rational(-1) * u3.psi_minus());
  CHECK(I_total(u3.psi_minus()) == u3.psi_plus());
}

TEST_CASE("I_total involutive on even rank") {
  UnStructure<Rational> u(2);
  QT a = u.psi_minus();
  CHECK(I_total(I_total(a)) == a);
}

TEST_CASE("type projection") {
  UnStructure<Rational> u(2);
  CHECK(type_project(u.omega(), FormType::type11) == u.omega());
  CHECK(type_project(u.psi_plus(), FormType::type20) == u.psi_plus());
  CHECK(type_project(u.psi_plus(), FormType::type11).is_zero());
  // decomposition sums to the identity on e1^e3
  QT e13(4, 2, Sym::alternating);
  e13(0, 2) = 1;
  e13(2, 0) = -1;
  QT sum = type_project(e13, FormType::type11) + type_project(e13, FormType::type20);
  CHECK(sum == e13);
  // parts are orthogonal
  CHECK(form_inner(type_project(e13, FormType::type11), type_project(e13, FormType::type20)) ==
        Rational(0));
}

TEST_CASE("psi wedges give the volume form") {
  // Psi ^ conj(Psi) is a nonzero volume multiple; which real wedge carries it
  // depends on the parity of n: psi+ ^ psi+ for even n, psi+ ^ psi- for odd n.
  {
    UnStructure<Rational> u(2);
    std::vector<int> idx{0, 1, 2, 3};
    CHECK(wedge(u.psi_plus(), u.psi_plus()).at(idx) == Rational(2));
    CHECK(wedge(u.psi_minus(), u.psi_minus()).at(idx) == Rational(2));
    CHECK(wedge(u.psi_plus(), u.psi_minus()).is_zero());
  }
  {
    UnStructure<Rational> u(3);
    std::vector<int> idx{0, 1, 2, 3, 4, 5};
    CHECK(wedge(u.psi_plus(), u.psi_plus()).is_zero());
    CHECK(!scalar_traits<Rational>::is_zero(wedge(u.psi_plus(), u.psi_minus()).at(idx)));
  }
}

TEST_CASE("lambda_p0 basis dimensions") {
  UnStructure<Rational> u(4);
  CHECK(u.lambda_p0_basis(2).size() == 12);  // 2 C(4,2)
  CHECK(u.lambda_p0_basis(3).size() == 8);
  for (const auto& b : u.lambda_p0_basis(2)) {
    CHECK(is_alternating(b));
    // type (2,0)+(0,2): I_total = -id
    CHECK(I_total(b) == Rational(-1) * b);
  }
}
