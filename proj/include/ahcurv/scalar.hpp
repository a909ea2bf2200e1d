// Copyright 2026 The ahcurv Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ahcurv {

/// Exact scalar used for every decision the library makes.  Arithmetic on
/// mpq_class is closed over the rationals; no rounding ever occurs.
using Rational = mpq_class;

/// Relative tolerance applied to vanishing decisions in float mode.
inline constexpr double kFloatZeroTol = 1e-9;

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
  static constexpr bool exact = true;
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static std::string to_string(const Rational& x) { return x.get_str(); }
  static double to_double(const Rational& x) { return x.get_d(); }
};

template <>
struct scalar_traits<double> {
  static constexpr bool exact = false;
  // |x| <= tol is treated as zero; callers track the relevant scale.
  static bool is_zero(double x) { return std::fabs(x) <= kFloatZeroTol; }
  static double zero() { return 0.0; }
  static double one() { return 1.0; }
  static std::string to_string(double x) { return std::to_string(x); }
  static double to_double(double x) { return x; }
};

inline Rational rational_from_string(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("not a rational: '" + s + "'");
  r.canonicalize();
  return r;
}

template <class To, class From>
To scalar_cast(const From& x);

template <>
inline Rational scalar_cast<Rational, Rational>(const Rational& x) { return x; }
template <>
inline double scalar_cast<double, Rational>(const Rational& x) { return x.get_d(); }
template <>
inline double scalar_cast<double, double>(const double& x) { return x; }

}  // namespace ahcurv
