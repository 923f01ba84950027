#pragma once

#include "superint/rational.hpp"

namespace superint {

/// Rising factorial (a)_n = a(a+1)...(a+n-1), with (a)_0 = 1.
///
/// Generic over any ring type constructible from an integer, so the same
/// code serves plain rationals and the perturbation polynomials used to
/// resolve removable singularities.
template <class F>
F rising(const F& a, unsigned n) {
  F result(1);
  F term = a;
  for (unsigned i = 0; i < n; ++i) {
    result *= term;
    term += F(1);
  }
  return result;
}

inline Rational pochhammer(const Rational& a, unsigned n) { return rising(a, n); }

Rational factorial(unsigned n);
Rational binomial(unsigned n, unsigned k);

}  // namespace superint
