#pragma once

#include <complex>
#include <cstdint>
#include <utility>

#include "jkone/laurent.hpp"

namespace jkone::dtwist {

/// A primitive root of unity zeta = exp(2*pi*i*k/N), stored as the reduced
/// fraction k/N with 0 <= k < N and gcd(k, N) = 1.
struct RootOfUnity {
  std::int64_t k = 0;
  std::int64_t order = 1;  // N = ord(zeta)

  RootOfUnity(std::int64_t k_, std::int64_t order_);
  std::complex<double> value() const;
};

// Numerator polynomial N_n(t) = t^(2n)(1 + t^2 + t^4) + t^3 - t^2 - 1.
// Vanishes at t = -1, degree 2n + 4.
Laurent numerator(int n);

// Closed-form Jones polynomial of the double-twist knot C(2n, 3):
// J_n(t) = t^(-3n-3) * N_n(t) / (1 + t), exact Laurent polynomial with
// support in [-3n-3, -n] and J_n(1) = 1.
Laurent jones(int n);

// The cleared relation polynomial p_n(t) = N_n(t) - t^(3n+3)(1 + t),
// which satisfies p_n = t^(3n+3)(1+t)(J_n - 1) exactly.  Its roots away
// from the spurious t = -1 factor are the solutions of J_n(t) = 1.
Laurent cleared(int n);

// Determinant-type special value J_n(-1) = (-1)^n (6n+1); cross-checked
// against exact evaluation of the closed form.
mpz_class det_at_minus_one(int n);

/// The cubic in x = zeta^n obtained from J_n(zeta) = 1 after clearing
/// denominators:  c3*x^3 + c2*x^2 + c1*x + c0 = 0 with coefficients
/// polynomials in zeta (variable T stands in for zeta).
struct CubicInZeta {
  Laurent c3, c2, c1, c0;
};

CubicInZeta cubic_for_zeta();

// Verifies the exact polynomial identity
//   c3 x^3 + c2 x^2 + c0 == (x - 1) * (z^3(1+z) x^2 + (z^3-1-z^2)(x+1))
// by symbolic expansion in x with Laurent coefficients in zeta.
bool factor_identity_holds();

// Smallest n with J_n(zeta) = 1 for zeta != -1: n = ord(zeta).  Verifies
// the numeric value and the exact cyclotomic certificate before returning.
// zeta = -1 raises minus_one_excluded with the obstruction value.
int witness_order(const RootOfUnity& zeta);

// The two roots of z^3(1+z) x^2 + (z^3-1-z^2) x + (z^3-1-z^2) = 0 by a
// cancellation-safe quadratic formula; |z^3(1+z)| < 1e-14 raises
// degenerate_leading_coefficient.
std::pair<std::complex<double>, std::complex<double>>
quadratic_branch_roots(std::complex<double> zeta);

}  // namespace jkone::dtwist
