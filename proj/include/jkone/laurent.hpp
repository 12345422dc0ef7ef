#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "jkone/errors.hpp"

namespace jkone {

// The three variables used across the toolkit.  Exponent bookkeeping:
// t = A^-4 and q = t^(1/2) = A^-2, so one unit of t is -4 units of A and
// one unit of q is -2 units of A.
enum class Var : std::uint8_t { T, Q, A };

char var_letter(Var v);

/// Exact Laurent polynomial over arbitrary-precision integers.
///
/// Terms are kept in canonical form: strictly ascending exponents, no zero
/// coefficients.  Values are immutable after construction; all arithmetic
/// returns fresh values, so instances can be shared freely across threads.
class Laurent {
 public:
  using Exp = std::int64_t;
  using Coef = mpz_class;
  using Term = std::pair<Exp, Coef>;

  Laurent() : var_(Var::T) {}
  explicit Laurent(Var v) : var_(v) {}
  Laurent(Var v, std::vector<Term> terms);

  static Laurent zero(Var v) { return Laurent(v); }
  static Laurent constant(Var v, Coef c);
  static Laurent monomial(Var v, Exp e, Coef c = 1);
  // Parses the textual rendering produced by to_string (either term order).
  static Laurent parse(std::string_view text, Var v);

  Var var() const { return var_; }
  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  Exp min_exp() const;  // requires a nonzero polynomial
  Exp max_exp() const;
  Coef coeff(Exp e) const;  // 0 for absent exponents

  Laurent operator-() const;
  friend Laurent operator+(const Laurent& p, const Laurent& q);
  friend Laurent operator-(const Laurent& p, const Laurent& q);
  friend Laurent operator*(const Laurent& p, const Laurent& q);
  bool operator==(const Laurent& o) const {
    return var_ == o.var_ && terms_ == o.terms_;
  }

  // p * t^k
  Laurent shifted(Exp k) const;

 private:
  Var var_;
  std::vector<Term> terms_;  // ascending exponent, nonzero coefficients

  static void require_same_var(const Laurent& p, const Laurent& q);
  void normalize();
};

// Exact quotient r with r*q == p; throws not_divisible / division_by_zero.
Laurent div_exact(const Laurent& p, const Laurent& q);

// True iff q divides p exactly.  Pure predicate; only throws on q == 0.
bool divides(const Laurent& q, const Laurent& p);

// Numeric evaluation: factors out the lowest power so Horner runs on an
// ordinary polynomial; z == 0 with negative exponents raises pole_at_zero.
std::complex<double> eval_complex(const Laurent& p, std::complex<double> z);

// Exact integer evaluation at the two units of Z.
mpz_class eval_at_one(const Laurent& p);
mpz_class eval_at_minus_one(const Laurent& p);

// Formal term-wise derivative: c*t^e -> (e*c)*t^(e-1).
Laurent derivative(const Laurent& p);

// d-th cyclotomic polynomial in variable T, by exact division of t^d - 1.
Laurent cyclotomic(std::int64_t d);

// Exact change of variable between T, Q and A; throws
// exponent_not_convertible when an exponent does not map to an integer.
Laurent change_variable(const Laurent& p, Var target);

enum class TermOrder { Ascending, Descending };
std::string to_string(const Laurent& p, TermOrder order = TermOrder::Ascending);

// z^k for signed integer k by binary powering (deterministic).
std::complex<double> pow_int(std::complex<double> z, std::int64_t k);

}  // namespace jkone
