#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <map>
#include <random>

#include "jkone/laurent.hpp"

using jkone::Laurent;
using jkone::Var;

namespace {

Laurent L(const char* text, Var v = Var::T) { return Laurent::parse(text, v); }

// Independent multiplication oracle: plain map accumulation over long longs.
Laurent mul_oracle(const Laurent& p, const Laurent& q) {
  std::map<long long, long> acc;
  for (const auto& [ea, ca] : p.terms())
    for (const auto& [eb, cb] : q.terms())
      acc[ea + eb] += ca.get_si() * cb.get_si();
  std::vector<Laurent::Term> terms;
  for (auto& [e, c] : acc)
    if (c != 0) terms.emplace_back(e, c);
  return Laurent(p.var(), std::move(terms));
}

// Independent synthetic-division oracle for division by (t - r), r = -1:
// coefficients ascending from exponent 0, divisor root known.
std::vector<long> synthetic_divide_at_minus_one(std::vector<long> coeffs) {
  // divide sum c_i t^i by (t + 1) from the top; quotient has degree d-1
  std::vector<long> quot(coeffs.size() - 1, 0);
  for (std::size_t i = coeffs.size() - 1; i >= 1; --i) {
    quot[i - 1] = coeffs[i];
    coeffs[i - 1] -= coeffs[i];  // remainder update for root -1
    coeffs[i] = 0;
  }
  REQUIRE(coeffs[0] == 0);  // exact division
  return quot;
}

Laurent random_poly(std::mt19937& rng, Var v = Var::T) {
  std::uniform_int_distribution<int> nterms(0, 6), expd(-6, 6), coefd(-9, 9);
  std::vector<Laurent::Term> terms;
  const int n = nterms(rng);
  for (int i = 0; i < n; ++i) terms.emplace_back(expd(rng), coefd(rng));
  return Laurent(v, std::move(terms));
}

}  // namespace

TEST_CASE("canonical form and accessors") {
  Laurent p(Var::T, {{2, 1}, {0, 3}, {2, -1}, {5, 0}});
  CHECK(p == L("3"));
  CHECK(Laurent::zero(Var::T).is_zero());
  CHECK(L("t^2 + t^-3").min_exp() == -3);
  CHECK(L("t^2 + t^-3").max_exp() == 2);
  CHECK(L("2*t^4").coeff(4) == 2);
  CHECK(L("2*t^4").coeff(3) == 0);
}

TEST_CASE("addition") {
  CHECK(L("1 + t") + L("1 - t") == L("2"));
  const Laurent p = L("t^-2 + 3*t");
  CHECK(p + Laurent::zero(Var::T) == p);
  CHECK(L("t^-1") + L("t") == L("t^-1 + t"));
  CHECK_THROWS_AS(L("t") + Laurent::constant(Var::A, 1), jkone::variable_mismatch);
}

TEST_CASE("multiplication") {
  CHECK(L("1 + t") * L("1 - t") == L("1 - t^2"));
  const Laurent a = L("t^3 - 1"), b = L("t^4 - 1");
  const Laurent prod = a * b;
  CHECK(prod == L("t^7 - t^4 - t^3 + 1"));
  CHECK(prod == mul_oracle(a, b));
  CHECK(L("t^-3") * L("1 + t") == L("t^-3 + t^-2"));
}

TEST_CASE("exact division") {
  const Laurent n1 = L("t^6 + t^4 + t^3 - 1");
  const Laurent q = jkone::div_exact(n1, L("1 + t"));
  CHECK(q == L("t^5 - t^4 + 2*t^3 - t^2 + t - 1"));
  // independent synthetic-division oracle, ascending coefficients of N_1
  const auto oq = synthetic_divide_at_minus_one({-1, 0, 0, 1, 1, 0, 1});
  std::vector<Laurent::Term> oterms;
  for (std::size_t i = 0; i < oq.size(); ++i)
    if (oq[i] != 0) oterms.emplace_back(static_cast<Laurent::Exp>(i), oq[i]);
  CHECK(q == Laurent(Var::T, std::move(oterms)));

  CHECK(jkone::div_exact(L("1 - t^2"), L("1 + t")) == L("1 - t"));
  CHECK_THROWS_AS(jkone::div_exact(L("t^2 + 1"), L("1 + t")), jkone::not_divisible);
  CHECK_THROWS_AS(jkone::div_exact(L("t"), Laurent::zero(Var::T)),
                  jkone::division_by_zero);
  // Laurent shifts divide out exactly
  CHECK(jkone::div_exact(L("t^-1 + 1"), L("t^-3")) == L("t^2 + t^3"));
}

TEST_CASE("divisibility predicate") {
  CHECK(jkone::divides(L("t^2 + t + 1"), L("t^3 - 1")));
  const Laurent p1 = -(L("t^3 - 1") * L("t^4 - 1"));
  CHECK(jkone::divides(L("1 + t"), p1));
  CHECK_FALSE(jkone::divides(jkone::cyclotomic(5), p1));
  CHECK_THROWS_AS(jkone::divides(Laurent::zero(Var::T), L("t")),
                  jkone::division_by_zero);
}

TEST_CASE("complex evaluation") {
  using C = std::complex<double>;
  const C i(0.0, 1.0);
  CHECK(std::abs(jkone::eval_complex(L("t^2 + 1"), i)) < 1e-15);

  // J_1 evaluated at 1 and i; the oracle sums the six monomials directly.
  const Laurent j1 = L("t^-1 - t^-2 + 2*t^-3 - t^-4 + t^-5 - t^-6");
  CHECK(std::abs(jkone::eval_complex(j1, C(1.0, 0.0)) - C(1.0, 0.0)) < 1e-12);
  C direct = 0.0;
  for (const auto& [e, c] : j1.terms()) direct += c.get_d() * jkone::pow_int(i, e);
  CHECK(std::abs(direct - C(1.0, 0.0)) < 1e-12);
  CHECK(std::abs(jkone::eval_complex(j1, i) - direct) < 1e-12);

  CHECK_THROWS_AS(jkone::eval_complex(L("t^-1"), C(0.0, 0.0)), jkone::pole_at_zero);
  CHECK(jkone::eval_complex(L("t^2"), C(0.0, 0.0)) == C(0.0, 0.0));
}

TEST_CASE("exact evaluation at units") {
  const Laurent p = L("t^-2 - 3*t + 5");
  CHECK(jkone::eval_at_one(p) == 3);
  CHECK(jkone::eval_at_minus_one(p) == 9);
  CHECK(jkone::eval_at_minus_one(L("t^-1")) == -1);
}

TEST_CASE("derivative") {
  CHECK(jkone::derivative(L("t^3 - t^2 - 1")) == L("3*t^2 - 2*t"));
  CHECK(jkone::derivative(L("t^-1")) == L("-t^-2"));
  // N_1'(-1): differentiate t^6 + t^4 + t^3 - 1 and evaluate exactly
  const Laurent d = jkone::derivative(L("t^6 + t^4 + t^3 - 1"));
  CHECK(d == L("6*t^5 + 4*t^3 + 3*t^2"));
  CHECK(jkone::eval_at_minus_one(d) == -7);
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(jkone::cyclotomic(1) == L("t - 1"));
  CHECK(jkone::cyclotomic(2) == L("t + 1"));
  // factor t^6 - 1 by its proper cyclotomic divisors
  Laurent f6 = L("t^6 - 1");
  for (int d : {1, 2, 3}) f6 = jkone::div_exact(f6, jkone::cyclotomic(d));
  CHECK(jkone::cyclotomic(6) == f6);
  CHECK(jkone::cyclotomic(6) == L("t^2 - t + 1"));
  Laurent f12 = L("t^12 - 1");
  for (int d : {1, 2, 3, 4, 6}) f12 = jkone::div_exact(f12, jkone::cyclotomic(d));
  CHECK(jkone::cyclotomic(12) == f12);
  CHECK(jkone::cyclotomic(12) == L("t^4 - t^2 + 1"));
}

TEST_CASE("cyclotomic product identity up to 60") {
  for (int n = 1; n <= 60; ++n) {
    Laurent prod = Laurent::constant(Var::T, 1);
    for (int d = 1; d <= n; ++d)
      if (n % d == 0) prod = prod * jkone::cyclotomic(d);
    const Laurent expect =
        Laurent::monomial(Var::T, n) - Laurent::constant(Var::T, 1);
    CHECK(prod == expect);
  }
}

TEST_CASE("change of variable") {
  const Laurent pa = Laurent(Var::A, {{-4, 1}, {-8, 1}});
  CHECK(jkone::change_variable(pa, Var::T) == L("t + t^2"));
  CHECK(jkone::change_variable(L("q^2", Var::Q), Var::T) == L("t"));
  CHECK_THROWS_AS(jkone::change_variable(Laurent::monomial(Var::A, -2), Var::T),
                  jkone::exponent_not_convertible);
  CHECK(jkone::change_variable(Laurent::monomial(Var::A, -2), Var::Q) ==
        L("q", Var::Q));
  CHECK(jkone::change_variable(L("t"), Var::A) == Laurent::monomial(Var::A, -4));
  CHECK(jkone::change_variable(L("t"), Var::Q) == L("q^2", Var::Q));
}

TEST_CASE("rendering and parsing") {
  const Laurent j1 = L("t^-1 - t^-2 + 2*t^-3 - t^-4 + t^-5 - t^-6");
  CHECK(jkone::to_string(j1) == "-t^-6 + t^-5 - t^-4 + 2*t^-3 - t^-2 + t^-1");
  CHECK(jkone::to_string(j1, jkone::TermOrder::Descending) ==
        "t^-1 - t^-2 + 2*t^-3 - t^-4 + t^-5 - t^-6");
  CHECK(jkone::to_string(Laurent::zero(Var::T)) == "0");
  CHECK(jkone::to_string(L("-3")) == "-3");
  CHECK(Laurent::parse(jkone::to_string(j1), Var::T) == j1);
  CHECK(jkone::to_string(Laurent(Var::A, {{-3, -1}})) == "-A^-3");
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(20260809);
  for (int iter = 0; iter < 1000; ++iter) {
    const Laurent p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
    CHECK((p + q) * r == p * r + q * r);
    CHECK(p * q == q * p);
    CHECK((p * q) * r == p * (q * r));
  }
}

TEST_CASE("division inverts multiplication") {
  std::mt19937 rng(7);
  int done = 0;
  while (done < 1000) {
    const Laurent p = random_poly(rng), q = random_poly(rng);
    if (q.is_zero()) continue;
    CHECK(jkone::div_exact(p * q, q) == p);
    ++done;
  }
}

TEST_CASE("evaluation is multiplicative on the unit circle") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> ang(0.0, 6.283185307179586);
  int done = 0;
  while (done < 300) {
    const Laurent p = random_poly(rng), q = random_poly(rng);
    if (p.is_zero() || q.is_zero()) continue;
    const double th = ang(rng);
    const std::complex<double> z(std::cos(th), std::sin(th));
    const auto lhs = jkone::eval_complex(p * q, z);
    const auto rhs = jkone::eval_complex(p, z) * jkone::eval_complex(q, z);
    const double scale = std::max(1.0, std::abs(rhs));
    CHECK(std::abs(lhs - rhs) / scale < 1e-10);
    ++done;
  }
}
