#include "jkone/dtwist.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

namespace jkone::dtwist {

RootOfUnity::RootOfUnity(std::int64_t k_, std::int64_t order_) : k(k_), order(order_) {
  if (order < 1) throw error("root of unity needs positive order");
  if (k < 0 || k >= order) throw error("root of unity index out of range");
  if (std::gcd(k, order) != 1) throw error("root of unity index not coprime to order");
}

std::complex<double> RootOfUnity::value() const {
  const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) /
                       static_cast<double>(order);
  return {std::cos(theta), std::sin(theta)};
}

Laurent numerator(int n) {
  if (n < 1) throw error("twist index must be >= 1");
  const auto e = static_cast<Laurent::Exp>(2 * n);
  return Laurent(Var::T, {{e, 1}, {e + 2, 1}, {e + 4, 1}, {3, 1}, {2, -1}, {0, -1}});
}

namespace {
Laurent one_plus_t() { return Laurent(Var::T, {{0, 1}, {1, 1}}); }
}  // namespace

Laurent jones(int n) {
  // N_n(-1) = 0, so the division is always exact.
  return div_exact(numerator(n), one_plus_t()).shifted(-3 * n - 3);
}

Laurent cleared(int n) {
  const auto e = static_cast<Laurent::Exp>(3 * n + 3);
  return numerator(n) - Laurent(Var::T, {{e, 1}, {e + 1, 1}});
}

mpz_class det_at_minus_one(int n) {
  if (n < 1) throw error("twist index must be >= 1");
  mpz_class expected = 6 * mpz_class(n) + 1;
  if (n % 2 == 1) expected = -expected;
  const mpz_class direct = eval_at_minus_one(jones(n));
  if (direct != expected) {
    std::ostringstream os;
    os << "determinant cross-check failed at n=" << n << ": closed form gives "
       << direct.get_str() << ", formula gives " << expected.get_str();
    throw error(os.str());
  }
  return expected;
}

CubicInZeta cubic_for_zeta() {
  CubicInZeta c;
  c.c3 = Laurent(Var::T, {{3, 1}, {4, 1}});             // z^3 (1 + z)
  c.c2 = Laurent(Var::T, {{0, -1}, {2, -1}, {4, -1}});  // -(1 + z^2 + z^4)
  c.c1 = Laurent::zero(Var::T);
  c.c0 = Laurent(Var::T, {{0, 1}, {2, 1}, {3, -1}});    // 1 + z^2 - z^3
  return c;
}

bool factor_identity_holds() {
  const Laurent lead = Laurent(Var::T, {{3, 1}, {4, 1}});          // z^3(1+z)
  const Laurent m = Laurent(Var::T, {{3, 1}, {0, -1}, {2, -1}});   // z^3 - 1 - z^2
  // (x - 1)(lead*x^2 + m*x + m), coefficients by power of x:
  const Laurent x3 = lead;
  const Laurent x2 = m - lead;
  const Laurent x1 = Laurent::zero(Var::T);  // m - m
  const Laurent x0 = -m;
  const CubicInZeta c = cubic_for_zeta();
  return x3 == c.c3 && x2 == c.c2 && x1 == c.c1 && x0 == c.c0;
}

int witness_order(const RootOfUnity& zeta) {
  if (zeta.order == 2) {
    std::ostringstream os;
    os << "zeta = -1 excluded: J_n(-1) = (-1)^n (6n+1) is never 1";
    throw minus_one_excluded(os.str());
  }
  const int n = static_cast<int>(zeta.order);
  const std::complex<double> jv = eval_complex(jones(n), zeta.value());
  if (std::abs(jv - std::complex<double>(1.0, 0.0)) > 1e-9) {
    std::ostringstream os;
    os << "numeric witness check failed for order " << zeta.order;
    throw error(os.str());
  }
  if (!divides(cyclotomic(zeta.order), cleared(n))) {
    std::ostringstream os;
    os << "cyclotomic certificate failed for order " << zeta.order;
    throw error(os.str());
  }
  return n;
}

std::pair<std::complex<double>, std::complex<double>>
quadratic_branch_roots(std::complex<double> zeta) {
  using C = std::complex<double>;
  const C z3 = zeta * zeta * zeta;
  const C a = z3 * (1.0 + zeta);
  if (std::abs(a) < 1e-14) {
    throw degenerate_leading_coefficient("leading coefficient z^3(1+z) vanishes");
  }
  const C b = z3 - 1.0 - zeta * zeta;
  const C c = b;
  C sq = std::sqrt(b * b - 4.0 * a * c);
  if ((std::conj(b) * sq).real() < 0.0) sq = -sq;
  const C qq = -0.5 * (b + sq);
  if (qq == C(0.0, 0.0)) return {C(0.0, 0.0), C(0.0, 0.0)};
  return {qq / a, c / qq};
}

}  // namespace jkone::dtwist
