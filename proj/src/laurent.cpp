#include "jkone/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace jkone {

char var_letter(Var v) {
  switch (v) {
    case Var::T: return 't';
    case Var::Q: return 'q';
    case Var::A: return 'A';
  }
  return '?';
}

Laurent::Laurent(Var v, std::vector<Term> terms) : var_(v), terms_(std::move(terms)) {
  normalize();
}

void Laurent::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
      if (out.back().second == 0) out.pop_back();
    } else if (t.second != 0) {
      out.push_back(std::move(t));
    }
  }
  terms_ = std::move(out);
}

Laurent Laurent::constant(Var v, Coef c) {
  return Laurent(v, {{0, std::move(c)}});
}

Laurent Laurent::monomial(Var v, Exp e, Coef c) {
  return Laurent(v, {{e, std::move(c)}});
}

Laurent::Exp Laurent::min_exp() const {
  if (terms_.empty()) throw error("min_exp of zero polynomial");
  return terms_.front().first;
}

Laurent::Exp Laurent::max_exp() const {
  if (terms_.empty()) throw error("max_exp of zero polynomial");
  return terms_.back().first;
}

Laurent::Coef Laurent::coeff(Exp e) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), e,
      [](const Term& t, Exp x) { return t.first < x; });
  if (it != terms_.end() && it->first == e) return it->second;
  return 0;
}

void Laurent::require_same_var(const Laurent& p, const Laurent& q) {
  if (p.var_ != q.var_) {
    throw variable_mismatch(std::string("variable mismatch: ") +
                            var_letter(p.var_) + " vs " + var_letter(q.var_));
  }
}

Laurent Laurent::operator-() const {
  Laurent r(var_);
  r.terms_.reserve(terms_.size());
  for (const auto& [e, c] : terms_) r.terms_.emplace_back(e, -c);
  return r;
}

Laurent operator+(const Laurent& p, const Laurent& q) {
  Laurent::require_same_var(p, q);
  Laurent r(p.var_);
  r.terms_.reserve(p.terms_.size() + q.terms_.size());
  auto a = p.terms_.begin(), b = q.terms_.begin();
  while (a != p.terms_.end() || b != q.terms_.end()) {
    if (b == q.terms_.end() || (a != p.terms_.end() && a->first < b->first)) {
      r.terms_.push_back(*a++);
    } else if (a == p.terms_.end() || b->first < a->first) {
      r.terms_.push_back(*b++);
    } else {
      mpz_class c = a->second + b->second;
      if (c != 0) r.terms_.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  return r;
}

Laurent operator-(const Laurent& p, const Laurent& q) { return p + (-q); }

Laurent operator*(const Laurent& p, const Laurent& q) {
  Laurent::require_same_var(p, q);
  if (p.is_zero() || q.is_zero()) return Laurent::zero(p.var_);
  const Laurent::Exp lo = p.min_exp() + q.min_exp();
  const Laurent::Exp hi = p.max_exp() + q.max_exp();
  const std::size_t span = static_cast<std::size_t>(hi - lo) + 1;
  if (span <= 1u << 20) {
    std::vector<mpz_class> acc(span);
    for (const auto& [ea, ca] : p.terms_)
      for (const auto& [eb, cb] : q.terms_)
        acc[static_cast<std::size_t>(ea + eb - lo)] += ca * cb;
    Laurent r(p.var_);
    for (std::size_t i = 0; i < span; ++i)
      if (acc[i] != 0) r.terms_.emplace_back(lo + static_cast<Laurent::Exp>(i), std::move(acc[i]));
    return r;
  }
  std::map<Laurent::Exp, mpz_class> acc;
  for (const auto& [ea, ca] : p.terms_)
    for (const auto& [eb, cb] : q.terms_) acc[ea + eb] += ca * cb;
  std::vector<Laurent::Term> terms;
  for (auto& [e, c] : acc)
    if (c != 0) terms.emplace_back(e, std::move(c));
  return Laurent(p.var_, std::move(terms));
}

Laurent Laurent::shifted(Exp k) const {
  Laurent r(var_);
  r.terms_.reserve(terms_.size());
  for (const auto& [e, c] : terms_) r.terms_.emplace_back(e + k, c);
  return r;
}

Laurent div_exact(const Laurent& p, const Laurent& q) {
  if (q.is_zero()) throw division_by_zero("division by zero polynomial");
  if (p.var() != q.var()) {
    throw variable_mismatch("div_exact: operands in different variables");
  }
  if (p.is_zero()) return Laurent::zero(p.var());

  const Laurent::Exp pe = p.min_exp(), qe = q.min_exp();
  const std::size_t dp = static_cast<std::size_t>(p.max_exp() - pe);
  const std::size_t dq = static_cast<std::size_t>(q.max_exp() - qe);
  if (dp < dq) throw not_divisible("degree of dividend below divisor");

  std::vector<mpz_class> rem(dp + 1), den(dq + 1);
  for (const auto& [e, c] : p.terms()) rem[static_cast<std::size_t>(e - pe)] = c;
  for (const auto& [e, c] : q.terms()) den[static_cast<std::size_t>(e - qe)] = c;

  std::vector<mpz_class> quot(dp - dq + 1);
  for (std::size_t i = dp - dq + 1; i-- > 0;) {
    mpz_class& lead = rem[i + dq];
    if (lead == 0) continue;
    if (!mpz_divisible_p(lead.get_mpz_t(), den[dq].get_mpz_t())) {
      throw not_divisible("leading coefficient not divisible");
    }
    mpz_class c = lead / den[dq];
    for (std::size_t j = 0; j <= dq; ++j) rem[i + j] -= c * den[j];
    quot[i] = std::move(c);
  }
  for (const auto& r : rem) {
    if (r != 0) throw not_divisible("nonzero remainder");
  }

  std::vector<Laurent::Term> terms;
  for (std::size_t i = 0; i < quot.size(); ++i) {
    if (quot[i] != 0)
      terms.emplace_back(pe - qe + static_cast<Laurent::Exp>(i), std::move(quot[i]));
  }
  return Laurent(p.var(), std::move(terms));
}

bool divides(const Laurent& q, const Laurent& p) {
  if (q.is_zero()) throw division_by_zero("divisibility by zero polynomial");
  try {
    (void)div_exact(p, q);
    return true;
  } catch (const not_divisible&) {
    return false;
  }
}

std::complex<double> pow_int(std::complex<double> z, std::int64_t k) {
  if (k < 0) return pow_int(1.0 / z, -k);
  std::complex<double> r = 1.0, b = z;
  for (std::int64_t e = k; e > 0; e >>= 1) {
    if (e & 1) r *= b;
    b *= b;
  }
  return r;
}

std::complex<double> eval_complex(const Laurent& p, std::complex<double> z) {
  if (p.is_zero()) return 0.0;
  const Laurent::Exp lo = p.min_exp();
  if (lo < 0 && z == std::complex<double>(0.0, 0.0)) {
    throw pole_at_zero("evaluation at 0 with negative exponents");
  }
  // Horner on the shifted polynomial, highest exponent first.
  const Laurent::Exp hi = p.max_exp();
  std::complex<double> acc = 0.0;
  Laurent::Exp e = hi;
  auto it = p.terms().rbegin();
  while (true) {
    if (it != p.terms().rend() && it->first == e) {
      acc += it->second.get_d();
      ++it;
    }
    if (e == lo) break;
    acc *= z;
    --e;
  }
  return acc * pow_int(z, lo);
}

mpz_class eval_at_one(const Laurent& p) {
  mpz_class s = 0;
  for (const auto& [e, c] : p.terms()) s += c;
  return s;
}

mpz_class eval_at_minus_one(const Laurent& p) {
  mpz_class s = 0;
  for (const auto& [e, c] : p.terms()) {
    if (e % 2 == 0) s += c; else s -= c;
  }
  return s;
}

Laurent derivative(const Laurent& p) {
  std::vector<Laurent::Term> terms;
  terms.reserve(p.term_count());
  for (const auto& [e, c] : p.terms()) {
    if (e == 0) continue;
    terms.emplace_back(e - 1, c * mpz_class(e));
  }
  return Laurent(p.var(), std::move(terms));
}

Laurent cyclotomic(std::int64_t d) {
  if (d < 1) throw error("cyclotomic index must be positive");
  static std::map<std::int64_t, Laurent> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find(d); it != cache.end()) return it->second;

  std::vector<std::int64_t> divisors;
  for (std::int64_t e = 1; e * e <= d; ++e) {
    if (d % e == 0) {
      divisors.push_back(e);
      if (e != d / e) divisors.push_back(d / e);
    }
  }
  std::sort(divisors.begin(), divisors.end());
  for (std::int64_t e : divisors) {
    if (cache.count(e)) continue;
    Laurent num = Laurent::monomial(Var::T, e) - Laurent::constant(Var::T, 1);
    for (std::int64_t f : divisors) {
      if (f < e && e % f == 0) num = div_exact(num, cache.at(f));
    }
    cache.emplace(e, std::move(num));
  }
  return cache.at(d);
}

namespace {
// Exponent weight in units of A: t = A^-4, q = A^-2.
std::int64_t a_units(Var v) {
  switch (v) {
    case Var::T: return -4;
    case Var::Q: return -2;
    case Var::A: return 1;
  }
  return 0;
}
}  // namespace

Laurent change_variable(const Laurent& p, Var target) {
  if (p.var() == target) return p;
  const std::int64_t ws = a_units(p.var()), wt = a_units(target);
  std::vector<Laurent::Term> terms;
  terms.reserve(p.term_count());
  for (const auto& [e, c] : p.terms()) {
    const std::int64_t u = e * ws;
    if (u % wt != 0) {
      std::ostringstream os;
      os << "exponent " << e << " of " << var_letter(p.var())
         << " has no integral image in " << var_letter(target);
      throw exponent_not_convertible(os.str());
    }
    terms.emplace_back(u / wt, c);
  }
  return Laurent(target, std::move(terms));
}

std::string to_string(const Laurent& p, TermOrder order) {
  if (p.is_zero()) return "0";
  const char v = var_letter(p.var());
  std::ostringstream os;
  auto emit = [&](const Laurent::Term& t, bool first) {
    const auto& [e, c] = t;
    mpz_class a = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (e == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << v;
      if (e != 1) os << "^" << e;
    }
  };
  if (order == TermOrder::Ascending) {
    for (std::size_t i = 0; i < p.terms().size(); ++i) emit(p.terms()[i], i == 0);
  } else {
    for (std::size_t i = p.terms().size(); i-- > 0;)
      emit(p.terms()[i], i + 1 == p.terms().size());
  }
  return os.str();
}

Laurent Laurent::parse(std::string_view text, Var v) {
  std::vector<Term> terms;
  std::size_t i = 0;
  const auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i >= text.size()) throw parse_error("empty polynomial text");
  bool first = true;
  while (true) {
    skip_ws();
    if (i >= text.size()) break;
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip_ws();
    } else if (!first) {
      throw parse_error("expected '+' or '-' between terms");
    }
    // coefficient digits (optional)
    std::string digits;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      digits += text[i++];
    skip_ws();
    mpz_class coef = digits.empty() ? mpz_class(1) : mpz_class(digits);
    if (sign < 0) coef = -coef;
    Exp exp = 0;
    bool has_var = false;
    if (i < text.size() && text[i] == '*') {
      ++i;
      skip_ws();
    }
    if (i < text.size() && text[i] == var_letter(v)) {
      has_var = true;
      ++i;
      if (i < text.size() && text[i] == '^') {
        ++i;
        bool neg = false;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
          neg = text[i] == '-';
          ++i;
        }
        std::string ed;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
          ed += text[i++];
        if (ed.empty()) throw parse_error("missing exponent digits");
        exp = std::stoll(ed);
        if (neg) exp = -exp;
      } else {
        exp = 1;
      }
    }
    if (digits.empty() && !has_var) throw parse_error("empty term");
    terms.emplace_back(exp, std::move(coef));
    first = false;
  }
  if (terms.empty()) throw parse_error("no terms parsed");
  return Laurent(v, std::move(terms));
}

}  // namespace jkone
