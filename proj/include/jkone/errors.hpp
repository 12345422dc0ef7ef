#pragma once

#include <stdexcept>
#include <string>

namespace jkone {

// Base class for all library errors.
struct error : std::runtime_error {
  explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// laurent
struct variable_mismatch : error {
  explicit variable_mismatch(const std::string& msg) : error(msg) {}
};
struct not_divisible : error {
  explicit not_divisible(const std::string& msg) : error(msg) {}
};
struct division_by_zero : error {
  explicit division_by_zero(const std::string& msg) : error(msg) {}
};
struct pole_at_zero : error {
  explicit pole_at_zero(const std::string& msg) : error(msg) {}
};
struct exponent_not_convertible : error {
  explicit exponent_not_convertible(const std::string& msg) : error(msg) {}
};
struct parse_error : error {
  explicit parse_error(const std::string& msg) : error(msg) {}
};

// dtwist
struct minus_one_excluded : error {
  // J_n(-1) = (-1)^n (6n+1) never equals 1; carries the obstruction text.
  explicit minus_one_excluded(const std::string& msg) : error(msg) {}
};
struct degenerate_leading_coefficient : error {
  explicit degenerate_leading_coefficient(const std::string& msg) : error(msg) {}
};

// bracket / diagrams
struct invalid_code : error {
  explicit invalid_code(const std::string& msg) : error(msg) {}
};
struct too_many_crossings : error {
  explicit too_many_crossings(const std::string& msg) : error(msg) {}
};
struct orientation_underivable : error {
  explicit orientation_underivable(const std::string& msg) : error(msg) {}
};

// roots
struct zero_polynomial : error {
  explicit zero_polynomial(const std::string& msg) : error(msg) {}
};
struct no_convergence : error {
  explicit no_convergence(const std::string& msg) : error(msg) {}
};

// bkw
struct no_equimodular_point_found : error {
  explicit no_equimodular_point_found(const std::string& msg) : error(msg) {}
};
struct dominance_violated : error {
  explicit dominance_violated(const std::string& msg) : error(msg) {}
};
struct no_zero_in_box : error {
  explicit no_zero_in_box(const std::string& msg) : error(msg) {}
};
struct degenerate_family : error {
  explicit degenerate_family(const std::string& msg) : error(msg) {}
};

}  // namespace jkone
