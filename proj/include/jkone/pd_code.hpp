#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "jkone/errors.hpp"

namespace jkone {

/// Planar diagram code of a knot or link.
///
/// Each crossing is a 4-tuple (a, b, c, d) of edge labels listed
/// counterclockwise starting at the incoming under-strand a; the
/// under-strand runs a -> c, the over-strand occupies b and d.  Edge labels
/// are positive and run consecutively along each oriented component.
struct PDCode {
  std::vector<std::array<int, 4>> crossings;
  // Label ranges [lo, hi] per component, when known.  Empty means a knot
  // with labels 1..2c is assumed.
  std::vector<std::pair<int, int>> components;

  std::size_t crossing_count() const { return crossings.size(); }
  std::size_t edge_count() const { return 2 * crossings.size(); }
};

// Throws invalid_code unless every edge label is positive and occurs
// exactly twice.
void validate_pd(const PDCode& pd);

// Diagram of the numerator closure of the rational tangle with twist
// blocks `entries` (first block horizontal, then alternating vertical /
// horizontal).  All entries must be nonzero and share one sign; a negative
// code produces the mirror diagram.  Crossing count is the sum of |a_i|.
PDCode pd_from_conway(const std::vector<int>& entries);

// Continued-fraction invariant p/q of a rational code (entries read so the
// last block is the integer part).  Returned with p > 0, 0 < q, gcd = 1.
std::pair<long, long> conway_fraction(const std::vector<int>& entries);

}  // namespace jkone
