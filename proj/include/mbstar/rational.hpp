#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace mbstar {

// Exact rational arithmetic everywhere; the probability identities are exact
// equations, so no floating point is admitted into the engine.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "p/q" or a plain integer, with optional leading '-'.
Rat parse_rational(std::string_view text);

std::string to_string(const Rat& r);

inline bool in_unit_interval(const Rat& r) { return r >= 0 && r <= 1; }

}  // namespace mbstar
