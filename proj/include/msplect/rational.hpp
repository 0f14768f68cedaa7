#pragma once

#include <gmpxx.h>

#include <string>

namespace msplect {

// Exact rational scalar used everywhere. GMP canonicalizes on construction
// from (num, den); arithmetic results are always reduced.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

inline std::string rat_str(const Rat& r) { return r.get_str(); }

} // namespace msplect
