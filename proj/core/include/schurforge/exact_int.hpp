#pragma once

#include <gmpxx.h>
#include <string>

namespace schurforge {

// All integer quantities in the engine (inner products, multinomials,
// Catalan numbers, transition-matrix entries) are exact signed integers
// of unbounded size. GMP provides the representation; everything layered
// on top stays in exact arithmetic, never floating point.
using ExactInt = mpz_class;

inline std::string decimal_string(const ExactInt& x) { return x.get_str(10); }

inline bool fits_long(const ExactInt& x) { return x.fits_slong_p(); }

} // namespace schurforge
