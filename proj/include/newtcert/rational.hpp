#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <string>

#include "newtcert/error.hpp"

namespace newtcert {

// Exact rational scalar.  mpq_class keeps values canonical (reduced,
// positive denominator) as long as arithmetic starts from canonical inputs;
// make_rat is the only constructor used for raw numerator/denominator pairs.
using Rat = mpq_class;

inline Rat make_rat(long num, unsigned long den = 1) {
    if (den == 0) throw error("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat rat_from_decimal_string(const std::string& s) {
    // Used only by the problem-file reader for scan parameters; polynomial
    // coefficients go through the grammar (int or int/uint).
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw error("bad rational literal: " + s);
    q.canonicalize();
    return q;
}

inline bool is_zero(const Rat& q) { return sgn(q) == 0; }

inline std::string rat_text(const Rat& q) { return q.get_str(); }

inline double rat_double(const Rat& q) { return q.get_d(); }

inline std::complex<double> rat_complex(const Rat& q) {
    return {q.get_d(), 0.0};
}

} // namespace newtcert
