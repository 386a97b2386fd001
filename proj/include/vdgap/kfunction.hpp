#pragma once

// The extremal function K(s, m) = sup over integers k in [0, m-1] of
// s*k - k(k+1)/2, evaluated by the closed form at k* = min(floor(s), m-1)
// and cross-checked against direct enumeration on every call.

#include "vdgap/rational.hpp"

namespace vdgap {

struct KValue {
    Rational s;
    int m = 0;
    Rational value;
    int argmax = 0;  // tie on integer s resolved toward floor(s)
};

// Requires m >= 2 and 0 <= s <= m.
KValue k_function(const Rational& s, int m);

// C(m, 2) as a convenience for exponent arithmetic.
Rational binom2(int m);

}  // namespace vdgap
