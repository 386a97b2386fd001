#include "vdgap/kfunction.hpp"

#include <algorithm>
#include <stdexcept>

namespace vdgap {

Rational binom2(int m) {
    return Rational(BigInt(static_cast<long long>(m) * (m - 1) / 2));
}

KValue k_function(const Rational& s, int m) {
    if (m < 2) throw std::invalid_argument("k_function: m must be >= 2");
    if (s.sign() < 0 || s > Rational(m)) {
        throw std::invalid_argument("k_function: s must lie in [0, m]");
    }

    auto f = [&](long long k) {
        return s * Rational(k) - Rational(k * (k + 1) / 2);
    };

    long long kstar = std::min<long long>(s.floor().to_i64(), m - 1);
    KValue result{s, m, f(kstar), static_cast<int>(kstar)};

    // The closed form is a theorem; a disagreement with enumeration is a bug.
    Rational best = f(0);
    for (long long k = 1; k < m; ++k) {
        Rational v = f(k);
        if (v > best) best = v;
    }
    if (!(best == result.value)) {
        throw std::logic_error("k_function: closed form disagrees with enumeration");
    }
    // f attains s(s-1)/2 at t = s, so the integer supremum is at least that.
    if (result.value < (s * (s - Rational(1))) / Rational(2)) {
        throw std::logic_error("k_function: value below s(s-1)/2");
    }
    return result;
}

}  // namespace vdgap
