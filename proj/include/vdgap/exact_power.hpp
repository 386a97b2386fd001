#pragma once

// A product of positive integer bases raised to nonnegative rational exponents,
// compared exactly by clearing exponent denominators and comparing big-integer
// products. No floating point anywhere; the empty product is 1.

#include <string>
#include <vector>

#include "vdgap/bigint.hpp"
#include "vdgap/rational.hpp"

namespace vdgap {

enum class Ordering { Less, Equal, Greater };

std::string ordering_name(Ordering o);

struct PowerFactor {
    BigInt base;         // >= 1
    Rational exponent;   // >= 0
};

class ExactPower {
public:
    ExactPower() = default;  // value 1

    static ExactPower one() { return ExactPower(); }
    static ExactPower of(BigInt base, Rational exponent);

    ExactPower& multiply_by(const ExactPower& other);
    friend ExactPower operator*(ExactPower a, const ExactPower& b) { return a.multiply_by(b); }

    // Raises the whole product to a nonnegative rational power.
    ExactPower pow(const Rational& r) const;

    const std::vector<PowerFactor>& factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }

    std::string to_string() const;

private:
    std::vector<PowerFactor> factors_;  // canonical: bases ascending and distinct,
                                        // no base 1, no exponent 0
    void canonicalize();
};

Ordering exact_power_compare(const ExactPower& lhs, const ExactPower& rhs);

inline std::string to_string(const ExactPower& p) { return p.to_string(); }

}  // namespace vdgap
