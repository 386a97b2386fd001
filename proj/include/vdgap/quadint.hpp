#pragma once

// Elements a + b*sqrt(-d) of the order Z[sqrt(-d)], d >= 1. The ring parameter d
// travels with each element; mixing elements from different rings throws.
// Z[sqrt(-d)] is an integral domain for every d >= 1, so the ring is usable
// whether or not d is squarefree; QuadRing records the squarefree certificate.

#include <cstdint>
#include <string>

#include "vdgap/bigint.hpp"

namespace vdgap {

struct QuadRing {
    std::int64_t d = 1;
    bool squarefree = true;

    // Validates 1 <= d <= 10^12 and runs the squarefree trial division.
    static QuadRing create(std::int64_t d);
};

class QuadInt {
public:
    QuadInt() : d_(1) {}
    QuadInt(BigInt a, BigInt b, std::int64_t d);

    const BigInt& re() const { return a_; }
    const BigInt& im() const { return b_; }
    std::int64_t d() const { return d_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    QuadInt conj() const { return QuadInt(a_, b_.negated(), d_); }

    friend QuadInt operator+(const QuadInt& x, const QuadInt& y);
    friend QuadInt operator-(const QuadInt& x, const QuadInt& y);
    friend QuadInt operator*(const QuadInt& x, const QuadInt& y);
    QuadInt operator-() const { return QuadInt(a_.negated(), b_.negated(), d_); }

    friend bool operator==(const QuadInt& x, const QuadInt& y);

    std::string to_string() const;

private:
    BigInt a_, b_;
    std::int64_t d_;

    static void require_same_ring(const QuadInt& x, const QuadInt& y);
};

// N(a + b*sqrt(-d)) = a^2 + d*b^2; nonnegative, zero only at zero.
BigInt quad_norm(const QuadInt& x);

// Exact quotient in Z[sqrt(-d)]; throws when y does not divide x.
QuadInt divide_exact(const QuadInt& x, const QuadInt& y);

inline QuadInt zero_like(const QuadInt& x) { return QuadInt(BigInt(), BigInt(), x.d()); }
inline QuadInt one_like(const QuadInt& x) { return QuadInt(BigInt(1), BigInt(), x.d()); }
inline bool is_zero(const QuadInt& x) { return x.is_zero(); }
inline std::string to_string(const QuadInt& x) { return x.to_string(); }

}  // namespace vdgap
