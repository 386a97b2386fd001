#pragma once

// Exact rational numbers over BigInt, always reduced, denominator > 0.

#include <string>
#include <string_view>

#include "vdgap/bigint.hpp"

namespace vdgap {

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}
    Rational(BigInt numerator) : num_(std::move(numerator)), den_(1) {}
    Rational(BigInt numerator, BigInt denominator);

    // "num/den" or a plain integer, e.g. "3/2", "-7".
    static Rational from_string(std::string_view s);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_.is_one(); }
    int sign() const { return num_.sign(); }

    BigInt floor() const;

    std::string to_string() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const;
    Rational& operator+=(const Rational& b) { *this = *this + b; return *this; }
    Rational& operator-=(const Rational& b) { *this = *this - b; return *this; }
    Rational& operator*=(const Rational& b) { *this = *this * b; return *this; }

    friend bool operator==(const Rational& a, const Rational& b);
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    BigInt num_, den_;
    void reduce();
};

inline std::string to_string(const Rational& x) { return x.to_string(); }

}  // namespace vdgap
