#pragma once

// Sign-magnitude arbitrary-precision integer on 32-bit limbs.
// Every operation is exact; there is no silent overflow anywhere.
// Zero is canonical: sign 0 and an empty limb vector.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace vdgap {

class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);
    BigInt(long v) : BigInt(static_cast<long long>(v)) {}
    BigInt(int v) : BigInt(static_cast<long long>(v)) {}

    static BigInt from_u64(std::uint64_t v);
    // Accepts an optional leading '-' followed by decimal digits.
    static BigInt from_string(std::string_view s);

    std::string to_string() const;

    int sign() const { return sign_; }
    bool is_zero() const { return sign_ == 0; }
    bool is_one() const;
    bool odd() const { return sign_ != 0 && (mag_[0] & 1u); }

    bool fits_u64() const;
    bool fits_i64() const;
    std::uint64_t to_u64() const;  // requires sign >= 0 and fits_u64
    std::int64_t to_i64() const;   // requires fits_i64

    BigInt abs() const;
    BigInt negated() const;

    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator*(const BigInt& a, const BigInt& b);
    BigInt operator-() const { return negated(); }
    BigInt& operator+=(const BigInt& b) { *this = *this + b; return *this; }
    BigInt& operator-=(const BigInt& b) { *this = *this - b; return *this; }
    BigInt& operator*=(const BigInt& b) { *this = *this * b; return *this; }

    // Quotient truncated toward zero; remainder carries the dividend's sign.
    static std::pair<BigInt, BigInt> divmod(const BigInt& a, const BigInt& b);
    friend BigInt operator/(const BigInt& a, const BigInt& b) { return divmod(a, b).first; }
    friend BigInt operator%(const BigInt& a, const BigInt& b) { return divmod(a, b).second; }

    friend bool operator==(const BigInt& a, const BigInt& b);
    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b);

    std::size_t limb_count() const { return mag_.size(); }

private:
    int sign_ = 0;                    // -1, 0, +1
    std::vector<std::uint32_t> mag_;  // little-endian, no trailing zero limbs

    void trim();
    static int compare_mag(const BigInt& a, const BigInt& b);
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static void divmod_mag(const std::vector<std::uint32_t>& u, const std::vector<std::uint32_t>& v,
                           std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r);
};

// Throws std::invalid_argument when the division is not exact.
BigInt divide_exact(const BigInt& a, const BigInt& b);

BigInt pow(const BigInt& base, std::uint64_t exponent);
BigInt gcd(const BigInt& a, const BigInt& b);  // nonnegative
BigInt lcm(const BigInt& a, const BigInt& b);

inline BigInt zero_like(const BigInt&) { return BigInt(); }
inline BigInt one_like(const BigInt&) { return BigInt(1); }
inline bool is_zero(const BigInt& x) { return x.is_zero(); }
inline std::string to_string(const BigInt& x) { return x.to_string(); }

}  // namespace vdgap
