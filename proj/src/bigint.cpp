#include "vdgap/bigint.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <stdexcept>

namespace vdgap {

namespace {
constexpr std::uint64_t kBase = 1ull << 32;
}

BigInt::BigInt(long long v) {
    if (v == 0) return;
    sign_ = v > 0 ? 1 : -1;
    // Avoid UB on LLONG_MIN: negate in unsigned space.
    std::uint64_t u = v > 0 ? static_cast<std::uint64_t>(v) : ~static_cast<std::uint64_t>(v) + 1;
    mag_.push_back(static_cast<std::uint32_t>(u));
    if (u >> 32) mag_.push_back(static_cast<std::uint32_t>(u >> 32));
}

BigInt BigInt::from_u64(std::uint64_t v) {
    BigInt r;
    if (v == 0) return r;
    r.sign_ = 1;
    r.mag_.push_back(static_cast<std::uint32_t>(v));
    if (v >> 32) r.mag_.push_back(static_cast<std::uint32_t>(v >> 32));
    return r;
}

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

bool BigInt::is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }

bool BigInt::fits_u64() const { return sign_ >= 0 && mag_.size() <= 2; }

bool BigInt::fits_i64() const {
    if (mag_.size() > 2) return false;
    if (mag_.size() < 2) return true;
    std::uint64_t u = (static_cast<std::uint64_t>(mag_[1]) << 32) | mag_[0];
    return sign_ > 0 ? u <= 0x7fffffffffffffffull : u <= 0x8000000000000000ull;
}

std::uint64_t BigInt::to_u64() const {
    if (!fits_u64()) throw std::invalid_argument("BigInt::to_u64: value out of range");
    std::uint64_t u = 0;
    if (mag_.size() >= 1) u = mag_[0];
    if (mag_.size() == 2) u |= static_cast<std::uint64_t>(mag_[1]) << 32;
    return u;
}

std::int64_t BigInt::to_i64() const {
    if (!fits_i64()) throw std::invalid_argument("BigInt::to_i64: value out of range");
    std::uint64_t u = 0;
    if (mag_.size() >= 1) u = mag_[0];
    if (mag_.size() == 2) u |= static_cast<std::uint64_t>(mag_[1]) << 32;
    return sign_ < 0 ? -static_cast<std::int64_t>(u - 1) - 1 : static_cast<std::int64_t>(u);
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
}

BigInt BigInt::negated() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

int BigInt::compare_mag(const BigInt& a, const BigInt& b) {
    if (a.mag_.size() != b.mag_.size()) return a.mag_.size() < b.mag_.size() ? -1 : 1;
    for (std::size_t i = a.mag_.size(); i-- > 0;) {
        if (a.mag_[i] != b.mag_[i]) return a.mag_[i] < b.mag_[i] ? -1 : 1;
    }
    return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    const auto& big = a.size() >= b.size() ? a : b;
    const auto& small = a.size() >= b.size() ? b : a;
    std::vector<std::uint32_t> r(big.size() + 1, 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < big.size(); ++i) {
        std::uint64_t s = carry + big[i] + (i < small.size() ? small[i] : 0u);
        r[i] = static_cast<std::uint32_t>(s);
        carry = s >> 32;
    }
    r[big.size()] = static_cast<std::uint32_t>(carry);
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

// Requires |a| >= |b|.
std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r(a.size(), 0);
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t s = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0u);
        if (s < 0) {
            s += static_cast<std::int64_t>(kBase);
            borrow = 1;
        } else {
            borrow = 0;
        }
        r[i] = static_cast<std::uint32_t>(s);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<std::uint32_t> BigInt::mul_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t carry = 0;
        std::uint64_t ai = a[i];
        for (std::size_t j = 0; j < b.size(); ++j) {
            std::uint64_t cur = r[i + j] + ai * b[j] + carry;
            r[i + j] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        r[i + b.size()] = static_cast<std::uint32_t>(carry);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    BigInt r;
    if (a.sign_ == b.sign_) {
        r.sign_ = a.sign_;
        r.mag_ = BigInt::add_mag(a.mag_, b.mag_);
    } else {
        int c = BigInt::compare_mag(a, b);
        if (c == 0) return BigInt();
        const BigInt& big = c > 0 ? a : b;
        const BigInt& small = c > 0 ? b : a;
        r.sign_ = big.sign_;
        r.mag_ = BigInt::sub_mag(big.mag_, small.mag_);
    }
    r.trim();
    return r;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + b.negated(); }

BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
    BigInt r;
    r.sign_ = a.sign_ * b.sign_;
    r.mag_ = BigInt::mul_mag(a.mag_, b.mag_);
    r.trim();
    return r;
}

// Knuth algorithm D on 32-bit limbs. u and v are magnitudes, v non-empty and
// nonzero; produces |u| = q*|v| + r with 0 <= r < |v|.
void BigInt::divmod_mag(const std::vector<std::uint32_t>& u, const std::vector<std::uint32_t>& v,
                        std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r) {
    q.clear();
    r.clear();
    if (v.size() == 1) {
        std::uint64_t d = v[0];
        q.assign(u.size(), 0);
        std::uint64_t rem = 0;
        for (std::size_t i = u.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | u[i];
            q[i] = static_cast<std::uint32_t>(cur / d);
            rem = cur % d;
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
        if (rem) r.push_back(static_cast<std::uint32_t>(rem));
        return;
    }

    const int shift = std::countl_zero(v.back());
    const std::size_t n = v.size();
    const std::size_t m = u.size() - n;

    // Normalized copies: vn = v << shift, un = u << shift with one extra limb.
    std::vector<std::uint32_t> vn(n), un(u.size() + 1, 0);
    for (std::size_t i = n; i-- > 0;) {
        vn[i] = (v[i] << shift);
        if (shift && i > 0) vn[i] |= static_cast<std::uint32_t>(v[i - 1] >> (32 - shift));
    }
    for (std::size_t i = u.size(); i-- > 0;) {
        if (shift) {
            un[i + 1] |= static_cast<std::uint32_t>(u[i] >> (32 - shift));
            un[i] = (u[i] << shift);
        } else {
            un[i] = u[i];
        }
    }

    q.assign(m + 1, 0);
    const std::uint64_t vtop = vn[n - 1];
    const std::uint64_t vsecond = vn[n - 2];

    for (std::size_t j = m + 1; j-- > 0;) {
        std::uint64_t numer = (static_cast<std::uint64_t>(un[j + n]) << 32) | un[j + n - 1];
        std::uint64_t qhat = numer / vtop;
        std::uint64_t rhat = numer % vtop;
        while (qhat >= kBase || qhat * vsecond > ((rhat << 32) | un[j + n - 2])) {
            --qhat;
            rhat += vtop;
            if (rhat >= kBase) break;
        }
        // Multiply-subtract qhat*vn from un[j .. j+n].
        std::int64_t borrow = 0;
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t p = qhat * vn[i] + carry;
            carry = p >> 32;
            std::int64_t t = static_cast<std::int64_t>(un[i + j]) - borrow -
                             static_cast<std::int64_t>(p & 0xffffffffull);
            if (t < 0) {
                t += static_cast<std::int64_t>(kBase);
                borrow = 1;
            } else {
                borrow = 0;
            }
            un[i + j] = static_cast<std::uint32_t>(t);
        }
        std::int64_t t = static_cast<std::int64_t>(un[j + n]) - borrow -
                         static_cast<std::int64_t>(carry);
        if (t < 0) {
            // qhat was one too large: add v back and decrement.
            t += static_cast<std::int64_t>(kBase);
            --qhat;
            std::uint64_t c2 = 0;
            for (std::size_t i = 0; i < n; ++i) {
                std::uint64_t s = static_cast<std::uint64_t>(un[i + j]) + vn[i] + c2;
                un[i + j] = static_cast<std::uint32_t>(s);
                c2 = s >> 32;
            }
            t += static_cast<std::int64_t>(c2);
        }
        un[j + n] = static_cast<std::uint32_t>(t);
        q[j] = static_cast<std::uint32_t>(qhat);
    }

    while (!q.empty() && q.back() == 0) q.pop_back();
    r.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        r[i] = (un[i] >> shift);
        if (shift && i + 1 < un.size()) r[i] |= (un[i + 1] << (32 - shift));
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
}

std::pair<BigInt, BigInt> BigInt::divmod(const BigInt& a, const BigInt& b) {
    if (b.sign_ == 0) throw std::invalid_argument("BigInt: division by zero");
    if (a.sign_ == 0) return {BigInt(), BigInt()};
    if (compare_mag(a, b) < 0) return {BigInt(), a};
    BigInt q, r;
    divmod_mag(a.mag_, b.mag_, q.mag_, r.mag_);
    q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
    r.sign_ = r.mag_.empty() ? 0 : a.sign_;
    return {q, r};
}

bool operator==(const BigInt& a, const BigInt& b) {
    return a.sign_ == b.sign_ && a.mag_ == b.mag_;
}

std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
    int c = BigInt::compare_mag(a, b) * (a.sign_ == 0 ? 0 : a.sign_);
    return c <=> 0;
}

BigInt BigInt::from_string(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("BigInt::from_string: empty input");
    bool neg = false;
    std::size_t pos = 0;
    if (s[0] == '-' || s[0] == '+') {
        neg = s[0] == '-';
        pos = 1;
    }
    if (pos == s.size()) throw std::invalid_argument("BigInt::from_string: no digits");
    BigInt r;
    const BigInt chunk_scale(1000000000ll);
    std::uint32_t acc = 0;
    int acc_digits = 0;
    auto flush = [&](std::uint32_t value, int digits) {
        std::uint64_t scale = 1;
        for (int i = 0; i < digits; ++i) scale *= 10;
        r = r * BigInt(static_cast<long long>(scale)) + BigInt(static_cast<long long>(value));
    };
    for (; pos < s.size(); ++pos) {
        char c = s[pos];
        if (c < '0' || c > '9') throw std::invalid_argument("BigInt::from_string: bad digit");
        acc = acc * 10 + static_cast<std::uint32_t>(c - '0');
        if (++acc_digits == 9) {
            r = r * chunk_scale + BigInt(static_cast<long long>(acc));
            acc = 0;
            acc_digits = 0;
        }
    }
    if (acc_digits) flush(acc, acc_digits);
    if (neg) r = r.negated();
    return r;
}

std::string BigInt::to_string() const {
    if (sign_ == 0) return "0";
    std::vector<std::uint32_t> mag = mag_;
    std::string out;
    while (!mag.empty()) {
        std::uint64_t rem = 0;
        for (std::size_t i = mag.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | mag[i];
            mag[i] = static_cast<std::uint32_t>(cur / 1000000000ull);
            rem = cur % 1000000000ull;
        }
        while (!mag.empty() && mag.back() == 0) mag.pop_back();
        for (int i = 0; i < 9; ++i) {
            out.push_back(static_cast<char>('0' + rem % 10));
            rem /= 10;
        }
    }
    while (out.size() > 1 && out.back() == '0') out.pop_back();
    if (sign_ < 0) out.push_back('-');
    std::reverse(out.begin(), out.end());
    return out;
}

BigInt divide_exact(const BigInt& a, const BigInt& b) {
    auto [q, r] = BigInt::divmod(a, b);
    if (!r.is_zero()) throw std::invalid_argument("divide_exact: not divisible");
    return q;
}

BigInt pow(const BigInt& base, std::uint64_t exponent) {
    BigInt result(1), b = base;
    while (exponent) {
        if (exponent & 1) result = result * b;
        exponent >>= 1;
        if (exponent) b = b * b;
    }
    return result;
}

BigInt gcd(const BigInt& a, const BigInt& b) {
    BigInt x = a.abs(), y = b.abs();
    while (!y.is_zero()) {
        BigInt r = x % y;
        x = y;
        y = r;
    }
    return x;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
    if (a.is_zero() || b.is_zero()) return BigInt();
    return divide_exact(a.abs() * b.abs(), gcd(a, b));
}

}  // namespace vdgap
