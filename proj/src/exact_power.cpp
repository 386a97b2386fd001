#include "vdgap/exact_power.hpp"

#include <algorithm>
#include <stdexcept>

namespace vdgap {

std::string ordering_name(Ordering o) {
    switch (o) {
        case Ordering::Less: return "less";
        case Ordering::Equal: return "equal";
        case Ordering::Greater: return "greater";
    }
    return "";
}

ExactPower ExactPower::of(BigInt base, Rational exponent) {
    if (base.sign() <= 0 || base.is_zero()) {
        throw std::invalid_argument("ExactPower: base must be >= 1");
    }
    if (exponent.sign() < 0) {
        throw std::invalid_argument("ExactPower: exponent must be >= 0");
    }
    ExactPower p;
    p.factors_.push_back({std::move(base), std::move(exponent)});
    p.canonicalize();
    return p;
}

void ExactPower::canonicalize() {
    std::sort(factors_.begin(), factors_.end(),
              [](const PowerFactor& a, const PowerFactor& b) { return a.base < b.base; });
    std::vector<PowerFactor> merged;
    for (auto& f : factors_) {
        if (f.base.is_one() || f.exponent.is_zero()) continue;
        if (!merged.empty() && merged.back().base == f.base) {
            merged.back().exponent += f.exponent;
        } else {
            merged.push_back(std::move(f));
        }
    }
    factors_ = std::move(merged);
}

ExactPower& ExactPower::multiply_by(const ExactPower& other) {
    for (const auto& f : other.factors_) factors_.push_back(f);
    canonicalize();
    return *this;
}

ExactPower ExactPower::pow(const Rational& r) const {
    if (r.sign() < 0) throw std::invalid_argument("ExactPower::pow: exponent must be >= 0");
    ExactPower p;
    for (const auto& f : factors_) p.factors_.push_back({f.base, f.exponent * r});
    p.canonicalize();
    return p;
}

namespace {

// Guard against pathological exponents; every use in this library stays far below.
constexpr std::uint64_t kMaxClearedExponent = 40000000ull;

BigInt cleared_value(const ExactPower& p, const BigInt& denominator_lcm) {
    BigInt v(1);
    for (const auto& f : p.factors()) {
        BigInt e = divide_exact(denominator_lcm, f.exponent.den()) * f.exponent.num();
        if (!e.fits_u64() || e.to_u64() > kMaxClearedExponent) {
            throw std::invalid_argument("exact_power_compare: cleared exponent too large");
        }
        v = v * pow(f.base, e.to_u64());
    }
    return v;
}

}  // namespace

Ordering exact_power_compare(const ExactPower& lhs, const ExactPower& rhs) {
    BigInt l(1);
    for (const auto& f : lhs.factors()) l = lcm(l, f.exponent.den());
    for (const auto& f : rhs.factors()) l = lcm(l, f.exponent.den());
    BigInt lv = cleared_value(lhs, l);
    BigInt rv = cleared_value(rhs, l);
    auto c = lv <=> rv;
    if (c < 0) return Ordering::Less;
    if (c > 0) return Ordering::Greater;
    return Ordering::Equal;
}

std::string ExactPower::to_string() const {
    if (factors_.empty()) return "1";
    std::string out;
    for (const auto& f : factors_) {
        if (!out.empty()) out += "*";
        out += f.base.to_string();
        if (f.exponent == Rational(1)) continue;
        if (f.exponent.is_integer()) {
            out += "^" + f.exponent.to_string();
        } else {
            out += "^(" + f.exponent.to_string() + ")";
        }
    }
    return out;
}

}  // namespace vdgap
