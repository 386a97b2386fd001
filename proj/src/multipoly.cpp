#include "vdgap/multipoly.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace vdgap {

namespace {

int key_degree(std::uint64_t key, int bits) {
    const std::uint64_t mask = (1ull << bits) - 1;
    int deg = 0;
    while (key) {
        deg += static_cast<int>(key & mask);
        key >>= bits;
    }
    return deg;
}

}  // namespace

MultiPoly::MultiPoly(int arity) : arity_(arity) {
    if (arity < 1 || arity > kMaxArity) {
        throw std::invalid_argument("MultiPoly: arity must be in [1, 8]");
    }
}

MultiPoly MultiPoly::constant(int arity, BigInt c) {
    MultiPoly p(arity);
    if (!c.is_zero()) p.terms_.push_back({0, std::move(c)});
    return p;
}

MultiPoly MultiPoly::monomial(int arity, BigInt coeff, const std::vector<std::uint32_t>& exponents) {
    MultiPoly p(arity);
    if (static_cast<int>(exponents.size()) != arity) {
        throw std::invalid_argument("MultiPoly::monomial: exponent count != arity");
    }
    if (coeff.is_zero()) return p;
    const int bits = p.field_bits();
    const int slots = 64 / bits;
    std::uint64_t key = 0;
    for (int i = 0; i < arity; ++i) {
        if (exponents[i] > p.max_exponent()) {
            throw std::invalid_argument("MultiPoly: exponent exceeds the field width");
        }
        key |= static_cast<std::uint64_t>(exponents[i]) << (bits * (slots - 1 - i));
    }
    p.terms_.push_back({key, std::move(coeff)});
    return p;
}

std::vector<std::uint32_t> MultiPoly::unpack(std::uint64_t key) const {
    const int bits = field_bits();
    const int slots = 64 / bits;
    const std::uint64_t mask = (1ull << bits) - 1;
    std::vector<std::uint32_t> e(arity_);
    for (int i = 0; i < arity_; ++i) {
        e[i] = static_cast<std::uint32_t>((key >> (bits * (slots - 1 - i))) & mask);
    }
    return e;
}

std::optional<int> MultiPoly::total_degree() const {
    if (terms_.empty()) return std::nullopt;
    int deg = 0;
    for (const auto& t : terms_) deg = std::max(deg, key_degree(t.key, field_bits()));
    return deg;
}

void MultiPoly::require_same_arity(const MultiPoly& u, const MultiPoly& v) {
    if (u.arity_ != v.arity_) throw std::invalid_argument("MultiPoly: arity mismatch");
}

MultiPoly operator+(const MultiPoly& u, const MultiPoly& v) {
    MultiPoly::require_same_arity(u, v);
    MultiPoly r(u.arity_);
    r.terms_.reserve(u.terms_.size() + v.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < u.terms_.size() || j < v.terms_.size()) {
        if (j == v.terms_.size() || (i < u.terms_.size() && u.terms_[i].key < v.terms_[j].key)) {
            r.terms_.push_back(u.terms_[i++]);
        } else if (i == u.terms_.size() || v.terms_[j].key < u.terms_[i].key) {
            r.terms_.push_back(v.terms_[j++]);
        } else {
            BigInt c = u.terms_[i].coeff + v.terms_[j].coeff;
            if (!c.is_zero()) r.terms_.push_back({u.terms_[i].key, std::move(c)});
            ++i;
            ++j;
        }
    }
    return r;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(arity_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.key, t.coeff.negated()});
    return r;
}

MultiPoly operator-(const MultiPoly& u, const MultiPoly& v) { return u + (-v); }

MultiPoly operator*(const MultiPoly& u, const MultiPoly& v) {
    MultiPoly::require_same_arity(u, v);
    MultiPoly r(u.arity_);
    if (u.terms_.empty() || v.terms_.empty()) return r;

    // Per-variable exponent overflow check; every product key is bounded
    // variable-wise by the operand maxima.
    const int bits = u.field_bits();
    const int slots = 64 / bits;
    const std::uint64_t mask = (1ull << bits) - 1;
    for (int i = 0; i < slots; ++i) {
        std::uint64_t shift = static_cast<std::uint64_t>(bits) * i;
        std::uint64_t a = 0, b = 0;
        for (const auto& t : u.terms_) a = std::max(a, (t.key >> shift) & mask);
        for (const auto& t : v.terms_) b = std::max(b, (t.key >> shift) & mask);
        if (a + b > u.max_exponent()) {
            throw std::invalid_argument("MultiPoly: product exponent exceeds the field width");
        }
    }

    std::unordered_map<std::uint64_t, BigInt> acc;
    acc.reserve(u.terms_.size() * 2 + v.terms_.size() * 2);
    for (const auto& a : u.terms_) {
        for (const auto& b : v.terms_) {
            BigInt c = a.coeff * b.coeff;
            auto it = acc.find(a.key + b.key);
            if (it == acc.end()) {
                acc.emplace(a.key + b.key, std::move(c));
            } else {
                it->second += c;
            }
        }
    }
    r.terms_.reserve(acc.size());
    for (auto& [key, coeff] : acc) {
        if (!coeff.is_zero()) r.terms_.push_back({key, std::move(coeff)});
    }
    std::sort(r.terms_.begin(), r.terms_.end(),
              [](const MultiPoly::Term& a, const MultiPoly::Term& b) { return a.key < b.key; });
    return r;
}

bool operator==(const MultiPoly& u, const MultiPoly& v) {
    MultiPoly::require_same_arity(u, v);
    if (u.terms_.size() != v.terms_.size()) return false;
    for (std::size_t i = 0; i < u.terms_.size(); ++i) {
        if (u.terms_[i].key != v.terms_[i].key || !(u.terms_[i].coeff == v.terms_[i].coeff)) {
            return false;
        }
    }
    return true;
}

std::optional<MultiPoly> try_divide(const MultiPoly& u, const MultiPoly& v) {
    MultiPoly::require_same_arity(u, v);
    if (v.is_zero()) throw std::invalid_argument("MultiPoly: division by zero polynomial");
    MultiPoly q(u.arity_);
    MultiPoly r = u;
    const MultiPoly::Term& vl = v.terms_.back();
    // Peel leading terms: when the division is exact, the leading term of the
    // running remainder is always divisible by the leading term of v.
    while (!r.terms_.empty()) {
        const MultiPoly::Term& rl = r.terms_.back();
        std::uint64_t tkey = rl.key - vl.key;
        // Field-wise validity of the monomial quotient.
        const int bits = u.field_bits();
        const int slots = 64 / bits;
        const std::uint64_t mask = (1ull << bits) - 1;
        for (int i = 0; i < slots; ++i) {
            std::uint64_t shift = static_cast<std::uint64_t>(bits) * i;
            if (((rl.key >> shift) & mask) < ((vl.key >> shift) & mask)) return std::nullopt;
        }
        auto [qc, rem] = BigInt::divmod(rl.coeff, vl.coeff);
        if (!rem.is_zero()) return std::nullopt;
        MultiPoly t(u.arity_);
        t.terms_.push_back({tkey, qc});
        q = q + t;
        r = r - t * v;
    }
    return q;
}

MultiPoly divide_exact(const MultiPoly& u, const MultiPoly& v) {
    auto q = try_divide(u, v);
    if (!q) throw std::invalid_argument("MultiPoly: not divisible");
    return *q;
}

MultiPoly pow(const MultiPoly& u, std::uint64_t e) {
    MultiPoly result = MultiPoly::constant(u.arity(), BigInt(1));
    MultiPoly b = u;
    while (e) {
        if (e & 1) result = result * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return result;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    static const char* kNames3[] = {"X", "Y", "Z"};
    auto var_name = [&](int i) {
        if (arity_ <= 3) return std::string(kNames3[i]);
        return "X" + std::to_string(i + 1);
    };
    std::string out;
    // Descending lexicographic order reads naturally.
    for (std::size_t idx = terms_.size(); idx-- > 0;) {
        const Term& t = terms_[idx];
        BigInt c = t.coeff;
        bool first = out.empty();
        if (c.sign() < 0) {
            out += first ? "-" : " - ";
            c = c.negated();
        } else if (!first) {
            out += " + ";
        }
        auto exps = unpack(t.key);
        std::string mono;
        for (int i = 0; i < arity_; ++i) {
            if (exps[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += var_name(i);
            if (exps[i] > 1) mono += "^" + std::to_string(exps[i]);
        }
        if (mono.empty()) {
            out += c.to_string();
        } else if (c.is_one()) {
            out += mono;
        } else {
            out += c.to_string() + "*" + mono;
        }
    }
    return out;
}

}  // namespace vdgap
