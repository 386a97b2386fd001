#pragma once

// Sparse multivariate polynomials with BigInt coefficients. Exponent vectors
// are packed into one 64-bit key, variable 0 in the most significant field, so
// integer comparison of keys is the lexicographic monomial order and key
// addition is monomial multiplication. Fields are 16 bits wide for arity <= 4
// (exponents up to 65535) and 8 bits wide for arity in [5, 8] (exponents up to
// 255). The zero polynomial stores no terms and its degree is a distinct
// sentinel (std::nullopt), never -1.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vdgap/bigint.hpp"

namespace vdgap {

class MultiPoly {
public:
    static constexpr int kMaxArity = 8;

    int field_bits() const { return arity_ <= 4 ? 16 : 8; }
    std::uint32_t max_exponent() const { return arity_ <= 4 ? 65535u : 255u; }

    struct Term {
        std::uint64_t key;  // packed exponents
        BigInt coeff;       // never zero
    };

    explicit MultiPoly(int arity);
    static MultiPoly constant(int arity, BigInt c);
    static MultiPoly monomial(int arity, BigInt coeff, const std::vector<std::uint32_t>& exponents);

    int arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    // Total degree; std::nullopt for the zero polynomial.
    std::optional<int> total_degree() const;

    std::vector<std::uint32_t> unpack(std::uint64_t key) const;

    friend MultiPoly operator+(const MultiPoly& u, const MultiPoly& v);
    friend MultiPoly operator-(const MultiPoly& u, const MultiPoly& v);
    friend MultiPoly operator*(const MultiPoly& u, const MultiPoly& v);
    MultiPoly operator-() const;

    friend bool operator==(const MultiPoly& u, const MultiPoly& v);

    std::string to_string() const;

private:
    int arity_;
    std::vector<Term> terms_;  // ascending key order

    static void require_same_arity(const MultiPoly& u, const MultiPoly& v);
    friend std::optional<MultiPoly> try_divide(const MultiPoly& u, const MultiPoly& v);
};

// Exact quotient; throws when v does not divide u (or v is zero).
MultiPoly divide_exact(const MultiPoly& u, const MultiPoly& v);
std::optional<MultiPoly> try_divide(const MultiPoly& u, const MultiPoly& v);

MultiPoly pow(const MultiPoly& u, std::uint64_t e);

inline MultiPoly zero_like(const MultiPoly& u) { return MultiPoly(u.arity()); }
inline MultiPoly one_like(const MultiPoly& u) { return MultiPoly::constant(u.arity(), BigInt(1)); }
inline bool is_zero(const MultiPoly& u) { return u.is_zero(); }
inline std::string to_string(const MultiPoly& u) { return u.to_string(); }

}  // namespace vdgap
