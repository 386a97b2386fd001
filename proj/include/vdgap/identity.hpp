#pragma once

// The mixed Vandermonde determinant det_k and the identity it satisfies:
// for alpha_i * beta_i = gamma (all i) and 0 <= k <= m-1,
//
//   gamma^{k(k+1)/2} * prod_{i<j} (alpha_i - alpha_j)
//       = eps(m) * det_k(alpha, beta) * prod_i alpha_i^k,
//
// where det_k has rows beta^k, ..., beta, 1, alpha, ..., alpha^{m-k-1} and
// eps(m) = (-1)^{m(m-1)/2} accounts for the orientation of the plain
// Vandermonde matrix the proof reduces to. Everything here is exact and works
// over any of the supported integral domains (BigInt, QuadInt, MultiPoly).

#include <cstddef>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "vdgap/bigint.hpp"
#include "vdgap/report.hpp"

namespace vdgap {

inline int identity_sign(int m) {
    return (static_cast<long long>(m) * (m - 1) / 2) % 2 == 0 ? 1 : -1;
}

template <typename R>
R ring_pow(const R& x, long long e) {
    R result = one_like(x);
    R b = x;
    while (e > 0) {
        if (e & 1) result = result * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return result;
}

namespace detail {

// Laplace expansion organized as dynamic programming over column subsets:
// minor(rows 0..r-1, cols S) for |S| = r. Exact in any commutative ring.
template <typename R>
R laplace_det(const std::vector<std::vector<R>>& a) {
    const std::size_t n = a.size();
    std::unordered_map<std::uint32_t, R> prev;
    prev.emplace(0u, one_like(a[0][0]));
    for (std::size_t r = 0; r < n; ++r) {
        std::unordered_map<std::uint32_t, R> cur;
        for (const auto& [mask, minor] : prev) {
            int position = 0;
            for (std::size_t c = 0; c < n; ++c) {
                std::uint32_t bit = 1u << c;
                if (mask & bit) {
                    ++position;
                    continue;
                }
                // New column c sits after `position` chosen columns; expanding
                // along the last row alternates sign with that offset.
                R term = a[r][c] * minor;
                std::uint32_t next_mask = mask | bit;
                int parity = (static_cast<int>(r) + position) % 2;
                auto it = cur.find(next_mask);
                if (it == cur.end()) {
                    cur.emplace(next_mask, parity ? -term : term);
                } else {
                    it->second = parity ? it->second - term : it->second + term;
                }
            }
        }
        prev = std::move(cur);
    }
    return prev.at((1u << n) - 1u);
}

// Fraction-free Bareiss elimination with row pivoting; divisions are exact
// over the integers. Used for the larger integer matrices.
inline BigInt bareiss_det(std::vector<std::vector<BigInt>> a) {
    const std::size_t n = a.size();
    BigInt prev_pivot(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return BigInt();
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = divide_exact(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev_pivot);
            }
            a[i][k] = BigInt();
        }
        prev_pivot = a[k][k];
    }
    return sign < 0 ? a[n - 1][n - 1].negated() : a[n - 1][n - 1];
}

}  // namespace detail

// Exact determinant of a square matrix of ring elements, dimension <= 12.
template <typename R>
R det_exact(const std::vector<std::vector<R>>& matrix) {
    const std::size_t n = matrix.size();
    if (n == 0 || n > 12) throw std::invalid_argument("det_exact: dimension must be in [1, 12]");
    for (const auto& row : matrix) {
        if (row.size() != n) throw std::invalid_argument("det_exact: matrix is not square");
    }
    if constexpr (std::is_same_v<R, BigInt>) {
        if (n >= 7) return detail::bareiss_det(matrix);
    }
    return detail::laplace_det(matrix);
}

template <typename R>
struct IdentityInstance {
    std::vector<R> alpha;
    std::vector<R> beta;
    R gamma;
    int m = 0;

    // Validates: m >= 2, alpha pairwise distinct, everything nonzero, and
    // alpha_i * beta_i == gamma exactly for every i.
    static IdentityInstance create(std::vector<R> alpha, std::vector<R> beta, R gamma) {
        if (alpha.size() != beta.size()) {
            throw std::invalid_argument("IdentityInstance: alpha/beta size mismatch");
        }
        const int m = static_cast<int>(alpha.size());
        if (m < 2) throw std::invalid_argument("IdentityInstance: m must be >= 2");
        if (is_zero(gamma)) throw std::invalid_argument("IdentityInstance: gamma must be nonzero");
        for (int i = 0; i < m; ++i) {
            if (is_zero(alpha[i]) || is_zero(beta[i])) {
                throw std::invalid_argument("IdentityInstance: elements must be nonzero");
            }
            if (!(alpha[i] * beta[i] == gamma)) {
                throw std::invalid_argument("IdentityInstance: alpha_i * beta_i != gamma");
            }
            for (int j = 0; j < i; ++j) {
                if (alpha[i] == alpha[j]) {
                    throw std::invalid_argument("IdentityInstance: alpha_i must be distinct");
                }
            }
        }
        return IdentityInstance{std::move(alpha), std::move(beta), std::move(gamma), m};
    }

    // beta derived by exact division gamma / alpha_i.
    static IdentityInstance from_alpha_gamma(std::vector<R> alpha, R gamma) {
        std::vector<R> beta;
        beta.reserve(alpha.size());
        for (const auto& a : alpha) beta.push_back(divide_exact(gamma, a));
        return create(std::move(alpha), std::move(beta), std::move(gamma));
    }
};

// The m x m matrix with rows beta^k ... beta, 1, alpha ... alpha^{m-k-1}.
template <typename R>
std::vector<std::vector<R>> det_k_matrix(const IdentityInstance<R>& inst, int k) {
    const int m = inst.m;
    if (k < 0 || k >= m) throw std::invalid_argument("det_k: k must lie in [0, m-1]");
    std::vector<std::vector<R>> rows;
    rows.reserve(m);
    for (int e = k; e >= 1; --e) {
        std::vector<R> row;
        row.reserve(m);
        for (const auto& b : inst.beta) row.push_back(ring_pow(b, e));
        rows.push_back(std::move(row));
    }
    rows.emplace_back(m, one_like(inst.gamma));
    for (int e = 1; e <= m - k - 1; ++e) {
        std::vector<R> row;
        row.reserve(m);
        for (const auto& a : inst.alpha) row.push_back(ring_pow(a, e));
        rows.push_back(std::move(row));
    }
    return rows;
}

template <typename R>
R det_k(const IdentityInstance<R>& inst, int k) {
    R d = det_exact(det_k_matrix(inst, k));
    // Nonvanishing is a theorem for valid instances; zero means a library bug.
    if (is_zero(d)) throw std::logic_error("det_k: vanished on a valid instance");
    return d;
}

template <typename R>
CheckReport verify_identity(const IdentityInstance<R>& inst, int k) {
    const int m = inst.m;
    if (k < 0 || k >= m) throw std::invalid_argument("verify_identity: k must lie in [0, m-1]");

    R lhs = ring_pow(inst.gamma, static_cast<long long>(k) * (k + 1) / 2);
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) lhs = lhs * (inst.alpha[i] - inst.alpha[j]);
    }

    R rhs = det_k(inst, k);
    for (const auto& a : inst.alpha) rhs = rhs * ring_pow(a, k);
    if (identity_sign(m) < 0) rhs = -rhs;

    CheckReport report;
    report.name = "identity-m" + std::to_string(m) + "-k" + std::to_string(k);
    report.premises.push_back({"alpha_i distinct, nonzero, alpha_i*beta_i = gamma", true});
    Conclusion c;
    c.lhs = to_string(lhs);
    c.rhs = to_string(rhs);
    c.relation = "==";
    c.holds = lhs == rhs;
    report.conclusion = c;
    report.details["m"] = std::to_string(m);
    report.details["k"] = std::to_string(k);
    report.details["sign"] = identity_sign(m) < 0 ? "-1" : "+1";
    return report;
}

}  // namespace vdgap
