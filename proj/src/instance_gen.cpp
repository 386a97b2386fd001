#include "vdgap/instance_gen.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace vdgap {

namespace {

// Smallest factor count whose subset space can hold m distinct subproducts,
// with one factor of slack for value collisions.
int min_factors(int m) {
    int f = 3;
    while ((1 << f) < m + 1) ++f;
    return f;
}

// Draws m distinct factor-subset masks; the empty subset (alpha = 1) is allowed.
std::vector<std::uint32_t> draw_masks(SplitMix64& rng, int m, int factor_count) {
    std::vector<std::uint32_t> masks;
    const std::uint32_t space = 1u << factor_count;
    int guard = 0;
    while (static_cast<int>(masks.size()) < m) {
        if (++guard > 1000) throw std::logic_error("instance generation: mask draw stuck");
        std::uint32_t mask = static_cast<std::uint32_t>(rng.below(space));
        bool fresh = true;
        for (auto seen : masks) fresh = fresh && seen != mask;
        if (fresh) masks.push_back(mask);
    }
    return masks;
}

template <typename R>
IdentityInstance<R> build_from_factors(SplitMix64& rng, int m,
                                       const std::vector<R>& factors, const R& unit) {
    R gamma = unit;
    for (const auto& f : factors) gamma = gamma * f;

    auto masks = draw_masks(rng, m, static_cast<int>(factors.size()));
    std::vector<R> alpha;
    alpha.reserve(m);
    for (auto mask : masks) {
        R a = unit;
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (mask & (1u << i)) a = a * factors[i];
        }
        alpha.push_back(std::move(a));
    }
    // Distinct masks can still collide in value; the caller retries.
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < i; ++j) {
            if (alpha[i] == alpha[j]) throw std::invalid_argument("collision");
        }
    }
    return IdentityInstance<R>::from_alpha_gamma(std::move(alpha), std::move(gamma));
}

template <typename F>
auto retry(F&& attempt) {
    for (int tries = 0; tries < 200; ++tries) {
        try {
            return attempt();
        } catch (const std::invalid_argument&) {
            // collision or accidental zero; redraw
        }
    }
    throw std::logic_error("instance generation: too many retries");
}

}  // namespace

IdentityInstance<BigInt> random_integer_instance(SplitMix64& rng, int m) {
    auto attempt = [&]() {
        int f = static_cast<int>(rng.range(std::max(3, min_factors(m)), 6));
        std::vector<BigInt> factors;
        for (int i = 0; i < f; ++i) {
            long long v = rng.range(2, 9);
            if (rng.next() & 1) v = -v;
            factors.emplace_back(v);
        }
        return build_from_factors<BigInt>(rng, m, factors, BigInt(1));
    };
    return retry(attempt);
}

IdentityInstance<QuadInt> random_quadratic_instance(SplitMix64& rng, int m, std::int64_t d) {
    auto attempt = [&]() {
        int f = static_cast<int>(rng.range(std::max(3, min_factors(m)), 6));
        std::vector<QuadInt> factors;
        for (int i = 0; i < f; ++i) {
            long long a = rng.range(-3, 3);
            long long b = rng.range(-3, 3);
            if (a == 0 && b == 0) a = 1;
            factors.emplace_back(BigInt(a), BigInt(b), d);
        }
        return build_from_factors<QuadInt>(rng, m, factors, QuadInt(BigInt(1), BigInt(), d));
    };
    return retry(attempt);
}

IdentityInstance<MultiPoly> random_poly_instance(SplitMix64& rng, int m, int arity) {
    if (arity < 1 || arity > 2) {
        throw std::invalid_argument("random_poly_instance: arity must be 1 or 2");
    }
    auto nonzero_coeff = [&](int bound) {
        long long c = rng.range(1, bound);
        return BigInt((rng.next() & 1) ? c : -c);
    };
    auto linear = [&]() {
        // A two-term degree-<=1 polynomial keeps powers sparse.
        MultiPoly p(arity);
        if (arity == 1) {
            p = MultiPoly::monomial(1, nonzero_coeff(3), {1}) +
                MultiPoly::constant(1, nonzero_coeff(3));
        } else {
            switch (rng.below(3)) {
                case 0:
                    p = MultiPoly::monomial(2, nonzero_coeff(2), {1, 0}) +
                        MultiPoly::constant(2, nonzero_coeff(2));
                    break;
                case 1:
                    p = MultiPoly::monomial(2, nonzero_coeff(2), {0, 1}) +
                        MultiPoly::constant(2, nonzero_coeff(2));
                    break;
                default:
                    p = MultiPoly::monomial(2, nonzero_coeff(2), {1, 0}) +
                        MultiPoly::monomial(2, nonzero_coeff(2), {0, 1});
                    break;
            }
        }
        return p;
    };
    auto attempt = [&]() {
        std::vector<MultiPoly> factors;
        if (arity == 1) {
            int f = static_cast<int>(rng.range(std::max(3, min_factors(m)), std::max(4, min_factors(m))));
            for (int i = 0; i < f; ++i) factors.push_back(linear());
        } else {
            // Two non-constant factors plus small constants: keeps the term
            // counts of det_k rows and both identity sides manageable.
            int f = static_cast<int>(rng.range(std::max(3, min_factors(m)), std::max(5, min_factors(m))));
            factors.push_back(linear());
            factors.push_back(linear());
            for (int i = 2; i < f; ++i) {
                factors.push_back(MultiPoly::constant(arity, nonzero_coeff(3)));
            }
        }
        return build_from_factors<MultiPoly>(rng, m, factors,
                                             MultiPoly::constant(arity, BigInt(1)));
    };
    return retry(attempt);
}

}  // namespace vdgap
