#include "vdgap/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace vdgap {

std::uint64_t isqrt_u64(std::uint64_t n) {
    if (n == 0) return 0;
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r > n / r) --r;
    while ((r + 1) <= n / (r + 1)) ++r;
    return r;
}

bool is_perfect_square_u64(std::uint64_t n, std::uint64_t* root) {
    std::uint64_t r = isqrt_u64(n);
    if (root) *root = r;
    return r * r == n;
}

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin witness set for 64-bit integers.
constexpr std::uint64_t kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

std::uint64_t pollard_brent(std::uint64_t n) {
    if ((n & 1) == 0) return 2;
    for (std::uint64_t c = 1;; ++c) {
        auto step = [&](std::uint64_t v) { return (mulmod_u64(v, v, n) + c) % n; };
        std::uint64_t x = 2, y = 2, d = 1;
        do {
            x = step(x);
            y = step(step(y));
            std::uint64_t diff = x > y ? x - y : y - x;
            d = diff == 0 ? n : std::gcd(diff, n);
        } while (d == 1);
        if (d != n) return d;
    }
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : kWitnesses) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<std::pair<std::uint64_t, int>> factorize_u64(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("factorize_u64: n must be positive");
    std::vector<std::pair<std::uint64_t, int>> factors;
    for (std::uint64_t p : {2ull, 3ull, 5ull}) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e) factors.emplace_back(p, e);
    }
    // Wheel over 6k +- 1 up to 10^6, then Pollard-Brent on what remains.
    for (std::uint64_t p = 7; p <= 1000000 && p * p <= n; p += (p % 6 == 1) ? 4 : 2) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            factors.emplace_back(p, e);
        }
    }
    std::vector<std::uint64_t> pending;
    if (n > 1) pending.push_back(n);
    while (!pending.empty()) {
        std::uint64_t m = pending.back();
        pending.pop_back();
        if (m == 1) continue;
        if (is_prime_u64(m)) {
            bool merged = false;
            for (auto& [p, e] : factors) {
                if (p == m) {
                    ++e;
                    merged = true;
                    break;
                }
            }
            if (!merged) factors.emplace_back(m, 1);
            continue;
        }
        std::uint64_t d = pollard_brent(m);
        pending.push_back(d);
        pending.push_back(m / d);
    }
    std::sort(factors.begin(), factors.end());
    return factors;
}

std::vector<BigInt> divisors(const BigInt& n) {
    if (n.sign() <= 0 || !n.fits_u64()) {
        throw std::invalid_argument("divisors: n must satisfy 1 <= n <= 2^64");
    }
    auto factors = factorize_u64(n.to_u64());
    std::vector<std::uint64_t> divs{1};
    for (auto [p, e] : factors) {
        std::size_t count = divs.size();
        std::uint64_t pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < count; ++j) divs.push_back(divs[j] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    std::vector<BigInt> out;
    out.reserve(divs.size());
    for (std::uint64_t d : divs) out.push_back(BigInt::from_u64(d));
    return out;
}

std::uint64_t p_adic_valuation(const BigInt& n, const BigInt& p) {
    if (n.is_zero()) throw std::invalid_argument("p_adic_valuation: n must be nonzero");
    if (p.sign() <= 0 || p == BigInt(1)) throw std::invalid_argument("p_adic_valuation: p must be prime");
    if (p.fits_u64() && !is_prime_u64(p.to_u64())) {
        throw std::invalid_argument("p_adic_valuation: p is not prime");
    }
    std::uint64_t e = 0;
    BigInt m = n.abs();
    while (true) {
        auto [q, r] = BigInt::divmod(m, p);
        if (!r.is_zero()) break;
        m = q;
        ++e;
    }
    return e;
}

bool is_squarefree(std::int64_t d) {
    if (d < 1 || d > 1000000000000ll) {
        throw std::invalid_argument("is_squarefree: d must satisfy 1 <= d <= 10^12");
    }
    std::uint64_t n = static_cast<std::uint64_t>(d);
    for (std::uint64_t p = 2; p <= 1000000 && p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return false;
        }
    }
    return true;
}

}  // namespace vdgap
