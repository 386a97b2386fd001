#include "vdgap/conic.hpp"

#include <algorithm>
#include <stdexcept>

#include "vdgap/identity.hpp"
#include "vdgap/numtheory.hpp"

namespace vdgap {

std::vector<ConicPoint> enumerate_points(std::int64_t d, const BigInt& R) {
    if (d < 1) throw std::invalid_argument("enumerate_points: d must be >= 1");
    if (R.sign() <= 0 || R > BigInt(1000000000000ll)) {
        throw std::invalid_argument("enumerate_points: R must satisfy 1 <= R <= 10^12");
    }
    const std::uint64_t r = R.to_u64();
    const std::uint64_t du = static_cast<std::uint64_t>(d);
    std::vector<ConicPoint> points;
    const std::uint64_t ymax = isqrt_u64(r / du);
    for (std::uint64_t y = 0; y <= ymax; ++y) {
        std::uint64_t rem = r - du * y * y;
        std::uint64_t x;
        if (!is_perfect_square_u64(rem, &x)) continue;
        const BigInt bx = BigInt::from_u64(x), by = BigInt::from_u64(y);
        points.push_back({bx, by});
        if (x) points.push_back({bx.negated(), by});
        if (y) {
            points.push_back({bx, by.negated()});
            if (x) points.push_back({bx.negated(), by.negated()});
        }
    }
    std::sort(points.begin(), points.end(), [](const ConicPoint& a, const ConicPoint& b) {
        if (!(a.y == b.y)) return a.y < b.y;
        return a.x < b.x;
    });
    return points;
}

bool on_conic(std::int64_t d, const BigInt& R, const ConicPoint& p) {
    return p.x * p.x + BigInt(d) * (p.y * p.y) == R;
}

std::string point_to_string(const ConicPoint& p) {
    return "(" + p.x.to_string() + "," + p.y.to_string() + ")";
}

TightTripleFamily tight_triple_generate(std::int64_t t, std::int64_t d) {
    if (t < 1 || d < 1) throw std::invalid_argument("tight_triple_generate: t, d must be >= 1");
    const BigInt T(t), D(d);
    const BigInt u = D * D * T + D * T - D + BigInt(1);
    const BigInt two_dt = BigInt(2) * D * T;

    TightTripleFamily fam;
    fam.t = t;
    fam.d = d;
    fam.u = u;
    BigInt x1 = D * T * (two_dt - BigInt(1)) * u - BigInt(1);
    BigInt y1 = T * (two_dt + BigInt(1)) * u + BigInt(1);
    fam.points[0] = {x1, y1};
    fam.points[1] = {x1 + two_dt + BigInt(2), y1 - two_dt};
    fam.points[2] = {x1 - two_dt, y1 + two_dt - BigInt(2)};
    fam.R = x1 * x1 + D * (y1 * y1);

    for (const auto& p : fam.points) {
        if (!on_conic(d, fam.R, p)) {
            throw std::logic_error("tight_triple_generate: point off the conic");
        }
    }
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < i; ++j) {
            if (fam.points[i].x == fam.points[j].x && fam.points[i].y == fam.points[j].y) {
                throw std::logic_error("tight_triple_generate: points coincide");
            }
        }
    }
    return fam;
}

BigInt r_leading_coefficient(std::int64_t d) {
    const BigInt D(d);
    return BigInt(4) * pow(D, 5) * pow(D + BigInt(1), 3);
}

TightTripleRatios tight_triple_asymptotics(std::int64_t t, std::int64_t d) {
    TightTripleFamily fam = tight_triple_generate(t, d);
    const BigInt T(t), D(d);

    BigInt d_sq;
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            BigInt dx = fam.points[i].x - fam.points[j].x;
            BigInt dy = fam.points[i].y - fam.points[j].y;
            BigInt sq = dx * dx + dy * dy;
            if (sq > d_sq) d_sq = sq;
        }
    }

    TightTripleRatios ratios{
        Rational(fam.R, r_leading_coefficient(d) * pow(T, 6)),
        Rational(d_sq, BigInt(32) * D * D * T * T),
        d_sq,
    };
    return ratios;
}

namespace {

IdentityInstance<QuadInt> conjugate_instance(const std::array<ConicPoint, 3>& pts,
                                             std::int64_t d, const BigInt& R) {
    std::vector<QuadInt> alpha, beta;
    for (const auto& p : pts) {
        QuadInt a(p.x, p.y, d);
        alpha.push_back(a);
        beta.push_back(a.conj());
    }
    return IdentityInstance<QuadInt>::create(std::move(alpha), std::move(beta),
                                             QuadInt(R, BigInt(), d));
}

}  // namespace

QuadInt tight_triple_determinant(std::int64_t t, std::int64_t d) {
    TightTripleFamily fam = tight_triple_generate(t, d);
    QuadInt det = det_k(conjugate_instance(fam.points, d, fam.R), 1);
    if (!det.re().is_zero()) {
        throw std::logic_error("tight_triple_determinant: expected a purely imaginary value");
    }
    return det;
}

TriangleIdentity triangle_identity(const ConicPoint& p1, const ConicPoint& p2,
                                   const ConicPoint& p3) {
    std::array<ConicPoint, 3> pts{p1, p2, p3};
    BigInt R = p1.x * p1.x + p1.y * p1.y;
    TriangleIdentity out{det_k(conjugate_instance(pts, 1, R), 1), BigInt(), BigInt()};
    out.norm_det = quad_norm(out.det1);
    BigInt shoelace = p1.x * (p2.y - p3.y) + p2.x * (p3.y - p1.y) + p3.x * (p1.y - p2.y);
    out.shoelace = shoelace.abs();
    return out;
}

}  // namespace vdgap
