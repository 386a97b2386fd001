#pragma once

// Integer points on X^2 + d*Y^2 = R and the parametric three-point family that
// realizes near-tight chord configurations, together with its determinant and
// growth statistics.

#include <array>
#include <cstdint>
#include <vector>

#include "vdgap/bigint.hpp"
#include "vdgap/quadint.hpp"
#include "vdgap/rational.hpp"

namespace vdgap {

struct ConicPoint {
    BigInt x, y;
};

// All integer solutions of x^2 + d*y^2 = R, ordered by (y, x) ascending.
// Requires d >= 1 and 1 <= R <= 10^12.
std::vector<ConicPoint> enumerate_points(std::int64_t d, const BigInt& R);

bool on_conic(std::int64_t d, const BigInt& R, const ConicPoint& p);

std::string point_to_string(const ConicPoint& p);

// The three-point family: u = d^2 t + d t - d + 1,
//   x1 = d t (2 d t - 1) u - 1,   y1 = t (2 d t + 1) u + 1,
//   x2 = x1 + 2 d t + 2,          y2 = y1 - 2 d t,
//   x3 = x1 - 2 d t,              y3 = y1 + 2 d t - 2,
// all on X^2 + d Y^2 = R with R = x1^2 + d y1^2.
struct TightTripleFamily {
    std::int64_t t = 0;
    std::int64_t d = 0;
    BigInt u;
    std::array<ConicPoint, 3> points;
    BigInt R;
};

TightTripleFamily tight_triple_generate(std::int64_t t, std::int64_t d);

// Leading coefficient of R as a polynomial in t: R ~ 4 d^5 (d+1)^3 t^6.
BigInt r_leading_coefficient(std::int64_t d);

struct TightTripleRatios {
    Rational ratio_r;       // R / (4 d^5 (d+1)^3 t^6)   -> 1 as t grows
    Rational ratio_d_sq;    // D^2 / (32 d^2 t^2)        -> 1 as t grows
    BigInt d_sq;            // max pairwise squared Euclidean distance (exact)
};

TightTripleRatios tight_triple_asymptotics(std::int64_t t, std::int64_t d);

// det_1 of the instance alpha_i = x_i + sqrt(-d) y_i, beta_i = conj(alpha_i),
// gamma = R. Purely imaginary and t-independent; the imaginary part is +-8.
QuadInt tight_triple_determinant(std::int64_t t, std::int64_t d);

// For three distinct points on one circle x^2 + y^2 = R, with
// alpha_i = x_i + i y_i and beta_i = conj(alpha_i): N(det_1) equals
// 4 * shoelace^2, where shoelace = |x1(y2-y3)+x2(y3-y1)+x3(y1-y2)| is twice
// the triangle area. Exact integer identity. Throws when the points do not
// share a norm.
struct TriangleIdentity {
    QuadInt det1;      // over Z[i]
    BigInt norm_det;
    BigInt shoelace;
};

TriangleIdentity triangle_identity(const ConicPoint& p1, const ConicPoint& p2,
                                   const ConicPoint& p3);

}  // namespace vdgap
