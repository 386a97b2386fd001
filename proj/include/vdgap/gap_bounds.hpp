#pragma once

// Lower bounds on the largest pairwise "gap" among divisors of a common
// multiple: the generic size-function bound and its specializations to equal
// norm elements of Z[sqrt(-d)], to integer divisors in an arithmetic
// progression, to polynomial divisors, and to subsets of conic points.
//
// Size functions are a closed set of exact embeddings into ExactPower:
//   integers     phi(x) = |x|
//   quadratic    phi(x) = N(x)^(1/2)
//   polynomials  phi(u) = exp(deg u), embedded as 2^(deg u) - any base > 1
//                gives the same exact ordering, which is all the checks use.

#include <cstdint>
#include <optional>
#include <vector>

#include "vdgap/conic.hpp"
#include "vdgap/identity.hpp"
#include "vdgap/kfunction.hpp"
#include "vdgap/multipoly.hpp"
#include "vdgap/quadint.hpp"
#include "vdgap/report.hpp"

namespace vdgap {

ExactPower phi_value(const BigInt& x);
ExactPower phi_value(const QuadInt& x);
ExactPower phi_value(const MultiPoly& u);

struct BoundPremise {
    int m = 0;
    Rational s;          // in [0, 1]
    ExactPower L;        // >= 1, lower bound on phi(det_k)
    ExactPower phi_gamma;
};

template <typename R>
BoundPremise make_premise(const IdentityInstance<R>& inst, Rational s, ExactPower L) {
    if (s.sign() < 0 || s > Rational(1)) {
        throw std::invalid_argument("make_premise: s must lie in [0, 1]");
    }
    if (exact_power_compare(L, ExactPower::one()) == Ordering::Less) {
        throw std::invalid_argument("make_premise: L must be >= 1");
    }
    return BoundPremise{inst.m, std::move(s), std::move(L), phi_value(inst.gamma)};
}

// Checks sup_{i<j} phi(alpha_i - alpha_j) >= L^(1/C(m,2)) * phi(gamma)^(K(sm,m)/C(m,2)),
// after verifying the premise phi(alpha_i) >= phi(gamma)^s for every i. On a
// premise failure the conclusion is not asserted. With L = 1 this is a theorem
// for every valid instance; a failure indicates a library bug.
template <typename R>
CheckReport gap_bound_check(const IdentityInstance<R>& inst, const BoundPremise& premise);

// Distinct nonzero elements of Z[sqrt(-d)] with one common absolute norm R:
// sup |N(alpha_i - alpha_j)|^(1/2) >= R^(K(m/2,m)/C(m,2)). The exponent refers
// to the subset size m; all pairs participate in the supremum. Requires
// points.size() >= m >= 2.
CheckReport norm_gap_check(const std::vector<QuadInt>& points, int m);

// Divisors of N congruent to a mod q, gcd(a, q) = 1, each >= N^s:
// sup |d_i - d_j| >= q * N^(K(sm,m)/C(m,2)), and q divides every gap.
// Without a subset, qualifying divisors are selected automatically (residue
// class and premise); a supplied subset is validated strictly.
CheckReport divisor_gap_check(const BigInt& N, const BigInt& q, const BigInt& a,
                              const Rational& s,
                              const std::optional<std::vector<BigInt>>& subset = std::nullopt);

// Distinct nonzero polynomial divisors of R with deg(P_i) >= s*deg(R):
// sup deg(P_i - P_j) >= deg(R) * K(sm,m)/C(m,2), compared in exact rationals.
CheckReport poly_divisor_gap_check(const std::vector<MultiPoly>& polys,
                                   const MultiPoly& common_multiple, const Rational& s);

// Arc-bound constants: s(m) = 1/4 - 1/(8*floor(m/2)+4); for odd m,
// t(m) = floor((m^2/2 - m)/2) + 1 and l(m) = (1 - t(m)/C(m,2))/2; even m
// reports the m+1 values (the even case reduces to the next odd one).
struct ArcBoundConstants {
    int m = 0;
    Rational s;
    long long t = 0;
    Rational l;
};

ArcBoundConstants arc_bound_constants(int m);

// For every m-subset of points on X^2 + d Y^2 = R (m odd), checks
// (max pairwise |N(alpha_i - alpha_j)|)^(1/2) >= R^s(m) exactly and reports
// the subset minimizing the left side. Fewer than m points is a vacuous pass.
// Enumeration is capped at C(count, m) <= 10^6.
CheckReport conic_gap_check(std::int64_t d, const BigInt& R,
                            const std::vector<ConicPoint>& points, int m);

// Combinatorial minima behind the n-adic refinement of the arc bound:
// min over k in [0, m] of C(k,2) + C(m-k,2), and
// min over k in [0, m-1] of k(k+1)/2 + (m-1-k)(m-k)/2.
// For odd m the first equals t(m) and the second is >= t(m); at even m the
// first drops below t(m), which is why the constants fall back to m+1.
long long two_class_pair_min(int m);
long long shifted_pair_min(int m);
long long arc_exponent_t(int m);  // floor((m^2/2 - m)/2) + 1

template <typename R>
CheckReport gap_bound_check(const IdentityInstance<R>& inst, const BoundPremise& premise) {
    if (premise.m != inst.m) throw std::invalid_argument("gap_bound_check: m mismatch");
    const int m = inst.m;

    CheckReport report;
    report.name = "gap-bound-m" + std::to_string(m);
    report.details["m"] = std::to_string(m);
    report.details["s"] = premise.s.to_string();
    report.details["L"] = premise.L.to_string();
    report.details["phi_gamma"] = premise.phi_gamma.to_string();

    report.premises.push_back(
        {"L >= 1", exact_power_compare(premise.L, ExactPower::one()) != Ordering::Less});

    ExactPower phi_gamma_s = premise.phi_gamma.pow(premise.s);
    bool premise_ok = true;
    for (int i = 0; i < m; ++i) {
        bool ok = exact_power_compare(phi_value(inst.alpha[i]), phi_gamma_s) != Ordering::Less;
        premise_ok = premise_ok && ok;
        report.premises.push_back(
            {"phi(alpha_" + std::to_string(i) + ") >= phi(gamma)^s", ok});
    }
    if (!premise_ok || !report.premises[0].pass) return report;  // conclusion not asserted

    ExactPower sup = phi_value(inst.alpha[0] - inst.alpha[1]);
    int wi = 0, wj = 1;
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            if (i == 0 && j == 1) continue;
            ExactPower v = phi_value(inst.alpha[i] - inst.alpha[j]);
            if (exact_power_compare(v, sup) == Ordering::Greater) {
                sup = v;
                wi = i;
                wj = j;
            }
        }
    }

    const Rational c = binom2(m);
    KValue kv = k_function(premise.s * Rational(m), m);
    Rational exponent = kv.value / c;
    ExactPower bound = premise.L.pow(Rational(BigInt(1), c.num())).multiply_by(
        premise.phi_gamma.pow(exponent));

    report.conclusion = conclude_ge(sup, bound);
    report.witness = "pair (" + std::to_string(wi) + "," + std::to_string(wj) + "): " +
                     to_string(inst.alpha[wi]) + " vs " + to_string(inst.alpha[wj]);
    report.details["K"] = kv.value.to_string();
    report.details["exponent"] = exponent.to_string();
    return report;
}

}  // namespace vdgap
