#pragma once

// The elementary overlap inequality on nonnegative reals, its integrated form
// on finite discrete probability spaces, and the gcd/divisibility form over Z.

#include <optional>
#include <vector>

#include "vdgap/bigint.hpp"
#include "vdgap/rational.hpp"
#include "vdgap/report.hpp"

namespace vdgap {

// k(k+1)/2 * sup a_i + sum_{i<j} inf(a_i, a_j) >= k * sum a_i,
// for nonnegative rationals and 0 <= k <= m-1.
CheckReport scalar_overlap_check(const std::vector<Rational>& a, int k);

struct MeasureSpace {
    std::vector<Rational> weights;        // nonnegative, sums to exactly 1
    std::vector<std::vector<int>> sets;   // m subsets as atom index lists
};

// sum_{i<j} mu(A_i cap A_j) >= K(sum_i mu(A_i), m); also checks the k-indexed
// intermediate inequality k(k+1)/2 * mu(union) + sum mu(A_i cap A_j) >= k * sum mu(A_i)
// for every k in [0, m-1].
CheckReport measure_overlap_check(const MeasureSpace& space);

struct OverlapIntInstance {
    BigInt c;                 // positive
    std::vector<BigInt> a;    // positive, each dividing c (not necessarily distinct)
};

// (a) c^{k(k+1)/2} * prod_{i<j} gcd(a_i, a_j) is divisible by prod_i a_i^k.
// (b) with s in [0,1] supplied and a_i >= c^s verified exactly:
//     max pairwise gcd >= c^{K(sm,m)/C(m,2)}.
CheckReport gcd_overlap_check(const OverlapIntInstance& instance, int k,
                              const std::optional<Rational>& s = std::nullopt);

}  // namespace vdgap
