#include "vdgap/overlap.hpp"

#include <algorithm>
#include <stdexcept>

#include "vdgap/kfunction.hpp"

namespace vdgap {

CheckReport scalar_overlap_check(const std::vector<Rational>& a, int k) {
    const int m = static_cast<int>(a.size());
    if (m < 2) throw std::invalid_argument("scalar_overlap_check: m must be >= 2");
    if (k < 0 || k >= m) throw std::invalid_argument("scalar_overlap_check: k out of [0, m-1]");
    for (const auto& v : a) {
        if (v.sign() < 0) throw std::invalid_argument("scalar_overlap_check: negative entry");
    }

    Rational sup = a[0], sum = a[0];
    for (int i = 1; i < m; ++i) {
        if (a[i] > sup) sup = a[i];
        sum += a[i];
    }
    Rational inf_sum;
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) inf_sum += std::min(a[i], a[j]);
    }

    Rational lhs = Rational(static_cast<long long>(k) * (k + 1) / 2) * sup + inf_sum;
    Rational rhs = Rational(k) * sum;

    CheckReport report;
    report.name = "scalar-overlap-m" + std::to_string(m) + "-k" + std::to_string(k);
    Conclusion c;
    c.lhs = lhs.to_string();
    c.rhs = rhs.to_string();
    c.relation = ">=";
    c.ordering = lhs < rhs ? Ordering::Less : (lhs == rhs ? Ordering::Equal : Ordering::Greater);
    c.holds = *c.ordering != Ordering::Less;
    report.conclusion = c;
    report.details["m"] = std::to_string(m);
    report.details["k"] = std::to_string(k);
    return report;
}

namespace {

Rational set_measure(const MeasureSpace& space, const std::vector<int>& set) {
    Rational mu;
    for (int idx : set) mu += space.weights[idx];
    return mu;
}

}  // namespace

CheckReport measure_overlap_check(const MeasureSpace& space) {
    const int m = static_cast<int>(space.sets.size());
    if (m < 2) throw std::invalid_argument("measure_overlap_check: need at least 2 sets");
    const int atoms = static_cast<int>(space.weights.size());
    Rational total;
    for (const auto& w : space.weights) {
        if (w.sign() < 0) throw std::invalid_argument("measure_overlap_check: negative weight");
        total += w;
    }
    if (!(total == Rational(1))) {
        throw std::invalid_argument("measure_overlap_check: weights must sum to 1");
    }
    std::vector<std::vector<int>> sorted_sets = space.sets;
    for (auto& set : sorted_sets) {
        std::sort(set.begin(), set.end());
        for (std::size_t i = 0; i < set.size(); ++i) {
            if (set[i] < 0 || set[i] >= atoms) {
                throw std::invalid_argument("measure_overlap_check: atom index out of range");
            }
            if (i > 0 && set[i] == set[i - 1]) {
                throw std::invalid_argument("measure_overlap_check: duplicate atom index");
            }
        }
    }

    Rational mu_sum;
    for (const auto& set : sorted_sets) mu_sum += set_measure(space, set);

    Rational pair_sum;
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            std::vector<int> inter;
            std::set_intersection(sorted_sets[i].begin(), sorted_sets[i].end(),
                                  sorted_sets[j].begin(), sorted_sets[j].end(),
                                  std::back_inserter(inter));
            pair_sum += set_measure(space, inter);
        }
    }

    std::vector<int> union_set;
    for (const auto& set : sorted_sets) {
        std::vector<int> merged;
        std::set_union(union_set.begin(), union_set.end(), set.begin(), set.end(),
                       std::back_inserter(merged));
        union_set = std::move(merged);
    }
    const Rational mu_union = set_measure(space, union_set);

    CheckReport report;
    report.name = "measure-overlap-m" + std::to_string(m);
    // The k-indexed inequality integrates the scalar one over indicator values.
    for (int k = 0; k < m; ++k) {
        Rational lhs_k = Rational(static_cast<long long>(k) * (k + 1) / 2) * mu_union + pair_sum;
        Rational rhs_k = Rational(k) * mu_sum;
        report.premises.push_back({"k=" + std::to_string(k) + ": k(k+1)/2*mu(union) + sum >= k*sum(mu)",
                                   !(lhs_k < rhs_k)});
    }

    KValue kv = k_function(mu_sum, m);
    Conclusion c;
    c.lhs = pair_sum.to_string();
    c.rhs = kv.value.to_string();
    c.relation = ">=";
    c.ordering = pair_sum < kv.value ? Ordering::Less
                                     : (pair_sum == kv.value ? Ordering::Equal : Ordering::Greater);
    c.holds = *c.ordering != Ordering::Less;
    report.conclusion = c;
    report.details["m"] = std::to_string(m);
    report.details["atoms"] = std::to_string(atoms);
    report.details["sum_mu"] = mu_sum.to_string();
    report.details["K"] = kv.value.to_string();
    return report;
}

CheckReport gcd_overlap_check(const OverlapIntInstance& instance, int k,
                              const std::optional<Rational>& s) {
    const int m = static_cast<int>(instance.a.size());
    if (m < 1) throw std::invalid_argument("gcd_overlap_check: need at least one a_i");
    if (k < 0 || k >= m) throw std::invalid_argument("gcd_overlap_check: k out of [0, m-1]");
    if (instance.c.sign() <= 0) throw std::invalid_argument("gcd_overlap_check: c must be >= 1");
    for (const auto& ai : instance.a) {
        if (ai.sign() <= 0) throw std::invalid_argument("gcd_overlap_check: a_i must be >= 1");
        if (!(instance.c % ai).is_zero()) {
            throw std::invalid_argument("gcd_overlap_check: a_i does not divide c");
        }
    }

    CheckReport report;
    report.name = "gcd-overlap-m" + std::to_string(m) + "-k" + std::to_string(k);
    report.premises.push_back({"every a_i divides c", true});
    report.details["m"] = std::to_string(m);
    report.details["k"] = std::to_string(k);
    report.details["c"] = instance.c.to_string();

    BigInt gcd_product(1);
    BigInt max_gcd(1);
    bool have_pair = false;
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            BigInt g = gcd(instance.a[i], instance.a[j]);
            gcd_product *= g;
            if (!have_pair || g > max_gcd) {
                max_gcd = g;
                have_pair = true;
            }
        }
    }
    BigInt lhs = pow(instance.c, static_cast<std::uint64_t>(k) * (k + 1) / 2) * gcd_product;
    BigInt rhs(1);
    for (const auto& ai : instance.a) rhs *= pow(ai, static_cast<std::uint64_t>(k));
    const bool divisible = (lhs % rhs).is_zero();

    if (!s) {
        Conclusion c;
        c.lhs = lhs.to_string();
        c.rhs = rhs.to_string();
        c.relation = "divisible";
        c.holds = divisible;
        report.conclusion = c;
        return report;
    }

    if (s->sign() < 0 || *s > Rational(1)) {
        throw std::invalid_argument("gcd_overlap_check: s must lie in [0, 1]");
    }
    if (m < 2) throw std::invalid_argument("gcd_overlap_check: sup-gcd bound needs m >= 2");
    report.premises.push_back({"c^{k(k+1)/2} * prod gcd(a_i,a_j) divisible by prod a_i^k (" +
                                   lhs.to_string() + " vs " + rhs.to_string() + ")",
                               divisible});

    const std::uint64_t s_den = s->den().to_u64();
    const std::uint64_t s_num = s->num().to_u64();
    const BigInt c_pow_num = pow(instance.c, s_num);
    bool premise_ok = true;
    for (const auto& ai : instance.a) premise_ok = premise_ok && pow(ai, s_den) >= c_pow_num;
    report.premises.push_back({"a_i >= c^s for all i", premise_ok});
    if (!premise_ok) return report;

    KValue kv = k_function(*s * Rational(m), m);
    Rational exponent = kv.value / binom2(m);
    report.conclusion = conclude_ge(ExactPower::of(max_gcd, Rational(1)),
                                    ExactPower::of(instance.c, exponent));
    report.witness = "max pairwise gcd = " + max_gcd.to_string();
    report.details["s"] = s->to_string();
    report.details["exponent"] = exponent.to_string();
    return report;
}

}  // namespace vdgap
