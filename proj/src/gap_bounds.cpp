#include "vdgap/gap_bounds.hpp"

#include <algorithm>
#include <stdexcept>

#include "vdgap/numtheory.hpp"

namespace vdgap {

ExactPower phi_value(const BigInt& x) {
    if (x.is_zero()) throw std::invalid_argument("phi_value: zero has no size");
    return ExactPower::of(x.abs(), Rational(1));
}

ExactPower phi_value(const QuadInt& x) {
    if (x.is_zero()) throw std::invalid_argument("phi_value: zero has no size");
    return ExactPower::of(quad_norm(x), Rational(BigInt(1), BigInt(2)));
}

ExactPower phi_value(const MultiPoly& u) {
    auto deg = u.total_degree();
    if (!deg) throw std::invalid_argument("phi_value: zero polynomial has no size");
    return ExactPower::of(BigInt(2), Rational(*deg));
}

CheckReport norm_gap_check(const std::vector<QuadInt>& points, int m) {
    const int count = static_cast<int>(points.size());
    if (m < 2) throw std::invalid_argument("norm_gap_check: m must be >= 2");
    if (count < m) throw std::invalid_argument("norm_gap_check: fewer than m points");
    for (int i = 0; i < count; ++i) {
        if (points[i].is_zero()) throw std::invalid_argument("norm_gap_check: zero element");
        for (int j = 0; j < i; ++j) {
            if (points[i] == points[j]) {
                throw std::invalid_argument("norm_gap_check: points must be distinct");
            }
        }
    }
    const BigInt R = quad_norm(points[0]);
    for (const auto& p : points) {
        if (!(quad_norm(p) == R)) {
            throw std::invalid_argument("norm_gap_check: norms are not all equal");
        }
    }

    BigInt max_norm = quad_norm(points[0] - points[1]);
    int wi = 0, wj = 1;
    for (int i = 0; i < count; ++i) {
        for (int j = i + 1; j < count; ++j) {
            BigInt n = quad_norm(points[i] - points[j]);
            if (n > max_norm) {
                max_norm = n;
                wi = i;
                wj = j;
            }
        }
    }

    KValue kv = k_function(Rational(BigInt(m), BigInt(2)), m);
    Rational exponent = kv.value / binom2(m);

    CheckReport report;
    report.name = "norm-gap-m" + std::to_string(m);
    report.premises.push_back({"all |N(alpha_i)| equal R = " + R.to_string(), true});
    report.conclusion = conclude_ge(ExactPower::of(max_norm, Rational(BigInt(1), BigInt(2))),
                                    ExactPower::of(R, exponent));
    report.witness = "pair (" + std::to_string(wi) + "," + std::to_string(wj) + "): " +
                     points[wi].to_string() + " vs " + points[wj].to_string() +
                     ", N(diff) = " + max_norm.to_string();
    report.details["m"] = std::to_string(m);
    report.details["count"] = std::to_string(count);
    report.details["R"] = R.to_string();
    report.details["exponent"] = exponent.to_string();
    return report;
}

CheckReport divisor_gap_check(const BigInt& N, const BigInt& q, const BigInt& a,
                              const Rational& s, const std::optional<std::vector<BigInt>>& subset) {
    if (N.sign() <= 0) throw std::invalid_argument("divisor_gap_check: N must be >= 1");
    if (q.sign() <= 0) throw std::invalid_argument("divisor_gap_check: q must be >= 1");
    if (!(gcd(a, q).is_one())) throw std::invalid_argument("divisor_gap_check: gcd(a, q) != 1");
    if (!(s.sign() > 0) || !(s < Rational(1))) {
        throw std::invalid_argument("divisor_gap_check: s must lie in (0, 1)");
    }

    const BigInt a_mod = ((a % q) + q) % q;
    const std::uint64_t s_den = s.den().to_u64();
    const std::uint64_t s_num = s.num().to_u64();
    const BigInt n_pow_num = pow(N, s_num);
    auto premise_holds = [&](const BigInt& div) { return pow(div, s_den) >= n_pow_num; };

    std::vector<BigInt> selected;
    if (subset) {
        // A caller-supplied subset is validated strictly; any violation is an error.
        for (const auto& div : *subset) {
            if (div.sign() <= 0 || !(N % div).is_zero()) {
                throw std::invalid_argument("divisor_gap_check: subset element does not divide N");
            }
            if (!(div % q == a_mod)) {
                throw std::invalid_argument("divisor_gap_check: subset element not in class a mod q");
            }
            if (!premise_holds(div)) {
                throw std::invalid_argument("divisor_gap_check: subset element fails d >= N^s");
            }
            for (const auto& other : selected) {
                if (other == div) {
                    throw std::invalid_argument("divisor_gap_check: duplicate subset element");
                }
            }
            selected.push_back(div);
        }
        std::sort(selected.begin(), selected.end());
    } else {
        for (const auto& div : divisors(N)) {
            if (div % q == a_mod && premise_holds(div)) selected.push_back(div);
        }
    }

    const int m = static_cast<int>(selected.size());
    if (m < 2) throw std::invalid_argument("divisor_gap_check: fewer than 2 qualifying divisors");

    BigInt max_gap = selected.back() - selected.front();
    BigInt min_gap = selected[1] - selected[0];
    for (int i = 2; i < m; ++i) min_gap = std::min(min_gap, selected[i] - selected[i - 1]);

    KValue kv = k_function(s * Rational(m), m);
    Rational exponent = kv.value / binom2(m);

    CheckReport report;
    report.name = "divisor-gap-N" + N.to_string() + "-q" + q.to_string() + "-a" + a_mod.to_string();
    report.premises.push_back({"gcd(a, q) = 1", true});
    report.premises.push_back({"selected divisors lie in class a mod q", true});
    report.premises.push_back({"every selected divisor d satisfies d >= N^s", true});
    bool q_divides_all = (min_gap % q).is_zero() && (max_gap % q).is_zero();
    report.premises.push_back({"q divides every pairwise gap", q_divides_all});
    report.conclusion = conclude_ge(
        ExactPower::of(max_gap, Rational(1)),
        ExactPower::of(q, Rational(1)).multiply_by(ExactPower::of(N, exponent)));
    report.witness = "extremal pair (" + selected.front().to_string() + ", " +
                     selected.back().to_string() + ")";
    report.details["m"] = std::to_string(m);
    report.details["s"] = s.to_string();
    report.details["K"] = kv.value.to_string();
    report.details["exponent"] = exponent.to_string();
    report.details["min_gap"] = min_gap.to_string();
    report.details["max_gap"] = max_gap.to_string();
    return report;
}

CheckReport poly_divisor_gap_check(const std::vector<MultiPoly>& polys,
                                   const MultiPoly& common_multiple, const Rational& s) {
    const int m = static_cast<int>(polys.size());
    if (m < 2) throw std::invalid_argument("poly_divisor_gap_check: fewer than 2 polynomials");
    if (common_multiple.is_zero()) {
        throw std::invalid_argument("poly_divisor_gap_check: zero common multiple");
    }
    if (s.sign() < 0 || s > Rational(1)) {
        throw std::invalid_argument("poly_divisor_gap_check: s must lie in [0, 1]");
    }
    const Rational deg_r(*common_multiple.total_degree());
    for (int i = 0; i < m; ++i) {
        if (polys[i].is_zero()) throw std::invalid_argument("poly_divisor_gap_check: zero polynomial");
        if (!try_divide(common_multiple, polys[i])) {
            throw std::invalid_argument("poly_divisor_gap_check: P_" + std::to_string(i) +
                                        " does not divide R");
        }
        if (Rational(*polys[i].total_degree()) < s * deg_r) {
            throw std::invalid_argument("poly_divisor_gap_check: deg(P_" + std::to_string(i) +
                                        ") < s*deg(R)");
        }
        for (int j = 0; j < i; ++j) {
            if (polys[i] == polys[j]) {
                throw std::invalid_argument("poly_divisor_gap_check: polynomials must be distinct");
            }
        }
    }

    int sup_deg = 0;
    int wi = 0, wj = 1;
    bool first = true;
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            int deg = *(polys[i] - polys[j]).total_degree();
            if (first || deg > sup_deg) {
                sup_deg = deg;
                wi = i;
                wj = j;
                first = false;
            }
        }
    }

    KValue kv = k_function(s * Rational(m), m);
    Rational bound = deg_r * kv.value / binom2(m);

    CheckReport report;
    report.name = "poly-gap-m" + std::to_string(m);
    report.premises.push_back({"every P_i divides R exactly", true});
    report.premises.push_back({"deg(P_i) >= s*deg(R) for all i", true});
    // Degrees compare exactly through any base > 1; 2^deg is the embedding.
    report.conclusion = conclude_ge(ExactPower::of(BigInt(2), Rational(sup_deg)),
                                    ExactPower::of(BigInt(2), bound));
    report.conclusion->lhs = "deg " + std::to_string(sup_deg);
    report.conclusion->rhs = "deg " + bound.to_string();
    report.witness = "pair (" + std::to_string(wi) + "," + std::to_string(wj) + "): deg(P_i - P_j) = " +
                     std::to_string(sup_deg);
    report.details["m"] = std::to_string(m);
    report.details["s"] = s.to_string();
    report.details["deg_R"] = deg_r.to_string();
    report.details["K"] = kv.value.to_string();
    report.details["bound"] = bound.to_string();
    return report;
}

ArcBoundConstants arc_bound_constants(int m) {
    if (m < 2) throw std::invalid_argument("arc_bound_constants: m must be >= 2");
    ArcBoundConstants c;
    c.m = m;
    c.s = Rational(BigInt(1), BigInt(4)) -
          Rational(BigInt(1), BigInt(8 * static_cast<long long>(m / 2) + 4));
    const int modd = (m % 2 == 1) ? m : m + 1;
    c.t = arc_exponent_t(modd);
    c.l = (Rational(1) - Rational(BigInt(c.t)) / binom2(modd)) / Rational(2);
    return c;
}

long long arc_exponent_t(int m) {
    // floor((m^2/2 - m)/2) + 1, evaluated as floor((m^2 - 2m)/4) + 1.
    const long long mm = m;
    long long num = mm * mm - 2 * mm;
    long long fl = num >= 0 ? num / 4 : -((-num + 3) / 4);
    return fl + 1;
}

long long two_class_pair_min(int m) {
    long long best = -1;
    for (int k = 0; k <= m; ++k) {
        long long v = static_cast<long long>(k) * (k - 1) / 2 +
                      static_cast<long long>(m - k) * (m - k - 1) / 2;
        if (best < 0 || v < best) best = v;
    }
    return best;
}

long long shifted_pair_min(int m) {
    long long best = -1;
    for (int k = 0; k <= m - 1; ++k) {
        long long v = static_cast<long long>(k) * (k + 1) / 2 +
                      static_cast<long long>(m - 1 - k) * (m - k) / 2;
        if (best < 0 || v < best) best = v;
    }
    return best;
}

namespace {

// C(n, r) capped at 2 * 10^6 to guard the subset enumeration.
long long binom_capped(int n, int r) {
    if (r < 0 || r > n) return 0;
    long long result = 1;
    for (int i = 1; i <= r; ++i) {
        result = result * (n - r + i) / i;
        if (result > 2000000) return 2000000 + 1;
    }
    return result;
}

}  // namespace

CheckReport conic_gap_check(std::int64_t d, const BigInt& R,
                            const std::vector<ConicPoint>& points, int m) {
    if (m < 3 || m % 2 == 0) {
        throw std::invalid_argument("conic_gap_check: m must be odd and >= 3");
    }
    for (const auto& p : points) {
        if (!on_conic(d, R, p)) {
            throw std::invalid_argument("conic_gap_check: point off the conic");
        }
    }
    const int count = static_cast<int>(points.size());

    CheckReport report;
    report.name = "conic-gap-d" + std::to_string(d) + "-R" + R.to_string();
    report.details["d"] = std::to_string(d);
    report.details["R"] = R.to_string();
    report.details["m"] = std::to_string(m);
    report.details["points"] = std::to_string(count);

    if (count < m) {
        report.premises.push_back({"fewer than m points: vacuously true", true});
        return report;
    }
    if (binom_capped(count, m) > 1000000) {
        throw std::invalid_argument("conic_gap_check: C(count, m) exceeds 10^6");
    }

    std::vector<std::vector<BigInt>> norms(count, std::vector<BigInt>(count));
    for (int i = 0; i < count; ++i) {
        for (int j = i + 1; j < count; ++j) {
            BigInt dx = points[i].x - points[j].x;
            BigInt dy = points[i].y - points[j].y;
            norms[i][j] = dx * dx + BigInt(d) * (dy * dy);
        }
    }

    // Lexicographic subset enumeration; the first strict minimum keeps the
    // lexicographically smallest witness among ties.
    std::vector<int> idx(m);
    for (int i = 0; i < m; ++i) idx[i] = i;
    std::vector<int> min_subset;
    BigInt min_max;
    bool have_min = false;
    long long subsets = 0;
    while (true) {
        ++subsets;
        BigInt local_max;
        for (int i = 0; i < m; ++i) {
            for (int j = i + 1; j < m; ++j) {
                const BigInt& n = norms[idx[i]][idx[j]];
                if (n > local_max) local_max = n;
            }
        }
        if (!have_min || local_max < min_max) {
            min_max = local_max;
            min_subset = idx;
            have_min = true;
        }
        int pos = m - 1;
        while (pos >= 0 && idx[pos] == count - m + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int i = pos + 1; i < m; ++i) idx[i] = idx[i - 1] + 1;
    }

    const Rational s_m = arc_bound_constants(m).s;
    report.premises.push_back({"all points satisfy x^2 + d*y^2 = R", true});
    report.conclusion = conclude_ge(ExactPower::of(min_max, Rational(BigInt(1), BigInt(2))),
                                    ExactPower::of(R, s_m));
    std::string witness = "subset {";
    for (int i = 0; i < m; ++i) {
        if (i) witness += ", ";
        witness += point_to_string(points[min_subset[i]]);
    }
    report.witness = witness + "}, max N(diff) = " + min_max.to_string();
    report.details["subsets"] = std::to_string(subsets);
    report.details["s_m"] = s_m.to_string();
    return report;
}

}  // namespace vdgap
