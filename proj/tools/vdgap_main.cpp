// vdgap: exact-arithmetic verification of the Vandermonde-determinant identity
// and the gap bounds built on it. Subcommands run one verification suite and
// emit a machine-readable report; every number in a report is an exact decimal
// or rational string.
//
// Exit status: 0 all checks passed, 1 at least one check failed, 2 bad config.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vdgap/conic.hpp"
#include "vdgap/gap_bounds.hpp"
#include "vdgap/instance_gen.hpp"
#include "vdgap/kfunction.hpp"
#include "vdgap/overlap.hpp"
#include "vdgap/report_json.hpp"

namespace {

using namespace vdgap;

using Params = std::vector<std::pair<std::string, std::string>>;

struct Output {
    std::string format = "text";
    std::string path;    // empty = stdout
    bool timing = false; // real elapsed_ms breaks byte-reproducibility, so opt-in
};

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    return out + "\"";
}

void render(std::ostream& os, const Output& out, const std::string& command,
            const Params& params, const std::vector<CheckReport>& checks, long long elapsed_ms) {
    if (out.format == "json") {
        os << run_document(command, params, checks, elapsed_ms).dump(2) << "\n";
        return;
    }
    if (out.format == "csv") {
        os << "name,pass,relation,ordering,lhs,rhs,witness\n";
        for (const auto& c : checks) {
            os << csv_escape(c.name) << "," << (c.passed() ? "true" : "false") << ","
               << csv_escape(c.conclusion ? c.conclusion->relation : "") << ","
               << csv_escape(c.conclusion && c.conclusion->ordering
                                 ? ordering_name(*c.conclusion->ordering)
                                 : "")
               << "," << csv_escape(c.conclusion ? c.conclusion->lhs : "") << ","
               << csv_escape(c.conclusion ? c.conclusion->rhs : "") << ","
               << csv_escape(c.witness) << "\n";
        }
        return;
    }
    os << "command: " << command << "\n";
    for (const auto& [k, v] : params) os << "  " << k << " = " << v << "\n";
    int failed = 0;
    for (const auto& c : checks) {
        os << (c.passed() ? "[PASS] " : "[FAIL] ") << c.name;
        if (c.conclusion) {
            os << ": " << c.conclusion->lhs << " " << c.conclusion->relation << " "
               << c.conclusion->rhs;
            if (c.conclusion->ordering) os << " (" << ordering_name(*c.conclusion->ordering) << ")";
        }
        os << "\n";
        for (const auto& p : c.premises) {
            if (!p.pass) os << "       premise failed: " << p.description << "\n";
        }
        if (!c.witness.empty()) os << "       witness: " << c.witness << "\n";
        if (!c.passed()) ++failed;
    }
    os << "summary: " << checks.size() - failed << "/" << checks.size() << " passed";
    if (elapsed_ms > 0) os << " in " << elapsed_ms << " ms";
    os << "\n";
}

int emit(const Output& out, const std::string& command, const Params& params,
         const std::vector<CheckReport>& checks, long long elapsed_ms) {
    if (!out.timing) elapsed_ms = 0;
    if (out.path.empty()) {
        render(std::cout, out, command, params, checks, elapsed_ms);
    } else {
        std::ofstream file(out.path, std::ios::binary);
        if (!file) {
            std::cerr << "error: cannot open output file " << out.path << "\n";
            return 2;
        }
        render(file, out, command, params, checks, elapsed_ms);
    }
    for (const auto& c : checks) {
        if (!c.passed()) return 1;
    }
    return 0;
}

void add_output_flags(CLI::App* cmd, Output& out) {
    cmd->add_option("--format", out.format, "Report format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    cmd->add_option("--out", out.path, "Write the report to PATH instead of stdout");
    cmd->add_flag("--timing", out.timing,
                  "Report real wall time (reports are otherwise byte-reproducible)");
}

std::vector<BigInt> parse_bigint_list(const std::string& csv) {
    std::vector<BigInt> out;
    std::size_t pos = 0;
    while (pos <= csv.size()) {
        std::size_t comma = csv.find(',', pos);
        std::string item = csv.substr(pos, comma == std::string::npos ? comma : comma - pos);
        if (!item.empty()) out.push_back(BigInt::from_string(item));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::vector<Rational> parse_rational_list(const std::string& csv) {
    std::vector<Rational> out;
    std::size_t pos = 0;
    while (pos <= csv.size()) {
        std::size_t comma = csv.find(',', pos);
        std::string item = csv.substr(pos, comma == std::string::npos ? comma : comma - pos);
        if (!item.empty()) out.push_back(Rational::from_string(item));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

MultiPoly poly_from_coeffs(const std::vector<BigInt>& ascending) {
    MultiPoly p(1);
    for (std::size_t i = 0; i < ascending.size(); ++i) {
        if (!ascending[i].is_zero()) {
            p = p + MultiPoly::monomial(1, ascending[i], {static_cast<std::uint32_t>(i)});
        }
    }
    return p;
}

struct RingChoice {
    std::string tag = "integer";  // integer | quadratic | poly1 | poly2
    std::int64_t d = 1;
};

void add_ring_flags(CLI::App* cmd, RingChoice& ring) {
    cmd->add_option("--ring", ring.tag, "Ring: integer, quadratic, poly1, poly2")
        ->check(CLI::IsMember({"integer", "quadratic", "poly1", "poly2"}))
        ->capture_default_str();
    cmd->add_option("--d", ring.d, "Quadratic ring parameter d (Z[sqrt(-d)])")
        ->check(CLI::PositiveNumber);
}

template <typename Fn>
void for_each_random_instance(const RingChoice& ring, int m, long long trials,
                              std::uint64_t seed, Fn&& fn) {
    SplitMix64 rng(seed);
    if (ring.tag == "quadratic") (void)QuadRing::create(ring.d);
    for (long long i = 0; i < trials; ++i) {
        if (ring.tag == "integer") {
            fn(random_integer_instance(rng, m));
        } else if (ring.tag == "quadratic") {
            fn(random_quadratic_instance(rng, m, ring.d));
        } else if (ring.tag == "poly1") {
            fn(random_poly_instance(rng, m, 1));
        } else {
            fn(random_poly_instance(rng, m, 2));
        }
    }
}

long long now_ms() {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of Vandermonde-determinant gap bounds"};
    app.require_subcommand(1);

    // verify-identity
    auto* vi = app.add_subcommand("verify-identity",
                                  "Verify the determinant identity on random instances");
    RingChoice vi_ring;
    int vi_m = 3;
    long long vi_trials = 10;
    std::uint64_t vi_seed = 0;
    std::optional<int> vi_k;
    Output vi_out;
    add_ring_flags(vi, vi_ring);
    vi->add_option("--m", vi_m, "Sequence length m")->check(CLI::Range(2, 12));
    vi->add_option("--trials", vi_trials, "Number of random instances")->check(CLI::PositiveNumber);
    vi->add_option("--seed", vi_seed, "RNG seed (required for reproducibility)")->required();
    vi->add_option("--k", vi_k, "Check a single k instead of all k in [0, m-1]");
    add_output_flags(vi, vi_out);

    // k-table
    auto* kt = app.add_subcommand("k-table", "Evaluate K(s, m) with its maximizing k");
    int kt_m = 3;
    std::vector<std::string> kt_s;
    Output kt_out;
    kt->add_option("--m", kt_m, "m >= 2")->required();
    kt->add_option("--s", kt_s, "s as num/den; repeatable")->required();
    add_output_flags(kt, kt_out);

    // prop1
    auto* p1 = app.add_subcommand("prop1", "Gap lower bound on random instances");
    RingChoice p1_ring;
    int p1_m = 3;
    long long p1_trials = 10;
    std::uint64_t p1_seed = 0;
    std::string p1_s;
    long long p1_big_l = 1;
    Output p1_out;
    add_ring_flags(p1, p1_ring);
    p1->add_option("--m", p1_m, "Sequence length m")->check(CLI::Range(2, 12));
    p1->add_option("--trials", p1_trials)->check(CLI::PositiveNumber);
    p1->add_option("--seed", p1_seed, "RNG seed")->required();
    p1->add_option("--s", p1_s, "Premise exponent s in [0,1] as num/den; default: largest valid s per instance");
    p1->add_option("--L", p1_big_l, "Integer lower bound L >= 1 on phi(det_k)")
        ->check(CLI::PositiveNumber);
    add_output_flags(p1, p1_out);

    // conic-scan
    auto* cs = app.add_subcommand("conic-scan", "Subset gap checks on X^2 + d Y^2 = R over an R range");
    std::int64_t cs_d = 1;
    long long cs_rmin = 1, cs_rmax = 100;
    int cs_m = 3;
    Output cs_out;
    cs->add_option("--d", cs_d, "Conic coefficient d >= 1")->check(CLI::PositiveNumber);
    cs->add_option("--r-min", cs_rmin)->check(CLI::PositiveNumber);
    cs->add_option("--r-max", cs_rmax)->required()->check(CLI::PositiveNumber);
    cs->add_option("--m", cs_m, "Odd subset size")->check(CLI::Range(3, 21));
    add_output_flags(cs, cs_out);

    // example1
    auto* ex = app.add_subcommand("example1", "Generate the parametric three-point family");
    std::int64_t ex_t = 1, ex_d = 1;
    Output ex_out;
    ex->add_option("--t", ex_t)->required()->check(CLI::PositiveNumber);
    ex->add_option("--d", ex_d)->required()->check(CLI::PositiveNumber);
    add_output_flags(ex, ex_out);

    // divisor-gaps
    auto* dg = app.add_subcommand("divisor-gaps", "Gaps between divisors in an arithmetic progression");
    std::string dg_n, dg_q = "1", dg_a = "0", dg_s, dg_subset;
    Output dg_out;
    dg->add_option("--n", dg_n, "The integer N")->required();
    dg->add_option("--q", dg_q, "Modulus q")->required();
    dg->add_option("--a", dg_a, "Residue a with gcd(a, q) = 1")->required();
    dg->add_option("--s", dg_s, "Premise exponent in (0,1) as num/den")->required();
    dg->add_option("--subset", dg_subset, "Comma-separated divisors to use instead of auto-selection");
    add_output_flags(dg, dg_out);

    // poly-gaps
    auto* pg = app.add_subcommand("poly-gaps", "Gaps between univariate polynomial divisors");
    std::vector<std::string> pg_polys;
    std::string pg_r, pg_s;
    Output pg_out;
    pg->add_option("--p", pg_polys, "Divisor polynomial as ascending coefficients, e.g. -1,0,0,1; repeatable")
        ->required();
    pg->add_option("--r-poly", pg_r, "Common multiple R as ascending coefficients")->required();
    pg->add_option("--s", pg_s, "Premise exponent in [0,1] as num/den")->required();
    add_output_flags(pg, pg_out);

    // overlap
    auto* ov = app.add_subcommand("overlap", "Overlap inequalities: scalar or finite measure space");
    std::string ov_a, ov_weights;
    int ov_k = 0;
    std::vector<std::string> ov_sets;
    Output ov_out;
    ov->add_option("--a", ov_a, "Scalar mode: comma-separated nonnegative rationals");
    ov->add_option("--k", ov_k, "Scalar mode: k in [0, m-1]");
    ov->add_option("--weights", ov_weights, "Measure mode: atom weights summing to 1");
    ov->add_option("--set", ov_sets, "Measure mode: one subset as comma-separated atom indices; repeatable");
    add_output_flags(ov, ov_out);

    // cor5
    auto* c5 = app.add_subcommand("cor5", "Divisibility and gcd bounds for divisors of a common multiple");
    std::string c5_c, c5_a, c5_s;
    int c5_k = 0;
    Output c5_out;
    c5->add_option("--c", c5_c, "Common multiple c")->required();
    c5->add_option("--a", c5_a, "Comma-separated divisors of c")->required();
    c5->add_option("--k", c5_k, "k in [0, m-1]")->required();
    c5->add_option("--s", c5_s, "Optional premise exponent in [0,1] as num/den");
    add_output_flags(c5, c5_out);

    CLI11_PARSE(app, argc, argv);

    try {
        const long long started = now_ms();

        if (vi->parsed()) {
            if (vi_k && (*vi_k < 0 || *vi_k >= vi_m)) {
                throw std::invalid_argument("verify-identity: --k must lie in [0, m-1]");
            }
            Params params{{"ring", vi_ring.tag},
                          {"d", std::to_string(vi_ring.d)},
                          {"m", std::to_string(vi_m)},
                          {"trials", std::to_string(vi_trials)},
                          {"seed", std::to_string(vi_seed)}};
            std::vector<CheckReport> checks;
            long long trial = 0;
            for_each_random_instance(vi_ring, vi_m, vi_trials, vi_seed, [&](const auto& inst) {
                for (int k = 0; k < inst.m; ++k) {
                    if (vi_k && *vi_k != k) continue;
                    CheckReport r = verify_identity(inst, k);
                    r.name = "trial" + std::to_string(trial) + "-" + r.name;
                    checks.push_back(std::move(r));
                }
                ++trial;
            });
            return emit(vi_out, "verify-identity", params, checks, now_ms() - started);
        }

        if (kt->parsed()) {
            Params params{{"m", std::to_string(kt_m)}};
            std::vector<CheckReport> checks;
            for (const auto& s_str : kt_s) {
                KValue v = k_function(Rational::from_string(s_str), kt_m);
                CheckReport r;
                r.name = "K(" + s_str + "," + std::to_string(kt_m) + ")";
                Conclusion c;
                c.lhs = v.value.to_string();
                c.rhs = v.value.to_string();
                c.relation = "==";
                c.ordering = Ordering::Equal;
                c.holds = true;
                r.conclusion = c;
                r.details["value"] = v.value.to_string();
                r.details["argmax"] = std::to_string(v.argmax);
                r.details["normalized"] = (v.value / binom2(kt_m)).to_string();
                checks.push_back(std::move(r));
            }
            return emit(kt_out, "k-table", params, checks, now_ms() - started);
        }

        if (p1->parsed()) {
            Params params{{"ring", p1_ring.tag},
                          {"d", std::to_string(p1_ring.d)},
                          {"m", std::to_string(p1_m)},
                          {"trials", std::to_string(p1_trials)},
                          {"seed", std::to_string(p1_seed)},
                          {"s", p1_s.empty() ? "auto" : p1_s},
                          {"L", std::to_string(p1_big_l)}};
            std::vector<CheckReport> checks;
            ExactPower big_l = ExactPower::of(BigInt(p1_big_l), Rational(1));
            long long trial = 0;
            for_each_random_instance(p1_ring, p1_m, p1_trials, p1_seed, [&](const auto& inst) {
                Rational s(0);
                if (!p1_s.empty()) {
                    s = Rational::from_string(p1_s);
                } else {
                    ExactPower phi_gamma = phi_value(inst.gamma);
                    for (int p = 16; p >= 1; --p) {
                        Rational cand(BigInt(p), BigInt(16));
                        ExactPower target = phi_gamma.pow(cand);
                        bool ok = true;
                        for (const auto& a : inst.alpha) {
                            ok = ok && exact_power_compare(phi_value(a), target) != Ordering::Less;
                        }
                        if (ok) {
                            s = cand;
                            break;
                        }
                    }
                }
                CheckReport r = gap_bound_check(inst, make_premise(inst, s, big_l));
                r.name = "trial" + std::to_string(trial++) + "-" + r.name;
                checks.push_back(std::move(r));
            });
            return emit(p1_out, "prop1", params, checks, now_ms() - started);
        }

        if (cs->parsed()) {
            if (cs_rmin > cs_rmax) throw std::invalid_argument("conic-scan: r-min > r-max");
            Params params{{"d", std::to_string(cs_d)},
                          {"r_min", std::to_string(cs_rmin)},
                          {"r_max", std::to_string(cs_rmax)},
                          {"m", std::to_string(cs_m)}};
            std::vector<CheckReport> checks;
            for (long long r = cs_rmin; r <= cs_rmax; ++r) {
                auto points = enumerate_points(cs_d, BigInt(r));
                if (static_cast<int>(points.size()) < cs_m) continue;  // vacuous, keep reports small
                checks.push_back(conic_gap_check(cs_d, BigInt(r), points, cs_m));
            }
            return emit(cs_out, "conic-scan", params, checks, now_ms() - started);
        }

        if (ex->parsed()) {
            Params params{{"t", std::to_string(ex_t)}, {"d", std::to_string(ex_d)}};
            auto fam = tight_triple_generate(ex_t, ex_d);
            auto ratios = tight_triple_asymptotics(ex_t, ex_d);
            QuadInt det = tight_triple_determinant(ex_t, ex_d);

            CheckReport r;
            r.name = "family-t" + std::to_string(ex_t) + "-d" + std::to_string(ex_d);
            r.premises.push_back({"all three points on X^2 + dY^2 = R", true});
            r.premises.push_back({"points pairwise distinct", true});
            r.premises.push_back({"det_1 purely imaginary", det.re().is_zero()});
            Conclusion c;
            c.lhs = det.to_string();
            c.rhs = "8*sqrt(-" + std::to_string(ex_d) + ")";
            c.relation = "==";
            c.holds = det.re().is_zero() && det.im().abs() == BigInt(8);
            r.conclusion = c;
            r.witness = point_to_string(fam.points[0]) + ", " + point_to_string(fam.points[1]) +
                        ", " + point_to_string(fam.points[2]);
            r.details["R"] = fam.R.to_string();
            r.details["u"] = fam.u.to_string();
            r.details["D_sq"] = ratios.d_sq.to_string();
            r.details["ratio_R"] = ratios.ratio_r.to_string();
            r.details["ratio_D_sq"] = ratios.ratio_d_sq.to_string();
            return emit(ex_out, "example1", params, {r}, now_ms() - started);
        }

        if (dg->parsed()) {
            Params params{{"n", dg_n}, {"q", dg_q}, {"a", dg_a}, {"s", dg_s}};
            std::optional<std::vector<BigInt>> subset;
            if (!dg_subset.empty()) {
                subset = parse_bigint_list(dg_subset);
                params.emplace_back("subset", dg_subset);
            }
            auto report = divisor_gap_check(BigInt::from_string(dg_n), BigInt::from_string(dg_q),
                                            BigInt::from_string(dg_a), Rational::from_string(dg_s),
                                            subset);
            return emit(dg_out, "divisor-gaps", params, {report}, now_ms() - started);
        }

        if (pg->parsed()) {
            Params params{{"r_poly", pg_r}, {"s", pg_s}};
            std::vector<MultiPoly> polys;
            for (std::size_t i = 0; i < pg_polys.size(); ++i) {
                params.emplace_back("p" + std::to_string(i), pg_polys[i]);
                polys.push_back(poly_from_coeffs(parse_bigint_list(pg_polys[i])));
            }
            auto report = poly_divisor_gap_check(polys, poly_from_coeffs(parse_bigint_list(pg_r)),
                                                 Rational::from_string(pg_s));
            return emit(pg_out, "poly-gaps", params, {report}, now_ms() - started);
        }

        if (ov->parsed()) {
            const bool scalar = !ov_a.empty();
            const bool measure = !ov_weights.empty() || !ov_sets.empty();
            if (scalar == measure) {
                throw std::invalid_argument(
                    "overlap: use either --a/--k (scalar) or --weights/--set (measure)");
            }
            if (scalar) {
                Params params{{"a", ov_a}, {"k", std::to_string(ov_k)}};
                auto report = scalar_overlap_check(parse_rational_list(ov_a), ov_k);
                return emit(ov_out, "overlap", params, {report}, now_ms() - started);
            }
            Params params{{"weights", ov_weights}};
            MeasureSpace space;
            space.weights = parse_rational_list(ov_weights);
            for (std::size_t i = 0; i < ov_sets.size(); ++i) {
                params.emplace_back("set" + std::to_string(i), ov_sets[i]);
                std::vector<int> set;
                for (const auto& v : parse_bigint_list(ov_sets[i])) {
                    set.push_back(static_cast<int>(v.to_i64()));
                }
                space.sets.push_back(std::move(set));
            }
            auto report = measure_overlap_check(space);
            return emit(ov_out, "overlap", params, {report}, now_ms() - started);
        }

        if (c5->parsed()) {
            Params params{{"c", c5_c}, {"a", c5_a}, {"k", std::to_string(c5_k)}};
            std::optional<Rational> s;
            if (!c5_s.empty()) {
                s = Rational::from_string(c5_s);
                params.emplace_back("s", c5_s);
            }
            OverlapIntInstance inst{BigInt::from_string(c5_c), parse_bigint_list(c5_a)};
            auto report = gcd_overlap_check(inst, c5_k, s);
            return emit(c5_out, "cor5", params, {report}, now_ms() - started);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
