// Python bindings for the main operations. Big integers and rationals cross
// the boundary as decimal / "num/den" strings; structured results come back
// as JSON strings the package wrapper decodes, so nothing is ever rounded.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "vdgap/conic.hpp"
#include "vdgap/gap_bounds.hpp"
#include "vdgap/instance_gen.hpp"
#include "vdgap/kfunction.hpp"
#include "vdgap/numtheory.hpp"
#include "vdgap/overlap.hpp"
#include "vdgap/report_json.hpp"

namespace py = pybind11;
using namespace vdgap;

namespace {

std::string json_str(const CheckReport& report) { return report_to_json(report).dump(); }

std::vector<BigInt> to_bigints(const std::vector<std::string>& values) {
    std::vector<BigInt> out;
    out.reserve(values.size());
    for (const auto& v : values) out.push_back(BigInt::from_string(v));
    return out;
}

ExactPower power_from_pairs(const std::vector<std::pair<std::string, std::string>>& factors) {
    ExactPower p;
    for (const auto& [base, exponent] : factors) {
        p.multiply_by(ExactPower::of(BigInt::from_string(base), Rational::from_string(exponent)));
    }
    return p;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact-arithmetic checks for Vandermonde-determinant gap bounds";

    m.def("k_function", [](const std::string& s, int mm) {
        KValue v = k_function(Rational::from_string(s), mm);
        ordered_json j{{"s", v.s.to_string()},
                       {"m", v.m},
                       {"value", v.value.to_string()},
                       {"argmax", v.argmax},
                       {"normalized", (v.value / binom2(mm)).to_string()}};
        return j.dump();
    }, py::arg("s"), py::arg("m"));

    m.def("divisors", [](const std::string& n) {
        std::vector<std::string> out;
        for (const auto& d : divisors(BigInt::from_string(n))) out.push_back(d.to_string());
        return out;
    }, py::arg("n"));

    m.def("p_adic_valuation", [](const std::string& n, const std::string& p) {
        return p_adic_valuation(BigInt::from_string(n), BigInt::from_string(p));
    }, py::arg("n"), py::arg("p"));

    m.def("quad_norm", [](const std::string& a, const std::string& b, std::int64_t d) {
        return quad_norm(QuadInt(BigInt::from_string(a), BigInt::from_string(b), d)).to_string();
    }, py::arg("a"), py::arg("b"), py::arg("d"));

    m.def("exact_power_compare",
          [](const std::vector<std::pair<std::string, std::string>>& lhs,
             const std::vector<std::pair<std::string, std::string>>& rhs) {
              return ordering_name(exact_power_compare(power_from_pairs(lhs), power_from_pairs(rhs)));
          },
          py::arg("lhs"), py::arg("rhs"));

    m.def("identity_check", [](const std::vector<std::string>& alpha, const std::string& gamma, int k) {
        auto inst = IdentityInstance<BigInt>::from_alpha_gamma(to_bigints(alpha),
                                                               BigInt::from_string(gamma));
        return json_str(verify_identity(inst, k));
    }, py::arg("alpha"), py::arg("gamma"), py::arg("k"));

    m.def("gap_bound_check",
          [](const std::vector<std::string>& alpha, const std::string& gamma, const std::string& s,
             const std::string& big_l) {
              auto inst = IdentityInstance<BigInt>::from_alpha_gamma(to_bigints(alpha),
                                                                     BigInt::from_string(gamma));
              auto premise = make_premise(inst, Rational::from_string(s),
                                          ExactPower::of(BigInt::from_string(big_l), Rational(1)));
              return json_str(gap_bound_check(inst, premise));
          },
          py::arg("alpha"), py::arg("gamma"), py::arg("s"), py::arg("l") = "1");

    m.def("verify_identity_random",
          [](const std::string& ring, int mm, long long trials, std::uint64_t seed, std::int64_t d) {
              SplitMix64 rng(seed);
              long long failures = 0;
              for (long long i = 0; i < trials; ++i) {
                  auto run = [&](const auto& inst) {
                      for (int k = 0; k < inst.m; ++k) {
                          if (!verify_identity(inst, k).passed()) ++failures;
                      }
                  };
                  if (ring == "integer") run(random_integer_instance(rng, mm));
                  else if (ring == "quadratic") run(random_quadratic_instance(rng, mm, d));
                  else if (ring == "poly1") run(random_poly_instance(rng, mm, 1));
                  else if (ring == "poly2") run(random_poly_instance(rng, mm, 2));
                  else throw std::invalid_argument("ring must be integer|quadratic|poly1|poly2");
              }
              ordered_json j{{"trials", trials}, {"failures", failures}};
              return j.dump();
          },
          py::arg("ring"), py::arg("m"), py::arg("trials"), py::arg("seed"), py::arg("d") = 1);

    m.def("enumerate_points", [](std::int64_t d, const std::string& r) {
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& p : enumerate_points(d, BigInt::from_string(r))) {
            out.emplace_back(p.x.to_string(), p.y.to_string());
        }
        return out;
    }, py::arg("d"), py::arg("r"));

    m.def("conic_gap_check", [](std::int64_t d, const std::string& r, int mm) {
        BigInt R = BigInt::from_string(r);
        return json_str(conic_gap_check(d, R, enumerate_points(d, R), mm));
    }, py::arg("d"), py::arg("r"), py::arg("m") = 3);

    m.def("tight_triple", [](std::int64_t t, std::int64_t d) {
        auto fam = tight_triple_generate(t, d);
        auto ratios = tight_triple_asymptotics(t, d);
        QuadInt det = tight_triple_determinant(t, d);
        ordered_json points = ordered_json::array();
        for (const auto& p : fam.points) points.push_back({p.x.to_string(), p.y.to_string()});
        ordered_json j{{"t", t},
                       {"d", d},
                       {"u", fam.u.to_string()},
                       {"R", fam.R.to_string()},
                       {"points", points},
                       {"det1", det.to_string()},
                       {"det1_im", det.im().to_string()},
                       {"D_sq", ratios.d_sq.to_string()},
                       {"ratio_R", ratios.ratio_r.to_string()},
                       {"ratio_D_sq", ratios.ratio_d_sq.to_string()}};
        return j.dump();
    }, py::arg("t"), py::arg("d"));

    m.def("divisor_gap_check",
          [](const std::string& n, const std::string& q, const std::string& a, const std::string& s,
             const std::optional<std::vector<std::string>>& subset) {
              std::optional<std::vector<BigInt>> sel;
              if (subset) sel = to_bigints(*subset);
              return json_str(divisor_gap_check(BigInt::from_string(n), BigInt::from_string(q),
                                                BigInt::from_string(a), Rational::from_string(s), sel));
          },
          py::arg("n"), py::arg("q"), py::arg("a"), py::arg("s"),
          py::arg("subset") = std::nullopt);

    m.def("poly_divisor_gap_check",
          [](const std::vector<std::vector<std::string>>& polys,
             const std::vector<std::string>& common_multiple, const std::string& s) {
              auto build = [](const std::vector<std::string>& ascending) {
                  MultiPoly p(1);
                  for (std::size_t i = 0; i < ascending.size(); ++i) {
                      BigInt c = BigInt::from_string(ascending[i]);
                      if (!c.is_zero()) {
                          p = p + MultiPoly::monomial(1, c, {static_cast<std::uint32_t>(i)});
                      }
                  }
                  return p;
              };
              std::vector<MultiPoly> ps;
              for (const auto& coeffs : polys) ps.push_back(build(coeffs));
              return json_str(poly_divisor_gap_check(ps, build(common_multiple),
                                                     Rational::from_string(s)));
          },
          py::arg("polys"), py::arg("common_multiple"), py::arg("s"));

    m.def("arc_bound_constants", [](int mm) {
        auto c = arc_bound_constants(mm);
        ordered_json j{{"m", c.m}, {"s", c.s.to_string()}, {"t", c.t}, {"l", c.l.to_string()}};
        return j.dump();
    }, py::arg("m"));

    m.def("scalar_overlap_check", [](const std::vector<std::string>& a, int k) {
        std::vector<Rational> values;
        for (const auto& v : a) values.push_back(Rational::from_string(v));
        return json_str(scalar_overlap_check(values, k));
    }, py::arg("a"), py::arg("k"));

    m.def("measure_overlap_check",
          [](const std::vector<std::string>& weights, const std::vector<std::vector<int>>& sets) {
              MeasureSpace space;
              for (const auto& w : weights) space.weights.push_back(Rational::from_string(w));
              space.sets = sets;
              return json_str(measure_overlap_check(space));
          },
          py::arg("weights"), py::arg("sets"));

    m.def("gcd_overlap_check",
          [](const std::string& c, const std::vector<std::string>& a, int k,
             const std::optional<std::string>& s) {
              std::optional<Rational> sr;
              if (s) sr = Rational::from_string(*s);
              return json_str(gcd_overlap_check(OverlapIntInstance{BigInt::from_string(c),
                                                                   to_bigints(a)}, k, sr));
          },
          py::arg("c"), py::arg("a"), py::arg("k"), py::arg("s") = std::nullopt);
}
