#include "verify_suites.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include "photon_bell/inequalities.hpp"
#include "photon_bell/state_oracle.hpp"

namespace photon_bell::cli {

namespace {

std::string describe(const char* fmt, double value) {
    char buf[128];
    std::snprintf(buf, sizeof buf, fmt, value);
    return buf;
}

SuiteResult scalar_nonnegativity(long long samples, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst_bw = 1.0;
    double worst_hbw = 1.0;
    bool reduces = true;
    const long long reduction_checks = std::min(samples, 10000LL);
    for (long long i = 0; i < samples; ++i) {
        const double x1 = u(rng), x2 = u(rng), x3 = u(rng);
        worst_bw = std::min(worst_bw, bw_scalar(x1, x2, x3));
        if (i < reduction_checks)
            reduces = reduces && hbw_scalar(x1, x2, x3, 1.0) == bw_scalar(x1, x2, x3);
        const double x4 = std::pow(u(rng), 0.25);
        worst_hbw = std::min(worst_hbw, hbw_scalar(x4 * u(rng), x4 * u(rng), x4 * u(rng), x4));
    }
    const bool ok = worst_bw >= -1e-12 && worst_hbw >= -1e-12 && reduces;
    char buf[160];
    std::snprintf(buf, sizeof buf, "min bw=%.3e min hbw=%.3e hbw(.,.,.,1)==bw: %s", worst_bw, worst_hbw,
                  reduces ? "yes" : "no");
    return {"scalar-nonnegativity", ok, buf};
}

SuiteResult oracle_equivalence(long long samples, std::mt19937_64& rng, HeavisideConvention convention) {
    std::uniform_int_distribution<int> pick_n(2, 10);
    std::uniform_real_distribution<double> phase(0.0, kTwoPi);
    double worst = 0.0;
    for (long long i = 0; i < samples; ++i) {
        const EmitterChain chain(pick_n(rng));
        const double a = phase(rng);
        const double b = phase(rng);
        const double par = parallel_series(chain)(b - a);
        const double orth = orthogonal_series(chain, convention)(b - a);
        worst = std::max(worst, std::abs(par - g2_oracle(chain, a, b, kPi / 4, kPi / 4)));
        worst = std::max(worst, std::abs(orth - g2_oracle(chain, a, b, kPi / 4, 3 * kPi / 4)));
    }
    return {"oracle-equivalence", worst <= 1e-10, describe("max |closed - oracle| = %.3e", worst)};
}

SuiteResult shift_invariance(long long samples, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> phase(0.0, kTwoPi);
    double worst = 0.0;
    for (int n = 2; n <= 10; ++n)
        for (auto kind : {InequalityKind::Ch74, InequalityKind::Hbw}) {
            const BellFunctional f(kind, EmitterChain(n));
            for (long long i = 0; i < std::max(1LL, samples / 18); ++i) {
                const PhaseTuple4 t(phase(rng), phase(rng), phase(rng), phase(rng));
                const double c = phase(rng);
                worst = std::max(worst, std::abs(f(t) - f(PhaseTuple4(t[0] + c, t[1] + c, t[2] + c, t[3] + c))));
            }
        }
    return {"shift-invariance", worst <= 1e-14, describe("max |S(t) - S(t + c)| = %.3e", worst)};
}

SuiteResult scale_invariance(long long samples, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> phase(0.0, kTwoPi);
    std::uniform_int_distribution<int> pick_n(2, 10);
    const double scales[] = {0.25, 0.5, 1.0};
    double worst = 0.0;
    const long long rounds = std::max(1LL, samples / 100);
    for (long long i = 0; i < rounds; ++i) {
        const EmitterChain chain(pick_n(rng));
        const PhaseTuple4 t(phase(rng), phase(rng), phase(rng), phase(rng));
        for (auto kind : {InequalityKind::Ch74, InequalityKind::Hbw})
            for (auto route : {ProbabilityRoute::ClosedForm, ProbabilityRoute::Oracle}) {
                FunctionalOptions opts;
                opts.route = route;
                const double ref = BellFunctional(kind, chain, {}, opts)(t);
                for (double e0 : scales)
                    for (double c0 : scales)
                        worst = std::max(worst, std::abs(BellFunctional(kind, chain, {e0, c0}, opts)(t) - ref));
            }
    }
    return {"scale-invariance", worst <= 1e-12, describe("max deviation over C0, E0 = %.3e", worst)};
}

SuiteResult interference_constancy() {
    const EmitterChain two(2);
    const auto quarter = PolarizerSetting::angle(kPi / 4);
    const auto none = PolarizerSetting::removed();
    const int grid = 256;
    std::vector<double> values;
    values.reserve(grid * grid);
    for (int i = 0; i < grid; ++i)
        for (int j = 0; j < grid; ++j)
            values.push_back(
                joint_probability(two, DetectorSetting(i * kTwoPi / grid, quarter), DetectorSetting(j * kTwoPi / grid, none)));
    double mean = 0.0;
    for (double v : values)
        mean += v;
    mean /= static_cast<double>(values.size());
    double variance = 0.0;
    for (double v : values)
        variance += (v - mean) * (v - mean);
    variance /= static_cast<double>(values.size());
    const bool ok = variance < 1e-24 && std::abs(mean - 0.25) <= 1e-14;
    char buf[128];
    std::snprintf(buf, sizeof buf, "mean=%.15g variance=%.3e", mean, variance);
    return {"n2-interference-constancy", ok, buf};
}

}  // namespace

std::vector<SuiteResult> run_property_suites(long long samples, std::uint64_t seed, HeavisideConvention convention) {
    std::mt19937_64 rng(seed);
    const long long property_samples = std::min(samples, 10000LL);
    std::vector<SuiteResult> out;
    out.push_back(scalar_nonnegativity(samples, rng));
    out.push_back(oracle_equivalence(property_samples, rng, convention));
    out.push_back(shift_invariance(property_samples, rng));
    out.push_back(scale_invariance(property_samples, rng));
    out.push_back(interference_constancy());
    return out;
}

}  // namespace photon_bell::cli
