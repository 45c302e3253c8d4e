// Acceptance checks, one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria (0 when all pass).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "photon_bell/closed_form.hpp"
#include "photon_bell/extremum_search.hpp"
#include "photon_bell/inequalities.hpp"
#include "photon_bell/state_oracle.hpp"

using namespace photon_bell;

namespace {

int failures = 0;

void report(int id, const char* title, bool ok, const std::string& detail) {
    std::printf("[%s] %d. %s: %s\n", ok ? "PASS" : "FAIL", id, title, detail.c_str());
    std::fflush(stdout);
    if (!ok)
        ++failures;
}

std::string fmt(const char* f, double a) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

std::string fmt(const char* f, double a, double b) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b);
    return buf;
}

unsigned env_threads() {
    const char* env = std::getenv("PHOTON_BELL_THREADS");
    return env && *env ? static_cast<unsigned>(std::strtoul(env, nullptr, 10)) : 1u;
}

double max_phase_gap(const PhaseTuple4& a, const PhaseTuple4& b) {
    double worst = 0.0;
    for (int i = 0; i < 4; ++i) {
        const double d = std::abs(a[i] - b[i]);
        worst = std::max(worst, std::min(d, kTwoPi - d));
    }
    return worst;
}

bool identical(const std::vector<InequalityResult>& a, const std::vector<InequalityResult>& b) {
    if (a.size() != b.size())
        return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].n != b[i].n || a[i].extremum != b[i].extremum || !(a[i].phases == b[i].phases) ||
            a[i].evaluations != b[i].evaluations)
            return false;
    return true;
}

void visibility_formula() {
    bool ok = visibility(2) == 1.0 && visibility(3) == 0.6 && visibility(4) == 0.5;
    double worst = 0.0;
    for (int n = 2; n <= 11; ++n)
        worst = std::max(worst, std::abs(visibility_numeric(EmitterChain(n)) - visibility(n)));
    const double limit_gap = std::abs(visibility(1000000) - 1.0 / 3);
    ok = ok && worst <= 1e-9 && limit_gap <= 1e-5;
    report(1, "visibility n/(3n-4)", ok,
           "V2,V3,V4 exact; max |numeric - formula| = " + fmt("%.2e", worst) + ", |V(1e6) - 1/3| = " +
               fmt("%.2e", limit_gap));
}

void ch74_two(const InequalityResult& r) {
    const double target = (std::sqrt(2.0) - 1) / 2;
    double gap = 1e300;
    for (const PhaseTuple4& member : candidate_phases(2))
        gap = std::min(gap, max_phase_gap(r.phases, member));
    const double factor_gap = std::abs((std::sqrt(2.0) - 1) / r.extremum - 2.0);
    const bool ok = std::abs(r.extremum - target) <= 1e-6 && gap <= 1e-6 && factor_gap <= 1e-9;
    report(2, "CH74 N=2 maximum", ok,
           fmt("S_2 = %.12f, doubled = %.12f", r.extremum, 2 * r.extremum) + fmt(", phase gap to family = %.2e", gap) +
               fmt(", |(sqrt2-1)/S_2 - 2| = %.2e", factor_gap));
}

void ch74_three_four(const std::vector<InequalityResult>& s) {
    const double s3 = s[1].extremum;
    const double s4 = s[2].extremum;
    const bool ok = std::abs(s3) <= 1e-6 && std::abs(s4) <= 1e-6;
    std::string detail = fmt("S_3 = %.10f, S_4 = %.3e", s3, s4);
    if (std::abs(s3) > 1e-6) {
        const PhaseTuple4& p = s[1].phases;
        detail += fmt(" (S_3 maximum off the {0,pi} lattice at phases 0, %.5f", p[1]) + fmt(", %.5f, %.5f)", p[2], p[3]);
    }
    report(3, "CH74 N=3,4 maxima are 0", ok, detail);
}

void ch74_five_to_ten(const std::vector<InequalityResult>& s) {
    double worst = -1e300;
    for (int n = 5; n <= 10; ++n)
        worst = std::max(worst, s[n - 2].extremum);
    report(4, "CH74 N=5..10 not violated", worst <= 1e-9, fmt("max over N=5..10 of S_N = %.10f", worst));
}

void hbw_minima(const std::vector<InequalityResult>& t) {
    bool negative = true, increasing = true;
    for (const InequalityResult& r : t)
        negative = negative && r.extremum < -1e-3;
    for (int n = 4; n <= 10; ++n)
        increasing = increasing && t[n - 2].extremum > t[n - 3].extremum;
    const double t2 = t[0].extremum, t3 = t[1].extremum, t10 = t[8].extremum;
    const bool ok = std::abs(t2 + 0.125) <= 1e-6 && std::abs(t3 + 0.254) <= 2e-3 && std::abs(t10 + 0.118) <= 2e-3 &&
                    negative && increasing;
    report(5, "HBW minima", ok,
           fmt("T_2 = %.9f, T_3 = %.6f", t2, t3) + fmt(", T_10 = %.6f", t10) +
               (negative ? ", all < -1e-3" : ", some >= -1e-3") +
               (increasing ? ", increasing for N=3..10" : ", NOT increasing for N=3..10"));
}

void oracle_equivalence() {
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(6);
    std::uniform_int_distribution<int> pick_n(2, 10);
    std::uniform_real_distribution<double> phase(0.0, kTwoPi);
    double worst_par = 0.0, worst_orth = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const EmitterChain chain(pick_n(rng));
        const double a = phase(rng), b = phase(rng);
        worst_par = std::max(worst_par, std::abs(parallel_series(chain)(b - a) - g2_oracle(chain, a, b, kPi / 4, kPi / 4)));
        worst_orth = std::max(worst_orth,
                              std::abs(orthogonal_series(chain)(b - a) - g2_oracle(chain, a, b, kPi / 4, 3 * kPi / 4)));
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report(6, "closed form equals oracle", worst_par <= 1e-10 && worst_orth <= 1e-10,
           fmt("max diff parallel %.2e, orthogonal %.2e", worst_par, worst_orth) + fmt(" in %.3f s", secs));
}

void scalar_suites() {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst_bw = 1.0, worst_hbw = 1.0;
    for (int i = 0; i < 1000000; ++i) {
        worst_bw = std::min(worst_bw, bw_scalar(u(rng), u(rng), u(rng)));
        const double x4 = std::pow(u(rng), 0.25);
        worst_hbw = std::min(worst_hbw, hbw_scalar(x4 * u(rng), x4 * u(rng), x4 * u(rng), x4));
    }
    bool reduces = true;
    for (int i = 0; i < 10000; ++i) {
        const double x1 = u(rng), x2 = u(rng), x3 = u(rng);
        reduces = reduces && hbw_scalar(x1, x2, x3, 1.0) == bw_scalar(x1, x2, x3);
    }
    report(7, "scalar inequalities", worst_bw >= -1e-12 && worst_hbw >= -1e-12 && reduces,
           fmt("min bw %.3e, min hbw %.3e over 1e6 samples", worst_bw, worst_hbw) +
               (reduces ? ", hbw(.,.,.,1) == bw on 1e4 samples" : ", hbw(.,.,.,1) != bw"));
}

void interference_constancy() {
    const EmitterChain two(2);
    const auto quarter = PolarizerSetting::angle(kPi / 4);
    std::vector<double> values;
    for (int i = 0; i < 256; ++i)
        for (int j = 0; j < 256; ++j)
            values.push_back(joint_probability(two, DetectorSetting(i * kTwoPi / 256, quarter),
                                               DetectorSetting(j * kTwoPi / 256, PolarizerSetting::removed())));
    double mean = 0.0;
    for (double v : values)
        mean += v;
    mean /= static_cast<double>(values.size());
    double variance = 0.0, worst = 0.0;
    for (double v : values) {
        variance += (v - mean) * (v - mean);
        worst = std::max(worst, std::abs(v - 0.25));
    }
    variance /= static_cast<double>(values.size());
    report(8, "N=2 removed-polarizer constancy", variance < 1e-24 && worst <= 1e-15,
           fmt("variance %.2e, max |p - C0^2/4| = %.2e", variance, worst));
}

void invariances(const std::vector<InequalityResult>& s64, const std::vector<InequalityResult>& t64,
                 const SearchConfig& base) {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> phase(0.0, kTwoPi);
    double shift = 0.0, scale = 0.0;
    const double scales[] = {0.25, 0.5, 0.8, 1.0};
    for (int n = 2; n <= 10; ++n)
        for (auto kind : {InequalityKind::Ch74, InequalityKind::Hbw}) {
            const BellFunctional f(kind, EmitterChain(n));
            for (int i = 0; i < 200; ++i) {
                const PhaseTuple4 t(phase(rng), phase(rng), phase(rng), phase(rng));
                const double c = phase(rng);
                shift = std::max(shift, std::abs(f(t) - f(PhaseTuple4(t[0] + c, t[1] + c, t[2] + c, t[3] + c))));
                if (i < 10)
                    for (double e0 : scales)
                        for (double c0 : scales)
                            scale = std::max(scale, std::abs(BellFunctional(kind, EmitterChain(n), {e0, c0})(t) - f(t)));
            }
        }
    SearchConfig fine = base;
    fine.grid_resolution = 2 * base.grid_resolution;
    const auto s128 = sweep(2, 10, InequalityKind::Ch74, fine);
    const auto t128 = sweep(2, 10, InequalityKind::Hbw, fine);
    double drift = 0.0;
    for (std::size_t i = 0; i < s64.size(); ++i) {
        drift = std::max(drift, std::abs(s64[i].extremum - s128[i].extremum));
        drift = std::max(drift, std::abs(t64[i].extremum - t128[i].extremum));
    }
    report(9, "invariances", shift <= 1e-14 && scale <= 1e-12 && drift <= 1e-6,
           fmt("shift %.2e, C0/E0 scale %.2e", shift, scale) + fmt(", grid 64 -> 128 drift %.2e", drift));
}

void determinism(const std::vector<InequalityResult>& s64, const std::vector<InequalityResult>& t64,
                 const SearchConfig& base) {
    const bool ok = identical(s64, sweep(2, 10, InequalityKind::Ch74, base)) &&
                    identical(t64, sweep(2, 10, InequalityKind::Hbw, base));
    report(10, "determinism", ok, ok ? "repeated sweeps bit-identical" : "repeated sweeps differ");
}

}  // namespace

int main() {
    SearchConfig base;
    base.threads = env_threads();

    const auto t0 = std::chrono::steady_clock::now();
    const auto s64 = sweep(2, 10, InequalityKind::Ch74, base);
    const auto t64 = sweep(2, 10, InequalityKind::Hbw, base);

    visibility_formula();
    ch74_two(s64[0]);
    ch74_three_four(s64);
    ch74_five_to_ten(s64);
    hbw_minima(t64);
    oracle_equivalence();
    scalar_suites();
    interference_constancy();
    invariances(s64, t64, base);
    determinism(s64, t64, base);

    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%d of 10 criteria failed (%.1f s)\n", failures, secs);
    return failures;
}
