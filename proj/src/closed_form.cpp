#include "photon_bell/closed_form.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "photon_bell/golden_section.hpp"
#include "photon_bell/state_oracle.hpp"

namespace photon_bell {

CosineSeries::CosineSeries(double constant, std::vector<double> coefficients)
    : constant_(constant), coefficients_(std::move(coefficients)) {}

double CosineSeries::operator()(double delta) const {
    const double two_cos = 2.0 * std::cos(delta);
    double b1 = 0.0;
    double b2 = 0.0;
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
        const double b0 = *it + two_cos * b1 - b2;
        b2 = b1;
        b1 = b0;
    }
    // b1 now holds b_1, b2 holds b_2
    return constant_ + 0.5 * two_cos * b1 - b2;
}

CosineSeries CosineSeries::scaled(double factor) const {
    std::vector<double> c = coefficients_;
    for (double& x : c)
        x *= factor;
    return CosineSeries(constant_ * factor, std::move(c));
}

CosineSeries operator+(const CosineSeries& a, const CosineSeries& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("cannot add cosine series of different order");
    std::vector<double> c = a.coefficients_;
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] += b.coefficients_[i];
    return CosineSeries(a.constant_ + b.constant_, std::move(c));
}

double heaviside(int x, HeavisideConvention convention) {
    if (x == 0)
        return convention == HeavisideConvention::ZeroAtOrigin ? 0.0 : 1.0;
    return x > 0 ? 1.0 : 0.0;
}

CosineSeries parallel_series(const EmitterChain& chain) {
    const int n = chain.size();
    const double pair_weight = 2.0 / (n * (n - 1.0));
    std::vector<double> c(n);
    for (int k = 1; k <= n; ++k)
        c[k - 1] = pair_weight * (n - k) / 8.0;
    return CosineSeries(1.0 / 8.0, std::move(c));
}

CosineSeries orthogonal_series(const EmitterChain& chain, HeavisideConvention convention) {
    const int n = chain.size();
    const int half = n / 2;
    const double pair_weight = 2.0 / (n * (n - 1.0));
    std::vector<double> c(n, 0.0);
    for (int k = 1; k <= half; ++k)
        c[k - 1] += pair_weight * (n - 2 * k);
    for (int alpha = 1; alpha <= half; ++alpha)
        for (int k = 1; k <= n; ++k)
            c[k - 1] -= pair_weight * heaviside(n - k - alpha + 1, convention) *
                        heaviside(k - alpha + 1, convention);
    for (double& x : c)
        x /= 8.0;
    return CosineSeries(1.0 / 8.0, std::move(c));
}

CorrelationSeries::CorrelationSeries(const EmitterChain& chain_, HeavisideConvention convention)
    : chain(chain_),
      parallel(parallel_series(chain_)),
      orthogonal(orthogonal_series(chain_, convention)),
      half_removed(parallel + orthogonal),
      both_removed(half_removed.scaled(2.0)) {}

namespace {

double e0_fourth(const PhysicalConstants& consts) {
    const double sq = consts.e0 * consts.e0;
    return sq * sq;
}

}  // namespace

double g2_parallel(const EmitterChain& chain, double delta1, double delta2, const PhysicalConstants& consts) {
    return e0_fourth(consts) * parallel_series(chain)(delta2 - delta1);
}

double g2_orthogonal(const EmitterChain& chain, double delta1, double delta2,
                     const PhysicalConstants& consts) {
    return e0_fourth(consts) * orthogonal_series(chain)(delta2 - delta1);
}

bool has_closed_form_angle(double theta) {
    const double t = reduce_angle(theta, kPi);
    return std::abs(t - kPi / 4) <= 1e-12 || std::abs(t - 3 * kPi / 4) <= 1e-12;
}

double g2_closed_form(const EmitterChain& chain, const DetectorSetting& d1, const DetectorSetting& d2,
                      const PhysicalConstants& consts) {
    const PolarizerSetting& p1 = d1.polarizer;
    const PolarizerSetting& p2 = d2.polarizer;
    const bool closed1 = p1.is_removed() || has_closed_form_angle(p1.theta());
    const bool closed2 = p2.is_removed() || has_closed_form_angle(p2.theta());
    if (!closed1 || !closed2)
        return g2_oracle_unpolarized(chain, d1.phase, d2.phase, p1, p2, consts);

    const double delta = d2.phase - d1.phase;
    double value;
    if (p1.is_removed() && p2.is_removed()) {
        value = 2.0 * (parallel_series(chain)(delta) + orthogonal_series(chain)(delta));
    } else if (p1.is_removed() || p2.is_removed()) {
        value = parallel_series(chain)(delta) + orthogonal_series(chain)(delta);
    } else {
        const bool same = std::abs(p1.theta() - p2.theta()) <= 1e-12;
        value = same ? parallel_series(chain)(delta) : orthogonal_series(chain)(delta);
    }
    return e0_fourth(consts) * value;
}

double joint_probability(const EmitterChain& chain, const DetectorSetting& d1, const DetectorSetting& d2,
                         const PhysicalConstants& consts) {
    consts.validate();
    return consts.c0 * consts.c0 / e0_fourth(consts) * g2_closed_form(chain, d1, d2, consts);
}

double normalization_constant(const PhysicalConstants& consts) {
    consts.validate();
    return consts.c0 * consts.c0 / 2.0;
}

double visibility(long long n) {
    if (n < 2)
        throw std::invalid_argument("visibility needs n >= 2, got " + std::to_string(n));
    const double nd = static_cast<double>(n);
    return nd / (3.0 * nd - 4.0);
}

double visibility_numeric(const EmitterChain& chain) {
    constexpr int kScanPoints = 4096;
    constexpr double kTolerance = 1e-12;
    const CosineSeries g2 = parallel_series(chain);
    const double step = kTwoPi / kScanPoints;

    int imax = 0;
    int imin = 0;
    double vmax = g2(0.0);
    double vmin = vmax;
    for (int i = 1; i < kScanPoints; ++i) {
        const double v = g2(i * step);
        if (v > vmax) {
            vmax = v;
            imax = i;
        }
        if (v < vmin) {
            vmin = v;
            imin = i;
        }
    }

    const double xmin = imin * step;
    const auto lo = golden_section_minimize(g2, xmin - step, xmin + step, kTolerance);
    const double xmax = imax * step;
    const auto hi =
        golden_section_minimize([&](double x) { return -g2(x); }, xmax - step, xmax + step, kTolerance);

    const double gmax = std::max(vmax, -hi.value);
    const double gmin = std::min(vmin, lo.value);
    return (gmax - gmin) / (gmax + gmin);
}

}  // namespace photon_bell
