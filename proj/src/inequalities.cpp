#include "photon_bell/inequalities.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "photon_bell/state_oracle.hpp"

namespace photon_bell {

std::string_view to_string(InequalityKind kind) {
    return kind == InequalityKind::Ch74 ? "ch74" : "hbw";
}

InequalityKind inequality_kind_from_string(std::string_view name) {
    if (name == "ch74")
        return InequalityKind::Ch74;
    if (name == "hbw")
        return InequalityKind::Hbw;
    throw std::invalid_argument("unknown inequality kind '" + std::string(name) + "'");
}

PhaseTuple4::PhaseTuple4(double a, double b, double c, double d)
    : values_{canonical_phase(a), canonical_phase(b), canonical_phase(c), canonical_phase(d)} {}

PhaseTuple4 PhaseTuple4::anchored() const {
    const double s = values_[0];
    return PhaseTuple4(0.0, values_[1] - s, values_[2] - s, values_[3] - s);
}

BellFunctional::BellFunctional(InequalityKind kind, const EmitterChain& chain, const PhysicalConstants& consts,
                               const FunctionalOptions& options)
    : kind_(kind),
      consts_(consts),
      options_(options),
      series_(chain),
      pol1_(PolarizerSetting::angle(options.theta1)),
      pol2_(PolarizerSetting::angle(options.theta2)),
      series_route_(options.route == ProbabilityRoute::ClosedForm && has_closed_form_angle(options.theta1) &&
                    has_closed_form_angle(options.theta2)),
      norm_(normalization_constant(consts)) {}

double BellFunctional::probability(double delta1, double delta2, const PolarizerSetting& pol1,
                                   const PolarizerSetting& pol2) const {
    const double e0_sq = consts_.e0 * consts_.e0;
    const double e0_fourth = e0_sq * e0_sq;
    const double scale = consts_.c0 * consts_.c0 / e0_fourth;
    if (series_route_) {
        // Only the three pi/4-family combinations are ever requested here.
        const double delta = delta2 - delta1;
        double g2;
        if (pol1.is_removed() || pol2.is_removed())
            g2 = series_.half_removed(delta);
        else if (std::abs(pol1.theta() - pol2.theta()) <= 1e-12)
            g2 = series_.parallel(delta);
        else
            g2 = series_.orthogonal(delta);
        return scale * e0_fourth * g2;
    }
    if (options_.route == ProbabilityRoute::Oracle)
        return scale * g2_oracle_unpolarized(series_.chain, delta1, delta2, pol1, pol2, consts_);
    return joint_probability(series_.chain, DetectorSetting(delta1, pol1), DetectorSetting(delta2, pol2),
                             consts_);
}

double BellFunctional::ch74(double d1, double d2, double d1p, double d2p) const {
    const PolarizerSetting none = PolarizerSetting::removed();
    const double sum = probability(d1, d2, pol1_, pol2_) - probability(d1, d2p, pol1_, pol2_) +
                       probability(d1p, d2, pol1_, pol2_) + probability(d1p, d2p, pol1_, pol2_) -
                       probability(d1p, d2, pol1_, none) - probability(d1, d2, none, pol2_);
    return sum / norm_;
}

double BellFunctional::hbw(double d1, double d2, double d3, double d4) const {
    const PolarizerSetting none = PolarizerSetting::removed();
    const double sum = probability(d1, d4, pol1_, none) - probability(d1, d2, pol1_, pol1_) -
                       probability(d1, d3, pol1_, pol2_) + probability(d2, d3, pol1_, pol2_);
    return sum / norm_;
}

double BellFunctional::evaluate(double p0, double p1, double p2, double p3) const {
    return kind_ == InequalityKind::Ch74 ? ch74(p0, p1, p2, p3) : hbw(p0, p1, p2, p3);
}

double ch74_value(const EmitterChain& chain, const PhaseTuple4& phases, const PhysicalConstants& consts,
                  const FunctionalOptions& options) {
    return BellFunctional(InequalityKind::Ch74, chain, consts, options)(phases);
}

double hbw_value(const EmitterChain& chain, const PhaseTuple4& phases, const PhysicalConstants& consts,
                 const FunctionalOptions& options) {
    return BellFunctional(InequalityKind::Hbw, chain, consts, options)(phases);
}

double ch74_value_reduced_visibility(double visibility) {
    if (!(visibility >= 0.0 && visibility <= 1.0))
        throw std::domain_error("visibility must lie in [0, 1]");
    return std::sqrt(2.0) * visibility - 1.0;
}

namespace {

bool in_unit(double x) { return x >= 0.0 && x <= 1.0; }

}  // namespace

double bw_scalar(double x1, double x2, double x3) {
    if (!in_unit(x1) || !in_unit(x2) || !in_unit(x3))
        throw std::domain_error("bw_scalar arguments must lie in [0, 1]");
    return x1 - x1 * x2 - x1 * x3 + x2 * x3;
}

double hbw_scalar(double x1, double x2, double x3, double x4) {
    if (!in_unit(x1) || !in_unit(x2) || !in_unit(x3) || !in_unit(x4))
        throw std::domain_error("hbw_scalar arguments must lie in [0, 1]");
    if (x1 > x4 || x2 > x4 || x3 > x4)
        throw std::domain_error("hbw_scalar requires x1, x2, x3 <= x4");
    return x1 * x4 - x1 * x2 - x1 * x3 + x2 * x3;
}

}  // namespace photon_bell
