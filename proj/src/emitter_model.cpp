#include "photon_bell/emitter_model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace photon_bell {

double reduce_angle(double radians, double period) {
    if (!std::isfinite(radians))
        throw std::invalid_argument("angle must be finite");
    double r = std::fmod(radians, period);
    if (r < 0.0)
        r += period;
    // fmod of a tiny negative value can round up to exactly `period`
    if (r >= period)
        r = 0.0;
    return r;
}

EmitterChain::EmitterChain(int n) : n_(n) {
    if (n < 2)
        throw std::invalid_argument("emitter chain needs at least 2 emitters, got " + std::to_string(n));
}

bool EmitterChain::in_minus_group(int emitter) const {
    if (!contains(emitter))
        throw std::out_of_range("emitter index " + std::to_string(emitter) + " outside 1.." +
                                std::to_string(n_));
    return emitter <= minus_count();
}

std::vector<int> EmitterChain::group_minus() const {
    std::vector<int> out;
    for (int i = 1; i <= minus_count(); ++i)
        out.push_back(i);
    return out;
}

std::vector<int> EmitterChain::group_plus() const {
    std::vector<int> out;
    for (int i = minus_count() + 1; i <= n_; ++i)
        out.push_back(i);
    return out;
}

EmitterChain build_chain(int n) { return EmitterChain(n); }

PolarizerSetting PolarizerSetting::angle(double theta) {
    PolarizerSetting p;
    p.theta_ = reduce_angle(theta, kPi);
    p.removed_ = false;
    return p;
}

double PolarizerSetting::theta() const {
    if (removed_)
        throw std::logic_error("polarizer is removed; it has no angle");
    return theta_;
}

DetectorSetting::DetectorSetting(double phase_, PolarizerSetting polarizer_)
    : phase(canonical_phase(phase_)), polarizer(polarizer_) {}

void PhysicalConstants::validate() const {
    if (!(e0 > 0.0) || !std::isfinite(e0))
        throw std::invalid_argument("field amplitude e0 must be positive");
    if (!(c0 > 0.0 && c0 <= 1.0))
        throw std::invalid_argument("success probability c0 must lie in (0, 1]");
}

double phase_from_geometry(double kd, double theta) {
    if (!(kd >= 0.0))
        throw std::invalid_argument("kd must be non-negative");
    return canonical_phase(kd * std::sin(theta));
}

}  // namespace photon_bell
