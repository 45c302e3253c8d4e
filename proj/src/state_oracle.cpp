#include "photon_bell/state_oracle.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace photon_bell {

double branch_weight(const EmitterChain& chain, int emitter, double theta) {
    if (!chain.contains(emitter))
        throw std::out_of_range("emitter index " + std::to_string(emitter) + " outside 1.." +
                                std::to_string(chain.size()));
    return chain.in_minus_group(emitter) ? std::sin(theta) : std::cos(theta);
}

std::vector<PairAmplitude> pair_amplitudes(const EmitterChain& chain, double delta1, double delta2,
                                           double theta1, double theta2, const PhysicalConstants& consts) {
    const int n = chain.size();
    std::vector<double> w1(n + 1);
    std::vector<double> w2(n + 1);
    for (int k = 1; k <= n; ++k) {
        w1[k] = branch_weight(chain, k, theta1);
        w2[k] = branch_weight(chain, k, theta2);
    }
    const double prefactor = consts.e0 * consts.e0 / 2.0;

    std::vector<PairAmplitude> out;
    out.reserve(chain.pair_count());
    for (int a = 1; a <= n; ++a) {
        for (int b = a + 1; b <= n; ++b) {
            const std::complex<double> forward = w1[a] * w2[b] * std::polar(1.0, a * delta1 + b * delta2);
            const std::complex<double> swapped = w1[b] * w2[a] * std::polar(1.0, b * delta1 + a * delta2);
            out.push_back({a, b, prefactor * (forward + swapped)});
        }
    }
    return out;
}

double g2_oracle(const EmitterChain& chain, double delta1, double delta2, double theta1, double theta2,
                 const PhysicalConstants& consts) {
    double sum = 0.0;
    for (const PairAmplitude& p : pair_amplitudes(chain, delta1, delta2, theta1, theta2, consts))
        sum += std::norm(p.amplitude);
    return sum / chain.pair_count();
}

double g2_oracle_unpolarized(const EmitterChain& chain, double delta1, double delta2,
                             const PolarizerSetting& polarizer1, const PolarizerSetting& polarizer2,
                             const PhysicalConstants& consts, double basis_angle) {
    auto angles = [basis_angle](const PolarizerSetting& p) -> std::vector<double> {
        if (p.is_removed())
            return {basis_angle, basis_angle + kPi / 2};
        return {p.theta()};
    };
    double sum = 0.0;
    for (double t1 : angles(polarizer1))
        for (double t2 : angles(polarizer2))
            sum += g2_oracle(chain, delta1, delta2, t1, t2, consts);
    return sum;
}

}  // namespace photon_bell
