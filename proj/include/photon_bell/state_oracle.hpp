#pragma once

#include <complex>
#include <vector>

#include "photon_bell/emitter_model.hpp"

namespace photon_bell {

// Brute-force two-photon correlation built from the detection-operator
// amplitudes. Independent of the cosine-series closed forms and used as
// their reference.

struct PairAmplitude {
    int first;   // smaller emitter index
    int second;  // larger emitter index
    std::complex<double> amplitude;
};

/// sin(theta) for an emitter of the minus group, cos(theta) for the plus group.
double branch_weight(const EmitterChain& chain, int emitter, double theta);

/// Final-state amplitude for every unordered emitter pair {n, m}, n < m,
/// in ascending lexicographic order. Each term is one emitter feeding
/// detector 1 and the other feeding detector 2:
///   A = E0^2/2 [w1(n) w2(m) e^{i(n d1 + m d2)} + w1(m) w2(n) e^{i(m d1 + n d2)}]
std::vector<PairAmplitude> pair_amplitudes(const EmitterChain& chain, double delta1, double delta2,
                                           double theta1, double theta2,
                                           const PhysicalConstants& consts = {});

/// Sum of |A|^2 over all pairs divided by the pair count N(N-1)/2.
double g2_oracle(const EmitterChain& chain, double delta1, double delta2, double theta1, double theta2,
                 const PhysicalConstants& consts = {});

inline constexpr double kDefaultBasisAngle = kPi / 4;

/// Like g2_oracle, but a removed polarizer is replaced by the sum over the
/// orthonormal filter pair {basis, basis + pi/2}. The result does not
/// depend on the basis angle.
double g2_oracle_unpolarized(const EmitterChain& chain, double delta1, double delta2,
                             const PolarizerSetting& polarizer1, const PolarizerSetting& polarizer2,
                             const PhysicalConstants& consts = {}, double basis_angle = kDefaultBasisAngle);

}  // namespace photon_bell
