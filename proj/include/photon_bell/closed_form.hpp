#pragma once

#include <vector>

#include "photon_bell/emitter_model.hpp"

namespace photon_bell {

/// value(delta) = constant + sum_{n=1..N} coefficients[n-1] * cos(n * delta)
class CosineSeries {
  public:
    CosineSeries(double constant, std::vector<double> coefficients);

    double constant() const { return constant_; }
    const std::vector<double>& coefficients() const { return coefficients_; }
    int order() const { return static_cast<int>(coefficients_.size()); }

    /// Clenshaw summation; one cosine per call.
    double operator()(double delta) const;

    CosineSeries scaled(double factor) const;
    friend CosineSeries operator+(const CosineSeries& a, const CosineSeries& b);

  private:
    double constant_;
    std::vector<double> coefficients_;
};

/// Value of the step function at zero. The closed forms use Theta(0) = 0;
/// the other convention exists only to demonstrate that it breaks them.
enum class HeavisideConvention { ZeroAtOrigin, OneAtOrigin };

double heaviside(int x, HeavisideConvention convention = HeavisideConvention::ZeroAtOrigin);

/// G2 for parallel pi/4 polarizers as a series in delta2 - delta1, with E0 = 1.
CosineSeries parallel_series(const EmitterChain& chain);

/// G2 for orthogonal (pi/4, 3pi/4) polarizers, E0 = 1. Even and odd N
/// share one construction since the inner sums run to floor(N/2).
CosineSeries orthogonal_series(const EmitterChain& chain,
                               HeavisideConvention convention = HeavisideConvention::ZeroAtOrigin);

/// Series for the polarizer combinations that have closed forms, compiled
/// once per chain. All in E0 = 1 units.
struct CorrelationSeries {
    explicit CorrelationSeries(const EmitterChain& chain,
                               HeavisideConvention convention = HeavisideConvention::ZeroAtOrigin);

    EmitterChain chain;
    CosineSeries parallel;
    CosineSeries orthogonal;
    /// One polarizer at pi/4 or 3pi/4, the other removed: parallel + orthogonal.
    CosineSeries half_removed;
    /// Both polarizers removed: 2 * (parallel + orthogonal).
    CosineSeries both_removed;
};

double g2_parallel(const EmitterChain& chain, double delta1, double delta2,
                   const PhysicalConstants& consts = {});
double g2_orthogonal(const EmitterChain& chain, double delta1, double delta2,
                     const PhysicalConstants& consts = {});

/// True when theta (mod pi) is pi/4 or 3pi/4 to within 1e-12.
bool has_closed_form_angle(double theta);

/// G2 for arbitrary detector settings. Uses the closed forms when every
/// present polarizer sits at pi/4 or 3pi/4 and falls back to the
/// brute-force oracle otherwise.
double g2_closed_form(const EmitterChain& chain, const DetectorSetting& d1, const DetectorSetting& d2,
                      const PhysicalConstants& consts = {});

/// Joint probability of detecting the first two photons,
/// C0^2 / E0^4 * G2(d1, d2).
double joint_probability(const EmitterChain& chain, const DetectorSetting& d1, const DetectorSetting& d2,
                         const PhysicalConstants& consts = {});

/// C0^2 / 2: the two-emitter unpolarized joint probability, used as the
/// fixed normalizer of both Bell functionals for every N.
double normalization_constant(const PhysicalConstants& consts = {});

/// N / (3N - 4)
double visibility(long long n);

/// Visibility of the parallel-polarizer fringe from a direct scan and
/// golden-section refinement of its maximum and minimum.
double visibility_numeric(const EmitterChain& chain);

}  // namespace photon_bell
