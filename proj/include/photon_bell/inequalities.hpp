#pragma once

#include <array>
#include <compare>
#include <string_view>

#include "photon_bell/closed_form.hpp"
#include "photon_bell/emitter_model.hpp"

namespace photon_bell {

enum class InequalityKind { Ch74, Hbw };

std::string_view to_string(InequalityKind kind);
/// Accepts "ch74" or "hbw"; throws std::invalid_argument otherwise.
InequalityKind inequality_kind_from_string(std::string_view name);

/// Four detector phases, each reduced to [0, 2pi).
/// CH74 order: (delta1, delta2, delta1', delta2').
/// HBW order:  (delta1, delta2, delta3, delta4).
class PhaseTuple4 {
  public:
    PhaseTuple4() = default;
    PhaseTuple4(double a, double b, double c, double d);

    double operator[](std::size_t i) const { return values_[i]; }
    const std::array<double, 4>& values() const { return values_; }

    /// Same tuple with the first phase moved to zero by a global shift.
    PhaseTuple4 anchored() const;

    friend auto operator<=>(const PhaseTuple4&, const PhaseTuple4&) = default;

  private:
    std::array<double, 4> values_{};
};

enum class ProbabilityRoute { ClosedForm, Oracle };

struct FunctionalOptions {
    // Polarizer angles of detector 1 and 2. Both functionals are defined
    // for pi/4, pi/4; other values are for exploration only.
    double theta1 = kPi / 4;
    double theta2 = kPi / 4;
    ProbabilityRoute route = ProbabilityRoute::ClosedForm;
};

/// S_N (CH74, local bound S_N <= 0) or T_N (homogeneous Bell-Wigner, local
/// bound T_N >= 0), normalized by the constant C0^2/2. The cosine series are
/// compiled once at construction, so repeated evaluation is O(N).
class BellFunctional {
  public:
    BellFunctional(InequalityKind kind, const EmitterChain& chain, const PhysicalConstants& consts = {},
                   const FunctionalOptions& options = {});

    InequalityKind kind() const { return kind_; }
    const EmitterChain& chain() const { return series_.chain; }

    double operator()(const PhaseTuple4& phases) const {
        return evaluate(phases[0], phases[1], phases[2], phases[3]);
    }
    /// Phases need not be canonical.
    double evaluate(double p0, double p1, double p2, double p3) const;

  private:
    double probability(double delta1, double delta2, const PolarizerSetting& pol1,
                       const PolarizerSetting& pol2) const;
    double ch74(double d1, double d2, double d1p, double d2p) const;
    double hbw(double d1, double d2, double d3, double d4) const;

    InequalityKind kind_;
    PhysicalConstants consts_;
    FunctionalOptions options_;
    CorrelationSeries series_;
    PolarizerSetting pol1_;
    PolarizerSetting pol2_;
    bool series_route_;
    double norm_;
};

double ch74_value(const EmitterChain& chain, const PhaseTuple4& phases, const PhysicalConstants& consts = {},
                  const FunctionalOptions& options = {});

double hbw_value(const EmitterChain& chain, const PhaseTuple4& phases, const PhysicalConstants& consts = {},
                 const FunctionalOptions& options = {});

/// Two-emitter CH74 optimum at fringe visibility V: sqrt(2) V - 1.
/// Positive means a violation is possible at that visibility.
double ch74_value_reduced_visibility(double visibility);

/// x1 - x1 x2 - x1 x3 + x2 x3 on [0,1]^3 (nonnegative there).
double bw_scalar(double x1, double x2, double x3);

/// x1 x4 - x1 x2 - x1 x3 + x2 x3 for 0 <= x1,x2,x3 <= x4 <= 1 (nonnegative there).
double hbw_scalar(double x1, double x2, double x3, double x4);

}  // namespace photon_bell
