#pragma once

#include <numbers>
#include <vector>

namespace photon_bell {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Reduces an angle to the half-open interval [0, period).
double reduce_angle(double radians, double period);

/// Canonical phase in [0, 2pi).
inline double canonical_phase(double radians) { return reduce_angle(radians, kTwoPi); }

/// A chain of N equidistant V-type emitters.
///
/// Emitters are numbered 1..N. The first floor(N/2) emitters start in
/// |e,-1> (the "minus" group); the rest start in |e,+1>. For odd N the
/// plus group holds the extra emitter.
class EmitterChain {
  public:
    explicit EmitterChain(int n);

    int size() const { return n_; }
    int minus_count() const { return n_ / 2; }
    int plus_count() const { return n_ - n_ / 2; }

    bool in_minus_group(int emitter) const;
    bool contains(int emitter) const { return emitter >= 1 && emitter <= n_; }

    std::vector<int> group_minus() const;
    std::vector<int> group_plus() const;

    /// Number of unordered emitter pairs, N(N-1)/2.
    int pair_count() const { return n_ * (n_ - 1) / 2; }

    friend bool operator==(const EmitterChain&, const EmitterChain&) = default;

  private:
    int n_;
};

EmitterChain build_chain(int n);

/// Polarization filter in front of a detector: either an angle theta in
/// eta = sin(theta) sigma+ + cos(theta) sigma-, or no filter at all.
class PolarizerSetting {
  public:
    static PolarizerSetting angle(double theta);
    static PolarizerSetting removed() { return PolarizerSetting{}; }

    bool is_removed() const { return removed_; }
    /// Angle in [0, pi). Throws std::logic_error for a removed polarizer.
    double theta() const;

    friend bool operator==(const PolarizerSetting&, const PolarizerSetting&) = default;

  private:
    PolarizerSetting() = default;
    double theta_ = 0.0;
    bool removed_ = true;
};

struct DetectorSetting {
    DetectorSetting(double phase, PolarizerSetting polarizer);

    double phase;  // [0, 2pi)
    PolarizerSetting polarizer;
};

/// Field amplitude E0 and single-photon success probability C0. Both are
/// dimensionless; detector efficiency and solid angle are folded into C0.
struct PhysicalConstants {
    double e0 = 1.0;
    double c0 = 1.0;

    /// Throws std::invalid_argument unless e0 > 0 and 0 < c0 <= 1.
    void validate() const;
};

/// Optical phase difference between adjacent emitters seen at scattering
/// angle theta, kd * sin(theta), reduced to [0, 2pi).
double phase_from_geometry(double kd, double theta);

}  // namespace photon_bell
