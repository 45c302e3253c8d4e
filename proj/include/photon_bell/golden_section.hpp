#pragma once

#include <cmath>
#include <cstdint>

namespace photon_bell {

struct LineMinimum {
    double x;
    double value;
    std::uint64_t evaluations;
};

/// Golden-section search for a minimum of f on [lo, hi], stopping once the
/// bracket is narrower than tol. Assumes f is unimodal on the bracket; for
/// other functions it still returns a local minimum of the sampled points.
template <typename F>
LineMinimum golden_section_minimize(F&& f, double lo, double hi, double tol) {
    constexpr double kInvPhi = 0.6180339887498949;  // (sqrt(5)-1)/2
    double a = lo;
    double b = hi;
    double c = b - kInvPhi * (b - a);
    double d = a + kInvPhi * (b - a);
    double fc = f(c);
    double fd = f(d);
    std::uint64_t evals = 2;
    while (std::abs(b - a) > tol) {
        if (fc <= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - kInvPhi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + kInvPhi * (b - a);
            fd = f(d);
        }
        ++evals;
        // bracket collapsed below double resolution
        if (!(c > a && d < b))
            break;
    }
    if (fc <= fd)
        return {c, fc, evals};
    return {d, fd, evals};
}

}  // namespace photon_bell
