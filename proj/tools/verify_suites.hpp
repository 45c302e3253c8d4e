#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "photon_bell/closed_form.hpp"

namespace photon_bell::cli {

struct SuiteResult {
    std::string name;
    bool passed;
    std::string detail;
};

/// Property suites behind `verify`. The scalar suite draws `samples`
/// points per inequality; the others use min(samples, 10000).
std::vector<SuiteResult> run_property_suites(long long samples, std::uint64_t seed,
                                             HeavisideConvention convention = HeavisideConvention::ZeroAtOrigin);

}  // namespace photon_bell::cli
