#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "photon_bell/emitter_model.hpp"
#include "photon_bell/inequalities.hpp"

namespace photon_bell {

/// Grid scan + golden-section refinement over the three free phases. The
/// first phase is pinned at zero because both functionals only depend on
/// phase differences.
struct SearchConfig {
    int grid_resolution = 64;           // points per free dimension
    int refine_candidates = 16;         // best grid cells to refine
    double refine_tolerance = 1e-9;     // radians
    std::vector<PhaseTuple4> seed_candidates;
    /// Refined results closer than this to the best value count as ties and
    /// are ordered by their phase tuple.
    double tie_tolerance = 1e-12;
    /// Worker threads for the grid scan; 0 uses every core.
    unsigned threads = 1;
    int max_refine_cycles = 20000;

    void validate() const;
};

struct InequalityResult {
    int n = 0;
    InequalityKind kind = InequalityKind::Ch74;
    double extremum = 0.0;
    PhaseTuple4 phases;  // phases[0] == 0
    std::uint64_t evaluations = 0;
    SearchConfig config;
};

/// Search error tagged with the emitter count it happened at.
class SearchError : public std::runtime_error {
  public:
    SearchError(int n, const std::string& what);
    int n() const { return n_; }

  private:
    int n_;
};

InequalityResult maximize_ch74(const EmitterChain& chain, const SearchConfig& config = {});
InequalityResult minimize_hbw(const EmitterChain& chain, const SearchConfig& config = {});

/// Dispatches to maximize_ch74 or minimize_hbw.
InequalityResult search_extremum(const EmitterChain& chain, InequalityKind kind, const SearchConfig& config = {});

/// Lattice optima of S_N, reduced so the first phase is zero.
/// N = 2: (0, pi/4, pi/2, 3pi/4) and its mirror (0, 7pi/4, 3pi/2, 5pi/4).
/// N > 2: every tuple (0, x, y, z) with x, y, z in {0, pi}.
/// Empty for HBW, which has no analytic candidate set.
std::vector<PhaseTuple4> candidate_phases(int n, InequalityKind kind = InequalityKind::Ch74);

/// One independent search per N in [n_min, n_max], in ascending N.
std::vector<InequalityResult> sweep(int n_min, int n_max, InequalityKind kind, const SearchConfig& config = {});

namespace detail {

using Point3 = std::array<double, 3>;
using Objective3 = std::function<double(const Point3&)>;

struct RefineOutcome {
    Point3 point;
    double value;
    std::uint64_t evaluations;
    int cycles;
    std::vector<double> trace;  // objective after every coordinate update
};

/// Cyclic per-coordinate golden-section descent minimizing `objective`
/// from `start`. Each line search is bracketed by +-bracket around the
/// current coordinate; an update is kept only if it lowers the objective.
RefineOutcome refine_minimum(const Objective3& objective, Point3 start, double bracket, double tolerance,
                             int max_cycles);

}  // namespace detail

}  // namespace photon_bell
