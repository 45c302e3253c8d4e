#include "photon_bell/extremum_search.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>
#include <tuple>

#include "photon_bell/golden_section.hpp"

namespace photon_bell {

void SearchConfig::validate() const {
    if (grid_resolution < 8)
        throw std::invalid_argument("grid_resolution must be at least 8");
    if (refine_candidates < 0)
        throw std::invalid_argument("refine_candidates must be non-negative");
    if (!(refine_tolerance > 0.0))
        throw std::invalid_argument("refine_tolerance must be positive");
    if (!(tie_tolerance >= 0.0))
        throw std::invalid_argument("tie_tolerance must be non-negative");
    if (max_refine_cycles < 1)
        throw std::invalid_argument("max_refine_cycles must be at least 1");
}

SearchError::SearchError(int n, const std::string& what)
    : std::runtime_error("search failed for N=" + std::to_string(n) + ": " + what), n_(n) {}

namespace detail {

RefineOutcome refine_minimum(const Objective3& objective, Point3 start, double bracket, double tolerance,
                             int max_cycles) {
    RefineOutcome out{start, objective(start), 1, 0, {}};
    const double line_tolerance = std::max(tolerance * 0.1, 1e-14);
    for (int cycle = 0; cycle < max_cycles; ++cycle) {
        ++out.cycles;
        double largest_step = 0.0;
        for (std::size_t axis = 0; axis < out.point.size(); ++axis) {
            Point3 probe = out.point;
            auto along = [&](double x) {
                probe[axis] = x;
                return objective(probe);
            };
            const double x0 = out.point[axis];
            const LineMinimum line = golden_section_minimize(along, x0 - bracket, x0 + bracket, line_tolerance);
            out.evaluations += line.evaluations;
            if (line.value < out.value) {
                largest_step = std::max(largest_step, std::abs(line.x - x0));
                out.point[axis] = line.x;
                out.value = line.value;
            }
            out.trace.push_back(out.value);
        }
        if (largest_step < tolerance)
            break;
    }
    return out;
}

}  // namespace detail

namespace {

struct GridCell {
    double value;
    std::array<int, 3> index;

    bool operator<(const GridCell& other) const {
        return std::tie(value, index) < std::tie(other.value, other.index);
    }
};

unsigned worker_count(const SearchConfig& config) {
    unsigned n = config.threads;
    if (n == 0)
        n = std::max(1u, std::thread::hardware_concurrency());
    return std::min<unsigned>(n, static_cast<unsigned>(config.grid_resolution));
}

// Best `keep` cells of the slab first_index in [begin, end), sorted.
std::vector<GridCell> scan_slab(const detail::Objective3& objective, int resolution, int begin, int end,
                                std::size_t keep) {
    const double step = kTwoPi / resolution;
    std::vector<GridCell> best;
    best.reserve(keep + 1);
    for (int i = begin; i < end; ++i) {
        for (int j = 0; j < resolution; ++j) {
            for (int k = 0; k < resolution; ++k) {
                GridCell cell{objective({i * step, j * step, k * step}), {i, j, k}};
                if (best.size() == keep && !(cell < best.back()))
                    continue;
                best.insert(std::upper_bound(best.begin(), best.end(), cell), cell);
                if (best.size() > keep)
                    best.pop_back();
            }
        }
    }
    return best;
}

// Top cells over the whole grid. The result does not depend on the worker
// count: slabs are merged by (value, index), never by arrival.
std::vector<GridCell> scan_grid(const detail::Objective3& objective, const SearchConfig& config) {
    const int res = config.grid_resolution;
    const std::size_t keep = static_cast<std::size_t>(config.refine_candidates);
    if (keep == 0)
        return {};
    const unsigned workers = worker_count(config);

    std::vector<std::vector<GridCell>> partial(workers);
    auto slab_begin = [&](unsigned w) { return static_cast<int>(static_cast<long long>(res) * w / workers); };
    if (workers == 1) {
        partial[0] = scan_slab(objective, res, 0, res, keep);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&, w] { partial[w] = scan_slab(objective, res, slab_begin(w), slab_begin(w + 1), keep); });
        for (auto& t : pool)
            t.join();
    }

    std::vector<GridCell> merged;
    for (const auto& p : partial)
        merged.insert(merged.end(), p.begin(), p.end());
    std::sort(merged.begin(), merged.end());
    if (merged.size() > keep)
        merged.resize(keep);
    return merged;
}

struct Refined {
    double objective;  // minimized quantity
    PhaseTuple4 phases;
};

InequalityResult run_search(const EmitterChain& chain, InequalityKind kind, const SearchConfig& config) {
    config.validate();
    const BellFunctional functional(kind, chain);
    // CH74 is maximized, HBW minimized; internally everything is a minimum.
    const double sign = kind == InequalityKind::Ch74 ? -1.0 : 1.0;
    const detail::Objective3 objective = [&](const detail::Point3& p) {
        return sign * functional.evaluate(0.0, p[0], p[1], p[2]);
    };

    const int res = config.grid_resolution;
    const double step = kTwoPi / res;
    std::uint64_t evaluations = static_cast<std::uint64_t>(res) * res * res;

    std::vector<detail::Point3> starts;
    for (const GridCell& cell : scan_grid(objective, config))
        starts.push_back({cell.index[0] * step, cell.index[1] * step, cell.index[2] * step});
    auto add_seed = [&](const PhaseTuple4& seed) {
        const PhaseTuple4 a = seed.anchored();
        starts.push_back({a[1], a[2], a[3]});
    };
    for (const PhaseTuple4& seed : config.seed_candidates)
        add_seed(seed);
    for (const PhaseTuple4& seed : candidate_phases(chain.size(), kind))
        add_seed(seed);

    std::vector<Refined> refined;
    refined.reserve(starts.size());
    for (const detail::Point3& start : starts) {
        const detail::RefineOutcome r =
            detail::refine_minimum(objective, start, step, config.refine_tolerance, config.max_refine_cycles);
        evaluations += r.evaluations;
        const PhaseTuple4 phases(0.0, r.point[0], r.point[1], r.point[2]);
        refined.push_back({sign * functional(phases), phases});
        ++evaluations;
    }
    if (refined.empty())
        throw SearchError(chain.size(), "no candidates to refine");

    double best = refined.front().objective;
    for (const Refined& r : refined) {
        if (!std::isfinite(r.objective))
            throw SearchError(chain.size(), "objective is not finite");
        best = std::min(best, r.objective);
    }
    const Refined* winner = nullptr;
    for (const Refined& r : refined) {
        if (r.objective > best + config.tie_tolerance)
            continue;
        if (winner == nullptr || r.phases < winner->phases)
            winner = &r;
    }

    InequalityResult result;
    result.n = chain.size();
    result.kind = kind;
    result.extremum = sign * winner->objective;
    result.phases = winner->phases;
    result.evaluations = evaluations;
    result.config = config;
    return result;
}

}  // namespace

InequalityResult maximize_ch74(const EmitterChain& chain, const SearchConfig& config) {
    return run_search(chain, InequalityKind::Ch74, config);
}

InequalityResult minimize_hbw(const EmitterChain& chain, const SearchConfig& config) {
    return run_search(chain, InequalityKind::Hbw, config);
}

InequalityResult search_extremum(const EmitterChain& chain, InequalityKind kind, const SearchConfig& config) {
    return run_search(chain, kind, config);
}

std::vector<PhaseTuple4> candidate_phases(int n, InequalityKind kind) {
    if (n < 2)
        throw std::invalid_argument("candidate_phases needs n >= 2");
    std::vector<PhaseTuple4> out;
    if (kind != InequalityKind::Ch74)
        return out;
    if (n == 2) {
        // the pi/4 optimum and its mirror image under delta -> -delta
        out.emplace_back(0.0, kPi / 4, kPi / 2, 3 * kPi / 4);
        out.emplace_back(0.0, 7 * kPi / 4, 3 * kPi / 2, 5 * kPi / 4);
    } else {
        for (int mask = 0; mask < 8; ++mask)
            out.emplace_back(0.0, (mask & 4) ? kPi : 0.0, (mask & 2) ? kPi : 0.0, (mask & 1) ? kPi : 0.0);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<InequalityResult> sweep(int n_min, int n_max, InequalityKind kind, const SearchConfig& config) {
    if (n_min < 2 || n_max < n_min)
        throw std::invalid_argument("sweep needs 2 <= n_min <= n_max");
    std::vector<InequalityResult> results;
    for (int n = n_min; n <= n_max; ++n) {
        try {
            results.push_back(search_extremum(EmitterChain(n), kind, config));
        } catch (const SearchError&) {
            throw;
        } catch (const std::exception& e) {
            throw SearchError(n, e.what());
        }
    }
    return results;
}

}  // namespace photon_bell
