#include "commands.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "photon_bell/closed_form.hpp"
#include "photon_bell/extremum_search.hpp"
#include "photon_bell/state_oracle.hpp"

namespace photon_bell::cli {

using nlohmann::json;

std::string format_number(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", value + 0.0);  // no "-0"
    return buf;
}

std::pair<int, int> parse_range(const std::string& text) {
    auto to_int = [&](const std::string& s) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(s, &used);
        } catch (const std::exception&) {
            throw ArgumentError("bad emitter count '" + text + "'");
        }
        if (used != s.size())
            throw ArgumentError("bad emitter count '" + text + "'");
        return v;
    };
    const auto dots = text.find("..");
    std::pair<int, int> r;
    if (dots == std::string::npos)
        r = {to_int(text), to_int(text)};
    else
        r = {to_int(text.substr(0, dots)), to_int(text.substr(dots + 2))};
    if (r.first < 2 || r.second < r.first)
        throw ArgumentError("emitter range must satisfy 2 <= min <= max, got '" + text + "'");
    return r;
}

unsigned threads_from_environment() {
    const char* env = std::getenv("PHOTON_BELL_THREADS");
    if (env == nullptr || *env == '\0')
        return 0;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 0)
        throw ArgumentError("PHOTON_BELL_THREADS must be a non-negative integer");
    return static_cast<unsigned>(v);
}

namespace {

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw IoError("cannot open '" + path + "' for writing");
    f << text;
    f.close();
    if (!f)
        throw IoError("failed writing '" + path + "'");
}

// Data goes to stdout or the target file; the manifest only accompanies files.
void emit(const OutputTarget& out, const std::string& data, json manifest) {
    if (out.path.empty()) {
        std::cout << data;
        std::cout.flush();
        return;
    }
    write_text(out.path, data);
    manifest["command"] = out.command_line;
    manifest["version"] = PHOTON_BELL_VERSION;
    manifest["timestamp"] = utc_timestamp();
    manifest["data_file"] = out.path;
    write_text(out.path + ".manifest.json", manifest.dump(2) + "\n");
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int run_g2(const G2Options& opts, const OutputTarget& out) {
    if (opts.n < 2)
        throw ArgumentError("--n must be at least 2");
    if (opts.fig2 && opts.points < 1)
        throw ArgumentError("--points must be at least 1");
    const double unit = opts.degrees ? kPi / 180.0 : 1.0;
    const EmitterChain chain(opts.n);
    const auto polarizer = [&](bool removed, double theta) {
        return removed ? PolarizerSetting::removed() : PolarizerSetting::angle(theta * unit);
    };
    const PolarizerSetting p1 = polarizer(opts.removed1, opts.theta1);
    const PolarizerSetting p2 = polarizer(opts.removed2, opts.theta2);

    std::ostringstream csv;
    csv << "delta1,delta,g2_closed,g2_oracle,abs_diff\n";
    auto row = [&](double delta1, double delta2) {
        const double closed = g2_closed_form(chain, DetectorSetting(delta1, p1), DetectorSetting(delta2, p2));
        const double oracle = g2_oracle_unpolarized(chain, delta1, delta2, p1, p2);
        csv << format_number(delta1) << ',' << format_number(delta2 - delta1) << ',' << format_number(closed)
            << ',' << format_number(oracle) << ',' << format_number(std::abs(closed - oracle)) << '\n';
    };
    if (opts.fig2) {
        // second detector mirrored: delta2 = -delta1
        for (int k = 0; k < opts.points; ++k) {
            const double d1 = k * kTwoPi / opts.points;
            row(d1, -d1);
        }
    } else {
        row(opts.delta1 * unit, opts.delta2 * unit);
    }

    json manifest;
    manifest["config"] = {{"n", opts.n},
                          {"fig2", opts.fig2},
                          {"points", opts.fig2 ? opts.points : 1},
                          {"polarizer1", p1.is_removed() ? json("removed") : json(p1.theta())},
                          {"polarizer2", p2.is_removed() ? json("removed") : json(p2.theta())}};
    manifest["notes"] = {"G2 values are absolute with E0 = 1 (arbitrary units in plots)."};
    emit(out, csv.str(), manifest);
    return kSuccess;
}

int run_visibility(int n_max, const OutputTarget& out) {
    if (n_max < 2)
        throw ArgumentError("--n-max must be at least 2");
    std::ostringstream csv;
    csv << "n,visibility_formula,visibility_numeric\n";
    for (int n = 2; n <= n_max; ++n)
        csv << n << ',' << format_number(visibility(n)) << ',' << format_number(visibility_numeric(EmitterChain(n)))
            << '\n';
    json manifest;
    manifest["config"] = {{"n_max", n_max}};
    manifest["notes"] = {"n = 1 is omitted: a two-photon correlation needs at least two emitters."};
    emit(out, csv.str(), manifest);
    return kSuccess;
}

int run_search(const SearchOptions& opts, const OutputTarget& out) {
    const InequalityKind kind = inequality_kind_from_string(opts.kind);
    const auto [n_min, n_max] = parse_range(opts.range);
    if (opts.format != "csv" && opts.format != "json")
        throw ArgumentError("--format must be csv or json");

    SearchConfig config;
    config.grid_resolution = opts.grid;
    config.refine_candidates = opts.candidates;
    config.refine_tolerance = opts.refine_tol;
    config.threads = threads_from_environment();
    try {
        config.validate();
    } catch (const std::invalid_argument& e) {
        throw ArgumentError(e.what());
    }

    const bool ch74 = kind == InequalityKind::Ch74;
    const std::string note =
        "extremum is normalized by C0^2/2; extremum_doubled = 2 * extremum, the scale on which the "
        "two-emitter maximum reads sqrt(2) - 1";

    std::vector<InequalityResult> results;
    json timings = json::array();
    for (int n = n_min; n <= n_max; ++n) {
        const auto t0 = std::chrono::steady_clock::now();
        try {
            results.push_back(search_extremum(EmitterChain(n), kind, config));
        } catch (const std::exception& e) {
            throw SearchError(n, e.what());
        }
        timings.push_back({{"n", n}, {"evaluations", results.back().evaluations}, {"wall_seconds", seconds_since(t0)}});
    }

    std::string data;
    if (opts.format == "json") {
        json records = json::array();
        for (const InequalityResult& r : results) {
            json rec;
            rec["n"] = r.n;
            rec["kind"] = std::string(to_string(r.kind));
            rec["extremum"] = r.extremum;
            if (ch74) {
                rec["extremum_doubled"] = 2 * r.extremum;
                rec["note"] = note;
            }
            rec["phases"] = r.phases.values();
            rec["evaluations"] = r.evaluations;
            rec["grid"] = r.config.grid_resolution;
            rec["refine_tol"] = r.config.refine_tolerance;
            records.push_back(rec);
        }
        data = records.dump(2) + "\n";
    } else {
        std::ostringstream csv;
        csv << "n,kind,extremum," << (ch74 ? "extremum_doubled," : "")
            << "phase1,phase2,phase3,phase4,evaluations,grid,refine_tol\n";
        for (const InequalityResult& r : results) {
            csv << r.n << ',' << to_string(r.kind) << ',' << format_number(r.extremum) << ',';
            if (ch74)
                csv << format_number(2 * r.extremum) << ',';
            for (double p : r.phases.values())
                csv << format_number(p) << ',';
            csv << r.evaluations << ',' << r.config.grid_resolution << ',' << format_number(r.config.refine_tolerance)
                << '\n';
        }
        data = csv.str();
    }

    json manifest;
    manifest["config"] = {{"kind", opts.kind},
                          {"n_min", n_min},
                          {"n_max", n_max},
                          {"grid_resolution", config.grid_resolution},
                          {"refine_candidates", config.refine_candidates},
                          {"refine_tolerance", config.refine_tolerance},
                          {"tie_tolerance", config.tie_tolerance},
                          {"format", opts.format}};
    manifest["results"] = timings;
    if (ch74)
        manifest["notes"] = {note};
    emit(out, data, manifest);
    return kSuccess;
}

}  // namespace photon_bell::cli
