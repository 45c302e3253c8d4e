#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"
#include "photon_bell/emitter_model.hpp"
#include "photon_bell/extremum_search.hpp"
#include "verify_suites.hpp"

namespace photon_bell::cli {

int run_verify(const VerifyOptions& opts) {
    if (opts.samples < 1)
        throw ArgumentError("--samples must be at least 1");
    const auto convention =
        opts.heaviside_at_zero ? HeavisideConvention::OneAtOrigin : HeavisideConvention::ZeroAtOrigin;
    bool all = true;
    for (const SuiteResult& r : run_property_suites(opts.samples, opts.seed, convention)) {
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
        all = all && r.passed;
    }
    std::cout << (all ? "all suites passed" : "some suites failed") << std::endl;
    return all ? kSuccess : kVerificationFailure;
}

}  // namespace photon_bell::cli

namespace {

std::string join_argv(int argc, char** argv) {
    std::string s;
    for (int i = 0; i < argc; ++i) {
        if (i)
            s += ' ';
        s += argv[i];
    }
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace photon_bell::cli;

    CLI::App app{"Two-photon correlations and Bell-type inequality searches for N emitters", "photon-bell"};
    app.set_version_flag("--version", std::string(PHOTON_BELL_VERSION));
    app.require_subcommand(1);

    OutputTarget out;
    out.command_line = join_argv(argc, argv);

    G2Options g2;
    g2.theta1 = photon_bell::kPi / 4;
    g2.theta2 = photon_bell::kPi / 4;
    auto* g2_cmd = app.add_subcommand("g2", "G2 from the closed form and the brute-force oracle");
    g2_cmd->add_option("--n", g2.n, "emitter count (>= 2)")->required();
    g2_cmd->add_flag("--fig2", g2.fig2, "sweep delta1 over [0, 2pi) with delta2 = -delta1");
    g2_cmd->add_option("--points", g2.points, "rows in --fig2 mode")->capture_default_str();
    g2_cmd->add_option("--delta1", g2.delta1, "phase at detector 1");
    g2_cmd->add_option("--delta2", g2.delta2, "phase at detector 2");
    g2_cmd->add_option("--theta1", g2.theta1, "polarizer angle at detector 1")->capture_default_str();
    g2_cmd->add_option("--theta2", g2.theta2, "polarizer angle at detector 2")->capture_default_str();
    g2_cmd->add_flag("--unpolarized1", g2.removed1, "remove the polarizer at detector 1");
    g2_cmd->add_flag("--unpolarized2", g2.removed2, "remove the polarizer at detector 2");
    g2_cmd->add_flag("--degrees", g2.degrees, "read angles in degrees");
    g2_cmd->add_option("--out", out.path, "output file (default: stdout)");

    int n_max = 11;
    auto* vis_cmd = app.add_subcommand("visibility", "interference visibility for n = 2..n-max");
    vis_cmd->add_option("--n-max", n_max, "largest emitter count")->capture_default_str();
    vis_cmd->add_option("--out", out.path, "output file (default: stdout)");

    SearchOptions search;
    auto add_search = [&](const std::string& name, const std::string& description) {
        auto* cmd = app.add_subcommand(name, description);
        cmd->add_option("--n", search.range, "emitter count N or range A..B")->required();
        cmd->add_option("--grid", search.grid, "grid points per free phase")->capture_default_str();
        cmd->add_option("--candidates", search.candidates, "grid cells to refine")->capture_default_str();
        cmd->add_option("--refine-tol", search.refine_tol, "refinement tolerance in radians")->capture_default_str();
        cmd->add_option("--format", search.format, "csv or json")->capture_default_str();
        cmd->add_option("--out", out.path, "output file (default: stdout)");
        return cmd;
    };
    auto* ch74_cmd = add_search("ch74", "maximize the CH74 functional S_N");
    auto* hbw_cmd = add_search("hbw", "minimize the HBW functional T_N");

    VerifyOptions verify;
    auto* verify_cmd = app.add_subcommand("verify", "run the property suites");
    verify_cmd->add_option("--samples", verify.samples, "samples for the scalar suite")->capture_default_str();
    verify_cmd->add_option("--seed", verify.seed, "random seed")->capture_default_str();
    verify_cmd->add_flag("--heaviside-at-zero", verify.heaviside_at_zero,
                         "use Theta(0) = 1 in the orthogonal series (expected to fail)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kSuccess : kArgumentError;
    }

    try {
        if (*g2_cmd)
            return run_g2(g2, out);
        if (*vis_cmd)
            return run_visibility(n_max, out);
        if (*ch74_cmd) {
            search.kind = "ch74";
            return run_search(search, out);
        }
        if (*hbw_cmd) {
            search.kind = "hbw";
            return run_search(search, out);
        }
        if (*verify_cmd)
            return run_verify(verify);
    } catch (const ArgumentError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kArgumentError;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kIoError;
    } catch (const photon_bell::SearchError& e) {
        std::cerr << "error: search failed at N=" << e.n() << ": " << e.what() << '\n';
        return kSearchFailure;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kArgumentError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kSearchFailure;
    }
    return kArgumentError;
}
