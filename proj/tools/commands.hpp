#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace photon_bell::cli {

enum ExitCode : int {
    kSuccess = 0,
    kVerificationFailure = 1,
    kArgumentError = 2,
    kIoError = 3,
    kSearchFailure = 4,
};

struct ArgumentError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Where a command writes its data. An empty path means standard output;
/// otherwise a manifest goes next to the file as <path>.manifest.json.
struct OutputTarget {
    std::string path;
    std::string command_line;
};

struct G2Options {
    int n = 2;
    bool fig2 = false;
    int points = 256;
    double delta1 = 0.0;
    double delta2 = 0.0;
    double theta1 = 0.0;  // defaulted to pi/4 by the parser
    double theta2 = 0.0;
    bool removed1 = false;
    bool removed2 = false;
    bool degrees = false;
};

struct SearchOptions {
    std::string kind;   // "ch74" or "hbw"
    std::string range;  // "N" or "A..B"
    int grid = 64;
    int candidates = 16;
    double refine_tol = 1e-9;
    std::string format = "csv";
};

struct VerifyOptions {
    long long samples = 100000;
    unsigned long long seed = 42;
    bool heaviside_at_zero = false;
};

int run_g2(const G2Options& opts, const OutputTarget& out);
int run_visibility(int n_max, const OutputTarget& out);
int run_search(const SearchOptions& opts, const OutputTarget& out);
int run_verify(const VerifyOptions& opts);

/// "7" -> (7, 7), "2..10" -> (2, 10). Throws ArgumentError.
std::pair<int, int> parse_range(const std::string& text);

/// Worker count from PHOTON_BELL_THREADS (unset or 0 means every core).
unsigned threads_from_environment();

/// printf("%.12g")
std::string format_number(double value);

}  // namespace photon_bell::cli
