#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

namespace amix::cli {

enum class Format { json, csv, table };

struct RunConfig {
    std::string command;
    std::string graph;   // graph spec, see parse_graph_spec
    std::string graph2;  // cartesian-check only
    std::optional<std::string> dist;
    std::optional<std::string> dist1;
    std::optional<std::string> dist2;
    std::optional<std::string> family;
    double time = 0.0;
    int vertex = 0;
    std::size_t count = 200000;
    std::uint64_t seed = 42;
    std::optional<double> tol;
    std::optional<Format> format;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitInputError = 2;

struct RunResult {
    int exit_code = kExitOk;
    nlohmann::ordered_json report;
    std::string text;  // rendered in the requested format
    std::string error;
};

/// Dispatch one subcommand. Library errors are caught and mapped to exit 2.
RunResult run(const RunConfig& config);

/// Tolerance for verify-uniform: --tol, then $AMIX_TOL, then the library default.
double verification_tolerance(const RunConfig& config);

}  // namespace amix::cli
