#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "diskgeom/scene.hpp"

namespace diskgeom {

struct JobSpec {
    enum class Command { Analyze, Symmetrize, Normalize, Midpoint, Render };
    Command command = Command::Analyze;

    std::optional<std::array<double, 4>> angles_deg;  // normalized to [0, 360)
    std::optional<std::array<cplx, 4>> points;
    std::optional<cplx> x, y;

    std::string figure;
    std::string out_path;
    int size = 800;
    std::uint64_t seed = kDefaultSeed;
    double tol = 1e-9;

    /// The validated quadruple, when the command takes one.
    OrderedQuadruple quadruple() const;
};

/// Parse the argv tail (no program name). Throws UsageError for malformed
/// flags and ValidationError for inputs violating a type invariant.
JobSpec parse_job(const std::vector<std::string>& args);

struct RunOutput {
    std::string json;               // machine-readable result, printed to stdout
    std::optional<std::string> svg; // present for render
    std::string svg_path;
};

RunOutput run_job(const JobSpec& spec);

}  // namespace diskgeom
