#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "qlgraph/experiment.hpp"
#include "qlgraph/io.hpp"

namespace qlgraph {

// Single-field overrides applied on top of a descriptor file.
struct RunOverrides {
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out_dir;
    std::optional<std::size_t> samples;
};

ExperimentDescriptor apply_overrides(ExperimentDescriptor d, const RunOverrides& overrides);

// `source` is a bundled experiment name or a path to a descriptor JSON file.
ExperimentDescriptor load_descriptor(const std::string& source);

struct RunResult {
    std::vector<std::filesystem::path> artifacts;
    Json summary;
};

// Validates, runs the pipeline and writes into d.output_dir:
//   <name>.spectrum.csv     spectrum of sample 0
//   <name>.histogram.csv    ensemble histogram over all samples
//   <name>.histogram.json   descriptor, seeds and histogram range
//   <name>.summary.json     gap, isolation and label counts for sample 0
//   <name>.projection.json  alpha coefficients of the all-emergent states
//                           (qlbit-product only)
// Files are written to a temporary directory and renamed into place only
// after everything succeeded.
RunResult run_experiment(const ExperimentDescriptor& d);

}  // namespace qlgraph
