#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qlgraph/experiment.hpp"

namespace qlgraph {

struct EnsembleHistogram {
    std::vector<double> bin_edges;      // bins + 1, strictly increasing
    std::vector<std::uint64_t> counts;  // bins
    std::size_t n_samples = 0;
    std::size_t dim = 0;                // eigenvalues per sample
    double min_value = 0.0;
    double max_value = 0.0;
    ExperimentDescriptor parameters;    // samples/bins/master_seed as actually run
    std::vector<std::uint64_t> sample_seeds;
};

// Uniform bins over [min - 0.5, max + 0.5] of all values.
EnsembleHistogram histogram(const std::vector<std::vector<double>>& per_sample_values, std::size_t bins);

// Runs the descriptor's pipeline n_samples times (sample i seeded from
// sample_seed(master_seed, i)) and histograms every composed eigenvalue.
// Samples are computed on worker threads; the result does not depend on the
// thread count. A failing sample is rethrown with its index in the message.
EnsembleHistogram ensemble_spectrum(const ExperimentDescriptor& descriptor, std::size_t n_samples, std::size_t bins,
                                    std::uint64_t master_seed, unsigned threads = 0);

// Parallel map of fn(sample_index) over [0, n); results in index order.
template <class T, class Fn>
std::vector<T> map_samples(std::size_t n, Fn&& fn, unsigned threads = 0);

}  // namespace qlgraph

#include "qlgraph/detail/map_samples.hpp"
