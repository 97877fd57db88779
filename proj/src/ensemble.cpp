#include "qlgraph/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace qlgraph {

namespace detail {

void rethrow_with_sample(std::exception_ptr error, std::size_t sample) {
    const std::string where = "sample " + std::to_string(sample) + ": ";
    try {
        std::rethrow_exception(error);
    } catch (const GenerationFailure& e) {
        throw GenerationFailure(where + e.what(), e.attempts());
    } catch (const InvalidParameter& e) {
        throw InvalidParameter(where + e.what());
    } catch (const InvalidInput& e) {
        throw InvalidInput(where + e.what());
    } catch (const SizeCapExceeded& e) {
        throw SizeCapExceeded(where + e.what());
    } catch (const NumericalFailure& e) {
        throw NumericalFailure(where + e.what());
    }
}

}  // namespace detail

EnsembleHistogram histogram(const std::vector<std::vector<double>>& per_sample_values, std::size_t bins) {
    if (bins == 0) throw InvalidParameter("histogram needs at least one bin");
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    std::size_t total = 0;
    for (const auto& values : per_sample_values) {
        for (double v : values) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        total += values.size();
    }
    if (total == 0) throw InvalidParameter("histogram of an empty ensemble");

    EnsembleHistogram h;
    h.min_value = lo;
    h.max_value = hi;
    h.n_samples = per_sample_values.size();
    h.dim = per_sample_values.front().size();
    const double left = lo - 0.5;
    const double right = hi + 0.5;
    const double width = (right - left) / static_cast<double>(bins);
    h.bin_edges.resize(bins + 1);
    for (std::size_t i = 0; i <= bins; ++i) h.bin_edges[i] = left + width * static_cast<double>(i);
    h.bin_edges.back() = right;
    h.counts.assign(bins, 0);
    for (const auto& values : per_sample_values) {
        for (double v : values) {
            auto bin = static_cast<std::size_t>(std::floor((v - left) / width));
            bin = std::min(bin, bins - 1);
            ++h.counts[bin];
        }
    }
    return h;
}

EnsembleHistogram ensemble_spectrum(const ExperimentDescriptor& descriptor, std::size_t n_samples, std::size_t bins,
                                    std::uint64_t master_seed, unsigned threads) {
    ExperimentDescriptor run = descriptor;
    run.samples = n_samples;
    run.bins = bins;
    run.master_seed = master_seed;
    validate(run);

    auto values = map_samples<std::vector<double>>(
        n_samples, [&](std::size_t i) { return compute_sample(run, i).composed.values(); }, threads);

    EnsembleHistogram h = histogram(values, bins);
    h.parameters = run;
    for (std::size_t i = 0; i < n_samples; ++i) h.sample_seeds.push_back(sample_seed(master_seed, i).seed);
    return h;
}

}  // namespace qlgraph
