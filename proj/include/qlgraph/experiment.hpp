#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qlgraph/classify.hpp"
#include "qlgraph/graph.hpp"
#include "qlgraph/product.hpp"
#include "qlgraph/qlbit.hpp"
#include "qlgraph/rng.hpp"

namespace qlgraph {

enum class PipelineKind { single_graph, d_regular_product, qlbit_product };
enum class BasisFamily { cycle, random_regular };

// How the N factors of one sample relate to each other.
enum class FactorSharing {
    independent,  // every factor drawn from its own seed
    identical,    // factor 0 drawn once and reused N times
    shared_base,  // one base graph per sample; deletions/coupling/disorder drawn per factor
};

struct FactorSpec {
    BasisFamily family = BasisFamily::random_regular;
    std::size_t n = 0;
    std::size_t d = 0;          // implied 2 for cycles
    std::size_t deletions = 0;  // edges removed from each basis graph
    double p = 0.0;             // coupling probability (qlbit-product only)
    int sign = 1;               // coupling sign (qlbit-product only)

    friend bool operator==(const FactorSpec&, const FactorSpec&) = default;
};

struct ExperimentDescriptor {
    std::string name;
    std::string description;
    PipelineKind pipeline = PipelineKind::single_graph;
    std::vector<FactorSpec> factors;
    FactorSharing sharing = FactorSharing::independent;
    double sigma = 0.0;
    std::size_t samples = 1;
    std::size_t bins = 200;
    std::uint64_t master_seed = 0;
    std::string output_dir = ".";

    std::size_t factor_count() const noexcept { return factors.size(); }
    // Dimension of one factor (2n for a QL-bit) and of the whole product.
    std::size_t factor_dim(std::size_t k) const;
    std::size_t product_dim() const;

    friend bool operator==(const ExperimentDescriptor&, const ExperimentDescriptor&) = default;
};

const char* to_string(PipelineKind kind);
const char* to_string(BasisFamily family);
const char* to_string(FactorSharing sharing);
PipelineKind parse_pipeline(std::string_view s);
BasisFamily parse_family(std::string_view s);
FactorSharing parse_sharing(std::string_view s);

// Throws InvalidParameter naming the offending field. Runs before any
// computation.
void validate(const ExperimentDescriptor& d);

// One realization of the pipeline's factors.
struct SampleFactors {
    std::vector<Graph> graphs;       // basis-graph pipelines
    std::vector<QLBit> qlbits;       // qlbit-product
    std::vector<AdjacencyMatrix> matrices;  // factor adjacency incl. disorder
    EmergentIndexSets emergent;      // {0} per basis graph, {0, 1} per QL-bit
    std::vector<bool> connected;     // per basis graph (both bases for a QL-bit)
};

RngSeed sample_seed(std::uint64_t master_seed, std::size_t sample_index);

SampleFactors realize_sample(const ExperimentDescriptor& d, std::size_t sample_index);

struct SampleSpectrum {
    SampleFactors factors;
    ComposedSpectrum composed;
};

// Factor spectra composed into the product spectrum. With want_vectors the
// factor eigenvectors are kept for projection.
SampleSpectrum compute_sample(const ExperimentDescriptor& d, std::size_t sample_index, bool want_vectors = false);

std::vector<std::string> bundled_experiment_names();
// Throws InvalidParameter for an unknown name.
ExperimentDescriptor bundled_experiment(std::string_view name);

}  // namespace qlgraph
