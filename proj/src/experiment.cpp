#include "qlgraph/experiment.hpp"

#include <array>
#include <cmath>
#include <string>

#include "qlgraph/error.hpp"
#include "qlgraph/spectrum.hpp"

namespace qlgraph {

namespace {

[[noreturn]] void invalid(const std::string& field, const std::string& why) {
    throw InvalidParameter(field + ": " + why);
}

Graph make_basis(const FactorSpec& f, RngSeed seed) {
    switch (f.family) {
        case BasisFamily::cycle: return cycle_graph(f.n);
        case BasisFamily::random_regular: return d_regular_random(f.n, f.d, seed.with_stream(Stream::graph_generation));
    }
    throw InvalidParameter("unknown basis family");
}

Graph with_deletions(const Graph& base, const FactorSpec& f, RngSeed seed) {
    return delete_random_edges(base, f.deletions, seed.with_stream(Stream::edge_deletion));
}

AdjacencyMatrix disordered(const Graph& g, double sigma, RngSeed seed) {
    return apply_diagonal_disorder(adjacency(g), sigma, seed.with_stream(Stream::disorder));
}

}  // namespace

std::size_t ExperimentDescriptor::factor_dim(std::size_t k) const {
    const auto& f = factors.at(k);
    return pipeline == PipelineKind::qlbit_product ? 2 * f.n : f.n;
}

std::size_t ExperimentDescriptor::product_dim() const {
    std::size_t total = 1;
    for (std::size_t k = 0; k < factors.size(); ++k) {
        const std::size_t n = factor_dim(k);
        if (n != 0 && total > kDefaultComposeCap / n) return kDefaultComposeCap + 1;
        total *= n;
    }
    return total;
}

const char* to_string(PipelineKind kind) {
    switch (kind) {
        case PipelineKind::single_graph: return "single-graph";
        case PipelineKind::d_regular_product: return "d-regular-product";
        case PipelineKind::qlbit_product: return "qlbit-product";
    }
    return "?";
}

const char* to_string(BasisFamily family) {
    switch (family) {
        case BasisFamily::cycle: return "cycle";
        case BasisFamily::random_regular: return "random-regular";
    }
    return "?";
}

const char* to_string(FactorSharing sharing) {
    switch (sharing) {
        case FactorSharing::independent: return "independent";
        case FactorSharing::identical: return "identical";
        case FactorSharing::shared_base: return "shared-base";
    }
    return "?";
}

PipelineKind parse_pipeline(std::string_view s) {
    if (s == "single-graph") return PipelineKind::single_graph;
    if (s == "d-regular-product") return PipelineKind::d_regular_product;
    if (s == "qlbit-product") return PipelineKind::qlbit_product;
    invalid("pipeline", "unknown kind '" + std::string(s) + "'");
}

BasisFamily parse_family(std::string_view s) {
    if (s == "cycle") return BasisFamily::cycle;
    if (s == "random-regular") return BasisFamily::random_regular;
    invalid("family", "unknown basis family '" + std::string(s) + "'");
}

FactorSharing parse_sharing(std::string_view s) {
    if (s == "independent") return FactorSharing::independent;
    if (s == "identical") return FactorSharing::identical;
    if (s == "shared-base") return FactorSharing::shared_base;
    invalid("factor_sharing", "unknown mode '" + std::string(s) + "'");
}

void validate(const ExperimentDescriptor& d) {
    if (d.name.empty()) invalid("name", "must not be empty");
    if (d.factors.empty()) invalid("factors", "at least one factor is required");
    if (d.pipeline == PipelineKind::single_graph && d.factors.size() != 1) {
        invalid("factors", "single-graph pipeline takes exactly one factor");
    }
    if (d.samples == 0) invalid("samples", "must be at least 1");
    if (d.bins == 0) invalid("bins", "must be at least 1");
    if (!(d.sigma >= 0.0) || !std::isfinite(d.sigma)) invalid("sigma", "must be finite and non-negative");

    const bool qlbit = d.pipeline == PipelineKind::qlbit_product;
    for (std::size_t k = 0; k < d.factors.size(); ++k) {
        const auto& f = d.factors[k];
        const std::string at = "factors[" + std::to_string(k) + "].";
        std::size_t edges = 0;
        if (f.family == BasisFamily::cycle) {
            if (f.n < 3) invalid(at + "n", "cycle needs n >= 3");
            if (f.d != 2) invalid(at + "d", "cycle graphs have d = 2");
            edges = f.n;
        } else {
            if (f.d == 0) invalid(at + "d", "must be positive");
            if (f.n <= f.d) invalid(at + "n", "must exceed d");
            if ((f.n * f.d) % 2 != 0) invalid(at + "d", "n*d must be even");
            edges = f.n * f.d / 2;
        }
        if (f.deletions > edges) invalid(at + "deletions", "exceeds the edge count " + std::to_string(edges));
        if (qlbit) {
            if (!(f.p >= 0.0 && f.p <= 1.0)) invalid(at + "p", "must be in [0, 1]");
            if (f.sign != 1 && f.sign != -1) invalid(at + "sign", "must be +1 or -1");
        } else {
            if (f.p != 0.0) invalid(at + "p", "coupling only applies to qlbit-product");
            if (f.sign != 1) invalid(at + "sign", "coupling only applies to qlbit-product");
        }
    }
    if (d.sharing != FactorSharing::independent) {
        for (std::size_t k = 1; k < d.factors.size(); ++k) {
            if (!(d.factors[k] == d.factors[0])) {
                invalid("factor_sharing", std::string(to_string(d.sharing)) + " requires all factors to be equal");
            }
        }
    }
    if (d.product_dim() > kDefaultComposeCap) {
        invalid("factors", "composed spectrum would exceed " + std::to_string(kDefaultComposeCap) + " eigenvalues");
    }
}

RngSeed sample_seed(std::uint64_t master_seed, std::size_t sample_index) {
    return RngSeed(master_seed).child(sample_index);
}

SampleFactors realize_sample(const ExperimentDescriptor& d, std::size_t sample_index) {
    validate(d);
    const RngSeed sample = sample_seed(d.master_seed, sample_index);
    const std::size_t count = d.factors.size();
    const bool qlbit = d.pipeline == PipelineKind::qlbit_product;
    // Base graphs of a shared-base sample are drawn from a seed no factor uses.
    const RngSeed base_seed = sample.child(count);
    const std::size_t distinct = d.sharing == FactorSharing::identical ? 1 : count;

    SampleFactors out;
    for (std::size_t k = 0; k < distinct; ++k) {
        const auto& f = d.factors[k];
        const RngSeed factor = sample.child(k);
        const bool shared = d.sharing == FactorSharing::shared_base;
        if (!qlbit) {
            const Graph base = make_basis(f, shared ? base_seed : factor);
            Graph g = with_deletions(base, f, factor);
            out.connected.push_back(g.is_connected());
            out.matrices.push_back(disordered(g, d.sigma, factor));
            out.graphs.push_back(std::move(g));
            out.emergent.push_back({0});
        } else {
            std::array<Graph, 2> bases{Graph(1), Graph(1)};
            for (std::size_t b = 0; b < 2; ++b) {
                const RngSeed basis_seed = (shared ? base_seed : factor).child(b);
                const Graph base = make_basis(f, basis_seed);
                bases[b] = with_deletions(base, f, factor.child(b));
                out.connected.push_back(bases[b].is_connected());
            }
            QLBit q = couple(bases[0], bases[1], f.p, f.sign, factor.with_stream(Stream::coupling));
            out.matrices.push_back(disordered(q.composite(), d.sigma, factor));
            out.qlbits.push_back(std::move(q));
            out.emergent.push_back({0, 1});
        }
    }
    for (std::size_t k = distinct; k < count; ++k) {
        if (!qlbit) {
            out.graphs.push_back(out.graphs[0]);
            out.connected.push_back(out.connected[0]);
        } else {
            out.qlbits.push_back(out.qlbits[0]);
            out.connected.push_back(out.connected[0]);
            out.connected.push_back(out.connected[1]);
        }
        out.matrices.push_back(out.matrices[0]);
        out.emergent.push_back(out.emergent[0]);
    }
    return out;
}

SampleSpectrum compute_sample(const ExperimentDescriptor& d, std::size_t sample_index, bool want_vectors) {
    SampleFactors factors = realize_sample(d, sample_index);
    std::vector<Spectrum> spectra;
    const bool identical = d.sharing == FactorSharing::identical;
    for (std::size_t k = 0; k < factors.matrices.size(); ++k) {
        if (identical && k > 0) {
            spectra.push_back(spectra[0]);
        } else {
            spectra.push_back(eigendecompose(factors.matrices[k], want_vectors));
        }
    }
    ComposedSpectrum composed = compose_spectra(std::move(spectra));
    return {std::move(factors), std::move(composed)};
}

std::vector<std::string> bundled_experiment_names() {
    return {"fig2a", "fig2b", "fig2c", "fig3", "fig4a", "fig4b", "fig4c", "fig4d", "fig4e", "fig4f"};
}

ExperimentDescriptor bundled_experiment(std::string_view name) {
    ExperimentDescriptor d;
    d.name = std::string(name);
    d.bins = 200;
    d.master_seed = 20240501;

    const FactorSpec c5{BasisFamily::cycle, 5, 2, 0, 0.0, 1};
    const auto cycles = [&](std::size_t n_factors, const char* text) {
        d.description = text;
        d.pipeline = PipelineKind::d_regular_product;
        d.factors.assign(n_factors, c5);
        d.sharing = FactorSharing::identical;
        d.samples = 1;
    };
    const auto qlbits = [&](std::size_t n_factors, std::size_t n, std::size_t deg, double p, FactorSharing sharing,
                            std::size_t samples, const char* text) {
        d.description = text;
        d.pipeline = PipelineKind::qlbit_product;
        d.factors.assign(n_factors, FactorSpec{BasisFamily::random_regular, n, deg, 0, p, 1});
        d.sharing = sharing;
        d.samples = samples;
    };

    if (name == "fig2a") {
        cycles(2, "C5 [] C5 spectrum");
    } else if (name == "fig2b") {
        cycles(3, "C5 [] C5 [] C5 spectrum");
    } else if (name == "fig2c") {
        cycles(4, "C5 [] C5 [] C5 [] C5 spectrum");
    } else if (name == "fig3") {
        d.description = "G1 [] G2 [] G3 of 8-regular graphs on 12 vertices with 4 edges deleted, sigma = 2.0";
        d.pipeline = PipelineKind::d_regular_product;
        d.factors.assign(3, FactorSpec{BasisFamily::random_regular, 12, 8, 4, 0.0, 1});
        d.sharing = FactorSharing::shared_base;
        d.sigma = 2.0;
        d.samples = 100;
    } else if (name == "fig4a") {
        qlbits(1, 20, 15, 0.2, FactorSharing::independent, 200, "one QL-bit, n = 20, d = 15, p = 0.2 (ensemble)");
    } else if (name == "fig4b") {
        qlbits(2, 20, 15, 0.2, FactorSharing::identical, 1, "product of two identical QL-bits, n = 20, d = 15, p = 0.2");
    } else if (name == "fig4c") {
        qlbits(2, 20, 15, 0.2, FactorSharing::identical, 100,
               "product of two identical QL-bits, n = 20, d = 15, p = 0.2 (ensemble)");
    } else if (name == "fig4d") {
        qlbits(3, 10, 9, 0.1, FactorSharing::identical, 1, "product of three identical QL-bits, n = 10, d = 9, p = 0.1");
    } else if (name == "fig4e") {
        qlbits(3, 12, 11, 0.1, FactorSharing::independent, 50,
               "product of three non-identical QL-bits, n = 12, d = 11, p = 0.1 (ensemble)");
    } else if (name == "fig4f") {
        qlbits(4, 7, 6, 0.1, FactorSharing::identical, 1, "product of four identical QL-bits, n = 7, d = 6, p = 0.1");
    } else {
        throw InvalidParameter("unknown bundled experiment '" + std::string(name) + "'");
    }
    return d;
}

}  // namespace qlgraph
