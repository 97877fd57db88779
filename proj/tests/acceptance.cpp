// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>

#include <fmt/format.h>

#include "oracles.hpp"
#include "qlgraph/classify.hpp"
#include "qlgraph/experiment.hpp"
#include "qlgraph/product.hpp"
#include "qlgraph/projection.hpp"
#include "qlgraph/qlbit.hpp"
#include "qlgraph/runner.hpp"

using namespace qlgraph;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

double rel(double got, double want) {
    return std::abs(got - want) / std::abs(want);
}

Outcome c1_cycle_spectrum() {
    const Spectrum s = eigendecompose(adjacency(cycle_graph(5)));
    const double err = oracle::max_abs_diff(s.eigenvalues(), oracle::cycle_spectrum(5));
    const double gap = spectral_gap(s);
    const double quoted = std::round(gap * 100.0) / 100.0;
    const bool pass = err <= 1e-6 && std::abs(gap - 1.382) <= 1e-3 && quoted == 1.38;
    return {pass, fmt::format("max|lambda - 2cos(2pi k/5)| = {:.2e}; gap = {:.6f}, |gap - 1.382| = {:.1e}, "
                              "rounds to {:.2f} (|gap - 1.38| = {:.1e})",
                              err, gap, std::abs(gap - 1.382), quoted, std::abs(gap - 1.38))};
}

Outcome c2_product_oracle() {
    int pairs = 0;
    double worst = 0.0;
    for (std::uint64_t s = 0; pairs < 24; ++s) {
        Rng r{RngSeed(s, Stream::graph_generation)};
        const std::size_t n1 = 4 + r.uniform_below(17);
        const std::size_t n2 = 4 + r.uniform_below(17);
        if (n1 * n2 > 400) continue;
        auto draw = [&](std::size_t n, std::uint64_t salt) {
            std::size_t d = 2 + r.uniform_below(n - 2);
            if ((n * d) % 2) --d;
            Graph g = d_regular_random(n, d, RngSeed(s * 1000 + salt));
            g = delete_random_edges(g, r.uniform_below(3), RngSeed(s * 1000 + salt, Stream::edge_deletion));
            return apply_diagonal_disorder(adjacency(g), (s % 2) ? 0.5 : 0.0, RngSeed(s * 1000 + salt, Stream::disorder));
        };
        const AdjacencyMatrix a = draw(n1, 1);
        const AdjacencyMatrix b = draw(n2, 2);
        const auto explicit_spec = eigendecompose(kronecker_sum_adjacency(a, b));
        const auto composed = compose_spectra({eigendecompose(a), eigendecompose(b)});
        worst = std::max(worst, oracle::max_abs_diff(explicit_spec.eigenvalues(), composed.values()));
        ++pairs;
    }
    return {worst <= 1e-8, fmt::format("{} random pairs (dim <= 400, deletions and disorder mixed in), max deviation {:.2e}",
                                       pairs, worst)};
}

Outcome c3_gap_preservation() {
    const Graph c5 = cycle_graph(5);
    const double gap = spectral_gap(eigendecompose(adjacency(c5)));
    double worst = 0.0;
    std::string detail;
    for (std::size_t n : {2, 3}) {
        const std::vector<Graph> gs(n, c5);
        const auto explicit_spec = eigendecompose(adjacency(cartesian_product(std::span<const Graph>(gs)).composite()));
        const auto composed = compose_spectra(std::vector<Spectrum>(n, eigendecompose(adjacency(c5))));
        const double e1 = std::abs(spectral_gap(explicit_spec) - gap);
        const double e2 = std::abs(composed.value(0) - composed.value(1) - gap);
        worst = std::max({worst, e1, e2});
        detail += fmt::format("C5^{}: gap {:.12f}; ", n, spectral_gap(explicit_spec));
    }
    return {worst <= 1e-9, detail + fmt::format("max deviation from C5 gap {:.2e}", worst)};
}

Outcome c4_regular_emergent() {
    const int samples = 50;
    int bound_ok = 0;
    double worst_lambda = 0.0;
    double worst_uniform = 0.0;
    const double bound = 2.0 * std::sqrt(14.0) + 0.5;
    for (int s = 0; s < samples; ++s) {
        const Graph g = d_regular_random(20, 15, RngSeed(static_cast<std::uint64_t>(s)));
        const Spectrum sp = eigendecompose(adjacency(g), true);
        worst_lambda = std::max(worst_lambda, std::abs(sp[0] - 15.0));
        const Eigen::VectorXd v = sp.eigenvector(0);
        worst_uniform = std::max(worst_uniform, (v.array() - 1.0 / std::sqrt(20.0)).abs().maxCoeff());
        if (sp[1] <= bound) ++bound_ok;
    }
    const bool pass = worst_lambda <= 1e-9 && worst_uniform <= 1e-9 && bound_ok * 100 >= 95 * samples;
    return {pass, fmt::format("50 graphs: max|lambda_0 - 15| = {:.1e}, max|v - 1/sqrt(20)| = {:.1e}, "
                              "lambda_1 <= 2sqrt(14)+0.5 in {}/{}",
                              worst_lambda, worst_uniform, bound_ok, samples)};
}

Outcome c5_splitting() {
    const ExperimentDescriptor d = bundled_experiment("fig4a");
    const std::size_t samples = 50;
    double split = 0.0;
    double predicted = 0.0;
    std::size_t isolated = 0;
    for (std::size_t i = 0; i < samples; ++i) {
        const QLBit q = realize_sample(d, i).qlbits[0];
        const EmergentPair pair = emergent_pair(q);
        split += pair.states[0].eigenvalue - pair.states[1].eigenvalue;
        predicted += 2.0 * predict_splitting(q).delta;
        if (!pair.degraded_isolation) ++isolated;
    }
    split /= static_cast<double>(samples);
    predicted /= static_cast<double>(samples);
    const bool pass = rel(split, predicted) <= 0.15 && isolated == samples;
    return {pass, fmt::format("n=20 d=15 p=0.2, {} seeds: mean splitting {:.4f} vs mean 2*Delta {:.4f} ({:.1f}%); "
                              "isolated from lambda_2 in {}/{}",
                              samples, split, predicted, 100.0 * rel(split, predicted), isolated, samples)};
}

Outcome c6_two_qlbit_structure() {
    const ExperimentDescriptor d = bundled_experiment("fig4c");
    std::array<double, 4> got{};
    std::array<double, 4> want{};
    bool four_each = true;
    for (std::size_t i = 0; i < d.samples; ++i) {
        const SampleSpectrum s = compute_sample(d, i);
        const auto labels = classify_states(s.composed, s.factors.emergent);
        std::vector<double> emergent;
        for (std::size_t k = 0; k < labels.size(); ++k) {
            if (labels[k].kind == StateKind::emergent) emergent.push_back(s.composed.value(k));
        }
        if (emergent.size() != 4) {
            four_each = false;
            continue;
        }
        const auto pa = predict_splitting(s.factors.qlbits[0]);
        const auto pb = predict_splitting(s.factors.qlbits[1]);
        std::array<double, 4> pred{pa.upper + pb.upper, pa.upper + pb.lower, pa.lower + pb.upper, pa.lower + pb.lower};
        std::sort(pred.begin(), pred.end(), std::greater<>{});
        for (std::size_t k = 0; k < 4; ++k) {
            got[k] += emergent[k];
            want[k] += pred[k];
        }
    }
    double worst = 0.0;
    std::string values;
    for (std::size_t k = 0; k < 4; ++k) {
        worst = std::max(worst, rel(got[k], want[k]));
        values += fmt::format(" {:.3f}/{:.3f}", got[k] / static_cast<double>(d.samples), want[k] / static_cast<double>(d.samples));
    }
    return {four_each && worst <= 0.15,
            fmt::format("{} samples, 4 emergent labels in every sample: {}; mean emergent/predicted:{}; worst {:.2f}%",
                        d.samples, four_each ? "yes" : "no", values, 100.0 * worst)};
}

Outcome c7_four_qlbit_scale() {
    const ExperimentDescriptor d = bundled_experiment("fig4f");
    const SampleSpectrum s = compute_sample(d, 0);
    const auto counts = count_states(classify_states(s.composed, s.factors.emergent), 4);
    std::size_t largest_matrix = 0;
    for (const auto& m : s.factors.matrices) largest_matrix = std::max(largest_matrix, m.dim());
    const bool pass = s.composed.size() == 38416 && counts.emergent == 16 && largest_matrix == 14;
    return {pass, fmt::format("{} composed eigenvalues, {} all-emergent labels; largest matrix diagonalized {}x{}",
                              s.composed.size(), counts.emergent, largest_matrix, largest_matrix)};
}

Outcome c8_scaling_law() {
    struct Case {
        std::size_t n_factors;
        std::size_t n;
        std::size_t d;
        double p;
    };
    const Case cases[] = {{2, 20, 15, 0.2}, {3, 10, 9, 0.1}, {4, 7, 6, 0.1}};
    const std::size_t samples = 50;
    bool pass = true;
    std::string detail;
    for (const auto& c : cases) {
        ExperimentDescriptor d;
        d.name = "scaling";
        d.pipeline = PipelineKind::qlbit_product;
        d.factors.assign(c.n_factors, FactorSpec{BasisFamily::random_regular, c.n, c.d, 0, c.p, 1});
        d.sharing = FactorSharing::identical;
        d.samples = samples;
        d.master_seed = 777 + c.n_factors;
        double l0 = 0, l0_want = 0, gap = 0, gap_want = 0;
        for (std::size_t i = 0; i < samples; ++i) {
            const SampleFactors f = realize_sample(d, i);
            std::vector<Spectrum> spectra;
            for (const auto& m : f.matrices) spectra.push_back(eigendecompose(m));
            const auto top = compose_top(spectra, 2);
            const auto pred = predict_splitting(f.qlbits[0]);
            l0 += top[0].value;
            gap += top[0].value - top[1].value;
            l0_want += static_cast<double>(c.n_factors) * (static_cast<double>(c.d) + pred.delta);
            gap_want += 2.0 * pred.delta;
        }
        const bool ok = rel(l0, l0_want) <= 0.15 && rel(gap, gap_want) <= 0.20;
        pass = pass && ok;
        detail += fmt::format("N={} (n={},d={},p={}): lambda_0 {:.3f} vs N(d+Delta) {:.3f}, gap {:.3f} vs 2Delta {:.3f}; ",
                              c.n_factors, c.n, c.d, c.p, l0 / samples, l0_want / samples, gap / samples,
                              gap_want / samples);
    }
    return {pass, fmt::format("{} samples each: {}", samples, detail)};
}

Outcome c9_bell_patterns() {
    int matched = 0;
    const int pairs = 10;
    double worst_residual = 0.0;
    for (int s = 0; s < pairs; ++s) {
        auto make = [&](std::uint64_t salt) {
            const RngSeed seed(static_cast<std::uint64_t>(s) * 10 + salt);
            return couple(d_regular_random(20, 15, seed.child(0)), d_regular_random(20, 15, seed.child(1)), 0.2, 1,
                          seed.with_stream(Stream::coupling));
        };
        const BellReport r = bell_state_check(make(1), make(2));
        if (r.all_match && r.warnings.empty()) ++matched;
        worst_residual = std::max(worst_residual, r.max_residual);
    }
    const Graph g = d_regular_random(20, 15, RngSeed(99));
    const Graph h = d_regular_random(20, 15, RngSeed(100));
    const BellReport zero = bell_state_check(couple(g, g, 0.0, 1, RngSeed(1)), couple(h, h, 0.0, 1, RngSeed(2)));
    const bool pass = matched == pairs && zero.all_match && zero.max_magnitude_deviation <= 1e-9;
    return {pass, fmt::format("sign patterns matched for {}/{} intact pairs at p=0.2 (max Parseval residual {:.3f}); "
                              "p=0: max||alpha| - 1/2| = {:.1e}",
                              matched, pairs, worst_residual, zero.max_magnitude_deviation)};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome c10_determinism() {
    const fs::path root = fs::temp_directory_path() / "qlgraph-acceptance";
    fs::remove_all(root);
    std::size_t files = 0;
    std::size_t identical = 0;
    for (const auto& name : bundled_experiment_names()) {
        ExperimentDescriptor d = bundled_experiment(name);
        d.output_dir = (root / name).string();
        std::vector<std::string> first;
        for (const auto& path : run_experiment(d).artifacts) first.push_back(slurp(path));
        const auto second = run_experiment(d).artifacts;
        files += second.size();
        for (std::size_t i = 0; i < second.size() && i < first.size(); ++i) {
            if (slurp(second[i]) == first[i]) ++identical;
        }
        if (first.size() != second.size()) files += 1;
    }
    fs::remove_all(root);
    return {files > 0 && identical == files,
            fmt::format("{} bundled descriptors run twice: {}/{} artifacts byte-identical",
                        bundled_experiment_names().size(), identical, files)};
}

}  // namespace

int main() {
    const std::pair<const char*, std::function<Outcome()>> criteria[] = {
        {"C5 spectrum and gap", c1_cycle_spectrum},
        {"product oracle equivalence", c2_product_oracle},
        {"gap preservation under products", c3_gap_preservation},
        {"d-regular emergent state", c4_regular_emergent},
        {"QL-bit splitting", c5_splitting},
        {"two-QL-bit emergent structure", c6_two_qlbit_structure},
        {"four-QL-bit composed scale", c7_four_qlbit_scale},
        {"N-factor scaling law", c8_scaling_law},
        {"projection sign patterns", c9_bell_patterns},
        {"determinism", c10_determinism},
    };
    int failures = 0;
    int index = 0;
    for (const auto& [title, check] : criteria) {
        ++index;
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!o.pass) ++failures;
        std::printf("[%s] %2d %s (%.2fs): %s\n", o.pass ? "PASS" : "FAIL", index, title, secs, o.detail.c_str());
    }
    std::printf("%d/%d criteria passed\n", index - failures, index);
    return failures == 0 ? 0 : 1;
}
