#include "qlgraph/runner.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <system_error>
#include <unistd.h>

#include "qlgraph/classify.hpp"
#include "qlgraph/ensemble.hpp"
#include "qlgraph/error.hpp"
#include "qlgraph/projection.hpp"

namespace fs = std::filesystem;

namespace qlgraph {

namespace {

// Owns a scratch directory next to the outputs; removed on destruction.
class StagingDir {
public:
    explicit StagingDir(const fs::path& out_dir, const std::string& name)
        : path_(out_dir / (".qlgraph-tmp-" + name + "-" + std::to_string(::getpid()))) {
        fs::remove_all(path_);
        fs::create_directories(path_);
    }
    ~StagingDir() {
        std::error_code ec;
        fs::remove_all(path_, ec);
    }
    StagingDir(const StagingDir&) = delete;
    StagingDir& operator=(const StagingDir&) = delete;

    fs::path write(const std::string& filename, const std::string& contents) {
        const fs::path file = path_ / filename;
        std::ofstream out(file, std::ios::binary);
        out << contents;
        out.close();
        if (!out) throw Error("failed to write " + file.string());
        staged_.push_back(filename);
        return file;
    }

    std::vector<fs::path> commit(const fs::path& out_dir) {
        std::vector<fs::path> done;
        for (const auto& name : staged_) {
            fs::rename(path_ / name, out_dir / name);
            done.push_back(out_dir / name);
        }
        return done;
    }

private:
    fs::path path_;
    std::vector<std::string> staged_;
};

std::string dump(const Json& j) {
    return j.dump(2) + "\n";
}

Json sample_summary(const ExperimentDescriptor& d, const SampleSpectrum& sample, const std::vector<StateLabel>& labels) {
    Json j;
    const auto& c = sample.composed;
    j["dim"] = c.size();
    j["lambda_0"] = c.value(0);
    if (c.size() >= 2) {
        j["lambda_1"] = c.value(1);
        j["gap"] = c.value(0) - c.value(1);
    }
    const StateCounts counts = count_states(labels, c.factor_count());
    Json states;
    states["emergent"] = counts.emergent;
    states["random"] = counts.random;
    Json hybrid = Json::object();
    for (std::size_t k = 1; k < counts.hybrid.size(); ++k) {
        if (counts.hybrid[k] > 0) hybrid[std::to_string(k)] = counts.hybrid[k];
    }
    states["hybrid"] = std::move(hybrid);
    j["states"] = std::move(states);

    Json factors = Json::array();
    const auto& spectra = c.factor_spectra();
    for (std::size_t k = 0; k < spectra.size(); ++k) {
        Json f;
        f["lambda_0"] = spectra[k][0];
        if (spectra[k].size() >= 2) f["gap"] = spectral_gap(spectra[k]);
        if (d.pipeline == PipelineKind::qlbit_product) {
            const auto& q = sample.factors.qlbits[k];
            const SplittingPrediction pred = predict_splitting(q);
            f["n_coupling"] = pred.n_coupling;
            f["delta"] = pred.delta;
            f["predicted"] = Json::array({pred.upper, pred.lower});
            const AlonBoppanaReport ab =
                alon_boppana_check(eigendecompose(adjacency(q.basis_1())), q.basis_1().max_degree());
            f["basis_1_alon_boppana"] = {{"bound", ab.bound}, {"lambda_1", ab.lambda_1}, {"satisfied", ab.satisfied}};
        } else {
            const auto& g = sample.factors.graphs[k];
            const AlonBoppanaReport ab = alon_boppana_check(eigendecompose(adjacency(g)), d.factors[k].d);
            f["alon_boppana"] = {{"bound", ab.bound}, {"lambda_1", ab.lambda_1}, {"satisfied", ab.satisfied}};
            f["connected"] = static_cast<bool>(sample.factors.connected[k]);
        }
        factors.push_back(std::move(f));
    }
    j["factors"] = std::move(factors);
    return j;
}

}  // namespace

ExperimentDescriptor apply_overrides(ExperimentDescriptor d, const RunOverrides& overrides) {
    if (overrides.seed) d.master_seed = *overrides.seed;
    if (overrides.out_dir) d.output_dir = *overrides.out_dir;
    if (overrides.samples) d.samples = *overrides.samples;
    return d;
}

ExperimentDescriptor load_descriptor(const std::string& source) {
    const auto names = bundled_experiment_names();
    if (std::find(names.begin(), names.end(), source) != names.end() && !fs::exists(source)) {
        return bundled_experiment(source);
    }
    std::ifstream in(source);
    if (!in) throw InvalidParameter("cannot open descriptor '" + source + "'");
    Json j;
    try {
        j = Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidParameter("descriptor '" + source + "' is not valid JSON: " + e.what());
    }
    return descriptor_from_json(j);
}

RunResult run_experiment(const ExperimentDescriptor& d) {
    validate(d);
    const fs::path out_dir = d.output_dir.empty() ? fs::path(".") : fs::path(d.output_dir);
    fs::create_directories(out_dir);

    const bool qlbit = d.pipeline == PipelineKind::qlbit_product;
    const SampleSpectrum first = compute_sample(d, 0, qlbit);
    const auto labels = classify_states(first.composed, first.factors.emergent);
    const EnsembleHistogram hist = ensemble_spectrum(d, d.samples, d.bins, d.master_seed);

    StagingDir staging(out_dir, d.name);
    if (d.pipeline == PipelineKind::single_graph) {
        std::vector<std::string> names;
        for (const auto& l : labels) names.push_back(to_string(l));
        staging.write(d.name + ".spectrum.csv", spectrum_csv(first.composed.factor_spectra()[0], names));
    } else {
        staging.write(d.name + ".spectrum.csv", composed_spectrum_csv(first.composed, labels));
    }
    staging.write(d.name + ".histogram.csv", histogram_csv(hist));
    staging.write(d.name + ".histogram.json", dump(histogram_metadata(hist)));

    RunResult result;
    result.summary = sample_summary(d, first, labels);
    result.summary["experiment"] = d.name;
    staging.write(d.name + ".summary.json", dump(result.summary));

    if (qlbit) {
        Json reports = Json::array();
        for (std::size_t i = 0; i < first.composed.size(); ++i) {
            if (labels[i].kind != StateKind::emergent) continue;
            const auto l = first.composed.labels(i);
            Json r = projection_to_json(project_alphas(first.composed, l, first.factors.qlbits));
            r["band"] = std::string(1, emergent_band_letter(emergent_band(l, first.factors.emergent)));
            reports.push_back(std::move(r));
        }
        staging.write(d.name + ".projection.json", dump(reports));
    }
    result.artifacts = staging.commit(out_dir);
    return result;
}

}  // namespace qlgraph
