#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "qlgraph/error.hpp"
#include "qlgraph/io.hpp"
#include "qlgraph/runner.hpp"

using namespace qlgraph;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("qlgraph-test-" + name);
    fs::remove_all(dir);
    return dir;
}

std::size_t line_count(const std::string& s) {
    return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

}  // namespace

TEST_CASE("descriptor JSON round trip for every bundled experiment") {
    const auto names = bundled_experiment_names();
    CHECK(names.size() == 10);
    for (const auto& name : names) {
        const auto d = bundled_experiment(name);
        CHECK_NOTHROW(validate(d));
        CHECK(descriptor_from_json(descriptor_to_json(d)) == d);
    }
    CHECK_THROWS_AS(bundled_experiment("fig9"), InvalidParameter);
}

TEST_CASE("descriptor shorthand and rejection of bad input") {
    const Json j = Json::parse(R"({"name": "x", "pipeline": "qlbit-product",
        "factor": {"n": 10, "d": 9, "p": 0.1}, "count": 3, "samples": 2, "master_seed": 5})");
    const auto d = descriptor_from_json(j);
    CHECK(d.factors.size() == 3);
    CHECK(d.factors[2].p == 0.1);
    CHECK(d.product_dim() == 8000);

    CHECK_THROWS_AS(descriptor_from_json(Json::parse(R"({"name": "x", "pipeline": "qlbit-product", "bogus": 1})")),
                    InvalidParameter);
    CHECK_THROWS_AS(descriptor_from_json(Json::parse(R"({"name": "x", "pipeline": "nope"})")), InvalidParameter);
    CHECK_THROWS_AS(descriptor_from_json(Json::parse(R"({"name": "x", "pipeline": "single-graph", "samples": -1})")),
                    InvalidParameter);

    auto bad = bundled_experiment("fig4a");
    bad.factors[0].p = 1.5;
    CHECK_THROWS_AS(validate(bad), InvalidParameter);
    bad = bundled_experiment("fig4a");
    bad.factors[0].d = 20;
    CHECK_THROWS_AS(validate(bad), InvalidParameter);
    bad = bundled_experiment("fig3");
    bad.sigma = -1.0;
    CHECK_THROWS_AS(validate(bad), InvalidParameter);
    bad = bundled_experiment("fig3");
    bad.factors[0].deletions = 1000;
    CHECK_THROWS_AS(validate(bad), InvalidParameter);
}

TEST_CASE("realized samples carry one entry per factor for every sharing mode") {
    for (const auto& name : bundled_experiment_names()) {
        const auto d = bundled_experiment(name);
        const auto f = realize_sample(d, 0);
        const std::size_t n = d.factor_count();
        CHECK(f.matrices.size() == n);
        CHECK(f.emergent.size() == n);
        if (d.pipeline == PipelineKind::qlbit_product) {
            CHECK(f.qlbits.size() == n);
            CHECK(f.connected.size() == 2 * n);
        } else {
            CHECK(f.graphs.size() == n);
            CHECK(f.connected.size() == n);
        }
    }
}

TEST_CASE("samples = 0 is rejected before any file is written") {
    auto d = bundled_experiment("fig2a");
    d.samples = 0;
    d.output_dir = scratch("zero").string();
    CHECK_THROWS_AS(run_experiment(d), InvalidParameter);
    CHECK((!fs::exists(d.output_dir) || fs::is_empty(d.output_dir)));
}

TEST_CASE("run fig2a writes the expected artifacts") {
    auto d = bundled_experiment("fig2a");
    d.output_dir = scratch("fig2a").string();
    const auto result = run_experiment(d);
    CHECK(result.artifacts.size() == 4);
    const std::string csv = slurp(fs::path(d.output_dir) / "fig2a.spectrum.csv");
    CHECK(line_count(csv) == 26);
    CHECK(csv.rfind("value,label_1,label_2,n_emergent_factors\n", 0) == 0);
    CHECK(std::abs(result.summary["lambda_0"].get<double>() - 4.0) < 1e-12);
    CHECK(std::abs(result.summary["gap"].get<double>() - 1.3819660112501051) < 1e-9);
    for (const auto& entry : fs::directory_iterator(d.output_dir)) {
        CHECK(entry.path().filename().string().rfind(".qlgraph-tmp", 0) != 0);
    }
}

TEST_CASE("run fig4f: 38,416 eigenvalues, 16 emergent projections") {
    auto d = bundled_experiment("fig4f");
    d.output_dir = scratch("fig4f").string();
    const auto result = run_experiment(d);
    CHECK(result.artifacts.size() == 5);
    CHECK(line_count(slurp(fs::path(d.output_dir) / "fig4f.spectrum.csv")) == 38417);
    CHECK(result.summary["states"]["emergent"].get<std::size_t>() == 16);
    const Json proj = Json::parse(slurp(fs::path(d.output_dir) / "fig4f.projection.json"));
    CHECK(proj.size() == 16);
    CHECK(proj[0]["band"] == "A");
    CHECK(proj[0]["alphas"].size() == 16);
    CHECK(proj[15]["band"] == "E");
}

TEST_CASE("reruns are byte-identical and a different seed changes the output") {
    auto d = bundled_experiment("fig4e");
    d.samples = 5;
    d.output_dir = scratch("rerun").string();
    const char* suffixes[] = {".spectrum.csv", ".histogram.csv", ".histogram.json", ".summary.json", ".projection.json"};
    std::vector<std::string> first;
    run_experiment(d);
    for (const char* suffix : suffixes) first.push_back(slurp(fs::path(d.output_dir) / ("fig4e" + std::string(suffix))));
    run_experiment(d);
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(!first[i].empty());
        CHECK(slurp(fs::path(d.output_dir) / ("fig4e" + std::string(suffixes[i]))) == first[i]);
    }
    d.master_seed += 1;
    run_experiment(d);
    CHECK(slurp(fs::path(d.output_dir) / "fig4e.spectrum.csv") != first[0]);
}

TEST_CASE("load_descriptor and overrides") {
    const fs::path dir = scratch("load");
    fs::create_directories(dir);
    const fs::path file = dir / "d.json";
    std::ofstream(file) << descriptor_to_json(bundled_experiment("fig4d")).dump();
    const auto d = load_descriptor(file.string());
    CHECK(d == bundled_experiment("fig4d"));
    CHECK(load_descriptor("fig4d") == bundled_experiment("fig4d"));
    CHECK_THROWS_AS(load_descriptor((dir / "missing.json").string()), InvalidParameter);
    std::ofstream(dir / "broken.json") << "{not json";
    CHECK_THROWS_AS(load_descriptor((dir / "broken.json").string()), InvalidParameter);

    RunOverrides o;
    o.seed = 9;
    o.samples = 3;
    const auto e = apply_overrides(d, o);
    CHECK(e.master_seed == 9);
    CHECK(e.samples == 3);
    CHECK(e.output_dir == d.output_dir);
}

TEST_CASE("CSV and double formatting") {
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(4.0) == "4");
    const Spectrum s({2.0, -1.0});
    CHECK(spectrum_csv(s) == "index,eigenvalue\n0,2\n1,-1\n");
    CHECK_THROWS_AS(spectrum_csv(s, {"a"}), InvalidParameter);
}
