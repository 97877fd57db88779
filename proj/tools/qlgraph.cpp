// qlgraph: run the bundled experiments or a descriptor file.
//
//   qlgraph run <descriptor.json|name> [--seed S] [--out DIR] [--samples N]
//   qlgraph validate <descriptor.json|name>
//   qlgraph list-experiments
//   qlgraph show <name>
//
// Exit codes: 0 success, 2 validation error, 3 numerical or generation
// failure. Errors are reported on stderr as a single JSON object.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qlgraph/error.hpp"
#include "qlgraph/experiment.hpp"
#include "qlgraph/io.hpp"
#include "qlgraph/runner.hpp"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitNumerical = 3;

int report(const char* kind, const std::exception& e, int code) {
    qlgraph::Json j;
    j["error"] = kind;
    j["message"] = e.what();
    j["exit_code"] = code;
    std::cerr << j.dump() << '\n';
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum-like bit graphs: products, spectra and qubit-basis projections"};
    app.require_subcommand(1);

    std::string source;
    qlgraph::RunOverrides overrides;
    std::uint64_t seed = 0;
    std::string out_dir;
    std::size_t samples = 0;

    auto* run = app.add_subcommand("run", "Run an experiment descriptor and write its artifacts");
    run->add_option("descriptor", source, "Descriptor JSON file or bundled experiment name")->required();
    auto* seed_opt = run->add_option("--seed", seed, "Override the master seed");
    auto* out_opt = run->add_option("--out", out_dir, "Override the output directory");
    auto* samples_opt = run->add_option("--samples", samples, "Override the ensemble sample count");

    auto* check = app.add_subcommand("validate", "Validate a descriptor without running it");
    check->add_option("descriptor", source, "Descriptor JSON file or bundled experiment name")->required();

    app.add_subcommand("list-experiments", "List bundled experiments");

    std::string show_name;
    auto* show = app.add_subcommand("show", "Print a bundled descriptor as JSON");
    show->add_option("name", show_name, "Bundled experiment name")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand("list-experiments")) {
            for (const auto& name : qlgraph::bundled_experiment_names()) {
                std::cout << name << '\t' << qlgraph::bundled_experiment(name).description << '\n';
            }
            return EXIT_SUCCESS;
        }
        if (app.got_subcommand("show")) {
            std::cout << qlgraph::descriptor_to_json(qlgraph::bundled_experiment(show_name)).dump(2) << '\n';
            return EXIT_SUCCESS;
        }

        if (*seed_opt) overrides.seed = seed;
        if (*out_opt) overrides.out_dir = out_dir;
        if (*samples_opt) overrides.samples = samples;
        const auto descriptor = qlgraph::apply_overrides(qlgraph::load_descriptor(source), overrides);
        qlgraph::validate(descriptor);

        if (app.got_subcommand("validate")) {
            std::cout << qlgraph::Json{{"valid", true}, {"name", descriptor.name}}.dump() << '\n';
            return EXIT_SUCCESS;
        }
        const auto result = qlgraph::run_experiment(descriptor);
        for (const auto& path : result.artifacts) std::cout << path.string() << '\n';
        return EXIT_SUCCESS;
    } catch (const qlgraph::InvalidParameter& e) {
        return report("validation", e, kExitValidation);
    } catch (const qlgraph::InvalidInput& e) {
        return report("validation", e, kExitValidation);
    } catch (const qlgraph::SizeCapExceeded& e) {
        return report("validation", e, kExitValidation);
    } catch (const qlgraph::GenerationFailure& e) {
        return report("generation", e, kExitNumerical);
    } catch (const qlgraph::NumericalFailure& e) {
        return report("numerical", e, kExitNumerical);
    } catch (const std::exception& e) {
        return report("internal", e, EXIT_FAILURE);
    }
}
