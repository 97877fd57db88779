#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qlgraph/classify.hpp"
#include "qlgraph/ensemble.hpp"
#include "qlgraph/experiment.hpp"
#include "qlgraph/graph.hpp"
#include "qlgraph/product.hpp"
#include "qlgraph/projection.hpp"
#include "qlgraph/qlbit.hpp"
#include "qlgraph/spectrum.hpp"

namespace qlgraph {

using Json = nlohmann::ordered_json;

// {"n": int, "edges": [[u, v, weight], ...]} with u < v; the weight is
// omitted when it is +1.
Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

// {"basis_1": Graph, "basis_2": Graph, "coupling": [[u, v, w], ...], "sign": +-1}
Json qlbit_to_json(const QLBit& q);
QLBit qlbit_from_json(const Json& j);

// Canonical form always lists "factors" explicitly. Parsing also accepts the
// shorthand {"factor": {...}, "count": N}. Unknown keys are rejected.
Json descriptor_to_json(const ExperimentDescriptor& d);
ExperimentDescriptor descriptor_from_json(const Json& j);

// {"eigenvalue": x, "alphas": {"00": a, ...}, "residual": r}, plus "labels"
// when the factor decomposition is known.
Json projection_to_json(const ProjectionReport& r);

// index,eigenvalue[,label]
std::string spectrum_csv(const Spectrum& s, const std::vector<std::string>& labels = {});
// value,label_1,...,label_N,n_emergent_factors
std::string composed_spectrum_csv(const ComposedSpectrum& c, const std::vector<StateLabel>& states);
// bin_left,bin_right,count
std::string histogram_csv(const EnsembleHistogram& h);
Json histogram_metadata(const EnsembleHistogram& h);

// Shortest round-trip decimal form; identical on every run.
std::string format_double(double x);

}  // namespace qlgraph
