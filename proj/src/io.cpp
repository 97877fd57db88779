#include "qlgraph/io.hpp"

#include <set>

#include <fmt/format.h>

#include "qlgraph/error.hpp"

namespace qlgraph {

namespace {

template <class T>
T require(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw InvalidParameter(std::string("missing field '") + key + "'");
    }
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw InvalidParameter(std::string("field '") + key + "': " + e.what());
    }
}

template <class T>
T optional_field(const Json& j, const char* key, T fallback) {
    if (!j.contains(key)) return fallback;
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw InvalidParameter(std::string("field '") + key + "': " + e.what());
    }
}

std::size_t non_negative(const Json& value, const char* what) {
    if (!value.is_number_integer() || value.get<long long>() < 0) {
        throw InvalidParameter(std::string(what) + " must be a non-negative integer");
    }
    return value.get<std::size_t>();
}

void reject_unknown(const Json& j, std::initializer_list<const char*> allowed, const std::string& where) {
    const std::set<std::string> keys(allowed.begin(), allowed.end());
    for (const auto& [key, value] : j.items()) {
        if (!keys.contains(key)) throw InvalidParameter(where + ": unknown field '" + key + "'");
    }
}

Json factor_to_json(const FactorSpec& f, PipelineKind pipeline) {
    Json j;
    j["family"] = to_string(f.family);
    j["n"] = f.n;
    j["d"] = f.d;
    j["deletions"] = f.deletions;
    if (pipeline == PipelineKind::qlbit_product) {
        j["p"] = f.p;
        j["sign"] = f.sign;
    }
    return j;
}

FactorSpec factor_from_json(const Json& j, const std::string& where) {
    if (!j.is_object()) throw InvalidParameter(where + " must be an object");
    reject_unknown(j, {"family", "n", "d", "deletions", "p", "sign"}, where);
    FactorSpec f;
    f.family = parse_family(optional_field<std::string>(j, "family", "random-regular"));
    f.n = j.contains("n") ? non_negative(j["n"], (where + ".n").c_str()) : 0;
    const std::size_t implied_d = f.family == BasisFamily::cycle ? 2 : 0;
    f.d = j.contains("d") ? non_negative(j["d"], (where + ".d").c_str()) : implied_d;
    f.deletions = j.contains("deletions") ? non_negative(j["deletions"], (where + ".deletions").c_str()) : 0;
    f.p = optional_field<double>(j, "p", 0.0);
    f.sign = optional_field<int>(j, "sign", 1);
    return f;
}

}  // namespace

std::string format_double(double x) {
    return fmt::format("{}", x);
}

Json graph_to_json(const Graph& g) {
    Json j;
    j["n"] = g.vertex_count();
    Json edges = Json::array();
    for (const auto& e : g.edges()) {
        Json row = Json::array({e.u, e.v});
        if (e.weight != 1.0) row.push_back(e.weight);
        edges.push_back(std::move(row));
    }
    j["edges"] = std::move(edges);
    return j;
}

Graph graph_from_json(const Json& j) {
    if (!j.is_object()) throw InvalidParameter("graph JSON must be an object");
    const std::size_t n = non_negative(j.contains("n") ? j["n"] : Json(), "graph 'n'");
    std::vector<Edge> edges;
    for (const auto& row : optional_field<Json>(j, "edges", Json::array())) {
        if (!row.is_array() || row.size() < 2 || row.size() > 3) {
            throw InvalidParameter("graph edge must be [u, v] or [u, v, weight]");
        }
        const std::size_t u = non_negative(row[0], "edge endpoint");
        const std::size_t v = non_negative(row[1], "edge endpoint");
        if (u >= v) throw InvalidParameter("graph JSON edges must have u < v");
        double w = 1.0;
        if (row.size() == 3) {
            if (!row[2].is_number()) throw InvalidParameter("edge weight must be a number");
            w = row[2].get<double>();
        }
        edges.push_back({u, v, w});
    }
    return Graph(n, std::move(edges));
}

Json qlbit_to_json(const QLBit& q) {
    Json j;
    j["basis_1"] = graph_to_json(q.basis_1());
    j["basis_2"] = graph_to_json(q.basis_2());
    Json coupling = Json::array();
    for (const auto& c : q.coupling_edges()) coupling.push_back(Json::array({c.u, c.v, c.weight}));
    j["coupling"] = std::move(coupling);
    j["sign"] = q.sign();
    return j;
}

QLBit qlbit_from_json(const Json& j) {
    if (!j.is_object()) throw InvalidParameter("QL-bit JSON must be an object");
    Graph b1 = graph_from_json(require<Json>(j, "basis_1"));
    Graph b2 = graph_from_json(require<Json>(j, "basis_2"));
    const int sign = require<int>(j, "sign");
    std::vector<CouplingEdge> coupling;
    for (const auto& row : require<Json>(j, "coupling")) {
        if (!row.is_array() || row.size() < 2 || row.size() > 3) {
            throw InvalidParameter("coupling edge must be [u, v] or [u, v, weight]");
        }
        double w = static_cast<double>(sign);
        if (row.size() == 3) {
            if (!row[2].is_number()) throw InvalidParameter("coupling weight must be a number");
            w = row[2].get<double>();
        }
        coupling.push_back({non_negative(row[0], "coupling endpoint"), non_negative(row[1], "coupling endpoint"), w});
    }
    return QLBit(std::move(b1), std::move(b2), std::move(coupling), sign);
}

Json descriptor_to_json(const ExperimentDescriptor& d) {
    Json j;
    j["name"] = d.name;
    if (!d.description.empty()) j["description"] = d.description;
    j["pipeline"] = to_string(d.pipeline);
    Json factors = Json::array();
    for (const auto& f : d.factors) factors.push_back(factor_to_json(f, d.pipeline));
    j["factors"] = std::move(factors);
    j["factor_sharing"] = to_string(d.sharing);
    j["sigma"] = d.sigma;
    j["samples"] = d.samples;
    j["bins"] = d.bins;
    j["master_seed"] = d.master_seed;
    j["output_dir"] = d.output_dir;
    return j;
}

ExperimentDescriptor descriptor_from_json(const Json& j) {
    if (!j.is_object()) throw InvalidParameter("descriptor must be a JSON object");
    reject_unknown(j,
                   {"name", "description", "pipeline", "factors", "factor", "count", "factor_sharing", "sigma",
                    "samples", "bins", "master_seed", "output_dir"},
                   "descriptor");
    ExperimentDescriptor d;
    d.name = require<std::string>(j, "name");
    d.description = optional_field<std::string>(j, "description", "");
    d.pipeline = parse_pipeline(require<std::string>(j, "pipeline"));

    if (j.contains("factors") && (j.contains("factor") || j.contains("count"))) {
        throw InvalidParameter("descriptor: give either 'factors' or 'factor' + 'count', not both");
    }
    if (j.contains("factors")) {
        const auto& list = j["factors"];
        if (!list.is_array()) throw InvalidParameter("factors must be an array");
        for (std::size_t k = 0; k < list.size(); ++k) {
            d.factors.push_back(factor_from_json(list[k], "factors[" + std::to_string(k) + "]"));
        }
    } else if (j.contains("factor")) {
        const std::size_t count = j.contains("count") ? non_negative(j["count"], "count") : 1;
        d.factors.assign(count, factor_from_json(j["factor"], "factor"));
    }
    d.sharing = parse_sharing(optional_field<std::string>(j, "factor_sharing", "independent"));
    d.sigma = optional_field<double>(j, "sigma", 0.0);
    d.samples = j.contains("samples") ? non_negative(j["samples"], "samples") : 1;
    d.bins = j.contains("bins") ? non_negative(j["bins"], "bins") : 200;
    if (j.contains("master_seed")) {
        const auto& s = j["master_seed"];
        if (!s.is_number_unsigned() && !(s.is_number_integer() && s.get<long long>() >= 0)) {
            throw InvalidParameter("master_seed must be a non-negative integer");
        }
        d.master_seed = s.get<std::uint64_t>();
    }
    d.output_dir = optional_field<std::string>(j, "output_dir", ".");
    return d;
}

Json projection_to_json(const ProjectionReport& r) {
    Json j;
    if (r.eigenvalue) {
        j["eigenvalue"] = *r.eigenvalue;
    } else {
        j["eigenvalue"] = nullptr;
    }
    if (!r.labels.empty()) j["labels"] = r.labels;
    Json alphas = Json::object();
    for (std::size_t b = 0; b < r.alphas.size(); ++b) {
        alphas[ProjectionReport::bit_string(b, r.qubits)] = r.alphas[b];
    }
    j["alphas"] = std::move(alphas);
    j["residual"] = r.residual_norm;
    return j;
}

std::string spectrum_csv(const Spectrum& s, const std::vector<std::string>& labels) {
    const bool with_labels = !labels.empty();
    if (with_labels && labels.size() != s.size()) {
        throw InvalidParameter("spectrum CSV label count does not match the spectrum");
    }
    std::string out = with_labels ? "index,eigenvalue,label\n" : "index,eigenvalue\n";
    for (std::size_t i = 0; i < s.size(); ++i) {
        out += fmt::format("{},{}", i, format_double(s[i]));
        if (with_labels) out += "," + labels[i];
        out += '\n';
    }
    return out;
}

std::string composed_spectrum_csv(const ComposedSpectrum& c, const std::vector<StateLabel>& states) {
    if (states.size() != c.size()) {
        throw InvalidParameter("composed spectrum CSV needs one state label per eigenvalue");
    }
    std::string out = "value";
    for (std::size_t k = 0; k < c.factor_count(); ++k) out += fmt::format(",label_{}", k + 1);
    out += ",n_emergent_factors\n";
    for (std::size_t i = 0; i < c.size(); ++i) {
        out += format_double(c.value(i));
        for (auto l : c.labels(i)) out += fmt::format(",{}", l);
        out += fmt::format(",{}\n", states[i].emergent_components);
    }
    return out;
}

std::string histogram_csv(const EnsembleHistogram& h) {
    std::string out = "bin_left,bin_right,count\n";
    for (std::size_t i = 0; i < h.counts.size(); ++i) {
        out += fmt::format("{},{},{}\n", format_double(h.bin_edges[i]), format_double(h.bin_edges[i + 1]),
                           h.counts[i]);
    }
    return out;
}

Json histogram_metadata(const EnsembleHistogram& h) {
    Json j;
    j["descriptor"] = descriptor_to_json(h.parameters);
    j["n_samples"] = h.n_samples;
    j["dim"] = h.dim;
    j["bins"] = h.counts.size();
    j["range"] = Json::array({h.bin_edges.front(), h.bin_edges.back()});
    j["min_value"] = h.min_value;
    j["max_value"] = h.max_value;
    j["master_seed"] = h.parameters.master_seed;
    j["sample_seeds"] = h.sample_seeds;
    return j;
}

}  // namespace qlgraph
