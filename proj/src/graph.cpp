#include "qlgraph/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qlgraph/error.hpp"

namespace qlgraph {

namespace {

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent_[b] = a;
        return true;
    }

private:
    std::vector<std::size_t> parent_;
};

bool edge_less(const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
}

// Returns the k-regular pairing, or an empty optional when the attempt got
// stuck and must be restarted.
std::optional<std::vector<Edge>> try_pairing(std::size_t n, std::size_t k, Rng& rng) {
    std::vector<std::size_t> stubs;
    stubs.reserve(n * k);
    for (std::size_t v = 0; v < n; ++v) {
        stubs.insert(stubs.end(), k, v);
    }
    std::vector<unsigned char> adjacent(n * n, 0);
    std::vector<Edge> edges;
    edges.reserve(n * k / 2);

    const auto admissible = [&](std::size_t a, std::size_t b) {
        return a != b && !adjacent[a * n + b];
    };

    std::size_t misses = 0;
    while (!stubs.empty()) {
        const std::size_t i = rng.uniform_below(stubs.size());
        const std::size_t j = rng.uniform_below(stubs.size());
        const std::size_t a = stubs[i];
        const std::size_t b = stubs[j];
        if (i != j && admissible(a, b)) {
            adjacent[a * n + b] = adjacent[b * n + a] = 1;
            edges.push_back({std::min(a, b), std::max(a, b), 1.0});
            const std::size_t hi = std::max(i, j);
            const std::size_t lo = std::min(i, j);
            stubs[hi] = stubs.back();
            stubs.pop_back();
            stubs[lo] = stubs.back();
            stubs.pop_back();
            misses = 0;
            continue;
        }
        if (++misses < 64) continue;

        // Many consecutive misses: check whether any admissible pair is left.
        std::vector<std::size_t> open = stubs;
        std::sort(open.begin(), open.end());
        open.erase(std::unique(open.begin(), open.end()), open.end());
        bool any = false;
        for (std::size_t x = 0; x < open.size() && !any; ++x) {
            for (std::size_t y = x + 1; y < open.size(); ++y) {
                if (admissible(open[x], open[y])) {
                    any = true;
                    break;
                }
            }
        }
        if (!any) return std::nullopt;
        misses = 0;
    }
    return edges;
}

}  // namespace

Graph::Graph(std::size_t n_vertices, std::vector<Edge> edges, std::vector<std::string> vertex_labels)
    : n_(n_vertices), edges_(std::move(edges)), labels_(std::move(vertex_labels)) {
    if (n_ == 0) {
        throw InvalidParameter("graph must have at least one vertex");
    }
    if (!labels_.empty() && labels_.size() != n_) {
        throw InvalidParameter("vertex label count " + std::to_string(labels_.size()) +
                               " does not match vertex count " + std::to_string(n_));
    }
    for (auto& e : edges_) {
        if (e.u >= n_ || e.v >= n_) {
            throw InvalidParameter("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                                   ") has a vertex outside [0, " + std::to_string(n_) + ")");
        }
        if (e.u == e.v) {
            throw InvalidParameter("self-loop at vertex " + std::to_string(e.u));
        }
        if (!std::isfinite(e.weight) || e.weight == 0.0) {
            throw InvalidParameter("edge weights must be finite and nonzero");
        }
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end(), edge_less);
    const auto dup = std::adjacent_find(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
        return a.u == b.u && a.v == b.v;
    });
    if (dup != edges_.end()) {
        throw InvalidParameter("duplicate edge (" + std::to_string(dup->u) + ", " +
                               std::to_string(dup->v) + ")");
    }
}

std::vector<std::size_t> Graph::degrees() const {
    std::vector<std::size_t> deg(n_, 0);
    for (const auto& e : edges_) {
        ++deg[e.u];
        ++deg[e.v];
    }
    return deg;
}

std::size_t Graph::min_degree() const {
    const auto deg = degrees();
    return *std::min_element(deg.begin(), deg.end());
}

std::size_t Graph::max_degree() const {
    const auto deg = degrees();
    return *std::max_element(deg.begin(), deg.end());
}

bool Graph::has_edge(std::size_t u, std::size_t v) const {
    return edge_weight(u, v).has_value();
}

std::optional<double> Graph::edge_weight(std::size_t u, std::size_t v) const {
    if (u > v) std::swap(u, v);
    const Edge probe{u, v, 0.0};
    const auto it = std::lower_bound(edges_.begin(), edges_.end(), probe, edge_less);
    if (it != edges_.end() && it->u == u && it->v == v) return it->weight;
    return std::nullopt;
}

bool Graph::is_connected() const {
    DisjointSets sets(n_);
    std::size_t components = n_;
    for (const auto& e : edges_) {
        if (sets.unite(e.u, e.v)) --components;
    }
    return components == 1;
}

AdjacencyMatrix::AdjacencyMatrix(Eigen::MatrixXd entries, std::optional<Eigen::VectorXd> diagonal_disorder)
    : entries_(std::move(entries)), disorder_(std::move(diagonal_disorder)) {
    if (entries_.rows() != entries_.cols() || entries_.rows() == 0) {
        throw InvalidInput("adjacency matrix must be square and nonempty");
    }
    for (Eigen::Index j = 0; j < entries_.cols(); ++j) {
        for (Eigen::Index i = j + 1; i < entries_.rows(); ++i) {
            if (entries_(i, j) != entries_(j, i)) {
                throw InvalidInput("adjacency matrix is not exactly symmetric at (" + std::to_string(i) +
                                   ", " + std::to_string(j) + ")");
            }
        }
    }
    if (disorder_ && disorder_->size() != entries_.rows()) {
        throw InvalidInput("diagonal disorder length does not match matrix dimension");
    }
}

Graph cycle_graph(std::size_t n) {
    if (n < 3) {
        throw InvalidParameter("cycle graph needs n >= 3, got " + std::to_string(n));
    }
    std::vector<Edge> edges;
    edges.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        edges.push_back({i, (i + 1) % n, 1.0});
    }
    return Graph(n, std::move(edges));
}

Graph complete_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            edges.push_back({u, v, 1.0});
        }
    }
    return Graph(n, std::move(edges));
}

Graph complement(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            if (!g.has_edge(u, v)) edges.push_back({u, v, 1.0});
        }
    }
    return Graph(n, std::move(edges));
}

Graph d_regular_random(std::size_t n, std::size_t d, RngSeed seed, const RegularGraphOptions& options) {
    if (d == 0) {
        throw InvalidParameter("degree d must be positive");
    }
    if (n <= d) {
        throw InvalidParameter("d-regular graph needs n > d (n=" + std::to_string(n) +
                               ", d=" + std::to_string(d) + ")");
    }
    if ((n * d) % 2 != 0) {
        throw InvalidParameter("n*d must be even (n=" + std::to_string(n) + ", d=" + std::to_string(d) + ")");
    }

    const std::size_t dual = n - 1 - d;
    const bool via_complement = dual < d;
    const std::size_t k = via_complement ? dual : d;

    Rng rng(seed);
    for (std::size_t attempt = 0; attempt <= options.max_restarts; ++attempt) {
        auto edges = try_pairing(n, k, rng);
        if (!edges) continue;
        Graph sampled(n, std::move(*edges));
        return via_complement ? complement(sampled) : sampled;
    }
    throw GenerationFailure("d-regular generation failed (n=" + std::to_string(n) + ", d=" + std::to_string(d) +
                                ") after " + std::to_string(options.max_restarts) + " restarts",
                            options.max_restarts);
}

Graph delete_random_edges(const Graph& g, std::size_t count, RngSeed seed) {
    const std::size_t m = g.edge_count();
    if (count > m) {
        throw InvalidParameter("cannot delete " + std::to_string(count) + " edges from a graph with " +
                               std::to_string(m));
    }
    if (count == 0) return g;

    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), std::size_t{0});
    Rng rng(seed);
    // Partial Fisher-Yates: the first `count` slots are the deleted edges.
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t j = i + rng.uniform_below(m - i);
        std::swap(order[i], order[j]);
    }
    std::vector<bool> removed(m, false);
    for (std::size_t i = 0; i < count; ++i) removed[order[i]] = true;

    std::vector<Edge> kept;
    kept.reserve(m - count);
    const auto edges = g.edges();
    for (std::size_t i = 0; i < m; ++i) {
        if (!removed[i]) kept.push_back(edges[i]);
    }
    return Graph(g.vertex_count(), std::move(kept), g.vertex_labels());
}

AdjacencyMatrix adjacency(const Graph& g) {
    const auto n = static_cast<Eigen::Index>(g.vertex_count());
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (const auto& e : g.edges()) {
        const auto u = static_cast<Eigen::Index>(e.u);
        const auto v = static_cast<Eigen::Index>(e.v);
        a(u, v) = e.weight;
        a(v, u) = e.weight;
    }
    return AdjacencyMatrix(std::move(a));
}

AdjacencyMatrix apply_diagonal_disorder(const AdjacencyMatrix& a, double sigma, RngSeed seed) {
    if (!(sigma >= 0.0) || !std::isfinite(sigma)) {
        throw InvalidParameter("disorder sigma must be a finite non-negative number");
    }
    if (sigma == 0.0) return a;

    const auto n = static_cast<Eigen::Index>(a.dim());
    Rng rng(seed);
    Eigen::VectorXd draws(n);
    for (Eigen::Index i = 0; i < n; ++i) draws(i) = rng.normal(0.0, sigma);

    Eigen::MatrixXd entries = a.entries();
    entries.diagonal() += draws;
    Eigen::VectorXd total = a.diagonal_disorder() ? Eigen::VectorXd(*a.diagonal_disorder() + draws) : draws;
    return AdjacencyMatrix(std::move(entries), std::move(total));
}

Graph graph_from_adjacency(const AdjacencyMatrix& a) {
    const auto& m = a.entries();
    std::vector<Edge> edges;
    for (Eigen::Index u = 0; u < m.rows(); ++u) {
        for (Eigen::Index v = u + 1; v < m.cols(); ++v) {
            if (m(u, v) != 0.0) {
                edges.push_back({static_cast<std::size_t>(u), static_cast<std::size_t>(v), m(u, v)});
            }
        }
    }
    return Graph(a.dim(), std::move(edges));
}

}  // namespace qlgraph
