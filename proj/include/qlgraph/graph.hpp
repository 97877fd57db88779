#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qlgraph/rng.hpp"

namespace qlgraph {

struct Edge {
    std::size_t u = 0;
    std::size_t v = 0;
    double weight = 1.0;

    friend bool operator==(const Edge&, const Edge&) = default;
};

// Simple undirected weighted graph. Edges are stored canonically (u < v,
// sorted by (u, v)); self-loops, duplicates, zero and non-finite weights are
// rejected at construction.
class Graph {
public:
    explicit Graph(std::size_t n_vertices, std::vector<Edge> edges = {},
                   std::vector<std::string> vertex_labels = {});

    std::size_t vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    std::span<const Edge> edges() const noexcept { return edges_; }
    const std::vector<std::string>& vertex_labels() const noexcept { return labels_; }

    std::vector<std::size_t> degrees() const;
    std::size_t min_degree() const;
    std::size_t max_degree() const;
    bool has_edge(std::size_t u, std::size_t v) const;
    std::optional<double> edge_weight(std::size_t u, std::size_t v) const;
    bool is_connected() const;

    // Edge-set equality; labels are not compared.
    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    std::size_t n_;
    std::vector<Edge> edges_;
    std::vector<std::string> labels_;
};

// Dense symmetric realization of a graph. Diagonal entries are zero unless a
// disorder vector has been applied; the applied vector is kept alongside.
class AdjacencyMatrix {
public:
    // Throws InvalidInput unless `entries` is square and exactly symmetric.
    explicit AdjacencyMatrix(Eigen::MatrixXd entries,
                             std::optional<Eigen::VectorXd> diagonal_disorder = std::nullopt);

    std::size_t dim() const noexcept { return static_cast<std::size_t>(entries_.rows()); }
    const Eigen::MatrixXd& entries() const noexcept { return entries_; }
    const std::optional<Eigen::VectorXd>& diagonal_disorder() const noexcept { return disorder_; }
    double operator()(std::size_t i, std::size_t j) const {
        return entries_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }

private:
    Eigen::MatrixXd entries_;
    std::optional<Eigen::VectorXd> disorder_;
};

Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);

struct RegularGraphOptions {
    std::size_t max_restarts = 10'000;
};

// Random simple d-regular graph on n vertices from the pairing model.
// Stubs are paired uniformly at random, a pair that would form a loop or a
// multi-edge is redrawn, and the whole pairing restarts when no admissible
// pair is left. For d > (n-1)/2 the (n-1-d)-regular complement is sampled
// instead, which keeps dense cases such as n=20, d=15 cheap.
Graph d_regular_random(std::size_t n, std::size_t d, RngSeed seed,
                       const RegularGraphOptions& options = {});

// Copy of g with `count` distinct, uniformly chosen edges removed.
Graph delete_random_edges(const Graph& g, std::size_t count, RngSeed seed);

Graph complement(const Graph& g);

AdjacencyMatrix adjacency(const Graph& g);

// Adds an independent N(0, sigma^2) draw to every diagonal entry.
AdjacencyMatrix apply_diagonal_disorder(const AdjacencyMatrix& a, double sigma, RngSeed seed);

// Inverse of adjacency(): one edge per nonzero upper off-diagonal entry; the
// diagonal is ignored.
Graph graph_from_adjacency(const AdjacencyMatrix& a);

}  // namespace qlgraph
