#include "qlgraph/product.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <limits>
#include <numeric>
#include <queue>
#include <set>
#include <string>

#include "qlgraph/error.hpp"

namespace qlgraph {

namespace {

std::size_t checked_product(std::span<const std::size_t> dims, std::size_t cap, const char* what) {
    std::size_t total = 1;
    for (auto n : dims) {
        if (n == 0) throw InvalidParameter(std::string(what) + ": empty factor");
        if (total > cap / n) {
            throw SizeCapExceeded(std::string(what) + ": product dimension exceeds cap " + std::to_string(cap));
        }
        total *= n;
    }
    if (total > cap) {
        throw SizeCapExceeded(std::string(what) + ": product dimension " + std::to_string(total) +
                              " exceeds cap " + std::to_string(cap));
    }
    return total;
}

double label_sum(std::span<const Spectrum> factors, std::span<const std::uint32_t> labels) {
    double sum = 0.0;
    for (std::size_t k = 0; k < factors.size(); ++k) sum += factors[k][labels[k]];
    return sum;
}

}  // namespace

MixedRadix::MixedRadix(std::vector<std::size_t> dims) : dims_(std::move(dims)), strides_(dims_.size()) {
    if (dims_.empty()) throw InvalidParameter("mixed-radix index needs at least one factor");
    total_ = checked_product(dims_, std::numeric_limits<std::size_t>::max(), "mixed-radix index");
    std::size_t stride = 1;
    for (std::size_t k = dims_.size(); k-- > 0;) {
        strides_[k] = stride;
        stride *= dims_[k];
    }
}

std::size_t MixedRadix::flat(std::span<const std::size_t> tuple) const {
    if (tuple.size() != dims_.size()) throw InvalidParameter("index tuple has the wrong length");
    std::size_t f = 0;
    for (std::size_t k = 0; k < dims_.size(); ++k) {
        if (tuple[k] >= dims_[k]) throw InvalidParameter("index tuple component out of range");
        f += tuple[k] * strides_[k];
    }
    return f;
}

std::vector<std::size_t> MixedRadix::tuple(std::size_t flat) const {
    if (flat >= total_) throw InvalidParameter("flat index out of range");
    std::vector<std::size_t> t(dims_.size());
    for (std::size_t k = 0; k < dims_.size(); ++k) {
        t[k] = flat / strides_[k];
        flat %= strides_[k];
    }
    return t;
}

ProductGraph::ProductGraph(std::vector<Graph> factors, Graph composite)
    : factors_(std::move(factors)), composite_(std::move(composite)), index_([this] {
          std::vector<std::size_t> dims;
          for (const auto& g : factors_) dims.push_back(g.vertex_count());
          return MixedRadix(std::move(dims));
      }()) {
    if (index_.size() != composite_.vertex_count()) {
        throw InvalidInput("product composite size does not match its factors");
    }
}

ProductGraph cartesian_product(const Graph& g, const Graph& h, std::size_t size_cap) {
    const std::size_t ng = g.vertex_count();
    const std::size_t nh = h.vertex_count();
    const std::array<std::size_t, 2> dims{ng, nh};
    checked_product(dims, size_cap, "cartesian product");

    std::vector<Edge> edges;
    edges.reserve(g.edge_count() * nh + ng * h.edge_count());
    for (const auto& e : g.edges()) {
        for (std::size_t x = 0; x < nh; ++x) edges.push_back({e.u * nh + x, e.v * nh + x, e.weight});
    }
    for (const auto& e : h.edges()) {
        for (std::size_t u = 0; u < ng; ++u) edges.push_back({u * nh + e.u, u * nh + e.v, e.weight});
    }
    return ProductGraph({g, h}, Graph(ng * nh, std::move(edges)));
}

ProductGraph cartesian_product(std::span<const Graph> factors, std::size_t size_cap) {
    if (factors.empty()) throw InvalidParameter("cartesian product needs at least one factor");
    std::vector<std::size_t> dims;
    for (const auto& f : factors) dims.push_back(f.vertex_count());
    checked_product(dims, size_cap, "cartesian product");

    Graph acc = factors[0];
    for (std::size_t k = 1; k < factors.size(); ++k) {
        acc = cartesian_product(acc, factors[k], size_cap).composite();
    }
    return ProductGraph(std::vector<Graph>(factors.begin(), factors.end()), std::move(acc));
}

AdjacencyMatrix kronecker_sum_adjacency(const AdjacencyMatrix& a_g, const AdjacencyMatrix& a_h, std::size_t size_cap) {
    const std::array<std::size_t, 2> dims{a_g.dim(), a_h.dim()};
    checked_product(dims, size_cap, "kronecker sum");
    const auto ng = static_cast<Eigen::Index>(a_g.dim());
    const auto nh = static_cast<Eigen::Index>(a_h.dim());

    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(ng * nh, ng * nh);
    const auto& g = a_g.entries();
    const auto& h = a_h.entries();
    // A_G (x) I: block (i, j) is g(i, j) * I_nh.
    for (Eigen::Index i = 0; i < ng; ++i) {
        for (Eigen::Index j = 0; j < ng; ++j) {
            if (g(i, j) == 0.0) continue;
            for (Eigen::Index x = 0; x < nh; ++x) out(i * nh + x, j * nh + x) += g(i, j);
        }
    }
    // I (x) A_H: diagonal blocks are A_H.
    for (Eigen::Index i = 0; i < ng; ++i) out.block(i * nh, i * nh, nh, nh) += h;

    std::optional<Eigen::VectorXd> disorder;
    if (a_g.diagonal_disorder() || a_h.diagonal_disorder()) {
        Eigen::VectorXd d = Eigen::VectorXd::Zero(ng * nh);
        for (Eigen::Index i = 0; i < ng; ++i) {
            for (Eigen::Index x = 0; x < nh; ++x) {
                if (a_g.diagonal_disorder()) d(i * nh + x) += (*a_g.diagonal_disorder())(i);
                if (a_h.diagonal_disorder()) d(i * nh + x) += (*a_h.diagonal_disorder())(x);
            }
        }
        disorder = std::move(d);
    }
    return AdjacencyMatrix(std::move(out), std::move(disorder));
}

ComposedSpectrum compose_spectra(std::vector<Spectrum> factor_spectra, std::size_t cap) {
    if (factor_spectra.empty()) throw InvalidParameter("compose_spectra needs at least one factor spectrum");
    std::vector<std::size_t> dims;
    for (const auto& s : factor_spectra) dims.push_back(s.size());
    const std::size_t total = checked_product(dims, cap, "compose_spectra");
    const std::size_t nf = dims.size();

    std::vector<std::uint32_t> raw_labels(total * nf);
    std::vector<double> raw_values(total);
    std::vector<std::uint32_t> t(nf, 0);
    for (std::size_t f = 0; f < total; ++f) {
        std::copy(t.begin(), t.end(), raw_labels.begin() + static_cast<std::ptrdiff_t>(f * nf));
        raw_values[f] = label_sum(factor_spectra, t);
        // Odometer increment, last factor fastest.
        for (std::size_t k = nf; k-- > 0;) {
            if (++t[k] < dims[k]) break;
            t[k] = 0;
        }
    }

    std::vector<std::size_t> order(total);
    std::iota(order.begin(), order.end(), std::size_t{0});
    // Flat order is lexicographic in labels, so a stable sort breaks ties by
    // label tuple.
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return raw_values[a] > raw_values[b]; });

    ComposedSpectrum out;
    out.factors_ = std::move(factor_spectra);
    out.values_.resize(total);
    out.labels_.resize(total * nf);
    for (std::size_t i = 0; i < total; ++i) {
        out.values_[i] = raw_values[order[i]];
        std::copy_n(raw_labels.begin() + static_cast<std::ptrdiff_t>(order[i] * nf), nf,
                    out.labels_.begin() + static_cast<std::ptrdiff_t>(i * nf));
    }
    return out;
}

std::vector<ComposedEigenvalue> compose_top(std::span<const Spectrum> factors, std::size_t k) {
    if (factors.empty()) throw InvalidParameter("compose_top needs at least one factor spectrum");
    for (const auto& s : factors) {
        if (s.size() == 0) throw InvalidParameter("compose_top: empty factor spectrum");
    }
    using Labels = std::vector<std::uint32_t>;
    struct Node {
        double value;
        Labels labels;
    };
    // Max-heap on value; equal values pop in ascending label order.
    const auto worse = [](const Node& a, const Node& b) {
        return a.value != b.value ? a.value < b.value : a.labels > b.labels;
    };
    std::priority_queue<Node, std::vector<Node>, decltype(worse)> frontier(worse);
    std::set<Labels> seen;

    Labels start(factors.size(), 0);
    frontier.push({label_sum(factors, start), start});
    seen.insert(start);

    std::vector<ComposedEigenvalue> out;
    while (out.size() < k && !frontier.empty()) {
        Node top = frontier.top();
        frontier.pop();
        for (std::size_t f = 0; f < factors.size(); ++f) {
            if (top.labels[f] + 1 >= factors[f].size()) continue;
            Labels next = top.labels;
            ++next[f];
            if (seen.insert(next).second) frontier.push({label_sum(factors, next), std::move(next)});
        }
        out.push_back({top.value, std::move(top.labels)});
    }
    return out;
}

Eigen::VectorXd kronecker_product(std::span<const Eigen::VectorXd> factors) {
    if (factors.empty()) throw InvalidParameter("kronecker product needs at least one factor");
    Eigen::VectorXd acc = factors[0];
    for (std::size_t k = 1; k < factors.size(); ++k) {
        const auto& f = factors[k];
        Eigen::VectorXd next(acc.size() * f.size());
        for (Eigen::Index i = 0; i < acc.size(); ++i) next.segment(i * f.size(), f.size()) = acc(i) * f;
        acc = std::move(next);
    }
    return acc;
}

Eigen::VectorXd product_eigenvector(const ComposedSpectrum& c, std::span<const std::uint32_t> labels) {
    const auto& factors = c.factor_spectra();
    if (labels.size() != factors.size()) {
        throw InvalidParameter("label tuple length " + std::to_string(labels.size()) + " does not match " +
                               std::to_string(factors.size()) + " factors");
    }
    std::vector<Eigen::VectorXd> parts;
    parts.reserve(factors.size());
    for (std::size_t k = 0; k < factors.size(); ++k) {
        if (labels[k] >= factors[k].size()) {
            throw InvalidParameter("label " + std::to_string(labels[k]) + " out of range for factor " +
                                   std::to_string(k));
        }
        if (!factors[k].has_eigenvectors()) {
            throw InvalidParameter("factor " + std::to_string(k) + " spectrum has no eigenvectors");
        }
        parts.push_back(factors[k].eigenvector(labels[k]));
    }
    return kronecker_product(parts);
}

}  // namespace qlgraph
