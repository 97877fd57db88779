#include "qlgraph/qlbit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "qlgraph/error.hpp"

namespace qlgraph {

namespace {

Graph assemble_composite(const Graph& b1, const Graph& b2, const std::vector<CouplingEdge>& coupling) {
    const std::size_t n1 = b1.vertex_count();
    std::vector<Edge> edges;
    edges.reserve(b1.edge_count() + b2.edge_count() + coupling.size());
    for (const auto& e : b1.edges()) edges.push_back(e);
    for (const auto& e : b2.edges()) edges.push_back({e.u + n1, e.v + n1, e.weight});
    for (const auto& c : coupling) edges.push_back({c.u, c.v + n1, c.weight});
    return Graph(n1 + b2.vertex_count(), std::move(edges));
}

void check_sign(int sign) {
    if (sign != 1 && sign != -1) {
        throw InvalidParameter("coupling sign must be +1 or -1, got " + std::to_string(sign));
    }
}

// Rotates the degenerate pair (columns of `basis`) onto the directions
// closest to `first` and `second`, orthonormalized in that order.
std::array<Eigen::VectorXd, 2> resolve_degenerate(const Eigen::MatrixXd& basis, const Eigen::VectorXd& first,
                                                  const Eigen::VectorXd& second) {
    constexpr double kTiny = 1e-12;
    Eigen::VectorXd a = basis * (basis.transpose() * first);
    if (a.norm() < kTiny) a = basis.col(0);
    a.normalize();

    Eigen::VectorXd b = basis * (basis.transpose() * second);
    b -= a.dot(b) * a;
    if (b.norm() < kTiny) {
        // `second` has no weight left in the eigenspace; take whatever
        // direction of the pair is orthogonal to `a`.
        b = basis.col(0) - a.dot(basis.col(0)) * a;
        if (b.norm() < kTiny) b = basis.col(1) - a.dot(basis.col(1)) * a;
    }
    b.normalize();
    return {a, b};
}

}  // namespace

QLBit::QLBit(Graph basis_1, Graph basis_2, std::vector<CouplingEdge> coupling, int sign)
    : basis_1_(std::move(basis_1)),
      basis_2_(std::move(basis_2)),
      coupling_(std::move(coupling)),
      sign_(sign),
      composite_(1) {
    check_sign(sign_);
    for (const auto& c : coupling_) {
        if (c.u >= basis_1_.vertex_count() || c.v >= basis_2_.vertex_count()) {
            throw InvalidParameter("coupling edge (" + std::to_string(c.u) + ", " + std::to_string(c.v) +
                                   ") is outside the basis graphs");
        }
    }
    std::sort(coupling_.begin(), coupling_.end(), [](const CouplingEdge& a, const CouplingEdge& b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    });
    // Duplicates and bad weights are caught by the composite Graph.
    composite_ = assemble_composite(basis_1_, basis_2_, coupling_);
}

QLBit couple(const Graph& basis_1, const Graph& basis_2, double p, int sign, RngSeed seed) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw InvalidParameter("coupling probability must be in [0, 1]");
    }
    check_sign(sign);
    Rng rng(seed);
    std::vector<CouplingEdge> coupling;
    for (std::size_t u = 0; u < basis_1.vertex_count(); ++u) {
        for (std::size_t v = 0; v < basis_2.vertex_count(); ++v) {
            if (rng.bernoulli(p)) coupling.push_back({u, v, static_cast<double>(sign)});
        }
    }
    return QLBit(basis_1, basis_2, std::move(coupling), sign);
}

SplittingPrediction predict_splitting(const QLBit& q) {
    SplittingPrediction out;
    const Spectrum s1 = eigendecompose(adjacency(q.basis_1()));
    const auto n = static_cast<double>(q.block_1_size());
    out.n_coupling = q.coupling_edges().size();
    out.d_eff = s1[0];
    out.delta = static_cast<double>(out.n_coupling) / n;
    out.upper = out.d_eff + out.delta;
    out.lower = out.d_eff - out.delta;
    out.unequal_sizes = q.block_1_size() != q.block_2_size();
    return out;
}

const char* to_string(Phase phase) {
    switch (phase) {
        case Phase::in_phase: return "in-phase";
        case Phase::out_of_phase: return "out-of-phase";
        case Phase::localized: return "localized";
    }
    return "unknown";
}

Phase classify_phase(const Eigen::VectorXd& v, std::size_t block_1_size) {
    const auto n1 = static_cast<Eigen::Index>(block_1_size);
    const auto n2 = v.size() - n1;
    if (n1 <= 0 || n2 <= 0) {
        throw InvalidParameter("vector does not span two nonempty blocks");
    }
    const double m1 = v.head(n1).mean();
    const double m2 = v.tail(n2).mean();
    const double scale = v.cwiseAbs().maxCoeff();
    const double tol = 1e-8 * scale;
    if (std::abs(m1) <= tol || std::abs(m2) <= tol) return Phase::localized;
    return (m1 > 0) == (m2 > 0) ? Phase::in_phase : Phase::out_of_phase;
}

Eigen::VectorXd block_uniform_vector(const QLBit& q, int block) {
    if (block != 1 && block != 2) {
        throw InvalidParameter("block must be 1 or 2");
    }
    const auto n1 = static_cast<Eigen::Index>(q.block_1_size());
    const auto n2 = static_cast<Eigen::Index>(q.block_2_size());
    Eigen::VectorXd j = Eigen::VectorXd::Zero(n1 + n2);
    if (block == 1) {
        j.head(n1).setConstant(1.0 / std::sqrt(static_cast<double>(n1)));
    } else {
        j.tail(n2).setConstant(1.0 / std::sqrt(static_cast<double>(n2)));
    }
    return j;
}

EmergentPair emergent_pair(const QLBit& q, const EmergentOptions& options) {
    return emergent_pair(q, eigendecompose(adjacency(q.composite()), true), options);
}

EmergentPair emergent_pair(const QLBit& q, const Spectrum& s, const EmergentOptions& options) {
    if (s.size() != q.dim()) {
        throw InvalidParameter("composite spectrum dimension does not match the QL-bit");
    }
    if (s.size() < 2) {
        throw InvalidParameter("QL-bit composite needs at least two vertices");
    }
    const auto& vectors = s.eigenvectors();

    EmergentPair out;
    out.states[0].eigenvalue = s[0];
    out.states[1].eigenvalue = s[1];
    out.degenerate = std::abs(s[0] - s[1]) <= options.degeneracy_tolerance * std::max(1.0, std::abs(s[0]));

    if (out.degenerate) {
        const Eigen::VectorXd j1 = block_uniform_vector(q, 1);
        const Eigen::VectorXd j2 = block_uniform_vector(q, 2);
        const Eigen::VectorXd sym = (j1 + j2) / std::sqrt(2.0);
        const Eigen::VectorXd anti = (j1 - j2) / std::sqrt(2.0);
        const bool sym_first = q.sign() > 0;
        auto resolved = resolve_degenerate(vectors.leftCols(2), sym_first ? sym : anti, sym_first ? anti : sym);
        out.states[0].vector = std::move(resolved[0]);
        out.states[1].vector = std::move(resolved[1]);
    } else {
        out.states[0].vector = vectors.col(0);
        out.states[1].vector = vectors.col(1);
    }
    for (auto& state : out.states) {
        fix_sign(state.vector);
        state.phase = classify_phase(state.vector, q.block_1_size());
    }

    const double d = static_cast<double>(q.basis_1().max_degree());
    const double band_edge = d >= 1.0 ? 2.0 * std::sqrt(d - 1.0) : 0.0;
    if (s.size() >= 3) {
        out.next_eigenvalue = s[2];
        out.isolation_gap = s[1] - s[2];
        out.isolation_threshold = std::max(options.min_gap, band_edge - s[2]);
        out.degraded_isolation = !(out.isolation_gap > out.isolation_threshold);
    } else {
        out.next_eigenvalue = -std::numeric_limits<double>::infinity();
        out.isolation_gap = std::numeric_limits<double>::infinity();
        out.isolation_threshold = options.min_gap;
    }
    return out;
}

}  // namespace qlgraph
