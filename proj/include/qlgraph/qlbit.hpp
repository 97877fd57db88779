#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "qlgraph/graph.hpp"
#include "qlgraph/rng.hpp"
#include "qlgraph/spectrum.hpp"

namespace qlgraph {

// Cross edge between vertex `u` of basis_1 and vertex `v` of basis_2 (both
// indices local to their own basis graph).
struct CouplingEdge {
    std::size_t u = 0;
    std::size_t v = 0;
    double weight = 1.0;

    friend bool operator==(const CouplingEdge&, const CouplingEdge&) = default;
};

// Two basis graphs joined by random cross edges. The composite graph puts
// basis_1's vertices first, then basis_2's.
class QLBit {
public:
    // Validates the coupling list (in range, no duplicates, weights finite and
    // nonzero) and assembles the composite.
    QLBit(Graph basis_1, Graph basis_2, std::vector<CouplingEdge> coupling, int sign);

    const Graph& basis_1() const noexcept { return basis_1_; }
    const Graph& basis_2() const noexcept { return basis_2_; }
    const std::vector<CouplingEdge>& coupling_edges() const noexcept { return coupling_; }
    const Graph& composite() const noexcept { return composite_; }
    int sign() const noexcept { return sign_; }

    std::size_t block_1_size() const noexcept { return basis_1_.vertex_count(); }
    std::size_t block_2_size() const noexcept { return basis_2_.vertex_count(); }
    std::size_t dim() const noexcept { return composite_.vertex_count(); }

private:
    Graph basis_1_;
    Graph basis_2_;
    std::vector<CouplingEdge> coupling_;
    int sign_;
    Graph composite_;
};

// Each of the |basis_1|*|basis_2| cross pairs gets an edge of weight `sign`
// independently with probability p.
QLBit couple(const Graph& basis_1, const Graph& basis_2, double p, int sign, RngSeed seed);

struct SplittingPrediction {
    double d_eff = 0.0;   // largest eigenvalue of basis_1
    double delta = 0.0;   // n_c / n, n = |basis_1|
    double upper = 0.0;   // d_eff + delta
    double lower = 0.0;   // d_eff - delta
    std::size_t n_coupling = 0;
    bool unequal_sizes = false;
};

SplittingPrediction predict_splitting(const QLBit& q);

enum class Phase {
    in_phase,      // block means share sign: a1 + a2
    out_of_phase,  // block means have opposite signs: a1 - a2
    localized,     // one block carries (numerically) no mean amplitude
};

const char* to_string(Phase phase);

// Classifies v (on the composite's vertex space) by its block means.
Phase classify_phase(const Eigen::VectorXd& v, std::size_t block_1_size);

struct EmergentState {
    double eigenvalue = 0.0;
    Eigen::VectorXd vector;
    Phase phase = Phase::localized;
};

struct EmergentPair {
    std::array<EmergentState, 2> states;
    // Third eigenvalue and the isolation test applied to the pair.
    double next_eigenvalue = 0.0;
    double isolation_gap = 0.0;        // lambda_1 - lambda_2
    double isolation_threshold = 0.0;  // max(min_gap, band_edge - lambda_2)
    bool degraded_isolation = false;
    bool degenerate = false;           // lambda_0 == lambda_1 and resolved by symmetrization
};

struct EmergentOptions {
    double min_gap = 0.5;
    // Relative tolerance below which the top two eigenvalues count as one
    // degenerate level.
    double degeneracy_tolerance = 1e-9;
};

// The two largest eigenpairs of the composite, phase-classified. A degenerate
// top pair (p = 0 with equal basis emergent eigenvalues) is rotated within its
// eigenspace onto the block-symmetric and block-antisymmetric combinations.
// For sign = +1 the in-phase state comes first; for sign = -1 the coupling
// flips and the out-of-phase state is on top.
EmergentPair emergent_pair(const QLBit& q, const EmergentOptions& options = {});
// Same, reusing an already computed composite spectrum (with eigenvectors).
EmergentPair emergent_pair(const QLBit& q, const Spectrum& composite_spectrum,
                           const EmergentOptions& options = {});

// Unit vector that is constant on one block (1 or 2) and zero on the other.
Eigen::VectorXd block_uniform_vector(const QLBit& q, int block);

}  // namespace qlgraph
