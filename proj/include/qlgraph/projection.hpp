#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qlgraph/product.hpp"
#include "qlgraph/qlbit.hpp"

namespace qlgraph {

// The two-level basis of one QL-bit: zero = J_1 (uniform on block 1, the |0>
// state) and one = J_2 (uniform on block 2, the |1> state), both unit vectors
// on the composite vertex space.
struct JBasis {
    Eigen::VectorXd zero;
    Eigen::VectorXd one;
};

JBasis j_basis(const QLBit& q);

// Restrictions of v to the two blocks, each zero-padded to the full
// dimension, so block_1 + block_2 == v.
struct BlockSplit {
    Eigen::VectorXd block_1;
    Eigen::VectorXd block_2;
};

BlockSplit block_split(const Eigen::VectorXd& v, const QLBit& q);

// Qubit-basis amplitudes of a vector on the product of N QL-bits. alphas[b]
// belongs to the bit string whose first character is factor 0's bit, i.e.
// factor 0 is the most significant bit of b.
struct ProjectionReport {
    std::optional<double> eigenvalue;
    std::vector<std::uint32_t> labels;  // factor eigen-indices when known
    std::size_t qubits = 0;
    std::vector<double> alphas;
    double residual_norm = 0.0;  // mass of v outside span{J products}
    double norm = 0.0;           // ||v||

    static std::string bit_string(std::size_t index, std::size_t qubits);
    double alpha(const std::string& bits) const;
    std::map<std::string, double> alpha_map() const;
};

// Direct path: alpha_b = <v, J_{1,b_1} (x) ... (x) J_{N,b_N}>.
ProjectionReport project_alphas(const Eigen::VectorXd& v, std::span<const QLBit> qlbits);

// Factored path for v = x_1 (x) ... (x) x_N: alpha_b = prod_k <x_k, J_{k,b_k}>.
ProjectionReport project_alphas(std::span<const Eigen::VectorXd> factor_vectors, std::span<const QLBit> qlbits);

// Factored path for a composed eigenvector; throws InvalidParameter when the
// factor spectra carry no eigenvectors.
ProjectionReport project_alphas(const ComposedSpectrum& c, std::span<const std::uint32_t> labels,
                                std::span<const QLBit> qlbits);

// One of the four products of the two QL-bits' emergent states.
struct BellCombination {
    std::string name;             // e.g. "a1-a2 [] b1+b2"
    std::array<bool, 2> in_phase; // per factor: in-phase (+) or out-of-phase (-) state used
    double eigenvalue = 0.0;
    ProjectionReport report;
    std::array<int, 4> expected_signs{};  // over 00, 01, 10, 11
    bool signs_match = false;             // up to a global sign
    double max_magnitude_deviation = 0.0; // max_b | |alpha_b| - 1/2 |
};

struct BellReport {
    std::array<BellCombination, 4> combinations;
    bool all_match = false;
    double max_magnitude_deviation = 0.0;
    double max_residual = 0.0;
    std::vector<std::string> warnings;
};

// alpha sign patterns of the four emergent-pair products, in the order
// (a+,b+), (a-,b+), (a+,b-), (a-,b-), against the expected (++++), (++--),
// (+-+-), (+--+).
BellReport bell_state_check(const QLBit& a, const QLBit& b, const EmergentOptions& options = {});

// True when every alpha is nonzero and sign(alpha_i) == g * expected_i for one
// global sign g.
bool sign_pattern_matches(std::span<const double> alphas, std::span<const int> expected, double zero_tol = 1e-12);

}  // namespace qlgraph
