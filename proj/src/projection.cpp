#include "qlgraph/projection.hpp"

#include <algorithm>
#include <cmath>

#include "qlgraph/error.hpp"

namespace qlgraph {

namespace {

struct FactorProjection {
    double zero = 0.0;      // <x, J_1>
    double one = 0.0;       // <x, J_2>
    double residual2 = 0.0; // ||x - zero J_1 - one J_2||^2
};

FactorProjection project_factor(const Eigen::VectorXd& x, const QLBit& q) {
    if (static_cast<std::size_t>(x.size()) != q.dim()) {
        throw InvalidParameter("factor vector has dimension " + std::to_string(x.size()) + ", QL-bit has " +
                               std::to_string(q.dim()));
    }
    const JBasis j = j_basis(q);
    FactorProjection out;
    out.zero = x.dot(j.zero);
    out.one = x.dot(j.one);
    out.residual2 = (x - out.zero * j.zero - out.one * j.one).squaredNorm();
    return out;
}

}  // namespace

JBasis j_basis(const QLBit& q) {
    return {block_uniform_vector(q, 1), block_uniform_vector(q, 2)};
}

BlockSplit block_split(const Eigen::VectorXd& v, const QLBit& q) {
    if (static_cast<std::size_t>(v.size()) != q.dim()) {
        throw InvalidParameter("vector dimension " + std::to_string(v.size()) + " does not match QL-bit dimension " +
                               std::to_string(q.dim()));
    }
    const auto n1 = static_cast<Eigen::Index>(q.block_1_size());
    BlockSplit out{Eigen::VectorXd::Zero(v.size()), Eigen::VectorXd::Zero(v.size())};
    out.block_1.head(n1) = v.head(n1);
    out.block_2.tail(v.size() - n1) = v.tail(v.size() - n1);
    return out;
}

std::string ProjectionReport::bit_string(std::size_t index, std::size_t qubits) {
    std::string s(qubits, '0');
    for (std::size_t k = 0; k < qubits; ++k) {
        if (index & (std::size_t{1} << (qubits - 1 - k))) s[k] = '1';
    }
    return s;
}

double ProjectionReport::alpha(const std::string& bits) const {
    if (bits.size() != qubits) throw InvalidParameter("bit string length does not match qubit count");
    std::size_t index = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') throw InvalidParameter("bit string must contain only 0 and 1");
        index = (index << 1) | static_cast<std::size_t>(c == '1');
    }
    return alphas[index];
}

std::map<std::string, double> ProjectionReport::alpha_map() const {
    std::map<std::string, double> out;
    for (std::size_t b = 0; b < alphas.size(); ++b) out.emplace(bit_string(b, qubits), alphas[b]);
    return out;
}

ProjectionReport project_alphas(const Eigen::VectorXd& v, std::span<const QLBit> qlbits) {
    if (qlbits.empty()) throw InvalidParameter("projection needs at least one QL-bit");
    const std::size_t nq = qlbits.size();
    if (nq >= 8 * sizeof(std::size_t)) throw InvalidParameter("too many QL-bits");

    std::vector<std::size_t> dims;
    std::vector<std::size_t> block_1;
    for (const auto& q : qlbits) {
        dims.push_back(q.dim());
        block_1.push_back(q.block_1_size());
    }
    const MixedRadix index(dims);
    if (static_cast<std::size_t>(v.size()) != index.size()) {
        throw InvalidParameter("vector dimension " + std::to_string(v.size()) + " does not match product dimension " +
                               std::to_string(index.size()));
    }

    // J-product for bit string b is c_b on its support, c_b = prod_k 1/sqrt(block size).
    const std::size_t n_bits = std::size_t{1} << nq;
    std::vector<double> scale(n_bits, 1.0);
    for (std::size_t b = 0; b < n_bits; ++b) {
        for (std::size_t k = 0; k < nq; ++k) {
            const bool one = b & (std::size_t{1} << (nq - 1 - k));
            const auto size = one ? qlbits[k].block_2_size() : qlbits[k].block_1_size();
            scale[b] /= std::sqrt(static_cast<double>(size));
        }
    }

    std::vector<std::size_t> t(nq, 0);
    const auto bits_of = [&] {
        std::size_t b = 0;
        for (std::size_t k = 0; k < nq; ++k) b = (b << 1) | static_cast<std::size_t>(t[k] >= block_1[k]);
        return b;
    };
    const auto advance = [&] {
        for (std::size_t k = nq; k-- > 0;) {
            if (++t[k] < dims[k]) return;
            t[k] = 0;
        }
    };

    std::vector<double> sums(n_bits, 0.0);
    for (Eigen::Index i = 0; i < v.size(); ++i, advance()) sums[bits_of()] += v(i);

    ProjectionReport out;
    out.qubits = nq;
    out.alphas.resize(n_bits);
    for (std::size_t b = 0; b < n_bits; ++b) out.alphas[b] = sums[b] * scale[b];

    std::fill(t.begin(), t.end(), 0);
    double residual2 = 0.0;
    for (Eigen::Index i = 0; i < v.size(); ++i, advance()) {
        const std::size_t b = bits_of();
        const double r = v(i) - out.alphas[b] * scale[b];
        residual2 += r * r;
    }
    out.residual_norm = std::sqrt(residual2);
    out.norm = v.norm();
    return out;
}

ProjectionReport project_alphas(std::span<const Eigen::VectorXd> factor_vectors, std::span<const QLBit> qlbits) {
    if (qlbits.empty()) throw InvalidParameter("projection needs at least one QL-bit");
    if (factor_vectors.size() != qlbits.size()) {
        throw InvalidParameter("need one factor vector per QL-bit");
    }
    const std::size_t nq = qlbits.size();
    std::vector<FactorProjection> parts;
    for (std::size_t k = 0; k < nq; ++k) parts.push_back(project_factor(factor_vectors[k], qlbits[k]));

    ProjectionReport out;
    out.qubits = nq;
    const std::size_t n_bits = std::size_t{1} << nq;
    out.alphas.assign(n_bits, 1.0);
    for (std::size_t b = 0; b < n_bits; ++b) {
        for (std::size_t k = 0; k < nq; ++k) {
            const bool one = b & (std::size_t{1} << (nq - 1 - k));
            out.alphas[b] *= one ? parts[k].one : parts[k].zero;
        }
    }

    // ||v||^2 - sum alpha^2 = prod(p_k + r_k) - prod(p_k), expanded so that no
    // two nearly equal quantities are subtracted.
    double residual2 = 0.0;
    double norm2 = 1.0;
    for (std::size_t k = 0; k < nq; ++k) {
        double term = parts[k].residual2;
        for (std::size_t j = 0; j < nq; ++j) {
            if (j == k) continue;
            const double p = parts[j].zero * parts[j].zero + parts[j].one * parts[j].one;
            term *= j < k ? p : p + parts[j].residual2;
        }
        residual2 += term;
        norm2 *= factor_vectors[k].squaredNorm();
    }
    out.residual_norm = std::sqrt(residual2);
    out.norm = std::sqrt(norm2);
    return out;
}

ProjectionReport project_alphas(const ComposedSpectrum& c, std::span<const std::uint32_t> labels,
                                std::span<const QLBit> qlbits) {
    const auto& factors = c.factor_spectra();
    if (labels.size() != factors.size() || qlbits.size() != factors.size()) {
        throw InvalidParameter("labels, QL-bits and factor spectra must have the same length");
    }
    std::vector<Eigen::VectorXd> vectors;
    double value = 0.0;
    for (std::size_t k = 0; k < factors.size(); ++k) {
        if (!factors[k].has_eigenvectors()) {
            throw InvalidParameter("factor " + std::to_string(k) + " spectrum has no eigenvectors");
        }
        if (labels[k] >= factors[k].size()) {
            throw InvalidParameter("label out of range for factor " + std::to_string(k));
        }
        vectors.push_back(factors[k].eigenvector(labels[k]));
        value += factors[k][labels[k]];
    }
    ProjectionReport out = project_alphas(std::span<const Eigen::VectorXd>(vectors), qlbits);
    out.eigenvalue = value;
    out.labels.assign(labels.begin(), labels.end());
    return out;
}

bool sign_pattern_matches(std::span<const double> alphas, std::span<const int> expected, double zero_tol) {
    if (alphas.size() != expected.size() || alphas.empty()) return false;
    double overlap = 0.0;
    for (std::size_t i = 0; i < alphas.size(); ++i) overlap += alphas[i] * expected[i];
    const int global = overlap >= 0.0 ? 1 : -1;
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        if (std::abs(alphas[i]) <= zero_tol) return false;
        const int s = alphas[i] > 0.0 ? 1 : -1;
        if (s * global != expected[i]) return false;
    }
    return true;
}

BellReport bell_state_check(const QLBit& a, const QLBit& b, const EmergentOptions& options) {
    BellReport report;
    const std::array<const QLBit*, 2> bits{&a, &b};
    const std::array<const char*, 2> names{"a", "b"};
    // [factor][0] = in-phase state, [factor][1] = out-of-phase state
    std::array<std::array<EmergentState, 2>, 2> states;

    for (std::size_t f = 0; f < 2; ++f) {
        const EmergentPair pair = emergent_pair(*bits[f], options);
        if (pair.degraded_isolation) {
            report.warnings.push_back(std::string("QL-bit ") + names[f] +
                                      ": emergent pair is not isolated from the random band");
        }
        const auto& s0 = pair.states[0];
        const auto& s1 = pair.states[1];
        if (s0.phase == Phase::in_phase && s1.phase == Phase::out_of_phase) {
            states[f] = {s0, s1};
        } else if (s0.phase == Phase::out_of_phase && s1.phase == Phase::in_phase) {
            states[f] = {s1, s0};
        } else {
            report.warnings.push_back(std::string("QL-bit ") + names[f] + ": emergent states are " +
                                      to_string(s0.phase) + "/" + to_string(s1.phase) +
                                      ", not one in-phase and one out-of-phase");
            states[f] = {s0, s1};
        }
    }

    // (a phase, b phase), false = in-phase (+), true = out-of-phase (-)
    constexpr std::array<std::array<bool, 2>, 4> order{{{false, false}, {true, false}, {false, true}, {true, true}}};
    const std::array<QLBit, 2> pair_bits{a, b};
    report.all_match = true;
    for (std::size_t c = 0; c < 4; ++c) {
        auto& combo = report.combinations[c];
        const bool minus_a = order[c][0];
        const bool minus_b = order[c][1];
        combo.in_phase = {!minus_a, !minus_b};
        combo.name = std::string("a1") + (minus_a ? "-" : "+") + "a2 [] b1" + (minus_b ? "-" : "+") + "b2";
        const auto& sa = states[0][minus_a ? 1 : 0];
        const auto& sb = states[1][minus_b ? 1 : 0];
        combo.eigenvalue = sa.eigenvalue + sb.eigenvalue;

        const std::array<Eigen::VectorXd, 2> vectors{sa.vector, sb.vector};
        combo.report = project_alphas(std::span<const Eigen::VectorXd>(vectors), std::span<const QLBit>(pair_bits));
        combo.report.eigenvalue = combo.eigenvalue;

        for (std::size_t bit = 0; bit < 4; ++bit) {
            const bool bit_a = bit & 2;
            const bool bit_b = bit & 1;
            const int sign_a = (minus_a && bit_a) ? -1 : 1;
            const int sign_b = (minus_b && bit_b) ? -1 : 1;
            combo.expected_signs[bit] = sign_a * sign_b;
        }
        combo.signs_match = sign_pattern_matches(combo.report.alphas, combo.expected_signs);
        for (double alpha : combo.report.alphas) {
            combo.max_magnitude_deviation = std::max(combo.max_magnitude_deviation, std::abs(std::abs(alpha) - 0.5));
        }
        report.all_match = report.all_match && combo.signs_match;
        report.max_magnitude_deviation = std::max(report.max_magnitude_deviation, combo.max_magnitude_deviation);
        report.max_residual = std::max(report.max_residual, combo.report.residual_norm);
    }
    return report;
}

}  // namespace qlgraph
