#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "qlgraph/graph.hpp"

namespace qlgraph {

// Eigenvalues in descending order, optionally with the matching orthonormal
// eigenvectors as columns.
class Spectrum {
public:
    Spectrum(std::vector<double> eigenvalues, std::optional<Eigen::MatrixXd> eigenvectors = std::nullopt);

    std::size_t size() const noexcept { return values_.size(); }
    std::size_t source_dim() const noexcept { return values_.size(); }
    const std::vector<double>& eigenvalues() const noexcept { return values_; }
    double operator[](std::size_t i) const { return values_[i]; }

    bool has_eigenvectors() const noexcept { return vectors_.has_value(); }
    // Throws InvalidParameter when the spectrum was computed without vectors.
    const Eigen::MatrixXd& eigenvectors() const;
    Eigen::VectorXd eigenvector(std::size_t i) const;

private:
    std::vector<double> values_;
    std::optional<Eigen::MatrixXd> vectors_;
};

// Flips v in place so that its largest-magnitude component is positive.
// Among components equal in magnitude (to relative 1e-9) the first wins, so
// the result does not depend on last-bit noise.
void fix_sign(Eigen::Ref<Eigen::VectorXd> v);

inline constexpr double kSymmetryTolerance = 1e-12;

// Full dense symmetric eigendecomposition. Eigenvectors are sign-fixed with
// fix_sign().
Spectrum eigendecompose(const AdjacencyMatrix& a, bool want_vectors = false);
// General entry point: checks symmetry to kSymmetryTolerance first.
Spectrum eigendecompose(const Eigen::MatrixXd& a, bool want_vectors = false);

// lambda_0 - lambda_1.
double spectral_gap(const Spectrum& s);

struct AlonBoppanaReport {
    double bound = 0.0;     // 2 sqrt(d - 1)
    double lambda_1 = 0.0;  // second-largest eigenvalue
    double slack = 0.0;
    bool satisfied = false; // lambda_1 <= bound + slack
};

inline constexpr double kDefaultAlonBoppanaSlack = 0.5;

AlonBoppanaReport alon_boppana_check(const Spectrum& s, std::size_t d,
                                     double slack = kDefaultAlonBoppanaSlack);

// max_i ||A v_i - lambda_i v_i||_inf / max(1, |lambda_i|).
double max_scaled_residual(const Eigen::MatrixXd& a, const Spectrum& s);
// max |V^T V - I| entry.
double orthonormality_error(const Spectrum& s);

}  // namespace qlgraph
