#include "qlgraph/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qlgraph/error.hpp"

namespace qlgraph {

Spectrum::Spectrum(std::vector<double> eigenvalues, std::optional<Eigen::MatrixXd> eigenvectors)
    : values_(std::move(eigenvalues)), vectors_(std::move(eigenvectors)) {
    if (!std::is_sorted(values_.begin(), values_.end(), std::greater<>{})) {
        throw InvalidInput("spectrum eigenvalues must be sorted in descending order");
    }
    if (vectors_ && (static_cast<std::size_t>(vectors_->cols()) != values_.size() ||
                     static_cast<std::size_t>(vectors_->rows()) != values_.size())) {
        throw InvalidInput("eigenvector matrix shape does not match the eigenvalue count");
    }
}

const Eigen::MatrixXd& Spectrum::eigenvectors() const {
    if (!vectors_) throw InvalidParameter("spectrum was computed without eigenvectors");
    return *vectors_;
}

Eigen::VectorXd Spectrum::eigenvector(std::size_t i) const {
    const auto& v = eigenvectors();
    if (i >= values_.size()) {
        throw InvalidParameter("eigenvector index " + std::to_string(i) + " out of range");
    }
    return v.col(static_cast<Eigen::Index>(i));
}

void fix_sign(Eigen::Ref<Eigen::VectorXd> v) {
    if (v.size() == 0) return;
    const double peak = v.cwiseAbs().maxCoeff();
    if (peak == 0.0) return;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (std::abs(v(i)) >= peak * (1.0 - 1e-9)) {
            if (v(i) < 0.0) v = -v;
            return;
        }
    }
}

Spectrum eigendecompose(const AdjacencyMatrix& a, bool want_vectors) {
    const auto& m = a.entries();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
        m, want_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw NumericalFailure("symmetric eigensolver did not converge (dim " + std::to_string(m.rows()) +
                               ", max |entry| " + std::to_string(m.cwiseAbs().maxCoeff()) + ")");
    }
    // Eigen returns ascending order.
    const auto n = m.rows();
    std::vector<double> values(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) {
        values[static_cast<std::size_t>(i)] = solver.eigenvalues()(n - 1 - i);
    }
    if (!want_vectors) return Spectrum(std::move(values));

    Eigen::MatrixXd vectors = solver.eigenvectors().rowwise().reverse();
    for (Eigen::Index j = 0; j < n; ++j) fix_sign(vectors.col(j));
    return Spectrum(std::move(values), std::move(vectors));
}

Spectrum eigendecompose(const Eigen::MatrixXd& a, bool want_vectors) {
    if (a.rows() != a.cols() || a.rows() == 0) {
        throw InvalidInput("eigendecompose needs a square nonempty matrix");
    }
    const double asym = (a - a.transpose()).cwiseAbs().maxCoeff();
    if (asym > kSymmetryTolerance) {
        throw InvalidInput("matrix is not symmetric (max |A - A^T| = " + std::to_string(asym) + ")");
    }
    // Symmetrize the residual rounding so AdjacencyMatrix's exact check holds.
    Eigen::MatrixXd sym = 0.5 * (a + a.transpose());
    return eigendecompose(AdjacencyMatrix(std::move(sym)), want_vectors);
}

double spectral_gap(const Spectrum& s) {
    if (s.size() < 2) {
        throw InvalidParameter("spectral gap needs at least two eigenvalues");
    }
    return s[0] - s[1];
}

AlonBoppanaReport alon_boppana_check(const Spectrum& s, std::size_t d, double slack) {
    AlonBoppanaReport report;
    report.bound = d >= 1 ? 2.0 * std::sqrt(static_cast<double>(d) - 1.0) : 0.0;
    report.lambda_1 = s.size() >= 2 ? s[1] : s[0];
    report.slack = slack;
    report.satisfied = report.lambda_1 <= report.bound + slack;
    return report;
}

double max_scaled_residual(const Eigen::MatrixXd& a, const Spectrum& s) {
    const auto& v = s.eigenvectors();
    double worst = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const auto col = v.col(static_cast<Eigen::Index>(i));
        const double r = (a * col - s[i] * col).cwiseAbs().maxCoeff();
        worst = std::max(worst, r / std::max(1.0, std::abs(s[i])));
    }
    return worst;
}

double orthonormality_error(const Spectrum& s) {
    const auto& v = s.eigenvectors();
    const Eigen::MatrixXd gram = v.transpose() * v;
    return (gram - Eigen::MatrixXd::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
}

}  // namespace qlgraph
