#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "qlgraph/graph.hpp"
#include "qlgraph/spectrum.hpp"

namespace qlgraph {

inline constexpr std::size_t kDefaultProductSizeCap = 100'000;
// Largest composed spectrum compose_spectra will enumerate.
inline constexpr std::size_t kDefaultComposeCap = 50'000'000;

// Mixed-radix map between per-factor index tuples and flat indices. The first
// factor varies slowest: flat = i_1*(n_2...n_N) + ... + i_N. Every product
// object in the library uses this convention, which is also the operand order
// of A_G (x) I + I (x) A_H.
class MixedRadix {
public:
    explicit MixedRadix(std::vector<std::size_t> dims);

    std::size_t size() const noexcept { return total_; }
    std::size_t factor_count() const noexcept { return dims_.size(); }
    const std::vector<std::size_t>& dims() const noexcept { return dims_; }

    std::size_t flat(std::span<const std::size_t> tuple) const;
    std::vector<std::size_t> tuple(std::size_t flat) const;

private:
    std::vector<std::size_t> dims_;
    std::vector<std::size_t> strides_;
    std::size_t total_;
};

class ProductGraph {
public:
    ProductGraph(std::vector<Graph> factors, Graph composite);

    const std::vector<Graph>& factors() const noexcept { return factors_; }
    const Graph& composite() const noexcept { return composite_; }
    const MixedRadix& index() const noexcept { return index_; }

private:
    std::vector<Graph> factors_;
    Graph composite_;
    MixedRadix index_;
};

// G [] H by explicit edge construction: ((u,x),(v,x)) for every [u,v] in E(G)
// and ((u,x),(u,y)) for every [x,y] in E(H), weights inherited.
ProductGraph cartesian_product(const Graph& g, const Graph& h, std::size_t size_cap = kDefaultProductSizeCap);
// Left fold over N >= 1 factors.
ProductGraph cartesian_product(std::span<const Graph> factors, std::size_t size_cap = kDefaultProductSizeCap);

// A_G (x) I_|H| + I_|G| (x) A_H. Diagonal disorder carried by either factor
// adds along the diagonal.
AdjacencyMatrix kronecker_sum_adjacency(const AdjacencyMatrix& a_g, const AdjacencyMatrix& a_h,
                                        std::size_t size_cap = kDefaultProductSizeCap);

struct ComposedEigenvalue {
    double value = 0.0;
    std::vector<std::uint32_t> labels;
};

// All sums lambda_{i_1} + ... + lambda_{i_N} of the factor spectra, each
// tagged with the per-factor eigen-indices it came from. Sorted descending by
// value, ties by label tuple. Degenerate sums stay separate entries.
class ComposedSpectrum {
public:
    std::size_t size() const noexcept { return values_.size(); }
    std::size_t factor_count() const noexcept { return factors_.size(); }
    double value(std::size_t i) const { return values_[i]; }
    const std::vector<double>& values() const noexcept { return values_; }
    std::span<const std::uint32_t> labels(std::size_t i) const {
        return {labels_.data() + i * factors_.size(), factors_.size()};
    }
    const std::vector<Spectrum>& factor_spectra() const noexcept { return factors_; }

    friend ComposedSpectrum compose_spectra(std::vector<Spectrum> factor_spectra, std::size_t cap);

private:
    std::vector<Spectrum> factors_;
    std::vector<double> values_;
    std::vector<std::uint32_t> labels_;  // row-major, factor_count() per entry
};

// Never builds the product matrix; cost is O(prod n_k log prod n_k).
ComposedSpectrum compose_spectra(std::vector<Spectrum> factor_spectra, std::size_t cap = kDefaultComposeCap);

// The k largest composed eigenvalues by best-first search over label tuples.
// Exact, and independent of prod n_k.
std::vector<ComposedEigenvalue> compose_top(std::span<const Spectrum> factor_spectra, std::size_t k);

// X_{i_1} (x) ... (x) X_{i_N} in the MixedRadix convention.
Eigen::VectorXd product_eigenvector(const ComposedSpectrum& c, std::span<const std::uint32_t> labels);
Eigen::VectorXd kronecker_product(std::span<const Eigen::VectorXd> factors);

}  // namespace qlgraph
