#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "qlgraph/product.hpp"

namespace qlgraph {

enum class StateKind { emergent, hybrid, random };

// Per composed eigenvalue. `emergent_components` counts the factors whose
// label is one of that factor's declared emergent indices: N for emergent,
// 0 for random, 1..N-1 for hybrid.
struct StateLabel {
    StateKind kind = StateKind::random;
    std::size_t emergent_components = 0;

    friend bool operator==(const StateLabel&, const StateLabel&) = default;
};

std::string to_string(const StateLabel& label);

using EmergentIndexSets = std::vector<std::set<std::uint32_t>>;

std::vector<StateLabel> classify_states(const ComposedSpectrum& c, const EmergentIndexSets& factor_emergent);
StateLabel classify_labels(std::span<const std::uint32_t> labels, const EmergentIndexSets& factor_emergent);

struct StateCounts {
    std::size_t emergent = 0;
    std::size_t random = 0;
    std::vector<std::size_t> hybrid;  // hybrid[k] = count with k emergent components
};

StateCounts count_states(const std::vector<StateLabel>& labels, std::size_t factor_count);

// For an all-emergent state of a QL-bit product: the number of factors that
// sit in their lower emergent level (label equal to the larger index of the
// factor's emergent set). 0 is the "A" state, 1 the "B" band, 2 "C", ...
std::size_t emergent_band(std::span<const std::uint32_t> labels, const EmergentIndexSets& factor_emergent);
char emergent_band_letter(std::size_t band);

}  // namespace qlgraph
