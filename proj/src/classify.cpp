#include "qlgraph/classify.hpp"

#include "qlgraph/error.hpp"

namespace qlgraph {

std::string to_string(const StateLabel& label) {
    switch (label.kind) {
        case StateKind::emergent: return "emergent";
        case StateKind::random: return "random";
        case StateKind::hybrid: return "hybrid(" + std::to_string(label.emergent_components) + ")";
    }
    return "unknown";
}

StateLabel classify_labels(std::span<const std::uint32_t> labels, const EmergentIndexSets& factor_emergent) {
    const std::size_t n = labels.size();
    std::size_t hits = 0;
    for (std::size_t k = 0; k < n; ++k) {
        if (factor_emergent[k].contains(labels[k])) ++hits;
    }
    if (hits == n) return {StateKind::emergent, hits};
    if (hits == 0) return {StateKind::random, 0};
    return {StateKind::hybrid, hits};
}

std::vector<StateLabel> classify_states(const ComposedSpectrum& c, const EmergentIndexSets& factor_emergent) {
    const auto& factors = c.factor_spectra();
    if (factor_emergent.size() != factors.size()) {
        throw InvalidParameter("need one emergent index set per factor (" + std::to_string(factors.size()) +
                               "), got " + std::to_string(factor_emergent.size()));
    }
    for (std::size_t k = 0; k < factors.size(); ++k) {
        for (auto idx : factor_emergent[k]) {
            if (idx >= factors[k].size()) {
                throw InvalidParameter("emergent index " + std::to_string(idx) + " out of range for factor " +
                                       std::to_string(k));
            }
        }
    }
    std::vector<StateLabel> out;
    out.reserve(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) out.push_back(classify_labels(c.labels(i), factor_emergent));
    return out;
}

StateCounts count_states(const std::vector<StateLabel>& labels, std::size_t factor_count) {
    StateCounts counts;
    counts.hybrid.assign(factor_count + 1, 0);
    for (const auto& l : labels) {
        switch (l.kind) {
            case StateKind::emergent: ++counts.emergent; break;
            case StateKind::random: ++counts.random; break;
            case StateKind::hybrid: ++counts.hybrid[l.emergent_components]; break;
        }
    }
    return counts;
}

std::size_t emergent_band(std::span<const std::uint32_t> labels, const EmergentIndexSets& factor_emergent) {
    std::size_t band = 0;
    for (std::size_t k = 0; k < labels.size(); ++k) {
        const auto& set = factor_emergent[k];
        if (set.size() >= 2 && labels[k] == *set.rbegin()) ++band;
    }
    return band;
}

char emergent_band_letter(std::size_t band) {
    return band < 26 ? static_cast<char>('A' + band) : '?';
}

}  // namespace qlgraph
