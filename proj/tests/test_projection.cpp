#include <doctest.h>

#include <cmath>

#include "qlgraph/error.hpp"
#include "qlgraph/projection.hpp"

using namespace qlgraph;

namespace {

QLBit regular_qlbit(std::size_t n, std::size_t d, double p, std::uint64_t seed, int sign = 1) {
    const Graph b1 = d_regular_random(n, d, RngSeed(seed).child(0));
    const Graph b2 = d_regular_random(n, d, RngSeed(seed).child(1));
    return couple(b1, b2, p, sign, RngSeed(seed, Stream::coupling));
}

Eigen::VectorXd random_vector(Eigen::Index n, std::uint64_t seed) {
    Rng r{RngSeed(seed)};
    Eigen::VectorXd v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = r.normal();
    return v;
}

}  // namespace

TEST_CASE("J basis and block split") {
    const QLBit q = regular_qlbit(6, 3, 0.3, 1);
    const JBasis j = j_basis(q);
    CHECK(std::abs(j.zero.norm() - 1.0) < 1e-15);
    CHECK(std::abs(j.one.norm() - 1.0) < 1e-15);
    CHECK(j.zero.dot(j.one) == 0.0);
    CHECK(j.zero.head(6).minCoeff() > 0.0);
    CHECK(j.zero.tail(6).cwiseAbs().maxCoeff() == 0.0);

    const Eigen::VectorXd v = random_vector(12, 3);
    const BlockSplit s = block_split(v, q);
    CHECK((s.block_1 + s.block_2 - v).norm() == 0.0);
    CHECK(s.block_1.tail(6).cwiseAbs().maxCoeff() == 0.0);
    CHECK_THROWS_AS(block_split(random_vector(5, 1), q), InvalidParameter);
}

TEST_CASE("single QL-bit projection examples") {
    const QLBit q = regular_qlbit(6, 3, 0.3, 2);
    const JBasis j = j_basis(q);
    const QLBit one[] = {q};
    const auto r0 = project_alphas(j.zero, one);
    CHECK(r0.qubits == 1);
    CHECK(std::abs(r0.alpha("0") - 1.0) < 1e-15);
    CHECK(std::abs(r0.alpha("1")) < 1e-15);
    CHECK(r0.residual_norm < 1e-15);

    const Eigen::VectorXd plus = (j.zero + j.one) / std::sqrt(2.0);
    const auto rp = project_alphas(plus, one);
    CHECK(std::abs(rp.alpha("0") - std::sqrt(0.5)) < 1e-15);
    CHECK(std::abs(rp.alpha("1") - std::sqrt(0.5)) < 1e-15);
    CHECK_THROWS_AS(rp.alpha("2"), InvalidParameter);
    CHECK_THROWS_AS(rp.alpha("00"), InvalidParameter);
}

TEST_CASE("two QL-bits: |00> projects to alpha_00 = 1 and factor 0 is the leading bit") {
    const QLBit a = regular_qlbit(6, 3, 0.3, 3);
    const QLBit b = regular_qlbit(8, 3, 0.3, 4);
    const QLBit qs[] = {a, b};
    const JBasis ja = j_basis(a);
    const JBasis jb = j_basis(b);
    const Eigen::VectorXd x[] = {ja.zero, jb.one};
    const auto r = project_alphas(std::span<const Eigen::VectorXd>(x), qs);
    CHECK(std::abs(r.alpha("01") - 1.0) < 1e-15);
    CHECK(std::abs(r.alpha("10")) < 1e-15);
    CHECK(ProjectionReport::bit_string(1, 2) == "01");
    CHECK(ProjectionReport::bit_string(2, 3) == "010");
}

TEST_CASE("direct and factored paths agree; Parseval holds") {
    for (std::uint64_t s = 0; s < 8; ++s) {
        const QLBit a = regular_qlbit(6, 3, 0.4, 10 + s);
        const QLBit b = regular_qlbit(4, 3, 0.4, 20 + s);
        const QLBit c = regular_qlbit(6, 5, 0.4, 30 + s);
        const QLBit qs[] = {a, b, c};
        const Eigen::VectorXd x[] = {random_vector(12, s), random_vector(8, s + 50), random_vector(12, s + 99)};
        const auto factored = project_alphas(std::span<const Eigen::VectorXd>(x), qs);
        const auto direct = project_alphas(kronecker_product(x), qs);
        REQUIRE(factored.alphas.size() == 8);
        for (std::size_t k = 0; k < 8; ++k) CHECK(std::abs(factored.alphas[k] - direct.alphas[k]) < 1e-12);
        CHECK(std::abs(factored.residual_norm - direct.residual_norm) < 1e-10);
        double sum2 = factored.residual_norm * factored.residual_norm;
        for (double alpha : factored.alphas) sum2 += alpha * alpha;
        CHECK(std::abs(sum2 - factored.norm * factored.norm) < 1e-9 * factored.norm * factored.norm);
    }
}

TEST_CASE("composed-spectrum projection of the emergent states") {
    const QLBit a = regular_qlbit(20, 15, 0.2, 40);
    const QLBit b = regular_qlbit(20, 15, 0.2, 41);
    const QLBit qs[] = {a, b};
    const auto c = compose_spectra({eigendecompose(adjacency(a.composite()), true),
                                    eigendecompose(adjacency(b.composite()), true)});
    const auto r = project_alphas(c, c.labels(0), qs);
    REQUIRE(r.eigenvalue.has_value());
    CHECK(*r.eigenvalue == c.value(0));
    for (double alpha : r.alphas) CHECK(alpha > 0.4);
    CHECK(r.residual_norm < 0.3);
    const auto novec = compose_spectra({eigendecompose(adjacency(a.composite()))});
    const QLBit qa[] = {a};
    CHECK_THROWS_AS(project_alphas(novec, novec.labels(0), qa), InvalidParameter);
}

TEST_CASE("sign_pattern_matches") {
    const double alphas[] = {0.5, -0.5, -0.5, 0.5};
    const int want[] = {1, -1, -1, 1};
    const int flipped[] = {-1, 1, 1, -1};
    const int other[] = {1, 1, -1, -1};
    CHECK(sign_pattern_matches(alphas, want));
    CHECK(sign_pattern_matches(alphas, flipped));
    CHECK_FALSE(sign_pattern_matches(alphas, other));
    const double with_zero[] = {0.5, 0.0, -0.5, 0.5};
    CHECK_FALSE(sign_pattern_matches(with_zero, want));
}

TEST_CASE("Bell-state sign patterns") {
    const QLBit a = regular_qlbit(20, 15, 0.1, 50);
    const QLBit b = regular_qlbit(20, 15, 0.1, 51);
    const BellReport r = bell_state_check(a, b);
    CHECK(r.all_match);
    CHECK(r.warnings.empty());
    CHECK(r.combinations[0].name == "a1+a2 [] b1+b2");
    CHECK(r.combinations[3].expected_signs == std::array<int, 4>{1, -1, -1, 1});
    CHECK(r.combinations[0].eigenvalue > r.combinations[3].eigenvalue);
    CHECK(r.max_magnitude_deviation < 0.1);
}

TEST_CASE("Bell check at p = 0 gives |alpha| = 1/2 exactly") {
    const Graph g = d_regular_random(10, 4, RngSeed(60));
    const QLBit a = couple(g, g, 0.0, 1, RngSeed(1));
    const QLBit b = couple(cycle_graph(7), cycle_graph(7), 0.0, 1, RngSeed(1));
    const BellReport r = bell_state_check(a, b);
    CHECK(r.all_match);
    CHECK(r.max_magnitude_deviation < 1e-9);
    CHECK(r.max_residual < 1e-9);
}

TEST_CASE("Bell check flags damaged bases") {
    // A disconnected basis pushes a second eigenvalue to the top of its block.
    const Graph broken(8, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4}});
    const QLBit a = couple(broken, cycle_graph(8), 0.0, 1, RngSeed(1));
    const QLBit b = couple(cycle_graph(6), cycle_graph(6), 0.2, 1, RngSeed(2));
    const BellReport r = bell_state_check(a, b);
    CHECK_FALSE(r.warnings.empty());
}
