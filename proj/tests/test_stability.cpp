#include "ionsaddles/stability.hpp"

#include "ionsaddles/finder.hpp"
#include "ionsaddles/ring.hpp"

#include "test_util.hpp"

#include <doctest.h>

#include <cmath>

using namespace ionsaddles;

namespace {

Configuration two_ring_saddle() { return ring::embed(*ring::ring_saddle(2)); }

}  // namespace

TEST_CASE("two-electron ring saddle spectrum layout") {
    const auto spectrum = stability::analyze(two_ring_saddle(), ModelParams(2));
    CHECK(spectrum.n_unstable() == 2);
    CHECK(spectrum.n_zero() == 1);
    CHECK(spectrum.n_stable() == 3);
    CHECK_FALSE(spectrum.reaction_ambiguous);

    const auto report = stability::exponents(spectrum);
    CHECK(std::abs(report.lambda_r - 1.2139) < 1e-3);
    CHECK(report.n_u == 1);
    CHECK(std::abs(report.mu - 1.2918) < 1e-3);

    // The single non-reaction exponent equals mu * lambda_r.
    double other = 0.0;
    for (int k = 0; k < 6; ++k)
        if (spectrum.kind[static_cast<std::size_t>(k)] == stability::ModeKind::Unstable &&
            k != spectrum.reaction_index)
            other = spectrum.lyapunov[static_cast<std::size_t>(k)];
    CHECK(std::abs(other - 1.5681) < 1e-3);
    CHECK(other == doctest::Approx(report.mu * report.lambda_r).epsilon(1e-12));
}

TEST_CASE("eigenpairs satisfy the decomposition contract") {
    const Configuration c = two_ring_saddle();
    const ModelParams params(2);
    const auto spectrum = stability::analyze(c, params);
    const Eigen::MatrixXd h = hessian(c, params);
    for (int k = 0; k < 6; ++k)
        CHECK((h * spectrum.eigenvectors.col(k) - spectrum.eigenvalues(k) * spectrum.eigenvectors.col(k))
                  .norm() < 1e-9);
}

TEST_CASE("analyze rejects non-stationary configurations") {
    SplitMix64 rng(99);
    const Configuration c = testutil::random_configuration(3, rng);
    CHECK_THROWS_AS(stability::analyze(c, ModelParams(3)), stability::NotStationaryError);
}

TEST_CASE("exponents are an arithmetic identity on the stored spectrum") {
    const auto spectrum = stability::analyze(ring::embed(*ring::ring_saddle(5)), ModelParams(5));
    const auto report = stability::exponents(spectrum);
    double sum = 0.0;
    int count = 0;
    for (int k = 0; k < static_cast<int>(spectrum.eigenvalues.size()); ++k) {
        if (spectrum.kind[static_cast<std::size_t>(k)] != stability::ModeKind::Unstable) continue;
        if (k == spectrum.reaction_index) continue;
        sum += std::sqrt(-spectrum.eigenvalues(k));
        ++count;
    }
    CHECK(count == report.n_u);
    CHECK(std::abs(report.mu - sum / report.lambda_r) / report.mu < 1e-12);
}

TEST_CASE("reaction coordinate of the three-electron line saddle") {
    // A rough planar bead chain converges into the line saddle.
    Configuration start(3);
    start.positions[0] = {-0.8, 0.0, 1.2};
    start.positions[1] = {0.0, 0.0, 1.5};
    start.positions[2] = {0.8, 0.0, 1.2};
    finder::SearchParams params;
    const auto result = finder::newton_refine(start, ModelParams(3), params);
    REQUIRE(result.status == finder::NewtonStatus::Converged);
    CHECK(std::abs(potential_energy(result.config, ModelParams(3)) - (-7.3902)) < 1e-3);

    const auto spectrum = stability::analyze(result.config, ModelParams(3));
    const auto report = stability::exponents(spectrum);
    CHECK(std::abs(report.lambda_r - 1.0981) < 1e-3);
    CHECK(report.n_u == 3);
    CHECK(std::abs(report.mu - 3.7040) < 1e-3);
}

TEST_CASE("reaction choice maximizes the uniform-z overlap") {
    const auto spectrum = stability::analyze(ring::embed(*ring::ring_saddle(4)), ModelParams(4));
    Eigen::VectorXd t = Eigen::VectorXd::Zero(12);
    for (int i = 0; i < 4; ++i) t(3 * i + 2) = 1.0;
    const double winner = std::abs(spectrum.eigenvectors.col(spectrum.reaction_index).dot(t));
    for (int k = 0; k < 12; ++k) {
        if (spectrum.kind[static_cast<std::size_t>(k)] != stability::ModeKind::Unstable) continue;
        if (k == spectrum.reaction_index) continue;
        CHECK(std::abs(spectrum.eigenvectors.col(k).dot(t)) < winner);
    }
}

TEST_CASE("spectrum is invariant under rotations, reflections, permutations") {
    SplitMix64 rng(20240806);
    const Configuration c = ring::embed(*ring::ring_saddle(6));
    const ModelParams params(6);
    const Eigen::VectorXd reference = stability::analyze(c, params).eigenvalues;
    for (int trial = 0; trial < 5; ++trial) {
        const double angle = 2.0 * std::numbers::pi * rng.uniform();
        for (const Configuration& image :
             {testutil::rotated_z(c, angle), testutil::reflected(c, angle),
              testutil::permuted(c, rng)}) {
            const Eigen::VectorXd eig = stability::analyze(image, params).eigenvalues;
            CHECK((eig - reference).lpNorm<Eigen::Infinity>() < 1e-9);
        }
    }
}

TEST_CASE("rescaling multiplies every exponent by s^(3/4)") {
    const Configuration c = ring::embed(*ring::ring_saddle(3));
    const ModelParams base(3);
    const double s = 2.7;
    const Configuration scaled = rescale(c, 1.0, s);
    const ModelParams strong(3, 3.0, s);

    const auto spec0 = stability::analyze(c, base);
    // Zero tolerance scales with the Hessian, h -> s^{3/2} h.
    const auto spec1 = stability::analyze(scaled, strong, 1e-6 * std::pow(s, 1.5));
    const auto rep0 = stability::exponents(spec0);
    const auto rep1 = stability::exponents(spec1);

    CHECK(rep1.n_u == rep0.n_u);
    CHECK(std::abs(rep1.mu - rep0.mu) < 1e-10);
    CHECK(rep1.lambda_r ==
          doctest::Approx(rescale_lyapunov(rep0.lambda_r, 1.0, s)).epsilon(1e-10));
    for (int k = 0; k < 9; ++k)
        CHECK(spec1.eigenvalues(k) ==
              doctest::Approx(std::pow(s, 1.5) * spec0.eigenvalues(k)).epsilon(1e-9));

    // mu stays put for the tabulated three-electron ring.
    CHECK(std::abs(rep1.mu - 2.6226) < 1e-3);
}
