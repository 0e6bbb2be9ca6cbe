#include "ionsaddles/ring.hpp"

#include "ionsaddles/finder.hpp"
#include "ionsaddles/model.hpp"

#include "reference_tables.hpp"

#include <doctest.h>

#include <cmath>

using namespace ionsaddles;

TEST_CASE("repulsion sum closed forms") {
    CHECK(ring::repulsion_sum(2) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(ring::repulsion_sum(3) == doctest::Approx(2.0 * std::sqrt(3.0)).epsilon(1e-15));
    CHECK(ring::repulsion_sum(4) == doctest::Approx(2.0 + 4.0 * std::sqrt(2.0)).epsilon(1e-15));
    CHECK_THROWS_AS(ring::repulsion_sum(1), std::invalid_argument);
}

TEST_CASE("repulsion sum grows monotonically and dominates the pair count") {
    double prev = 0.0;
    for (int n = 2; n <= 100; ++n) {
        const double w = ring::repulsion_sum(n);
        CHECK(w > prev);
        CHECK(w >= n * (n - 1) / 2.0);  // every term is at least 1
        prev = w;
    }
}

TEST_CASE("two-electron ring saddle in closed form") {
    const auto s = ring::ring_saddle(2);
    REQUIRE(s.has_value());
    CHECK(s->rho == doctest::Approx(std::pow(3.0, 0.25) / 2.0).epsilon(1e-14));
    CHECK(s->z == doctest::Approx(std::pow(3.0, 0.75) / 2.0).epsilon(1e-14));
    CHECK(s->energy == doctest::Approx(-6.0 * std::pow(3.0, -0.25)).epsilon(1e-14));
}

TEST_CASE("ring saddles reproduce the reference geometry and energy") {
    for (const auto& row : reftab::ring_rows()) {
        const auto s = ring::ring_saddle(row.n);
        REQUIRE(s.has_value());
        CHECK(std::abs(s->rho - row.rho) < 1e-4);
        CHECK(std::abs(s->z - row.z) < 1e-4);
        CHECK(std::abs(s->energy - row.energy) < 1e-4);
    }
}

TEST_CASE("ring embeddings are stationary and match the closed-form energy") {
    for (int n = 2; n <= 100; ++n) {
        const auto s = ring::ring_saddle(n);
        REQUIRE(s.has_value());
        const Configuration c = ring::embed(*s);
        const ModelParams params(n);
        CHECK(gradient(c, params).norm() < 1e-8);
        const double e = potential_energy(c, params);
        CHECK(std::abs(e - s->energy) / std::abs(e) < 1e-9);
    }
}

TEST_CASE("ring existence cutoff") {
    CHECK(ring::max_ring_n() == 472);
    CHECK(ring::exists(472));
    CHECK_FALSE(ring::exists(473));
    CHECK(2.0 * 472 * 472 - ring::repulsion_sum(472) > 0.0);
    CHECK(2.0 * 473 * 473 - ring::repulsion_sum(473) <= 0.0);
    CHECK_FALSE(ring::ring_saddle(473).has_value());
}

TEST_CASE("repulsion fit formula evaluates verbatim") {
    CHECK(ring::w_fit(2) == doctest::Approx((1.2 + 0.6 - 3.1) * std::log(2.0)).epsilon(1e-14));
    CHECK(ring::w_fit(2) == doctest::Approx(-0.9011).epsilon(1e-4));
    CHECK(ring::w_fit(100) == doctest::Approx((3000.0 + 30.0 - 3.1) * std::log(100.0)).epsilon(1e-14));
    CHECK(ring::w_fit(100) == doctest::Approx(13938.6).epsilon(1e-4));
    // Reported, not asserted: the fit quality at n = 100.
    const double rel = std::abs(ring::w_fit(100) - ring::repulsion_sum(100)) / ring::repulsion_sum(100);
    MESSAGE("w_fit relative error at n=100: ", rel);
}

TEST_CASE("ring-plus-center saddles reproduce the reference values") {
    for (const auto& row : reftab::ring_plus_center_rows()) {
        const auto r = ring::ring_plus_center_saddle(row.n);
        REQUIRE(r.converged);
        CHECK(std::abs(r.saddle.z_c - row.z_c) < 1e-4);
        CHECK(std::abs(r.saddle.rho - row.rho) < 1e-4);
        CHECK(std::abs(r.saddle.z - row.z) < 1e-4);
        CHECK(std::abs(r.saddle.energy - row.energy) < 1e-4);
        CHECK(r.saddle.z_c > r.saddle.z);

        const Configuration c = ring::embed(r.saddle);
        CHECK(gradient(c, ModelParams(row.n)).norm() < 1e-8);
    }
    CHECK_THROWS_AS(ring::ring_plus_center_saddle(2), std::invalid_argument);
}

TEST_CASE("ring-plus-center embedding is a Newton fixed point") {
    const auto r = ring::ring_plus_center_saddle(8);
    REQUIRE(r.converged);
    const Configuration c = ring::embed(r.saddle);
    finder::SearchParams params;
    const auto refined = finder::newton_refine(c, ModelParams(8), params);
    REQUIRE(refined.status == finder::NewtonStatus::Converged);
    for (int i = 0; i < c.size(); ++i)
        CHECK((refined.config.positions[static_cast<std::size_t>(i)] -
               c.positions[static_cast<std::size_t>(i)])
                  .lpNorm<Eigen::Infinity>() < 1e-8);
}
