#include "ionsaddles/ring.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ionsaddles::ring {

namespace {
constexpr double kPi = std::numbers::pi;
}

double repulsion_sum(int n) {
    if (n < 2) throw std::invalid_argument("repulsion_sum: n must be >= 2");
    double w = 0.0;
    for (int k = 1; k < n; ++k) w += (n - k) / std::sin(kPi * k / n);
    return w;
}

bool exists(int n) {
    return 2.0 * n * n > repulsion_sum(n);
}

int max_ring_n() {
    // W grows like N^2 ln N, so the existence condition fails for good once
    // it fails at all; scan for the first failure.
    int n = 2;
    while (exists(n + 1)) ++n;
    return n;
}

double w_fit(int n) {
    if (n < 2) throw std::invalid_argument("w_fit: n must be >= 2");
    return (0.3 * n * n + 0.3 * n - 3.1) * std::log(static_cast<double>(n));
}

std::optional<RingSaddle> ring_saddle(int n) {
    const double w = repulsion_sum(n);
    const double ratio = 2.0 * n * n / w;
    if (!(ratio > 1.0)) return std::nullopt;

    const double bracket = std::pow(ratio, 2.0 / 3.0) - 1.0;
    const double scale = std::sqrt(w / (2.0 * n));

    RingSaddle s;
    s.n = n;
    s.w = w;
    s.rho = scale * std::pow(bracket, 0.25);
    s.z = scale * std::pow(bracket, 0.75);
    s.energy = -(2.0 * n * n * std::pow(2.0 / (n * w), 1.0 / 6.0) - std::sqrt(2.0 * n * w)) /
               std::pow(bracket, 0.25);
    return s;
}

Configuration embed(const RingSaddle& saddle) {
    Configuration c(saddle.n);
    for (int i = 0; i < saddle.n; ++i) {
        const double phi = 2.0 * kPi * i / saddle.n;
        c.positions[static_cast<std::size_t>(i)] =
            Eigen::Vector3d(saddle.rho * std::cos(phi), saddle.rho * std::sin(phi), saddle.z);
    }
    return c;
}

Configuration embed(const RingPlusCenterSaddle& saddle) {
    Configuration c(saddle.n);
    c.positions[0] = Eigen::Vector3d(0.0, 0.0, saddle.z_c);
    const int m = saddle.n - 1;
    for (int i = 0; i < m; ++i) {
        const double phi = 2.0 * kPi * i / m;
        c.positions[static_cast<std::size_t>(i + 1)] =
            Eigen::Vector3d(saddle.rho * std::cos(phi), saddle.rho * std::sin(phi), saddle.z);
    }
    return c;
}

namespace {

Configuration embed_rpc(int n, const Eigen::Vector3d& vars) {
    RingPlusCenterSaddle s;
    s.n = n;
    s.z_c = vars(0);
    s.rho = vars(1);
    s.z = vars(2);
    return embed(s);
}

// Embedding Jacobian d(positions)/d(z_c, rho, z); the embedding is linear in
// the three variables, so the reduced Hessian is exactly E^T H E.
Eigen::MatrixXd embedding_jacobian(int n) {
    const int m = n - 1;
    Eigen::MatrixXd e = Eigen::MatrixXd::Zero(3 * n, 3);
    e(2, 0) = 1.0;  // axial electron moves along z with z_c
    for (int i = 0; i < m; ++i) {
        const double phi = 2.0 * kPi * i / m;
        e(3 * (i + 1) + 0, 1) = std::cos(phi);
        e(3 * (i + 1) + 1, 1) = std::sin(phi);
        e(3 * (i + 1) + 2, 2) = 1.0;
    }
    return e;
}

}  // namespace

RingPlusCenterResult ring_plus_center_saddle(int n, double tol, int max_iters) {
    if (n < 3) throw std::invalid_argument("ring_plus_center_saddle: n must be >= 3");

    const auto base = ring_saddle(n - 1);
    if (!base) throw std::invalid_argument("ring_plus_center_saddle: no (n-1)-ring start available");

    const ModelParams params(n);
    const Eigen::MatrixXd e = embedding_jacobian(n);

    // The axial electron sits farther downfield than the ring.
    Eigen::Vector3d vars(base->z + 0.5, base->rho, base->z);

    RingPlusCenterResult result;
    Eigen::Vector3d reduced_g = Eigen::Vector3d::Zero();
    int iter = 0;
    for (; iter < max_iters; ++iter) {
        const Configuration c = embed_rpc(n, vars);
        reduced_g = e.transpose() * gradient(c, params);
        if (reduced_g.norm() < tol) {
            result.converged = true;
            break;
        }
        const Eigen::Matrix3d reduced_h = e.transpose() * hessian(c, params) * e;
        vars -= reduced_h.partialPivLu().solve(reduced_g);
    }

    result.iterations = iter;
    result.residual = reduced_g.norm();
    result.saddle.n = n;
    result.saddle.z_c = vars(0);
    result.saddle.rho = vars(1);
    result.saddle.z = vars(2);
    result.saddle.energy = potential_energy(embed_rpc(n, vars), params);
    return result;
}

}  // namespace ionsaddles::ring
