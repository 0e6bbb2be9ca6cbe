#include "ionsaddles/model.hpp"

#include <cmath>
#include <limits>

namespace ionsaddles {

double min_separation(const Configuration& config) {
    double d = std::numeric_limits<double>::infinity();
    const auto& r = config.positions;
    const int n = config.size();
    for (int i = 0; i < n; ++i) {
        d = std::min(d, r[static_cast<std::size_t>(i)].norm());
        for (int j = i + 1; j < n; ++j)
            d = std::min(d, (r[static_cast<std::size_t>(i)] - r[static_cast<std::size_t>(j)]).norm());
    }
    return d;
}

namespace {

void require_regular(const Configuration& config) {
    for (const auto& p : config.positions)
        if (!p.allFinite()) throw SingularConfigurationError("non-finite electron position");
    if (is_singular(config)) throw SingularConfigurationError("coincident particles or particle at nucleus");
}

}  // namespace

double potential_energy(const Configuration& config, const ModelParams& params) {
    params.validate();
    require_regular(config);
    const auto& r = config.positions;
    const int n = config.size();
    const double z_charge = params.nuclear_charge;

    double v = 0.0;
    for (int i = 0; i < n; ++i) {
        const auto& ri = r[static_cast<std::size_t>(i)];
        v -= z_charge / ri.norm();
        v -= params.field * ri.z();
        for (int j = i + 1; j < n; ++j)
            v += 1.0 / (ri - r[static_cast<std::size_t>(j)]).norm();
    }
    return v;
}

Eigen::VectorXd gradient(const Configuration& config, const ModelParams& params) {
    params.validate();
    require_regular(config);
    const auto& r = config.positions;
    const int n = config.size();
    const double z_charge = params.nuclear_charge;

    Eigen::VectorXd g = Eigen::VectorXd::Zero(3 * n);
    for (int i = 0; i < n; ++i) {
        const auto& ri = r[static_cast<std::size_t>(i)];
        const double ri3 = std::pow(ri.norm(), 3);
        g.segment<3>(3 * i) += z_charge * ri / ri3;
        g(3 * i + 2) -= params.field;
        for (int j = i + 1; j < n; ++j) {
            const Eigen::Vector3d d = ri - r[static_cast<std::size_t>(j)];
            const Eigen::Vector3d pair = -d / std::pow(d.norm(), 3);
            g.segment<3>(3 * i) += pair;
            g.segment<3>(3 * j) -= pair;
        }
    }
    return g;
}

namespace {

// d^2(1/|d|)/dd_a dd_b = (3 d_a d_b - |d|^2 delta_ab) / |d|^5.
// Each unordered entry pair is computed once and mirrored, which keeps the
// assembled Hessian symmetric to the last bit.
Eigen::Matrix3d inverse_distance_curvature(const Eigen::Vector3d& d) {
    const double d2 = d.squaredNorm();
    const double d5 = std::pow(d2, 2.5);
    Eigen::Matrix3d t;
    for (int a = 0; a < 3; ++a) {
        t(a, a) = (3.0 * d(a) * d(a) - d2) / d5;
        for (int b = a + 1; b < 3; ++b) t(b, a) = t(a, b) = 3.0 * d(a) * d(b) / d5;
    }
    return t;
}

}  // namespace

Eigen::MatrixXd hessian(const Configuration& config, const ModelParams& params) {
    params.validate();
    require_regular(config);
    const auto& r = config.positions;
    const int n = config.size();
    const double z_charge = params.nuclear_charge;

    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(3 * n, 3 * n);
    for (int i = 0; i < n; ++i) {
        const auto& ri = r[static_cast<std::size_t>(i)];
        // -Z/|r| curves opposite to 1/|d|
        h.block<3, 3>(3 * i, 3 * i) -= z_charge * inverse_distance_curvature(ri);
        for (int j = i + 1; j < n; ++j) {
            const Eigen::Matrix3d t = inverse_distance_curvature(ri - r[static_cast<std::size_t>(j)]);
            h.block<3, 3>(3 * i, 3 * i) += t;
            h.block<3, 3>(3 * j, 3 * j) += t;
            h.block<3, 3>(3 * i, 3 * j) -= t;
            h.block<3, 3>(3 * j, 3 * i) -= t;
        }
    }
    return h;
}

namespace {

double field_ratio_checked(double from_field, double to_field) {
    if (!(from_field > 0.0) || !(to_field > 0.0))
        throw std::invalid_argument("rescale: fields must be positive");
    return to_field / from_field;
}

}  // namespace

Configuration rescale(const Configuration& config, double from_field, double to_field) {
    const double s = field_ratio_checked(from_field, to_field);
    const double factor = std::pow(s, -0.5);
    Configuration out = config;
    for (auto& p : out.positions) p *= factor;
    return out;
}

double rescale_energy(double energy, double from_field, double to_field) {
    return energy * std::sqrt(field_ratio_checked(from_field, to_field));
}

double rescale_lyapunov(double lambda, double from_field, double to_field) {
    return lambda * std::pow(field_ratio_checked(from_field, to_field), 0.75);
}

}  // namespace ionsaddles
