#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <vector>

namespace ionsaddles {

// Any pair distance or nucleus distance below this is treated as a collision.
inline constexpr double kSingularDistance = 1e-10;

struct SingularConfigurationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parameters of the N-electron potential: nucleus of charge Z plus a static
/// electric field of strength F along +z, in scaled atomic units.
struct ModelParams {
    int n_electrons = 2;
    double nuclear_charge = 2.0;
    double field = 1.0;

    ModelParams() = default;

    // Neutral-atom convention: Z = N, F = 1.
    explicit ModelParams(int n)
        : n_electrons(n), nuclear_charge(static_cast<double>(n)), field(1.0) {}

    ModelParams(int n, double z, double f)
        : n_electrons(n), nuclear_charge(z), field(f) {}

    // The search problem starts at two electrons, but the potential itself is
    // well defined down to one (the bare Stark saddle).
    void validate() const {
        if (n_electrons < 1) throw std::invalid_argument("ModelParams: n_electrons must be >= 1");
        if (!(nuclear_charge > 0.0)) throw std::invalid_argument("ModelParams: nuclear_charge must be > 0");
        if (!(field > 0.0)) throw std::invalid_argument("ModelParams: field must be > 0");
    }
};

/// Positions of the N electrons; the search variable.
struct Configuration {
    std::vector<Eigen::Vector3d> positions;

    Configuration() = default;
    explicit Configuration(int n) : positions(static_cast<std::size_t>(n), Eigen::Vector3d::Zero()) {}

    int size() const { return static_cast<int>(positions.size()); }

    Eigen::VectorXd flat() const {
        Eigen::VectorXd x(3 * size());
        for (int i = 0; i < size(); ++i) x.segment<3>(3 * i) = positions[static_cast<std::size_t>(i)];
        return x;
    }

    static Configuration from_flat(const Eigen::VectorXd& x) {
        Configuration c(static_cast<int>(x.size() / 3));
        for (int i = 0; i < c.size(); ++i) c.positions[static_cast<std::size_t>(i)] = x.segment<3>(3 * i);
        return c;
    }
};

/// Smallest of all pair separations and nucleus distances.
double min_separation(const Configuration& config);

inline bool is_singular(const Configuration& config) {
    return min_separation(config) < kSingularDistance;
}

/// V = -sum_i Z/|r_i| + sum_{i<j} 1/|r_i - r_j| - F sum_i z_i.
/// Throws SingularConfigurationError on collisions.
double potential_energy(const Configuration& config, const ModelParams& params);

/// Analytic dV/dx, length 3N, component order matching Configuration layout.
Eigen::VectorXd gradient(const Configuration& config, const ModelParams& params);

/// Analytic second derivatives, 3N x 3N, exactly symmetric by construction.
Eigen::MatrixXd hessian(const Configuration& config, const ModelParams& params);

// Field rescaling, s = to_field/from_field: positions scale by s^{-1/2},
// energies by s^{1/2}, Lyapunov exponents by s^{3/4}. Stationary points map
// to stationary points of the rescaled potential.
Configuration rescale(const Configuration& config, double from_field, double to_field);
double rescale_energy(double energy, double from_field, double to_field);
double rescale_lyapunov(double lambda, double from_field, double to_field);

}  // namespace ionsaddles
