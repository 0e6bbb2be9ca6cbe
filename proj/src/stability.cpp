#include "ionsaddles/stability.hpp"

#include <cmath>
#include <string>

namespace ionsaddles::stability {

ReactionChoice reaction_coordinate(const StabilitySpectrum& spectrum) {
    const int dim = static_cast<int>(spectrum.eigenvalues.size());
    const int n = dim / 3;

    // Uniform-z template: z-component 1 for every electron.
    Eigen::VectorXd t = Eigen::VectorXd::Zero(dim);
    for (int i = 0; i < n; ++i) t(3 * i + 2) = 1.0;

    ReactionChoice choice;
    double best = -1.0;
    for (int k = 0; k < dim; ++k) {
        if (spectrum.kind[static_cast<std::size_t>(k)] != ModeKind::Unstable) continue;
        const double overlap = std::abs(spectrum.eigenvectors.col(k).dot(t));
        if (overlap > best) {
            best = overlap;
            choice.index = k;
        }
    }
    if (choice.index < 0) throw std::domain_error("reaction_coordinate: no unstable direction");

    // All electrons must move in the same sense along the field axis.
    const Eigen::VectorXd u = spectrum.eigenvectors.col(choice.index);
    const double slack = 1e-9 * u.lpNorm<Eigen::Infinity>();
    bool any_pos = false, any_neg = false;
    for (int i = 0; i < n; ++i) {
        const double uz = u(3 * i + 2);
        if (uz > slack) any_pos = true;
        if (uz < -slack) any_neg = true;
    }
    choice.ambiguous = any_pos && any_neg;
    return choice;
}

StabilitySpectrum analyze(const Configuration& config, const ModelParams& params,
                          double zero_tol, double grad_tol) {
    if (!(zero_tol > 0.0)) throw std::invalid_argument("analyze: zero_tol must be > 0");

    const double gnorm = gradient(config, params).norm();
    if (!(gnorm < grad_tol))
        throw NotStationaryError("analyze: gradient norm " + std::to_string(gnorm) +
                                 " exceeds stationarity tolerance");

    const Eigen::MatrixXd h = hessian(config, params);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
    if (solver.info() != Eigen::Success) throw EigensolverError("analyze: eigensolver failed to converge");

    StabilitySpectrum spectrum;
    spectrum.eigenvalues = solver.eigenvalues();
    spectrum.eigenvectors = solver.eigenvectors();
    spectrum.zero_tol = zero_tol;

    const int dim = static_cast<int>(spectrum.eigenvalues.size());
    const double residual_bound = 1e-9 * std::max(1.0, h.norm());
    for (int k = 0; k < dim; ++k) {
        const double resid =
            (h * spectrum.eigenvectors.col(k) - spectrum.eigenvalues(k) * spectrum.eigenvectors.col(k))
                .norm();
        if (resid > residual_bound)
            throw EigensolverError("analyze: eigenpair residual " + std::to_string(resid) +
                                   " above bound");
    }

    spectrum.kind.resize(static_cast<std::size_t>(dim));
    spectrum.lyapunov.assign(static_cast<std::size_t>(dim), 0.0);
    for (int k = 0; k < dim; ++k) {
        const double h_k = spectrum.eigenvalues(k);
        if (h_k < -zero_tol) {
            spectrum.kind[static_cast<std::size_t>(k)] = ModeKind::Unstable;
            spectrum.lyapunov[static_cast<std::size_t>(k)] = std::sqrt(-h_k);
        } else if (h_k > zero_tol) {
            spectrum.kind[static_cast<std::size_t>(k)] = ModeKind::Stable;
        } else {
            spectrum.kind[static_cast<std::size_t>(k)] = ModeKind::Zero;
        }
    }

    const ReactionChoice choice = reaction_coordinate(spectrum);
    spectrum.reaction_index = choice.index;
    spectrum.reaction_ambiguous = choice.ambiguous;
    return spectrum;
}

ExponentReport exponents(const StabilitySpectrum& spectrum) {
    if (spectrum.reaction_index < 0)
        throw std::domain_error("exponents: spectrum has no reaction coordinate");

    ExponentReport report;
    report.lambda_r = spectrum.lyapunov[static_cast<std::size_t>(spectrum.reaction_index)];
    double sum = 0.0;
    const int dim = static_cast<int>(spectrum.eigenvalues.size());
    for (int k = 0; k < dim; ++k) {
        if (spectrum.kind[static_cast<std::size_t>(k)] != ModeKind::Unstable) continue;
        if (k == spectrum.reaction_index) continue;
        sum += spectrum.lyapunov[static_cast<std::size_t>(k)];
        ++report.n_u;
    }
    report.mu = sum / report.lambda_r;
    return report;
}

}  // namespace ionsaddles::stability
