#pragma once

#include "ionsaddles/model.hpp"

#include <vector>

namespace ionsaddles::stability {

struct NotStationaryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EigensolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class ModeKind { Unstable, Zero, Stable };

/// Classified Hessian spectrum at a stationary point. For the Hamiltonian
/// kinetic+potential form, each Hessian eigenvalue h < 0 yields a real
/// Lyapunov pair +-sqrt(-h); only the positive member is stored. Off-axis
/// stationary points carry exactly one zero mode (rotation about the field
/// axis).
struct StabilitySpectrum {
    Eigen::VectorXd eigenvalues;   // ascending
    Eigen::MatrixXd eigenvectors;  // orthonormal columns, matching order
    double zero_tol = 1e-6;
    std::vector<ModeKind> kind;
    std::vector<double> lyapunov;  // sqrt(-h) for unstable modes, 0 otherwise
    int reaction_index = -1;       // which unstable mode is the reaction coordinate
    bool reaction_ambiguous = false;

    int count(ModeKind k) const {
        int c = 0;
        for (auto m : kind)
            if (m == k) ++c;
        return c;
    }
    int n_unstable() const { return count(ModeKind::Unstable); }
    int n_zero() const { return count(ModeKind::Zero); }
    int n_stable() const { return count(ModeKind::Stable); }
};

struct ReactionChoice {
    int index = -1;
    bool ambiguous = false;
};

struct ExponentReport {
    double lambda_r = 0.0;
    int n_u = 0;    // unstable directions excluding the reaction coordinate
    double mu = 0.0;  // sum of the non-reaction unstable exponents over lambda_r
};

/// Full symmetric eigendecomposition and classification. Requires a genuine
/// stationary point (gradient norm < grad_tol) and enforces the eigenpair
/// residual bound post hoc.
StabilitySpectrum analyze(const Configuration& config, const ModelParams& params,
                          double zero_tol = 1e-6, double grad_tol = 1e-8);

/// Among the unstable eigenvectors, the one maximizing the overlap with the
/// uniform-z direction (all electrons moving together along the field axis).
/// Flags ambiguity if the winner's per-electron z-components do not share one
/// sign. Throws std::domain_error when no unstable direction exists.
ReactionChoice reaction_coordinate(const StabilitySpectrum& spectrum);

/// lambda_r, n_u and the threshold exponent mu = sum(lambda_i)/lambda_r over
/// the non-reaction unstable modes. Zero modes contribute nothing.
ExponentReport exponents(const StabilitySpectrum& spectrum);

}  // namespace ionsaddles::stability
