#pragma once

#include "ionsaddles/model.hpp"

#include <optional>

namespace ionsaddles::ring {

/// Closed-form saddle with all N electrons on a ring perpendicular to the
/// field axis (C_Nv family). Exists only while 2N^2 > W(N).
struct RingSaddle {
    int n = 0;
    double w = 0.0;       // mutual-repulsion sum, dimensionless
    double rho = 0.0;     // ring radius
    double z = 0.0;       // ring height above the nucleus
    double energy = 0.0;  // saddle energy, scaled units
};

/// Numerically determined saddle with one electron on the field axis and the
/// other N-1 on a ring (C_{(N-1)v} family).
struct RingPlusCenterSaddle {
    int n = 0;
    double z_c = 0.0;  // axial-electron height
    double rho = 0.0;  // ring radius
    double z = 0.0;    // ring height
    double energy = 0.0;
};

struct RingPlusCenterResult {
    bool converged = false;
    RingPlusCenterSaddle saddle;
    double residual = 0.0;  // reduced-gradient norm at exit
    int iterations = 0;
};

/// W(N) = sum_{k=1}^{N-1} (N-k)/sin(pi k/N). Strictly increasing in N.
double repulsion_sum(int n);

/// 2N^2 > W(N): the ring stationary point exists.
bool exists(int n);

/// Largest N for which the ring saddle exists (472).
int max_ring_n();

/// Published asymptotic fit (0.3 N^2 + 0.3 N - 3.1) ln N. Diagnostic only;
/// poor at small N.
double w_fit(int n);

/// Closed-form ring saddle, or nullopt past the existence cutoff.
std::optional<RingSaddle> ring_saddle(int n);

/// 3D embedding: electrons at angles 2*pi*i/N, radius rho, height z.
Configuration embed(const RingSaddle& saddle);

/// 3D embedding: axial electron at z_c, ring of n-1 at angles 2*pi*i/(n-1).
Configuration embed(const RingPlusCenterSaddle& saddle);

/// Newton iteration on the 3-variable reduced gradient (z_c, rho, z),
/// started near the (N-1)-electron ring. Requires n >= 3.
RingPlusCenterResult ring_plus_center_saddle(int n, double tol = 1e-12, int max_iters = 100);

}  // namespace ionsaddles::ring
