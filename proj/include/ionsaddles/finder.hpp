#pragma once

#include "ionsaddles/model.hpp"
#include "ionsaddles/record.hpp"
#include "ionsaddles/rng.hpp"

#include <cstdint>
#include <vector>

namespace ionsaddles::finder {

struct SearchParams {
    long n_starts = 100000;
    std::uint64_t rng_seed = 1;
    double sample_rho_max = 4.0;
    double sample_z_min = 0.05;
    double sample_z_max = 4.0;
    double newton_tol = 1e-10;
    int max_iters = 200;
    double step_clamp = 0.5;     // max coordinate change per iteration
    double dedup_tol = 1e-5;
    int workers = 0;             // 0: IONSADDLES_WORKERS env var, else hardware
    bool halfspace_filter = true;  // keep only saddles with every z_i > 0

    void validate() const;
};

enum class NewtonStatus { Converged, Diverged, Singular, MaxIters };

const char* to_string(NewtonStatus status);

struct NewtonResult {
    NewtonStatus status = NewtonStatus::MaxIters;
    Configuration config;
    int iterations = 0;
    double residual = 0.0;  // final gradient norm
};

struct SearchStats {
    long converged = 0;
    long diverged = 0;
    long singular = 0;
    long max_iters = 0;
    long filtered_halfspace = 0;
    long duplicates = 0;
};

/// One random start: z uniform in [z_min, z_max], cylinder radius area-uniform
/// in [0, rho_max], azimuth uniform. Redraws configurations caught by the
/// singularity guard (bounded, then throws).
Configuration random_configuration(int n, const SearchParams& params, SplitMix64& rng);

/// Damped Newton-Raphson x <- x - H^{-1} g with the per-coordinate step
/// clamped. Never throws on numeric failure; the outcome is in `status`.
NewtonResult newton_refine(const Configuration& start, const ModelParams& model,
                           const SearchParams& params);

/// Multistart enumeration of the stationary points for n electrons (Z = n,
/// F = 1): independent refinements, half-space filter, dedup modulo symmetry,
/// stability and symmetry annotation. Records come back sorted by increasing
/// energy with 1-based nu and basin hit counts. Bitwise deterministic for a
/// fixed seed, independent of the worker count.
std::vector<SaddleRecord> search(int n, const SearchParams& params, SearchStats* stats = nullptr);

}  // namespace ionsaddles::finder
