#pragma once

#include "ionsaddles/model.hpp"
#include "ionsaddles/symmetry.hpp"

#include <cstdint>

namespace ionsaddles {

/// One enumerated saddle: canonical configuration plus the derived scalars.
struct SaddleRecord {
    int n = 0;
    int nu = 0;  // 1-based rank by ascending energy
    double energy = 0.0;
    int n_u = 0;
    double lambda_r = 0.0;
    double mu = 0.0;
    symmetry::SymmetryLabel label;
    Configuration positions;
    long hits = 0;  // how many starts converged into this saddle's basin
    std::uint64_t seed = 0;
};

/// Same saddle under a different field strength; mu and n_u are invariant.
SaddleRecord rescale(const SaddleRecord& record, double from_field, double to_field);

}  // namespace ionsaddles
