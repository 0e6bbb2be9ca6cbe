#pragma once

#include "ionsaddles/model.hpp"

#include <string>
#include <vector>

namespace ionsaddles::symmetry {

/// Gauge-free fingerprint of a configuration modulo rotations about the field
/// axis, axial-plane reflections, and electron relabeling.
struct CanonicalForm {
    // Sorted per-electron (z, rho) pairs followed by the sorted pairwise
    // distance multiset; `key` holds the same values rounded to tol/10.
    std::vector<double> invariants;
    std::vector<double> key;
    Configuration oriented;  // representative in a fixed gauge
};

/// Rotation order about the field axis plus axial mirror flag.
struct SymmetryLabel {
    int rotation_order = 1;
    bool has_mirror = false;

    // "C1", "Cv", "C2", "C2v", ...
    std::string str() const;
    bool operator==(const SymmetryLabel&) const = default;
};

CanonicalForm canonicalize(const Configuration& config, double tol = 1e-5);

/// True iff the invariant vectors match componentwise at tolerance tol and an
/// explicit alignment (rotation + optional reflection + relabeling) maps one
/// configuration onto the other.
bool equivalent(const Configuration& a, const Configuration& b, double tol = 1e-5);

/// Largest k such that rotation by 2*pi/k about the field axis maps the
/// configuration to itself within tol, plus the axial mirror test. Purely
/// axial configurations match every k by convention.
SymmetryLabel classify(const Configuration& config, double tol = 1e-5);

}  // namespace ionsaddles::symmetry
