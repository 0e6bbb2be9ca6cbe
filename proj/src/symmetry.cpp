#include "ionsaddles/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <tuple>

namespace ionsaddles::symmetry {

namespace {

constexpr double kPi = std::numbers::pi;
// Electrons closer to the axis than this have no usable azimuth.
constexpr double kAxisRho = 1e-9;

double azimuth(const Eigen::Vector3d& p) { return std::atan2(p.y(), p.x()); }

Configuration rotated(const Configuration& config, double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    Configuration out = config;
    for (auto& p : out.positions) {
        const double x = p.x(), y = p.y();
        p.x() = c * x - s * y;
        p.y() = s * x + c * y;
    }
    return out;
}

Configuration reflected_xz(const Configuration& config) {
    Configuration out = config;
    for (auto& p : out.positions) p.y() = -p.y();
    return out;
}

// Greedy bijective matching of point multisets; valid because tolerances are
// far below the minimum inter-electron separation.
bool points_match(const Configuration& a, const Configuration& b, double tol) {
    const int n = a.size();
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    for (int i = 0; i < n; ++i) {
        int best = -1;
        double best_d = tol;
        for (int j = 0; j < n; ++j) {
            if (used[static_cast<std::size_t>(j)]) continue;
            const double d = (a.positions[static_cast<std::size_t>(i)] -
                              b.positions[static_cast<std::size_t>(j)])
                                 .norm();
            if (d <= best_d) {
                best_d = d;
                best = j;
            }
        }
        if (best < 0) return false;
        used[static_cast<std::size_t>(best)] = true;
    }
    return true;
}

std::vector<double> invariant_vector(const Configuration& config) {
    const int n = config.size();
    std::vector<std::pair<double, double>> zr;
    zr.reserve(static_cast<std::size_t>(n));
    for (const auto& p : config.positions) zr.emplace_back(p.z(), std::hypot(p.x(), p.y()));
    std::sort(zr.begin(), zr.end());

    std::vector<double> dists;
    dists.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            dists.push_back((config.positions[static_cast<std::size_t>(i)] -
                             config.positions[static_cast<std::size_t>(j)])
                                .norm());
    std::sort(dists.begin(), dists.end());

    std::vector<double> v;
    v.reserve(2 * zr.size() + dists.size());
    for (const auto& [z, rho] : zr) {
        v.push_back(z);
        v.push_back(rho);
    }
    v.insert(v.end(), dists.begin(), dists.end());
    return v;
}

// Sorted off-axis azimuths, used to resolve the reflection ambiguity.
std::vector<double> angle_sequence(const Configuration& config) {
    std::vector<double> angles;
    for (const auto& p : config.positions) {
        if (std::hypot(p.x(), p.y()) <= kAxisRho) continue;
        double phi = azimuth(p);
        if (phi < 0.0) phi += 2.0 * kPi;
        angles.push_back(phi);
    }
    std::sort(angles.begin(), angles.end());
    return angles;
}

Configuration relabeled(const Configuration& config) {
    Configuration out = config;
    std::sort(out.positions.begin(), out.positions.end(),
              [](const Eigen::Vector3d& a, const Eigen::Vector3d& b) {
                  const double ra = std::hypot(a.x(), a.y());
                  const double rb = std::hypot(b.x(), b.y());
                  const double pa = ra > kAxisRho ? azimuth(a) : 0.0;
                  const double pb = rb > kAxisRho ? azimuth(b) : 0.0;
                  return std::tie(a.z(), ra, pa) < std::tie(b.z(), rb, pb);
              });
    return out;
}

Configuration orient(const Configuration& config) {
    // Gauge electron: lexicographically largest (rho, z).
    int anchor = -1;
    std::pair<double, double> best{-1.0, 0.0};
    for (int i = 0; i < config.size(); ++i) {
        const auto& p = config.positions[static_cast<std::size_t>(i)];
        const double rho = std::hypot(p.x(), p.y());
        if (rho <= kAxisRho) continue;
        const std::pair<double, double> cand{rho, p.z()};
        if (cand > best) {
            best = cand;
            anchor = i;
        }
    }
    if (anchor < 0) return relabeled(config);  // purely axial

    Configuration turned =
        rotated(config, -azimuth(config.positions[static_cast<std::size_t>(anchor)]));
    const Configuration mirror = reflected_xz(turned);
    if (angle_sequence(mirror) < angle_sequence(turned)) turned = mirror;
    return relabeled(turned);
}

// Alignment fallback: explicitly search for a group element mapping a onto b.
bool aligned_match(const Configuration& a, const Configuration& b, double tol) {
    const double point_tol = 50.0 * tol;

    int anchor = -1;
    std::pair<double, double> best{-1.0, 0.0};
    for (int i = 0; i < a.size(); ++i) {
        const auto& p = a.positions[static_cast<std::size_t>(i)];
        const double rho = std::hypot(p.x(), p.y());
        if (rho <= kAxisRho) continue;
        const std::pair<double, double> cand{rho, p.z()};
        if (cand > best) {
            best = cand;
            anchor = i;
        }
    }
    if (anchor < 0) {
        // Both purely axial: the sorted z-lists already agreed via invariants.
        return points_match(a, b, point_tol);
    }

    const auto& pa = a.positions[static_cast<std::size_t>(anchor)];
    const double rho_a = std::hypot(pa.x(), pa.y());
    const double phi_a = azimuth(pa);

    for (int j = 0; j < b.size(); ++j) {
        const auto& pb = b.positions[static_cast<std::size_t>(j)];
        const double rho_b = std::hypot(pb.x(), pb.y());
        if (std::abs(rho_b - rho_a) > point_tol || std::abs(pb.z() - pa.z()) > point_tol) continue;
        const double turn = phi_a - azimuth(pb);
        if (points_match(a, rotated(b, turn), point_tol)) return true;
        const Configuration mirrored = reflected_xz(b);
        const double turn_m = phi_a - azimuth(mirrored.positions[static_cast<std::size_t>(j)]);
        if (points_match(a, rotated(mirrored, turn_m), point_tol)) return true;
    }
    return false;
}

}  // namespace

CanonicalForm canonicalize(const Configuration& config, double tol) {
    CanonicalForm form;
    form.invariants = invariant_vector(config);
    const double quantum = tol / 10.0;
    form.key.reserve(form.invariants.size());
    for (double v : form.invariants) form.key.push_back(std::round(v / quantum) * quantum);
    form.oriented = orient(config);
    return form;
}

namespace {

// Sorted scalar multisets compare elementwise without the reordering hazard
// that lexicographic (z, rho) pairs have near ties.
bool sorted_lists_match(const Configuration& a, const Configuration& b, double tol) {
    auto collect = [](const Configuration& c) {
        std::vector<double> zs, rhos, dists;
        for (const auto& p : c.positions) {
            zs.push_back(p.z());
            rhos.push_back(std::hypot(p.x(), p.y()));
        }
        for (int i = 0; i < c.size(); ++i)
            for (int j = i + 1; j < c.size(); ++j)
                dists.push_back((c.positions[static_cast<std::size_t>(i)] -
                                 c.positions[static_cast<std::size_t>(j)])
                                    .norm());
        std::sort(zs.begin(), zs.end());
        std::sort(rhos.begin(), rhos.end());
        std::sort(dists.begin(), dists.end());
        return std::tuple{zs, rhos, dists};
    };
    const auto [za, ra, da] = collect(a);
    const auto [zb, rb, db] = collect(b);
    auto close = [tol](const std::vector<double>& u, const std::vector<double>& v) {
        for (std::size_t k = 0; k < u.size(); ++k)
            if (std::abs(u[k] - v[k]) > tol) return false;
        return true;
    };
    return close(za, zb) && close(ra, rb) && close(da, db);
}

}  // namespace

bool equivalent(const Configuration& a, const Configuration& b, double tol) {
    if (a.size() != b.size()) return false;
    if (!sorted_lists_match(a, b, tol)) return false;
    // Matching invariants do not prove congruence; align explicitly.
    return aligned_match(a, b, tol);
}

std::string SymmetryLabel::str() const {
    if (rotation_order == 1) return has_mirror ? "Cv" : "C1";
    return "C" + std::to_string(rotation_order) + (has_mirror ? "v" : "");
}

SymmetryLabel classify(const Configuration& config, double tol) {
    const int n = config.size();

    bool any_off_axis = false;
    for (const auto& p : config.positions)
        if (std::hypot(p.x(), p.y()) > kAxisRho) any_off_axis = true;

    SymmetryLabel label;
    if (!any_off_axis) {
        // Axial electrons are invariant under every rotation and reflection.
        label.rotation_order = 2 * n;
        label.has_mirror = true;
        return label;
    }

    for (int k = 2 * n; k >= 1; --k) {
        if (points_match(config, rotated(config, 2.0 * kPi / k), tol)) {
            label.rotation_order = k;
            break;
        }
    }

    // A mirror plane must map some electron onto some (possibly the same)
    // electron, so the pairwise azimuth bisectors exhaust the candidates.
    std::vector<double> phis;
    for (const auto& p : config.positions)
        if (std::hypot(p.x(), p.y()) > kAxisRho) phis.push_back(azimuth(p));
    for (std::size_t i = 0; i < phis.size() && !label.has_mirror; ++i) {
        for (std::size_t j = i; j < phis.size() && !label.has_mirror; ++j) {
            const double plane = 0.5 * (phis[i] + phis[j]);
            // Reflection through the axial plane at angle `plane`.
            Configuration image = rotated(reflected_xz(rotated(config, -plane)), plane);
            if (points_match(config, image, tol)) label.has_mirror = true;
        }
    }
    return label;
}

}  // namespace ionsaddles::symmetry
