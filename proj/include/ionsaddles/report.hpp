#pragma once

#include "ionsaddles/record.hpp"

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace ionsaddles::report {

/// All electrons lie in one plane containing the field axis.
bool is_planar_axial(const Configuration& config, double tol = 1e-6);

/// Number of electrons sitting on the field axis.
int axial_count(const Configuration& config, double tol = 1e-6);

/// "all on a ring", "ring plus center", "two in the center", "all on a line"
/// or "---" for the unnamed states.
std::string family_comment(const SaddleRecord& record, double tol = 1e-5);

struct ReportOptions {
    bool tables = true;
    bool figures = true;
    int n_min = 2;
    int n_max = 8;
};

struct ReportResult {
    std::vector<std::string> missing_stores;
    std::vector<std::filesystem::path> written;
};

/// Renders the CSV tables (ring family, ring-plus-center family, line family,
/// per-N enumerations, lowest-saddle summary, energy-per-electron series) and
/// the per-saddle x-y / x-z projection files from the stores found in
/// `stores_dir`. Missing stores are reported, not fatal here.
ReportResult write_report(const std::filesystem::path& stores_dir,
                          const std::filesystem::path& out_dir, const ReportOptions& options);

}  // namespace ionsaddles::report
