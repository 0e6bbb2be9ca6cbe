// ionsaddles: saddle configurations of N classical electrons escaping a
// nucleus in a static electric field. Subcommands: ring, search, analyze,
// report. Exit codes: 0 success, 2 validation error, 3 convergence-budget
// error, 4 I/O error.

#include "ionsaddles/finder.hpp"
#include "ionsaddles/model.hpp"
#include "ionsaddles/report.hpp"
#include "ionsaddles/ring.hpp"
#include "ionsaddles/stability.hpp"
#include "ionsaddles/store.hpp"
#include "ionsaddles/symmetry.hpp"
#include "ionsaddles/version.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitConvergence = 3;
constexpr int kExitIo = 4;

struct CliError : std::runtime_error {
    int code;
    CliError(int code_, const std::string& what_) : std::runtime_error(what_), code(code_) {}
};

using namespace ionsaddles;

struct FileParams {
    finder::SearchParams search;
    ModelParams model;
    bool has_model_n = false;
};

// Flat key = value lines; '#' starts a comment.
FileParams parse_params_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CliError(kExitIo, "cannot open params file: " + path);
    FileParams fp;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::string key, eq, value;
        std::istringstream is(line);
        if (!(is >> key)) continue;
        is >> eq;
        if (eq != "=") throw CliError(kExitValidation, path + ":" + std::to_string(lineno) +
                                                           ": expected 'key = value'");
        if (!(is >> value)) throw CliError(kExitValidation, path + ":" + std::to_string(lineno) +
                                                                ": missing value for " + key);
        try {
            if (key == "n_starts") fp.search.n_starts = std::stol(value);
            else if (key == "rng_seed") fp.search.rng_seed = std::stoull(value);
            else if (key == "sample_rho_max") fp.search.sample_rho_max = std::stod(value);
            else if (key == "sample_z_min") fp.search.sample_z_min = std::stod(value);
            else if (key == "sample_z_max") fp.search.sample_z_max = std::stod(value);
            else if (key == "newton_tol") fp.search.newton_tol = std::stod(value);
            else if (key == "max_iters") fp.search.max_iters = std::stoi(value);
            else if (key == "step_clamp") fp.search.step_clamp = std::stod(value);
            else if (key == "dedup_tol") fp.search.dedup_tol = std::stod(value);
            else if (key == "workers") fp.search.workers = std::stoi(value);
            else if (key == "halfspace_filter")
                fp.search.halfspace_filter = (value == "1" || value == "true" || value == "yes");
            else if (key == "n_electrons") {
                fp.model.n_electrons = std::stoi(value);
                fp.has_model_n = true;
            } else if (key == "nuclear_charge") fp.model.nuclear_charge = std::stod(value);
            else if (key == "field") fp.model.field = std::stod(value);
            else
                throw CliError(kExitValidation,
                               path + ":" + std::to_string(lineno) + ": unknown key " + key);
        } catch (const std::invalid_argument&) {
            throw CliError(kExitValidation,
                           path + ":" + std::to_string(lineno) + ": bad value for " + key);
        }
    }
    return fp;
}

int cmd_ring(int n_min, int n_max) {
    if (n_min < 2 || n_max < n_min)
        throw CliError(kExitValidation, "ring: need 2 <= n-min <= n-max");
    std::printf("N,E_N,n_u,lambda_r,mu,rho_N,z_N\n");
    for (int n = n_min; n <= n_max; ++n) {
        const auto s = ring::ring_saddle(n);
        if (!s) {
            std::printf("%d,no configuration,,,,,\n", n);
            continue;
        }
        const Configuration c = ring::embed(*s);
        const ModelParams model(n);
        const auto spectrum = stability::analyze(c, model);
        const auto rep = stability::exponents(spectrum);
        std::printf("%d,%.4f,%d,%.4f,%.4f,%.4f,%.4f\n", n, potential_energy(c, model), rep.n_u,
                    rep.lambda_r, rep.mu, s->rho, s->z);
    }
    return kExitOk;
}

int cmd_search(int n, const finder::SearchParams& params, const std::string& out_path) {
    const auto t0 = std::chrono::steady_clock::now();
    finder::SearchStats stats;
    const std::vector<SaddleRecord> records = finder::search(n, params, &stats);
    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    store::save_records(out_path, records);
    store::RunManifest manifest;
    manifest.n = n;
    manifest.model = ModelParams(n);
    manifest.params = params;
    manifest.tool_version = kVersion;
    manifest.wall_seconds = wall;
    manifest.stats = stats;
    manifest.n_records = static_cast<long>(records.size());
    store::save_manifest(store::manifest_path_for(out_path), manifest);

    std::printf("n=%d starts=%ld converged=%ld records=%zu wall=%.1fs -> %s\n", n, params.n_starts,
                stats.converged, records.size(), wall, out_path.c_str());
    for (const auto& r : records)
        std::printf("nu=%d E=%.4f n_u=%d lambda_r=%.4f mu=%.4f sym=%s hits=%ld\n", r.nu, r.energy,
                    r.n_u, r.lambda_r, r.mu, r.label.str().c_str(), r.hits);
    return kExitOk;
}

int cmd_analyze(const std::string& store_path, int nu) {
    const auto records = store::load_records(store_path);
    const SaddleRecord* rec = nullptr;
    for (const auto& r : records)
        if (r.nu == nu) rec = &r;
    if (!rec) throw CliError(kExitValidation, "analyze: no record with nu=" + std::to_string(nu) +
                                                  " in " + store_path);

    const ModelParams model(rec->n);
    const double gnorm = gradient(rec->positions, model).norm();
    stability::StabilitySpectrum spectrum;
    try {
        spectrum = stability::analyze(rec->positions, model);
    } catch (const stability::NotStationaryError& e) {
        throw CliError(kExitValidation, std::string("analyze: ") + e.what());
    }
    const auto rep = stability::exponents(spectrum);

    std::printf("record n=%d nu=%d energy=%.10f gradient_norm=%.3e symmetry=%s\n", rec->n, rec->nu,
                rec->energy, gnorm, rec->label.str().c_str());
    std::printf("unstable=%d zero=%d stable=%d\n", spectrum.n_unstable(), spectrum.n_zero(),
                spectrum.n_stable());
    std::printf("lambda_r=%.6f n_u=%d mu=%.6f reaction_ambiguous=%d\n", rep.lambda_r, rep.n_u,
                rep.mu, spectrum.reaction_ambiguous ? 1 : 0);

    const int dim = static_cast<int>(spectrum.eigenvalues.size());
    Eigen::VectorXd uniform_z = Eigen::VectorXd::Zero(dim);
    for (int i = 0; i < dim / 3; ++i) uniform_z(3 * i + 2) = 1.0;
    std::printf("%-4s %-14s %-9s %-10s %s\n", "k", "eigenvalue", "kind", "lyapunov", "uz_overlap");
    for (int k = 0; k < dim; ++k) {
        const char* kind = "stable";
        if (spectrum.kind[static_cast<std::size_t>(k)] == stability::ModeKind::Unstable)
            kind = k == spectrum.reaction_index ? "reaction" : "unstable";
        else if (spectrum.kind[static_cast<std::size_t>(k)] == stability::ModeKind::Zero)
            kind = "zero";
        const double overlap = std::abs(spectrum.eigenvectors.col(k).dot(uniform_z)) /
                               std::sqrt(static_cast<double>(dim) / 3.0);
        std::printf("%-4d %+.10f %-9s %-10.6f %.6f\n", k, spectrum.eigenvalues(k), kind,
                    spectrum.lyapunov[static_cast<std::size_t>(k)], overlap);
    }
    return kExitOk;
}

int cmd_report(const std::string& stores_dir, const std::string& out_dir, bool tables,
               bool figures, int n_min, int n_max) {
    report::ReportOptions options;
    options.tables = tables;
    options.figures = figures;
    options.n_min = n_min;
    options.n_max = n_max;
    const auto result = report::write_report(stores_dir, out_dir, options);
    std::printf("wrote %zu files to %s\n", result.written.size(), out_dir.c_str());
    if (!result.missing_stores.empty()) {
        std::fprintf(stderr, "missing stores:\n");
        for (const auto& m : result.missing_stores) std::fprintf(stderr, "  %s\n", m.c_str());
        return kExitIo;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Saddle configurations of N classical electrons in the field of a nucleus "
                 "plus a static electric field (scaled units, F = 1)"};
    app.set_version_flag("--version", ionsaddles::kVersion);
    app.require_subcommand(1);

    auto* ring_cmd = app.add_subcommand("ring", "Closed-form ring-saddle family table");
    int n_min = 2, n_max = 8;
    ring_cmd->add_option("--n-min", n_min, "smallest electron count")->capture_default_str();
    ring_cmd->add_option("--n-max", n_max, "largest electron count")->capture_default_str();

    auto* search_cmd =
        app.add_subcommand("search", "Multistart Newton-Raphson enumeration of all saddles");
    int search_n = 4;
    std::string params_file, out_path;
    long starts = -1;
    std::int64_t seed = -1;
    int workers = -1;
    search_cmd->add_option("--n", search_n, "electron count")->required();
    search_cmd->add_option("--starts", starts, "number of random starts");
    search_cmd->add_option("--seed", seed, "RNG seed");
    search_cmd->add_option("--workers", workers,
                           "worker threads (default: IONSADDLES_WORKERS or hardware)");
    search_cmd->add_option("--params", params_file, "key = value parameter file");
    search_cmd->add_option("--out", out_path, "store path (default saddles_n<N>.jsonl)");

    auto* analyze_cmd = app.add_subcommand("analyze", "Full stability spectrum of one record");
    std::string analyze_store;
    int analyze_nu = 1;
    analyze_cmd->add_option("--store", analyze_store, "JSONL saddle store")->required();
    analyze_cmd->add_option("--nu", analyze_nu, "record rank within the store")->required();

    auto* report_cmd = app.add_subcommand("report", "CSV tables and figure projection data");
    std::string stores_dir = ".", report_out = "report";
    bool tables_flag = false, figures_flag = false;
    int rep_n_min = 2, rep_n_max = 8;
    report_cmd->add_option("--stores", stores_dir, "directory with saddles_n<N>.jsonl stores")
        ->capture_default_str();
    report_cmd->add_option("--out", report_out, "output directory")->capture_default_str();
    report_cmd->add_flag("--tables", tables_flag, "emit CSV tables");
    report_cmd->add_flag("--figures", figures_flag, "emit projection files");
    report_cmd->add_option("--n-min", rep_n_min)->capture_default_str();
    report_cmd->add_option("--n-max", rep_n_max)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitValidation;
    }

    try {
        if (*ring_cmd) return cmd_ring(n_min, n_max);
        if (*search_cmd) {
            finder::SearchParams params;
            if (!params_file.empty()) {
                const FileParams fp = parse_params_file(params_file);
                params = fp.search;
                if (fp.has_model_n && fp.model.n_electrons != search_n)
                    throw CliError(kExitValidation, "params file n_electrons conflicts with --n");
                if (fp.model.field != 1.0)
                    throw CliError(kExitValidation,
                                   "search runs in scaled units (field = 1); use rescale for "
                                   "other field strengths");
            }
            if (starts >= 0) params.n_starts = starts;
            if (seed >= 0) params.rng_seed = static_cast<std::uint64_t>(seed);
            if (workers >= 0) params.workers = workers;
            if (out_path.empty()) out_path = store::default_store_name(search_n);
            try {
                params.validate();
                if (search_n < 2) throw std::invalid_argument("search: need n >= 2");
            } catch (const std::invalid_argument& e) {
                throw CliError(kExitValidation, e.what());
            }
            return cmd_search(search_n, params, out_path);
        }
        if (*analyze_cmd) return cmd_analyze(analyze_store, analyze_nu);
        if (*report_cmd) {
            if (!tables_flag && !figures_flag) tables_flag = figures_flag = true;
            return cmd_report(stores_dir, report_out, tables_flag, figures_flag, rep_n_min,
                              rep_n_max);
        }
    } catch (const CliError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return e.code;
    } catch (const store::StoreError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitValidation;
    } catch (const std::runtime_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitConvergence;
    }
    return kExitOk;
}
