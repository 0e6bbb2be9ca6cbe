#include "ionsaddles/report.hpp"

#include "ionsaddles/ring.hpp"
#include "ionsaddles/stability.hpp"
#include "ionsaddles/store.hpp"
#include "ionsaddles/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace ionsaddles::report {

bool is_planar_axial(const Configuration& config, double tol) {
    double alpha = 0.0;
    bool have_alpha = false;
    for (const auto& p : config.positions) {
        if (std::hypot(p.x(), p.y()) <= tol) continue;
        if (!have_alpha) {
            alpha = std::atan2(p.y(), p.x());
            have_alpha = true;
            continue;
        }
        // Distance from the axial plane at azimuth alpha.
        if (std::abs(-p.x() * std::sin(alpha) + p.y() * std::cos(alpha)) > tol) return false;
    }
    return true;
}

int axial_count(const Configuration& config, double tol) {
    int c = 0;
    for (const auto& p : config.positions)
        if (std::hypot(p.x(), p.y()) <= tol) ++c;
    return c;
}

std::string family_comment(const SaddleRecord& record, double tol) {
    const int n = record.n;
    if (const auto rs = ring::ring_saddle(n);
        rs && symmetry::equivalent(record.positions, ring::embed(*rs), tol))
        return "all on a ring";
    if (n >= 3) {
        const auto rpc = ring::ring_plus_center_saddle(n);
        if (rpc.converged && symmetry::equivalent(record.positions, ring::embed(rpc.saddle), tol))
            return "ring plus center";
    }
    if (is_planar_axial(record.positions)) return "all on a line";
    // Several states have a pair of electrons well inside the rest; the
    // tabulated comments name the motif only for a dominant state.
    if (record.nu == 1) {
        double rho_max = 0.0;
        for (const auto& p : record.positions.positions)
            rho_max = std::max(rho_max, std::hypot(p.x(), p.y()));
        int inner = 0;
        for (const auto& p : record.positions.positions)
            if (std::hypot(p.x(), p.y()) < 0.5 * rho_max) ++inner;
        if (inner == 2) return "two in the center";
    }
    return "---";
}

namespace {

namespace fs = std::filesystem;

std::string fixed4(double v) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(4) << v;
    return os.str();
}

class CsvWriter {
public:
    CsvWriter(const fs::path& path, ReportResult& result) : out_(path) {
        if (!out_) throw store::StoreError("cannot open for writing: " + path.string());
        result.written.push_back(path);
    }
    void row(const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) out_ << (i ? "," : "") << cells[i];
        out_ << '\n';
    }

private:
    std::ofstream out_;
};

void write_projection(const fs::path& path, const Configuration& config, bool xy,
                      ReportResult& result) {
    CsvWriter csv(path, result);
    csv.row(xy ? std::vector<std::string>{"x", "y"} : std::vector<std::string>{"x", "z"});
    for (const auto& p : config.positions) {
        std::ostringstream a, b;
        a << std::setprecision(6) << std::fixed << p.x();
        b << std::setprecision(6) << std::fixed << (xy ? p.y() : p.z());
        csv.row({a.str(), b.str()});
    }
}

void write_both_projections(const fs::path& dir, const std::string& stem,
                            const Configuration& config, ReportResult& result) {
    write_projection(dir / (stem + "_xz.csv"), config, false, result);
    write_projection(dir / (stem + "_xy.csv"), config, true, result);
}

struct FamilyRow {
    int n;
    double energy;
    stability::ExponentReport exponents;
};

FamilyRow analyzed_family_row(int n, const Configuration& config) {
    const ModelParams model(n);
    const auto spectrum = stability::analyze(config, model);
    return {n, potential_energy(config, model), stability::exponents(spectrum)};
}

/// The highest-energy record, which is the line saddle for every tabulated n;
/// the planarity check guards against truncated stores.
const SaddleRecord* line_record(const std::vector<SaddleRecord>& records) {
    if (records.empty()) return nullptr;
    const SaddleRecord& last = records.back();
    return is_planar_axial(last.positions) ? &last : nullptr;
}

}  // namespace

ReportResult write_report(const fs::path& stores_dir, const fs::path& out_dir,
                          const ReportOptions& options) {
    ReportResult result;
    fs::create_directories(out_dir);
    const fs::path fig_dir = out_dir / "figures";
    if (options.figures) fs::create_directories(fig_dir);

    std::map<int, std::vector<SaddleRecord>> stores;
    for (int n = options.n_min; n <= options.n_max; ++n) {
        const fs::path p = stores_dir / store::default_store_name(n);
        if (fs::exists(p))
            stores[n] = store::load_records(p);
        else
            result.missing_stores.push_back(p.string());
    }

    if (options.tables) {
        {
            CsvWriter csv(out_dir / "table1_ring.csv", result);
            csv.row({"N", "E_N", "n_u", "lambda_r", "mu", "rho_N", "z_N"});
            for (int n = std::max(2, options.n_min); n <= options.n_max; ++n) {
                const auto s = ring::ring_saddle(n);
                if (!s) {
                    csv.row({std::to_string(n), "no configuration", "", "", "", "", ""});
                    continue;
                }
                const auto row = analyzed_family_row(n, ring::embed(*s));
                csv.row({std::to_string(n), fixed4(row.energy), std::to_string(row.exponents.n_u),
                         fixed4(row.exponents.lambda_r), fixed4(row.exponents.mu), fixed4(s->rho),
                         fixed4(s->z)});
            }
        }
        {
            CsvWriter csv(out_dir / "table2_ring_plus_center.csv", result);
            csv.row({"N", "E_N", "n_u", "lambda_r", "mu", "z_c", "rho_N-1", "z_N-1"});
            for (int n = std::max(4, options.n_min); n <= options.n_max; ++n) {
                const auto r = ring::ring_plus_center_saddle(n);
                if (!r.converged) {
                    csv.row({std::to_string(n), "not converged", "", "", "", "", "", ""});
                    continue;
                }
                const auto row = analyzed_family_row(n, ring::embed(r.saddle));
                csv.row({std::to_string(n), fixed4(row.energy), std::to_string(row.exponents.n_u),
                         fixed4(row.exponents.lambda_r), fixed4(row.exponents.mu),
                         fixed4(r.saddle.z_c), fixed4(r.saddle.rho), fixed4(r.saddle.z)});
            }
        }
        {
            CsvWriter csv(out_dir / "table3_line.csv", result);
            csv.row({"N", "E_N", "n_u", "lambda_r", "mu", "z_min", "z_max"});
            for (int n = std::max(3, options.n_min); n <= options.n_max; ++n) {
                auto it = stores.find(n);
                if (it == stores.end()) continue;
                const SaddleRecord* line = line_record(it->second);
                if (!line) continue;
                double z_min = line->positions.positions.front().z(), z_max = z_min;
                for (const auto& p : line->positions.positions) {
                    z_min = std::min(z_min, p.z());
                    z_max = std::max(z_max, p.z());
                }
                csv.row({std::to_string(n), fixed4(line->energy), std::to_string(line->n_u),
                         fixed4(line->lambda_r), fixed4(line->mu), fixed4(z_min), fixed4(z_max)});
            }
        }
        for (int n = std::max(4, options.n_min); n <= options.n_max; ++n) {
            auto it = stores.find(n);
            if (it == stores.end()) continue;
            CsvWriter csv(out_dir / ("table" + std::to_string(n) + "_n" + std::to_string(n) + ".csv"),
                          result);
            csv.row({"nu", "E_nu", "n_u", "lambda_r", "mu", "comment"});
            for (const auto& rec : it->second)
                csv.row({std::to_string(rec.nu), fixed4(rec.energy), std::to_string(rec.n_u),
                         fixed4(rec.lambda_r), fixed4(rec.mu), family_comment(rec)});
        }
        {
            CsvWriter csv(out_dir / "table9_summary.csv", result);
            csv.row({"N", "E_N", "mu", "nu_N", "comment", "note"});
            for (int n = options.n_min; n <= options.n_max; ++n) {
                auto it = stores.find(n);
                if (it == stores.end() || it->second.empty()) continue;
                const auto& recs = it->second;
                const SaddleRecord& lowest = recs.front();
                std::string note;
                if (recs.size() > 1 && recs[1].energy - lowest.energy < 1e-3) {
                    std::ostringstream os;
                    os << "marginal: second state within " << std::scientific
                       << std::setprecision(1) << (recs[1].energy - lowest.energy);
                    note = os.str();
                }
                csv.row({std::to_string(n), fixed4(lowest.energy), fixed4(lowest.mu),
                         std::to_string(static_cast<int>(recs.size())), family_comment(lowest),
                         note});
            }
        }
        {
            // Energy per electron for the three symmetric families.
            CsvWriter csv(out_dir / "family_energy_per_n.csv", result);
            csv.row({"family", "N", "E", "E_over_N"});
            for (int n = std::max(2, options.n_min); n <= options.n_max; ++n)
                if (const auto s = ring::ring_saddle(n)) {
                    const double e = analyzed_family_row(n, ring::embed(*s)).energy;
                    csv.row({"ring", std::to_string(n), fixed4(e), fixed4(e / n)});
                }
            for (int n = std::max(4, options.n_min); n <= options.n_max; ++n) {
                const auto r = ring::ring_plus_center_saddle(n);
                if (r.converged)
                    csv.row({"ring_plus_center", std::to_string(n), fixed4(r.saddle.energy),
                             fixed4(r.saddle.energy / n)});
            }
            for (int n = std::max(3, options.n_min); n <= options.n_max; ++n) {
                auto it = stores.find(n);
                if (it == stores.end()) continue;
                if (const SaddleRecord* line = line_record(it->second))
                    csv.row({"line", std::to_string(n), fixed4(line->energy),
                             fixed4(line->energy / n)});
            }
        }
    }

    if (options.figures) {
        for (int n = std::max(3, options.n_min); n <= options.n_max; ++n)
            if (const auto s = ring::ring_saddle(n))
                write_both_projections(fig_dir, "ring_n" + std::to_string(n), ring::embed(*s),
                                       result);
        for (int n = std::max(4, options.n_min); n <= options.n_max; ++n) {
            const auto r = ring::ring_plus_center_saddle(n);
            if (r.converged)
                write_both_projections(fig_dir, "rpc_n" + std::to_string(n), ring::embed(r.saddle),
                                       result);
        }
        for (int n = std::max(3, options.n_min); n <= options.n_max; ++n) {
            auto it = stores.find(n);
            if (it == stores.end()) continue;
            if (const SaddleRecord* line = line_record(it->second))
                write_both_projections(fig_dir, "line_n" + std::to_string(n), line->positions,
                                       result);
            // Lowest-lying states, five at most, as in the per-N panels.
            if (n < 4) continue;
            const int shown = std::min<int>(5, static_cast<int>(it->second.size()));
            for (int k = 0; k < shown; ++k)
                write_both_projections(fig_dir,
                                       "n" + std::to_string(n) + "_nu" + std::to_string(k + 1),
                                       it->second[static_cast<std::size_t>(k)].positions, result);
        }
    }

    return result;
}

}  // namespace ionsaddles::report
