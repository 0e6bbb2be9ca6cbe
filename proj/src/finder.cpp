#include "ionsaddles/finder.hpp"

#include "ionsaddles/stability.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace ionsaddles::finder {

void SearchParams::validate() const {
    if (n_starts < 1) throw std::invalid_argument("SearchParams: n_starts must be >= 1");
    if (!(sample_rho_max > 0.0)) throw std::invalid_argument("SearchParams: sample_rho_max must be > 0");
    if (!(sample_z_min < sample_z_max))
        throw std::invalid_argument("SearchParams: sample_z_range must be a nonempty interval");
    if (!(newton_tol > 0.0)) throw std::invalid_argument("SearchParams: newton_tol must be > 0");
    if (max_iters < 1) throw std::invalid_argument("SearchParams: max_iters must be >= 1");
    if (!(step_clamp > 0.0)) throw std::invalid_argument("SearchParams: step_clamp must be > 0");
    if (!(dedup_tol > 0.0)) throw std::invalid_argument("SearchParams: dedup_tol must be > 0");
    if (workers < 0) throw std::invalid_argument("SearchParams: workers must be >= 0");
}

const char* to_string(NewtonStatus status) {
    switch (status) {
        case NewtonStatus::Converged: return "converged";
        case NewtonStatus::Diverged: return "diverged";
        case NewtonStatus::Singular: return "singular";
        case NewtonStatus::MaxIters: return "max_iters";
    }
    return "unknown";
}

Configuration random_configuration(int n, const SearchParams& params, SplitMix64& rng) {
    params.validate();
    for (int attempt = 0; attempt < 100; ++attempt) {
        Configuration c(n);
        for (int i = 0; i < n; ++i) {
            const double z =
                params.sample_z_min + (params.sample_z_max - params.sample_z_min) * rng.uniform();
            const double rho = params.sample_rho_max * std::sqrt(rng.uniform());
            const double phi = 2.0 * std::numbers::pi * rng.uniform();
            c.positions[static_cast<std::size_t>(i)] =
                Eigen::Vector3d(rho * std::cos(phi), rho * std::sin(phi), z);
        }
        if (!is_singular(c)) return c;
    }
    throw std::runtime_error("random_configuration: 100 consecutive singular draws");
}

NewtonResult newton_refine(const Configuration& start, const ModelParams& model,
                           const SearchParams& params) {
    params.validate();
    model.validate();

    NewtonResult result;
    result.config = start;

    Eigen::VectorXd x = start.flat();
    const int dim = static_cast<int>(x.size());
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(dim);

    for (int iter = 0; iter <= params.max_iters; ++iter) {
        result.iterations = iter;
        Configuration c = Configuration::from_flat(x);
        if (is_singular(c)) {
            result.status = NewtonStatus::Singular;
            return result;
        }
        const Eigen::VectorXd g = gradient(c, model);
        result.residual = g.norm();
        result.config = std::move(c);
        if (result.residual < params.newton_tol) {
            result.status = NewtonStatus::Converged;
            return result;
        }
        if (iter == params.max_iters) break;

        lu.compute(hessian(result.config, model));
        Eigen::VectorXd step = lu.solve(g);
        if (!step.allFinite()) {
            result.status = NewtonStatus::Singular;
            return result;
        }
        for (int k = 0; k < dim; ++k)
            step(k) = std::clamp(step(k), -params.step_clamp, params.step_clamp);
        x -= step;
        if (x.lpNorm<Eigen::Infinity>() > 1e3) {
            result.status = NewtonStatus::Diverged;
            result.config = Configuration::from_flat(x);
            return result;
        }
    }
    result.status = NewtonStatus::MaxIters;
    return result;
}

namespace {

int resolve_workers(const SearchParams& params) {
    if (params.workers > 0) return params.workers;
    if (const char* env = std::getenv("IONSADDLES_WORKERS")) {
        const int w = std::atoi(env);
        if (w > 0) return w;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

struct BasinClass {
    long first_index = 0;
    Configuration config;
    long hits = 0;
};

// Dedup a stream of converged configurations, keeping the earliest instance
// of each equivalence class as its representative.
void absorb(std::vector<BasinClass>& classes, long index, const Configuration& config, double tol,
            long* duplicates) {
    for (auto& cls : classes) {
        if (symmetry::equivalent(config, cls.config, tol)) {
            ++cls.hits;
            if (index < cls.first_index) {
                cls.first_index = index;
                cls.config = config;
            }
            if (duplicates) ++*duplicates;
            return;
        }
    }
    classes.push_back({index, config, 1});
}

}  // namespace

std::vector<SaddleRecord> search(int n, const SearchParams& params, SearchStats* stats_out) {
    params.validate();
    const ModelParams model(n);
    const int n_workers = resolve_workers(params);

    constexpr long kChunk = 512;
    const long n_chunks = (params.n_starts + kChunk - 1) / kChunk;
    std::atomic<long> next_chunk{0};

    std::vector<std::vector<BasinClass>> worker_classes(static_cast<std::size_t>(n_workers));
    std::vector<SearchStats> worker_stats(static_cast<std::size_t>(n_workers));

    auto run_worker = [&](int w) {
        auto& classes = worker_classes[static_cast<std::size_t>(w)];
        auto& stats = worker_stats[static_cast<std::size_t>(w)];
        for (;;) {
            const long chunk = next_chunk.fetch_add(1);
            if (chunk >= n_chunks) return;
            const long begin = chunk * kChunk;
            const long end = std::min(begin + kChunk, params.n_starts);
            for (long i = begin; i < end; ++i) {
                SplitMix64 rng = SplitMix64::stream(params.rng_seed, static_cast<std::uint64_t>(i));
                const Configuration start = random_configuration(n, params, rng);
                const NewtonResult result = newton_refine(start, model, params);
                switch (result.status) {
                    case NewtonStatus::Converged: ++stats.converged; break;
                    case NewtonStatus::Diverged: ++stats.diverged; continue;
                    case NewtonStatus::Singular: ++stats.singular; continue;
                    case NewtonStatus::MaxIters: ++stats.max_iters; continue;
                }
                if (params.halfspace_filter) {
                    bool downfield = true;
                    for (const auto& p : result.config.positions)
                        if (!(p.z() > 0.0)) downfield = false;
                    if (!downfield) {
                        ++stats.filtered_halfspace;
                        continue;
                    }
                }
                absorb(classes, i, result.config, params.dedup_tol, &stats.duplicates);
            }
        }
    };

    if (n_workers == 1) {
        run_worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(n_workers));
        for (int w = 0; w < n_workers; ++w) pool.emplace_back(run_worker, w);
        for (auto& t : pool) t.join();
    }

    // Deterministic merge: class identity is fixed by the earliest start
    // index, independent of how chunks were scheduled.
    std::vector<BasinClass> merged;
    SearchStats stats;
    for (int w = 0; w < n_workers; ++w) {
        const auto& ws = worker_stats[static_cast<std::size_t>(w)];
        stats.converged += ws.converged;
        stats.diverged += ws.diverged;
        stats.singular += ws.singular;
        stats.max_iters += ws.max_iters;
        stats.filtered_halfspace += ws.filtered_halfspace;
        stats.duplicates += ws.duplicates;
        for (const auto& cls : worker_classes[static_cast<std::size_t>(w)]) {
            bool found = false;
            for (auto& m : merged) {
                if (symmetry::equivalent(cls.config, m.config, params.dedup_tol)) {
                    m.hits += cls.hits;
                    if (cls.first_index < m.first_index) {
                        m.first_index = cls.first_index;
                        m.config = cls.config;
                    }
                    found = true;
                    break;
                }
            }
            if (!found) merged.push_back(cls);
        }
    }

    std::vector<SaddleRecord> records;
    records.reserve(merged.size());
    for (const auto& cls : merged) {
        const symmetry::CanonicalForm form = symmetry::canonicalize(cls.config, params.dedup_tol);
        SaddleRecord rec;
        rec.n = n;
        rec.energy = potential_energy(form.oriented, model);
        const auto spectrum = stability::analyze(form.oriented, model);
        const auto report = stability::exponents(spectrum);
        rec.n_u = report.n_u;
        rec.lambda_r = report.lambda_r;
        rec.mu = report.mu;
        rec.label = symmetry::classify(form.oriented, params.dedup_tol);
        rec.positions = form.oriented;
        rec.hits = cls.hits;
        rec.seed = params.rng_seed;
        records.push_back(std::move(rec));
    }

    std::sort(records.begin(), records.end(), [&](const SaddleRecord& a, const SaddleRecord& b) {
        if (a.energy != b.energy) return a.energy < b.energy;
        return symmetry::canonicalize(a.positions, params.dedup_tol).key <
               symmetry::canonicalize(b.positions, params.dedup_tol).key;
    });
    for (std::size_t i = 0; i < records.size(); ++i) records[i].nu = static_cast<int>(i) + 1;

    if (stats_out) *stats_out = stats;
    return records;
}

}  // namespace ionsaddles::finder
