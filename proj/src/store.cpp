#include "ionsaddles/store.hpp"

#include <json.hpp>

#include <fstream>

namespace ionsaddles::store {

namespace {

using nlohmann::json;

json to_json(const SaddleRecord& rec) {
    json positions = json::array();
    for (const auto& p : rec.positions.positions)
        positions.push_back(json::array({p.x(), p.y(), p.z()}));
    return json{{"n", rec.n},
                {"nu", rec.nu},
                {"energy", rec.energy},
                {"n_u", rec.n_u},
                {"lambda_r", rec.lambda_r},
                {"mu", rec.mu},
                {"symmetry", rec.label.str()},
                {"rotation_order", rec.label.rotation_order},
                {"has_mirror", rec.label.has_mirror},
                {"positions", positions},
                {"hits", rec.hits},
                {"seed", rec.seed}};
}

SaddleRecord record_from_json(const json& j) {
    SaddleRecord rec;
    rec.n = j.at("n").get<int>();
    rec.nu = j.at("nu").get<int>();
    rec.energy = j.at("energy").get<double>();
    rec.n_u = j.at("n_u").get<int>();
    rec.lambda_r = j.at("lambda_r").get<double>();
    rec.mu = j.at("mu").get<double>();
    rec.label.rotation_order = j.at("rotation_order").get<int>();
    rec.label.has_mirror = j.at("has_mirror").get<bool>();
    for (const auto& p : j.at("positions"))
        rec.positions.positions.emplace_back(p.at(0).get<double>(), p.at(1).get<double>(),
                                             p.at(2).get<double>());
    rec.hits = j.at("hits").get<long>();
    rec.seed = j.at("seed").get<std::uint64_t>();
    return rec;
}

}  // namespace

void save_records(const std::filesystem::path& path, const std::vector<SaddleRecord>& records) {
    std::ofstream out(path);
    if (!out) throw StoreError("cannot open store for writing: " + path.string());
    for (const auto& rec : records) out << to_json(rec).dump() << '\n';
    if (!out) throw StoreError("write failed: " + path.string());
}

std::vector<SaddleRecord> load_records(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw StoreError("cannot open store: " + path.string());
    std::vector<SaddleRecord> records;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        records.push_back(record_from_json(json::parse(line)));
    }
    return records;
}

void save_manifest(const std::filesystem::path& path, const RunManifest& m) {
    const json j{{"n", m.n},
                 {"model",
                  {{"n_electrons", m.model.n_electrons},
                   {"nuclear_charge", m.model.nuclear_charge},
                   {"field", m.model.field}}},
                 {"params",
                  {{"n_starts", m.params.n_starts},
                   {"rng_seed", m.params.rng_seed},
                   {"sample_rho_max", m.params.sample_rho_max},
                   {"sample_z_min", m.params.sample_z_min},
                   {"sample_z_max", m.params.sample_z_max},
                   {"newton_tol", m.params.newton_tol},
                   {"max_iters", m.params.max_iters},
                   {"step_clamp", m.params.step_clamp},
                   {"dedup_tol", m.params.dedup_tol},
                   {"workers", m.params.workers},
                   {"halfspace_filter", m.params.halfspace_filter}}},
                 {"tool_version", m.tool_version},
                 {"wall_seconds", m.wall_seconds},
                 {"counts",
                  {{"converged", m.stats.converged},
                   {"diverged", m.stats.diverged},
                   {"singular", m.stats.singular},
                   {"max_iters", m.stats.max_iters},
                   {"filtered_halfspace", m.stats.filtered_halfspace},
                   {"duplicates", m.stats.duplicates}}},
                 {"n_records", m.n_records}};
    std::ofstream out(path);
    if (!out) throw StoreError("cannot open manifest for writing: " + path.string());
    out << j.dump(2) << '\n';
    if (!out) throw StoreError("write failed: " + path.string());
}

RunManifest load_manifest(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw StoreError("cannot open manifest: " + path.string());
    const json j = json::parse(in);
    RunManifest m;
    m.n = j.at("n").get<int>();
    const auto& jm = j.at("model");
    m.model.n_electrons = jm.at("n_electrons").get<int>();
    m.model.nuclear_charge = jm.at("nuclear_charge").get<double>();
    m.model.field = jm.at("field").get<double>();
    const auto& jp = j.at("params");
    m.params.n_starts = jp.at("n_starts").get<long>();
    m.params.rng_seed = jp.at("rng_seed").get<std::uint64_t>();
    m.params.sample_rho_max = jp.at("sample_rho_max").get<double>();
    m.params.sample_z_min = jp.at("sample_z_min").get<double>();
    m.params.sample_z_max = jp.at("sample_z_max").get<double>();
    m.params.newton_tol = jp.at("newton_tol").get<double>();
    m.params.max_iters = jp.at("max_iters").get<int>();
    m.params.step_clamp = jp.at("step_clamp").get<double>();
    m.params.dedup_tol = jp.at("dedup_tol").get<double>();
    m.params.workers = jp.at("workers").get<int>();
    m.params.halfspace_filter = jp.at("halfspace_filter").get<bool>();
    m.tool_version = j.at("tool_version").get<std::string>();
    m.wall_seconds = j.at("wall_seconds").get<double>();
    const auto& jc = j.at("counts");
    m.stats.converged = jc.at("converged").get<long>();
    m.stats.diverged = jc.at("diverged").get<long>();
    m.stats.singular = jc.at("singular").get<long>();
    m.stats.max_iters = jc.at("max_iters").get<long>();
    m.stats.filtered_halfspace = jc.at("filtered_halfspace").get<long>();
    m.stats.duplicates = jc.at("duplicates").get<long>();
    m.n_records = j.at("n_records").get<long>();
    return m;
}

std::filesystem::path manifest_path_for(const std::filesystem::path& store_path) {
    std::filesystem::path p = store_path;
    p += ".manifest.json";
    return p;
}

std::string default_store_name(int n) {
    return "saddles_n" + std::to_string(n) + ".jsonl";
}

}  // namespace ionsaddles::store
