#pragma once

#include "ionsaddles/finder.hpp"
#include "ionsaddles/record.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace ionsaddles::store {

struct StoreError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Everything needed to reproduce a search run bit-for-bit, plus outcome
/// counters. Written as a sidecar JSON next to the store.
struct RunManifest {
    int n = 0;
    ModelParams model;
    finder::SearchParams params;
    std::string tool_version;
    double wall_seconds = 0.0;
    finder::SearchStats stats;
    long n_records = 0;
};

/// JSONL, one record per line, full binary precision (shortest round-trip
/// decimal form). Records are written in nu order.
void save_records(const std::filesystem::path& path, const std::vector<SaddleRecord>& records);
std::vector<SaddleRecord> load_records(const std::filesystem::path& path);

void save_manifest(const std::filesystem::path& path, const RunManifest& manifest);
RunManifest load_manifest(const std::filesystem::path& path);

/// Sidecar path convention: "<store>.manifest.json".
std::filesystem::path manifest_path_for(const std::filesystem::path& store_path);

/// Default store name for n electrons: "saddles_n<EL>.jsonl".
std::string default_store_name(int n);

}  // namespace ionsaddles::store
