#pragma once

#include <filesystem>
#include <fstream>
#include <optional>
#include <string>

#include <json.hpp>

#include "tropmod/delta_complex.hpp"
#include "tropmod/version.hpp"

namespace tropmod {

/// Plain-file JSON cache.  Entries are keyed by an operation tag plus
/// parameters; a hit requires the stored key and tool version to match
/// exactly, so hash collisions and stale or corrupted files fall through to
/// a recompute.
class Cache {
 public:
  Cache() = default;
  explicit Cache(std::string dir) : dir_(std::move(dir)) {}

  bool enabled() const { return !dir_.empty(); }
  const std::string& dir() const { return dir_; }

  std::optional<nlohmann::json> load(const std::string& key) const {
    if (!enabled()) return std::nullopt;
    std::ifstream in(path_for(key));
    if (!in) return std::nullopt;
    nlohmann::json doc = nlohmann::json::parse(in, nullptr, /*allow_exceptions=*/false);
    if (doc.is_discarded() || !doc.is_object()) return std::nullopt;
    if (doc.value("key", "") != key || doc.value("version", "") != kVersion)
      return std::nullopt;
    if (!doc.contains("payload")) return std::nullopt;
    return doc["payload"];
  }

  void store(const std::string& key, const nlohmann::json& payload) const {
    if (!enabled()) return;
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    nlohmann::json doc{{"key", key}, {"version", kVersion}, {"payload", payload}};
    std::ofstream out(path_for(key));
    out << doc.dump() << "\n";
  }

 private:
  std::string path_for(const std::string& key) const {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : key) {
      h ^= c;
      h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return (std::filesystem::path(dir_) / (std::string(buf) + ".json")).string();
  }

  std::string dir_;
};

/// stable_graphs with disk memoization keyed by the genus.
inline std::vector<StableClass> cached_stable_graphs(int g, const Cache& cache) {
  std::string key = "stable-graphs g=" + std::to_string(g);
  if (auto hit = cache.load(key)) {
    std::vector<StableClass> out;
    for (const auto& item : *hit) {
      MultiGraph graph = MultiGraph::from_text(item.get<std::string>());
      out.push_back(StableClass{graph, canonical_form(graph), g});
    }
    return out;
  }
  std::vector<StableClass> out = stable_graphs(g);
  nlohmann::json payload = nlohmann::json::array();
  for (const StableClass& c : out) payload.push_back(c.representative.to_text());
  cache.store(key, payload);
  return out;
}

/// filtered_structures with disk memoization keyed by the canonical form of
/// the stable class.
inline std::vector<FilteredClass> cached_filtered_structures(const StableClass& cls,
                                                             const Cache& cache) {
  std::string key = "filtered-structures form=" + cls.form.hex();
  auto rebuild = [](const nlohmann::json& payload) {
    std::vector<FilteredClass> out;
    for (const auto& item : payload) {
      MultiGraph graph = MultiGraph::from_text(item["graph"].get<std::string>());
      std::vector<EdgeSet> blocks;
      for (const auto& b : item["blocks"]) blocks.push_back(b.get<EdgeSet>());
      FilteredGraph fg(std::move(graph), std::move(blocks));
      int depth = fg.depth();
      out.push_back(FilteredClass{std::move(fg), {}, depth});
      out.back().form = canonical_form(out.back().representative);
    }
    return out;
  };
  if (auto hit = cache.load(key)) return rebuild(*hit);
  std::vector<FilteredClass> out = filtered_structures(cls);
  nlohmann::json payload = nlohmann::json::array();
  for (const FilteredClass& c : out) {
    nlohmann::json item;
    item["graph"] = c.representative.graph().to_text();
    item["blocks"] = c.representative.blocks();
    payload.push_back(item);
  }
  cache.store(key, payload);
  return out;
}

inline DeltaComplex build_delta(int g, const Cache& cache) {
  if (!cache.enabled()) return build_delta(g);
  std::vector<DeltaCell> cells;
  for (const StableClass& sc : cached_stable_graphs(g, cache)) {
    for (FilteredClass& fc : cached_filtered_structures(sc, cache)) {
      int dim = fc.depth - 1;
      cells.push_back(DeltaCell{std::move(fc), dim, {}});
    }
  }
  return assemble_delta(g, std::move(cells));
}

}  // namespace tropmod
