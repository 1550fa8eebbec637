#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "voxtopo/homology.hpp"
#include "voxtopo/volume.hpp"

namespace voxtopo {

inline constexpr int kSchemaVersion = 1;

enum class PipelineStatus { ok, repair_aborted, classification_failed };

std::string to_string(PipelineStatus s);

struct InputInfo {
  std::string path;
  std::string format;
  std::uint64_t voxels = 0;
  friend bool operator==(const InputInfo&, const InputInfo&) = default;
};

struct RepairSummary {
  std::uint64_t deletions = 0;
  std::uint64_t additions = 0;
  std::uint64_t passes = 0;
  bool aborted = false;
  friend bool operator==(const RepairSummary&, const RepairSummary&) = default;
};

struct SurfaceReport {
  std::int32_t id = 0;
  std::uint64_t faces = 0;
  std::uint64_t points = 0;
  std::uint64_t m3 = 0, m4 = 0, m5 = 0, m6 = 0;
  std::int64_t euler = 0;
  std::int64_t genus = 0;
  friend bool operator==(const SurfaceReport&, const SurfaceReport&) = default;
};

struct ComponentReport {
  std::int32_t id = 0;
  std::uint64_t voxels = 0;
  std::vector<SurfaceReport> surfaces;
  HomologyRanks homology;
  std::int64_t cavities = 0;
  friend bool operator==(const ComponentReport&, const ComponentReport&) = default;
};

struct TopologyReport {
  int schema_version = kSchemaVersion;
  InputInfo input;
  RepairSummary repair;
  std::vector<ComponentReport> components;
  PipelineStatus status = PipelineStatus::ok;
  /// Empty when status is ok; otherwise names every component left out.
  std::string diagnostic;
  friend bool operator==(const TopologyReport&, const TopologyReport&) = default;
};

struct PipelineOptions {
  /// Total modifications allowed across all components; nullopt = unlimited.
  std::optional<std::uint64_t> budget;
  /// Adjacency used to group the raw input before repair.
  AdjacencyKind connectivity = AdjacencyKind::VERTEX26;
  /// Worker threads for per-component analysis; 0 = hardware concurrency.
  unsigned threads = 1;
  std::string input_path;
  std::string input_format;
};

/// Groups the input by `connectivity`, repairs each group, relabels the
/// repaired volume with FACE6 and analyzes every resulting component:
/// boundary complex, per-surface genus, homology ranks and cavity count.
/// Failures are confined to the component that caused them.
TopologyReport run_pipeline(const VoxelVolume& v, const PipelineOptions& options = {});

enum class ReportMode { json, text };

nlohmann::ordered_json report_to_json(const TopologyReport& r);
/// Throws ParameterError on schema mismatch.
TopologyReport report_from_json(const nlohmann::json& j);
std::string render_report(const TopologyReport& r, ReportMode mode);

}  // namespace voxtopo
