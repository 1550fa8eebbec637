#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "voxtopo/volume.hpp"

namespace voxtopo {

enum class PathologyKind {
  CORNER_SHARE,       // two set voxels meeting only at a 0-cell
  EDGE_SHARE,         // two set voxels meeting only at a 1-cell
  COMPLEMENT_CORNER,  // 2x2x2 block with six set voxels, the two empty ones antipodal
};

std::string to_string(PathologyKind k);

struct PathologyInstance {
  PathologyKind kind = PathologyKind::CORNER_SHARE;
  /// Minimum corner of the 2x2x2 block (or 2x2 square for EDGE_SHARE).
  VoxelCoord location{};
  /// Set voxels for CORNER/EDGE_SHARE, empty voxels for COMPLEMENT_CORNER.
  std::array<VoxelCoord, 2> witnesses{};

  friend bool operator==(const PathologyInstance&, const PathologyInstance&) = default;
};

std::string describe(const PathologyInstance& p);

struct RepairLog {
  std::vector<VoxelCoord> deletions;
  std::vector<VoxelCoord> additions;
  std::uint64_t passes = 0;
  bool aborted = false;
  /// Why the repair stopped early; empty unless aborted.
  std::string diagnostic;

  std::uint64_t modifications() const { return deletions.size() + additions.size(); }
};

struct RepairResult {
  VoxelVolume volume;
  RepairLog log;
};

/// All pathological configurations, in scan order. The scan visits lattice
/// positions in box linearization order; at each position it checks the xy,
/// xz and yz squares anchored there, then the 2x2x2 block anchored there.
std::vector<PathologyInstance> detect_pathologies(const VoxelVolume& v);

bool is_well_composed(const VoxelVolume& v);

/// Repeats detection passes until none remain. Within a pass, COMPLEMENT_CORNER
/// blocks are filled first (the empty witness with more set face neighbors,
/// ties to the smaller index), then each CORNER/EDGE_SHARE pair loses the
/// witness with fewer set face neighbors (ties to the smaller index). Instances
/// already resolved earlier in the pass are skipped.
///
/// A cell is not flipped back once changed: if both witnesses would revert an
/// earlier change, a fresh cell of the same square or block is changed in the
/// opposite direction (an edge share is bridged, a corner pair is joined, a
/// complement block is carved).
///
/// `budget` caps the number of modifications; exceeding it, or exceeding the
/// pass bound (initial voxels + initial pathologies), stops with
/// log.aborted set and the partially repaired volume returned.
RepairResult repair_volume(const VoxelVolume& v,
                           std::optional<std::uint64_t> budget = std::nullopt);

}  // namespace voxtopo
