#pragma once

#include <cstdint>
#include <vector>

#include "voxtopo/volume.hpp"

namespace voxtopo {

/// Per-cell component labels over a box. 0 marks cells outside the labeled
/// set; components are numbered 1..component_count in the order their first
/// cell appears in the box linearization.
struct ComponentLabeling {
  VoxelCoord origin{};
  Dims dims{};
  AdjacencyKind adjacency = AdjacencyKind::FACE6;
  std::vector<std::int32_t> labels;
  std::int32_t component_count = 0;
  /// component_sizes[id - 1] is the cell count of component `id`.
  std::vector<std::uint64_t> component_sizes;

  std::int32_t label_at(VoxelCoord c) const;
  std::uint64_t size_of(std::int32_t id) const;
};

/// Background labeling of the box padded by one layer on every side.
/// The padding layer is 6-connected and first in scan order, so the exterior
/// component is always label 1; every other label is a cavity.
struct BackgroundLabeling {
  ComponentLabeling labeling;
  static constexpr std::int32_t kExterior = 1;

  std::int32_t cavity_count() const { return labeling.component_count - 1; }
  bool is_cavity(std::int32_t id) const { return id > kExterior; }
};

/// Breadth-first labeling of the set voxels; linear in the box size.
ComponentLabeling label_components(const VoxelVolume& v, AdjacencyKind adj);

/// FACE6 labeling of the complement within the box padded by one voxel.
BackgroundLabeling label_background(const VoxelVolume& v);

/// The voxels of component `id`, cropped to their tight bounding box.
VoxelVolume extract_component(const VoxelVolume& v, const ComponentLabeling& l,
                              std::int32_t id);

}  // namespace voxtopo
