#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "voxtopo/volume.hpp"

namespace voxtopo {

/// Dual-lattice point. Voxel (x,y,z) occupies [x,x+1] x [y,y+1] x [z,z+1].
struct PointCoord {
  std::int32_t x = 0;
  std::int32_t y = 0;
  std::int32_t z = 0;

  friend auto operator<=>(const PointCoord&, const PointCoord&) = default;
};

/// Outward face direction, from the owning voxel toward the background.
enum class FaceNormal : std::uint8_t { NegX, PosX, NegY, PosY, NegZ, PosZ };

VoxelCoord normal_offset(FaceNormal n);

struct BoundaryFace {
  VoxelCoord owner{};
  FaceNormal normal = FaceNormal::PosX;
  /// Counter-clockwise seen from the background side.
  std::array<PointCoord, 4> corners{};
};

struct BoundaryEdge {
  std::uint32_t a = 0;  // endpoint point indices, a < b in lattice order
  std::uint32_t b = 0;
  std::array<std::uint32_t, 2> faces{};
  std::uint8_t face_count = 0;
};

struct SurfaceCells {
  std::uint64_t faces = 0;
  std::uint64_t edges = 0;
  std::uint64_t points = 0;
};

/// Boundary surface of one well-composed FACE6 component as a cell complex.
/// Cells are numbered in first-encounter order while walking the set voxels in
/// linearization order and their faces in FaceNormal order.
struct BoundaryComplex {
  std::vector<BoundaryFace> faces;
  std::vector<std::array<std::uint32_t, 4>> face_points;
  std::vector<std::array<std::uint32_t, 4>> face_edges;

  std::vector<PointCoord> points;
  /// Number of boundary faces incident to each point.
  std::vector<std::uint8_t> point_incidence;
  std::vector<std::int32_t> point_surface;

  std::vector<BoundaryEdge> edges;

  /// Surface of each face, 1..surface_count (shared-edge connectivity).
  std::vector<std::int32_t> surface_ids;
  std::int32_t surface_count = 0;
  /// surface_cells[id - 1] and surface_points[id - 1] describe surface `id`.
  std::vector<SurfaceCells> surface_cells;
  std::vector<std::vector<std::uint32_t>> surface_points;

  const SurfaceCells& cells_of(std::int32_t surface) const;
};

/// Set voxels with at least one VERTEX26 background neighbor, in
/// linearization order.
std::vector<VoxelCoord> find_boundary_voxels(const VoxelVolume& v);

/// Requires a well-composed volume made of exactly one FACE6 component;
/// throws ContractViolation otherwise.
BoundaryComplex build_boundary_complex(const VoxelVolume& v);

/// V - E + F over the cells of one surface.
std::int64_t euler_characteristic(const BoundaryComplex& c, std::int32_t surface);

/// OFF quad mesh: "OFF", "V F 0", integer point lines, "4 i j k l" faces.
/// Several complexes are concatenated into one mesh.
void write_off(std::span<const BoundaryComplex> complexes, std::ostream& out);

}  // namespace voxtopo
