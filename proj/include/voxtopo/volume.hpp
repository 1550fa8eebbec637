#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace voxtopo {

/// Integer lattice position of a voxel (raster space).
struct VoxelCoord {
  std::int32_t x = 0;
  std::int32_t y = 0;
  std::int32_t z = 0;

  friend auto operator<=>(const VoxelCoord&, const VoxelCoord&) = default;
  friend VoxelCoord operator+(VoxelCoord a, VoxelCoord b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend VoxelCoord operator-(VoxelCoord a, VoxelCoord b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
  }
};

std::string to_string(const VoxelCoord& c);

struct Dims {
  std::int32_t nx = 0;
  std::int32_t ny = 0;
  std::int32_t nz = 0;

  friend bool operator==(const Dims&, const Dims&) = default;
  std::uint64_t cells() const {
    return std::uint64_t(nx) * std::uint64_t(ny) * std::uint64_t(nz);
  }
};

/// Largest extent accepted along any axis.
inline constexpr std::int32_t kMaxDimension = 1 << 20;

enum class AdjacencyKind { FACE6, VERTEX26 };

std::string to_string(AdjacencyKind adj);

/// Neighbor offsets: 6 with one coordinate +-1, or 26 with Chebyshev distance 1.
std::span<const VoxelCoord> neighbor_offsets(AdjacencyKind adj);

/// Dense binary occupancy grid over the box [origin, origin + dims).
///
/// Cells are linearized x fastest, then y, then z:
///   index = (x - ox) + nx * ((y - oy) + ny * (z - oz)).
/// Coordinates outside the box always read as background.
class VoxelVolume {
 public:
  VoxelVolume() = default;
  VoxelVolume(VoxelCoord origin, Dims dims);

  /// Tight bounding box around `coords`; duplicates are set once.
  static VoxelVolume from_coords(std::span<const VoxelCoord> coords);

  const VoxelCoord& origin() const { return origin_; }
  const Dims& dims() const { return dims_; }
  std::uint64_t cell_count() const { return dims_.cells(); }
  std::uint64_t count() const { return count_; }
  bool empty() const { return count_ == 0; }

  bool contains(VoxelCoord c) const {
    return c.x >= origin_.x && c.y >= origin_.y && c.z >= origin_.z &&
           c.x - origin_.x < dims_.nx && c.y - origin_.y < dims_.ny &&
           c.z - origin_.z < dims_.nz;
  }
  std::uint64_t index_of(VoxelCoord c) const {
    return std::uint64_t(c.x - origin_.x) +
           std::uint64_t(dims_.nx) *
               (std::uint64_t(c.y - origin_.y) +
                std::uint64_t(dims_.ny) * std::uint64_t(c.z - origin_.z));
  }
  VoxelCoord coord_of(std::uint64_t index) const;

  bool test_index(std::uint64_t i) const { return (bits_[i >> 6] >> (i & 63)) & 1u; }
  bool test(VoxelCoord c) const { return contains(c) && test_index(index_of(c)); }

  /// Sets or clears a voxel inside the box; throws ParameterError outside it.
  void set(VoxelCoord c, bool value = true);
  void set_index(std::uint64_t i, bool value);

  /// Set voxels in linearization order.
  std::vector<VoxelCoord> coords() const;
  void for_each_voxel(const std::function<void(VoxelCoord)>& fn) const;

  /// Number of set FACE6 neighbors of `c`.
  int face_neighbor_count(VoxelCoord c) const;

  /// Copy cropped to the tight bounding box of the set voxels.
  VoxelVolume cropped() const;
  VoxelVolume translated(VoxelCoord offset) const;

  std::span<const std::uint64_t> words() const { return bits_; }

  /// Same origin, dims and occupancy.
  friend bool operator==(const VoxelVolume& a, const VoxelVolume& b);

 private:
  VoxelCoord origin_{};
  Dims dims_{};
  std::uint64_t count_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Same set of occupied coordinates, regardless of box.
bool same_occupancy(const VoxelVolume& a, const VoxelVolume& b);

}  // namespace voxtopo
