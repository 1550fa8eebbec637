#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "voxtopo/volume.hpp"

namespace voxtopo {

struct Cuboid {
  std::int32_t a = 1, b = 1, c = 1;
};

/// Voxels whose centers lie in the closed ball of `radius` centered at the
/// origin of point space; the voxel range is [-radius, radius).
struct Ball {
  std::int32_t radius = 1;
};

struct Rect {
  std::int32_t x = 0, y = 0, w = 1, h = 1;
};

/// a x b footprint of thickness t with rectangular through-holes. Holes must
/// stay off the outer border so each one is a tunnel, not a notch.
struct Ring {
  std::int32_t a = 3, b = 3, thickness = 1;
  std::vector<Rect> holes = {Rect{1, 1, 1, 1}};
};

/// (2n+1) x 3 x thickness plate with n unit holes at x = 1, 3, ..., 2n-1.
struct Plate {
  std::int32_t holes = 0;
  std::int32_t thickness = 1;
};

/// Outer cuboid minus a centered inner cuboid (one enclosed cavity).
struct Shell {
  Cuboid outer{5, 5, 5};
  Cuboid inner{1, 1, 1};
};

/// Independent Bernoulli(density) occupancy; empty draws fall back to one voxel.
struct RandomFill {
  Dims dims{8, 8, 8};
  double density = 0.3;
  std::uint64_t seed = 0;
};

using ShapeSpec = std::variant<Cuboid, Ball, Ring, Plate, Shell, RandomFill>;

/// All shapes are anchored at origin (0,0,0) except Ball, which is centered.
VoxelVolume generate_shape(const ShapeSpec& spec);

/// Parses "name[:p1,p2,...]":
///   cuboid:a,b,c  ball:r  ring[:a,b,t]  plate:n[,t]  shell[:A,B,C,a,b,c]
///   random:nx,ny,nz,density  (seed supplied separately)
/// `ring` with explicit a,b,t gets one hole filling the interior.
ShapeSpec parse_shape_spec(const std::string& text, std::uint64_t seed = 0);

}  // namespace voxtopo
