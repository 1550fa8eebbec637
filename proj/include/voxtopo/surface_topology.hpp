#pragma once

#include <cstdint>
#include <vector>

#include "voxtopo/boundary.hpp"

namespace voxtopo {

/// Discrete Gaussian curvature of each point class in quarter turns (pi/2).
/// A full turn, 2*pi, is 4 units.
struct CurvatureUnits {
  static constexpr int k3 = 1;
  static constexpr int k4 = 0;
  static constexpr int k5 = -1;
  static constexpr int k6 = -2;
  static constexpr int full_turn = 4;
};

/// Surface points binned by the number of incident boundary faces.
struct SurfaceClassification {
  std::int32_t surface = 0;
  std::uint64_t m3 = 0;
  std::uint64_t m4 = 0;
  std::uint64_t m5 = 0;
  std::uint64_t m6 = 0;
  std::uint64_t total_points = 0;
};

struct SurfaceAnalysis {
  std::int32_t surface = 0;
  SurfaceClassification classification;
  std::int64_t genus = 0;
  std::int64_t euler = 0;
  std::uint64_t faces = 0;
  std::uint64_t points = 0;
};

/// Throws ClassificationError for a point with fewer than 3 or more than 6
/// incident faces.
SurfaceClassification classify_points(const BoundaryComplex& c, std::int32_t surface);

/// 1 + (m5 + 2*m6 - m3) / 8. Throws ClassificationError when the numerator is
/// not a multiple of 8 or the result is negative.
std::int64_t genus(const SurfaceClassification& sc);

/// Total curvature in quarter turns, m3 - m5 - 2*m6.
std::int64_t total_curvature(const SurfaceClassification& sc);

/// Exact discrete Gauss-Bonnet: total curvature == 4 * (2 - 2g).
bool gauss_bonnet_check(const SurfaceClassification& sc, std::int64_t g);

/// Classifies and computes the genus of every surface, cross-checking it
/// against the cell-count Euler characteristic and Gauss-Bonnet. A mismatch
/// throws InternalError.
std::vector<SurfaceAnalysis> analyze_surfaces(const BoundaryComplex& c);

}  // namespace voxtopo
