#pragma once

#include <cstdint>
#include <span>

namespace voxtopo {

/// Betti ranks of a connected compact 3-manifold with boundary in the grid.
/// The groups are torsion-free, so ranks determine them.
struct HomologyRanks {
  std::int64_t b0 = 0;
  std::int64_t b1 = 0;
  std::int64_t b2 = 0;
  std::int64_t b3 = 0;

  friend bool operator==(const HomologyRanks&, const HomologyRanks&) = default;
};

/// From the genera of the component's boundary surfaces: b0 = 1,
/// b1 = sum of genera, b2 = surfaces - 1, b3 = 0.
HomologyRanks homology_of_component(std::span<const std::int64_t> surface_genera);

std::int64_t euler_characteristic_3m(const HomologyRanks& h);

}  // namespace voxtopo
