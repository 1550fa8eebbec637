#include "voxtopo/labeling.hpp"

#include <deque>
#include <limits>

#include "voxtopo/error.hpp"

namespace voxtopo {

namespace {

// Labels the cells of `box` for which `inside(index)` holds.
template <typename Inside>
ComponentLabeling bfs_label(VoxelCoord origin, Dims dims, AdjacencyKind adj,
                            Inside inside) {
  ComponentLabeling out;
  out.origin = origin;
  out.dims = dims;
  out.adjacency = adj;
  const std::uint64_t cells = dims.cells();
  out.labels.assign(cells, 0);

  const std::int64_t sx = 1;
  const std::int64_t sy = dims.nx;
  const std::int64_t sz = std::int64_t(dims.nx) * dims.ny;
  const auto offsets = neighbor_offsets(adj);

  std::deque<std::uint64_t> queue;
  for (std::uint64_t seed = 0; seed < cells; ++seed) {
    if (out.labels[seed] != 0 || !inside(seed)) continue;
    if (out.component_count == std::numeric_limits<std::int32_t>::max()) {
      throw ParameterError("too many components");
    }
    const std::int32_t id = ++out.component_count;
    std::uint64_t size = 0;
    out.labels[seed] = id;
    queue.push_back(seed);
    while (!queue.empty()) {
      const std::uint64_t cur = queue.front();
      queue.pop_front();
      ++size;
      const std::int64_t x = std::int64_t(cur % std::uint64_t(dims.nx));
      const std::int64_t rest = std::int64_t(cur / std::uint64_t(dims.nx));
      const std::int64_t y = rest % dims.ny;
      const std::int64_t z = rest / dims.ny;
      for (const auto& d : offsets) {
        const std::int64_t nx = x + d.x, ny = y + d.y, nz = z + d.z;
        if (nx < 0 || ny < 0 || nz < 0 || nx >= dims.nx || ny >= dims.ny ||
            nz >= dims.nz) {
          continue;
        }
        const auto n = std::uint64_t(nx * sx + ny * sy + nz * sz);
        if (out.labels[n] != 0 || !inside(n)) continue;
        out.labels[n] = id;
        queue.push_back(n);
      }
    }
    out.component_sizes.push_back(size);
  }
  return out;
}

}  // namespace

std::int32_t ComponentLabeling::label_at(VoxelCoord c) const {
  const VoxelCoord r = c - origin;
  if (r.x < 0 || r.y < 0 || r.z < 0 || r.x >= dims.nx || r.y >= dims.ny ||
      r.z >= dims.nz) {
    return 0;
  }
  return labels[std::uint64_t(r.x) +
                std::uint64_t(dims.nx) * (std::uint64_t(r.y) +
                                          std::uint64_t(dims.ny) * std::uint64_t(r.z))];
}

std::uint64_t ComponentLabeling::size_of(std::int32_t id) const {
  if (id < 1 || id > component_count) {
    throw ParameterError("component id " + std::to_string(id) + " out of range [1, " +
                         std::to_string(component_count) + "]");
  }
  return component_sizes[std::size_t(id - 1)];
}

ComponentLabeling label_components(const VoxelVolume& v, AdjacencyKind adj) {
  if (v.empty()) throw ContractViolation("label_components: empty volume");
  return bfs_label(v.origin(), v.dims(), adj,
                   [&](std::uint64_t i) { return v.test_index(i); });
}

BackgroundLabeling label_background(const VoxelVolume& v) {
  if (v.empty()) throw ContractViolation("label_background: empty volume");
  const VoxelCoord origin = v.origin() - VoxelCoord{1, 1, 1};
  const Dims dims{v.dims().nx + 2, v.dims().ny + 2, v.dims().nz + 2};
  const auto nx = std::uint64_t(dims.nx);
  const auto ny = std::uint64_t(dims.ny);
  auto inside = [&](std::uint64_t i) {
    const auto x = std::int32_t(i % nx);
    const auto y = std::int32_t((i / nx) % ny);
    const auto z = std::int32_t(i / (nx * ny));
    return !v.test({origin.x + x, origin.y + y, origin.z + z});
  };
  return BackgroundLabeling{bfs_label(origin, dims, AdjacencyKind::FACE6, inside)};
}

VoxelVolume extract_component(const VoxelVolume& v, const ComponentLabeling& l,
                              std::int32_t id) {
  l.size_of(id);  // range check
  if (l.origin != v.origin() || !(l.dims == v.dims())) {
    throw ContractViolation("extract_component: labeling does not match volume box");
  }
  std::vector<VoxelCoord> coords;
  coords.reserve(l.size_of(id));
  for (std::uint64_t i = 0; i < l.labels.size(); ++i) {
    if (l.labels[i] == id) coords.push_back(v.coord_of(i));
  }
  return VoxelVolume::from_coords(coords);
}

}  // namespace voxtopo
