#include "voxtopo/boundary.hpp"

#include <deque>
#include <ostream>
#include <string>
#include <unordered_map>

#include "voxtopo/error.hpp"
#include "voxtopo/labeling.hpp"
#include "voxtopo/repair.hpp"

namespace voxtopo {

namespace {

constexpr std::array<VoxelCoord, 6> kNormalOffsets = {{
    {-1, 0, 0}, {1, 0, 0}, {0, -1, 0}, {0, 1, 0}, {0, 0, -1}, {0, 0, 1},
}};

PointCoord shift(PointCoord p, int axis, std::int32_t by) {
  if (axis == 0) p.x += by;
  else if (axis == 1) p.y += by;
  else p.z += by;
  return p;
}

std::array<PointCoord, 4> face_corners(VoxelCoord owner, FaceNormal n) {
  const int axis = int(n) / 2;
  const bool positive = int(n) % 2 == 1;
  const int u = (axis + 1) % 3;
  const int v = (axis + 2) % 3;
  PointCoord base{owner.x, owner.y, owner.z};
  if (positive) base = shift(base, axis, 1);
  const PointCoord pu = shift(base, u, 1);
  const PointCoord pv = shift(base, v, 1);
  const PointCoord puv = shift(pu, v, 1);
  // e_u x e_v = e_axis, so (base, u, uv, v) turns counter-clockwise about +axis.
  if (positive) return {base, pu, puv, pv};
  return {base, pv, puv, pu};
}

int edge_axis(PointCoord a, PointCoord b) {
  if (a.x != b.x) return 0;
  if (a.y != b.y) return 1;
  return 2;
}

}  // namespace

VoxelCoord normal_offset(FaceNormal n) { return kNormalOffsets[std::size_t(n)]; }

const SurfaceCells& BoundaryComplex::cells_of(std::int32_t surface) const {
  if (surface < 1 || surface > surface_count) {
    throw ParameterError("surface id " + std::to_string(surface) + " out of range [1, " +
                         std::to_string(surface_count) + "]");
  }
  return surface_cells[std::size_t(surface - 1)];
}

std::vector<VoxelCoord> find_boundary_voxels(const VoxelVolume& v) {
  std::vector<VoxelCoord> out;
  const auto offsets = neighbor_offsets(AdjacencyKind::VERTEX26);
  v.for_each_voxel([&](VoxelCoord c) {
    for (const auto& d : offsets) {
      if (!v.test(c + d)) {
        out.push_back(c);
        return;
      }
    }
  });
  return out;
}

BoundaryComplex build_boundary_complex(const VoxelVolume& v) {
  if (v.empty()) throw ContractViolation("build_boundary_complex: empty volume");
  if (const auto bad = detect_pathologies(v); !bad.empty()) {
    throw ContractViolation("build_boundary_complex: volume is not well-composed: " +
                            describe(bad.front()));
  }
  if (const auto l = label_components(v, AdjacencyKind::FACE6); l.component_count != 1) {
    throw ContractViolation("build_boundary_complex: expected one FACE6 component, got " +
                            std::to_string(l.component_count));
  }

  BoundaryComplex c;
  // Points span [origin, origin + dims] per axis: 21 bits each for dims <= 2^20.
  const VoxelCoord o = v.origin();
  auto point_key = [&](PointCoord p) {
    return std::uint64_t(p.x - o.x) | (std::uint64_t(p.y - o.y) << 21) |
           (std::uint64_t(p.z - o.z) << 42);
  };
  std::unordered_map<std::uint64_t, std::uint32_t> point_index;
  std::unordered_map<std::uint64_t, std::uint32_t> edge_index;
  const std::size_t reserve = std::size_t(v.count()) * 2;
  point_index.reserve(reserve);
  edge_index.reserve(reserve * 2);

  auto intern_point = [&](PointCoord p) {
    auto [it, fresh] = point_index.try_emplace(point_key(p), std::uint32_t(c.points.size()));
    if (fresh) {
      c.points.push_back(p);
      c.point_incidence.push_back(0);
    }
    return it->second;
  };

  v.for_each_voxel([&](VoxelCoord owner) {
    for (std::size_t n = 0; n < 6; ++n) {
      if (v.test(owner + kNormalOffsets[n])) continue;
      const auto normal = FaceNormal(n);
      const auto corners = face_corners(owner, normal);
      const auto face_id = std::uint32_t(c.faces.size());
      std::array<std::uint32_t, 4> pts{};
      for (std::size_t k = 0; k < 4; ++k) {
        pts[k] = intern_point(corners[k]);
        ++c.point_incidence[pts[k]];
      }
      std::array<std::uint32_t, 4> eds{};
      for (std::size_t k = 0; k < 4; ++k) {
        std::uint32_t a = pts[k];
        std::uint32_t b = pts[(k + 1) % 4];
        if (c.points[b] < c.points[a]) std::swap(a, b);
        const std::uint64_t key = (std::uint64_t(a) << 2) |
                                  std::uint64_t(edge_axis(c.points[a], c.points[b]));
        auto [it, fresh] = edge_index.try_emplace(key, std::uint32_t(c.edges.size()));
        if (fresh) c.edges.push_back(BoundaryEdge{a, b, {}, 0});
        BoundaryEdge& e = c.edges[it->second];
        if (e.face_count >= 2) {
          throw InternalError("non-manifold edge between " + std::to_string(a) + " and " +
                              std::to_string(b));
        }
        e.faces[e.face_count++] = face_id;
        eds[k] = it->second;
      }
      c.faces.push_back(BoundaryFace{owner, normal, corners});
      c.face_points.push_back(pts);
      c.face_edges.push_back(eds);
    }
  });

  for (const auto& e : c.edges) {
    if (e.face_count != 2) throw InternalError("non-manifold edge: open boundary");
  }

  // Surfaces: BFS over faces sharing an edge.
  c.surface_ids.assign(c.faces.size(), 0);
  std::deque<std::uint32_t> queue;
  for (std::uint32_t seed = 0; seed < c.faces.size(); ++seed) {
    if (c.surface_ids[seed] != 0) continue;
    const std::int32_t id = ++c.surface_count;
    c.surface_ids[seed] = id;
    queue.push_back(seed);
    while (!queue.empty()) {
      const std::uint32_t f = queue.front();
      queue.pop_front();
      for (std::uint32_t e : c.face_edges[f]) {
        for (std::uint32_t g : c.edges[e].faces) {
          if (c.surface_ids[g] == 0) {
            c.surface_ids[g] = id;
            queue.push_back(g);
          }
        }
      }
    }
  }

  c.surface_cells.assign(std::size_t(c.surface_count), {});
  c.surface_points.assign(std::size_t(c.surface_count), {});
  c.point_surface.assign(c.points.size(), 0);
  for (std::uint32_t f = 0; f < c.faces.size(); ++f) {
    const std::int32_t s = c.surface_ids[f];
    ++c.surface_cells[std::size_t(s - 1)].faces;
    for (std::uint32_t p : c.face_points[f]) {
      if (c.point_surface[p] == 0) {
        c.point_surface[p] = s;
        c.surface_points[std::size_t(s - 1)].push_back(p);
      } else if (c.point_surface[p] != s) {
        throw InternalError("point shared by surfaces " + std::to_string(c.point_surface[p]) +
                            " and " + std::to_string(s));
      }
    }
  }
  for (std::size_t s = 0; s < c.surface_points.size(); ++s) {
    c.surface_cells[s].points = c.surface_points[s].size();
  }
  for (const auto& e : c.edges) {
    ++c.surface_cells[std::size_t(c.surface_ids[e.faces[0]] - 1)].edges;
  }
  return c;
}

std::int64_t euler_characteristic(const BoundaryComplex& c, std::int32_t surface) {
  const SurfaceCells& cells = c.cells_of(surface);
  return std::int64_t(cells.points) - std::int64_t(cells.edges) + std::int64_t(cells.faces);
}

void write_off(std::span<const BoundaryComplex> complexes, std::ostream& out) {
  std::uint64_t nv = 0, nf = 0;
  for (const auto& c : complexes) {
    nv += c.points.size();
    nf += c.faces.size();
  }
  std::string buf = "OFF\n" + std::to_string(nv) + " " + std::to_string(nf) + " 0\n";
  for (const auto& c : complexes) {
    for (const auto& p : c.points) {
      buf += std::to_string(p.x) + " " + std::to_string(p.y) + " " + std::to_string(p.z) + "\n";
    }
  }
  std::uint64_t base = 0;
  for (const auto& c : complexes) {
    for (const auto& f : c.face_points) {
      buf += "4";
      for (std::uint32_t p : f) buf += " " + std::to_string(base + p);
      buf += "\n";
    }
    base += c.points.size();
  }
  out << buf;
}

}  // namespace voxtopo
