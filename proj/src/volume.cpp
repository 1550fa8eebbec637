#include "voxtopo/volume.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "voxtopo/error.hpp"

namespace voxtopo {

namespace {

constexpr std::array<VoxelCoord, 6> kFace6 = {{
    {-1, 0, 0}, {1, 0, 0}, {0, -1, 0}, {0, 1, 0}, {0, 0, -1}, {0, 0, 1},
}};

constexpr std::array<VoxelCoord, 26> make_vertex26() {
  std::array<VoxelCoord, 26> out{};
  std::size_t n = 0;
  for (int dz = -1; dz <= 1; ++dz)
    for (int dy = -1; dy <= 1; ++dy)
      for (int dx = -1; dx <= 1; ++dx)
        if (dx != 0 || dy != 0 || dz != 0) out[n++] = {dx, dy, dz};
  return out;
}

constexpr std::array<VoxelCoord, 26> kVertex26 = make_vertex26();

}  // namespace

std::string to_string(const VoxelCoord& c) {
  return "(" + std::to_string(c.x) + "," + std::to_string(c.y) + "," +
         std::to_string(c.z) + ")";
}

std::string to_string(AdjacencyKind adj) {
  return adj == AdjacencyKind::FACE6 ? "6" : "26";
}

std::span<const VoxelCoord> neighbor_offsets(AdjacencyKind adj) {
  if (adj == AdjacencyKind::FACE6) return kFace6;
  return kVertex26;
}

VoxelVolume::VoxelVolume(VoxelCoord origin, Dims dims)
    : origin_(origin), dims_(dims) {
  for (std::int32_t d : {dims.nx, dims.ny, dims.nz}) {
    if (d <= 0 || d > kMaxDimension) {
      throw ParameterError("volume dimension " + std::to_string(d) +
                           " outside [1, 2^20]");
    }
  }
  constexpr std::int64_t lo = std::numeric_limits<std::int32_t>::min();
  constexpr std::int64_t hi = std::numeric_limits<std::int32_t>::max();
  for (auto [o, d] : {std::pair{origin.x, dims.nx}, std::pair{origin.y, dims.ny},
                      std::pair{origin.z, dims.nz}}) {
    // One spare lattice step on either side so neighbor probes never overflow.
    if (std::int64_t(o) - 2 < lo || std::int64_t(o) + d + 2 > hi) {
      throw ParameterError("volume box exceeds 32-bit coordinate range");
    }
  }
  bits_.assign((dims_.cells() + 63) / 64, 0);
}

VoxelVolume VoxelVolume::from_coords(std::span<const VoxelCoord> coords) {
  if (coords.empty()) throw ParameterError("empty volume");
  VoxelCoord lo = coords.front();
  VoxelCoord hi = coords.front();
  for (const auto& c : coords) {
    lo = {std::min(lo.x, c.x), std::min(lo.y, c.y), std::min(lo.z, c.z)};
    hi = {std::max(hi.x, c.x), std::max(hi.y, c.y), std::max(hi.z, c.z)};
  }
  const std::int64_t nx = std::int64_t(hi.x) - lo.x + 1;
  const std::int64_t ny = std::int64_t(hi.y) - lo.y + 1;
  const std::int64_t nz = std::int64_t(hi.z) - lo.z + 1;
  for (std::int64_t d : {nx, ny, nz}) {
    if (d > kMaxDimension) throw ParameterError("voxel coordinates span more than 2^20");
  }
  VoxelVolume v(lo, Dims{std::int32_t(nx), std::int32_t(ny), std::int32_t(nz)});
  for (const auto& c : coords) v.set(c);
  return v;
}

VoxelCoord VoxelVolume::coord_of(std::uint64_t index) const {
  const std::uint64_t nx = dims_.nx;
  const std::uint64_t ny = dims_.ny;
  const auto x = std::int32_t(index % nx);
  index /= nx;
  const auto y = std::int32_t(index % ny);
  const auto z = std::int32_t(index / ny);
  return {origin_.x + x, origin_.y + y, origin_.z + z};
}

void VoxelVolume::set(VoxelCoord c, bool value) {
  if (!contains(c)) {
    throw ParameterError("voxel " + to_string(c) + " outside volume box");
  }
  set_index(index_of(c), value);
}

void VoxelVolume::set_index(std::uint64_t i, bool value) {
  std::uint64_t& w = bits_[i >> 6];
  const std::uint64_t mask = std::uint64_t{1} << (i & 63);
  const bool was = (w & mask) != 0;
  if (was == value) return;
  if (value) {
    w |= mask;
    ++count_;
  } else {
    w &= ~mask;
    --count_;
  }
}

void VoxelVolume::for_each_voxel(const std::function<void(VoxelCoord)>& fn) const {
  for (std::size_t wi = 0; wi < bits_.size(); ++wi) {
    std::uint64_t w = bits_[wi];
    while (w != 0) {
      const int b = std::countr_zero(w);
      fn(coord_of(wi * 64 + std::uint64_t(b)));
      w &= w - 1;
    }
  }
}

std::vector<VoxelCoord> VoxelVolume::coords() const {
  std::vector<VoxelCoord> out;
  out.reserve(count_);
  for_each_voxel([&](VoxelCoord c) { out.push_back(c); });
  return out;
}

int VoxelVolume::face_neighbor_count(VoxelCoord c) const {
  int n = 0;
  for (const auto& d : kFace6) n += test(c + d) ? 1 : 0;
  return n;
}

VoxelVolume VoxelVolume::cropped() const {
  const auto cs = coords();
  if (cs.empty()) throw ParameterError("empty volume");
  return from_coords(cs);
}

VoxelVolume VoxelVolume::translated(VoxelCoord offset) const {
  VoxelVolume out(origin_ + offset, dims_);
  out.bits_ = bits_;
  out.count_ = count_;
  return out;
}

bool operator==(const VoxelVolume& a, const VoxelVolume& b) {
  return a.origin_ == b.origin_ && a.dims_ == b.dims_ && a.count_ == b.count_ &&
         a.bits_ == b.bits_;
}

bool same_occupancy(const VoxelVolume& a, const VoxelVolume& b) {
  if (a.count() != b.count()) return false;
  bool same = true;
  a.for_each_voxel([&](VoxelCoord c) {
    if (same && !b.test(c)) same = false;
  });
  return same;
}

}  // namespace voxtopo
