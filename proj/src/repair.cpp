#include "voxtopo/repair.hpp"

namespace voxtopo {

namespace {

constexpr VoxelCoord kX{1, 0, 0};
constexpr VoxelCoord kY{0, 1, 0};
constexpr VoxelCoord kZ{0, 0, 1};

// Square spanned by two axes, anchored at its minimum corner.
struct SquareAxes {
  VoxelCoord u, v;
};
constexpr std::array<SquareAxes, 3> kSquares = {{{kX, kY}, {kX, kZ}, {kY, kZ}}};

std::optional<PathologyInstance> check_square(const VoxelVolume& vol, VoxelCoord p,
                                              const SquareAxes& s) {
  const VoxelCoord a = p, b = p + s.u, c = p + s.v, d = p + s.u + s.v;
  const bool ta = vol.test(a), tb = vol.test(b), tc = vol.test(c), td = vol.test(d);
  if (ta && td && !tb && !tc) return PathologyInstance{PathologyKind::EDGE_SHARE, p, {a, d}};
  if (tb && tc && !ta && !td) return PathologyInstance{PathologyKind::EDGE_SHARE, p, {b, c}};
  return std::nullopt;
}

std::optional<PathologyInstance> check_block(const VoxelVolume& vol, VoxelCoord p) {
  // Antipodal pairs of the block.
  static constexpr std::array<std::array<VoxelCoord, 2>, 4> kPairs = {{
      {VoxelCoord{0, 0, 0}, VoxelCoord{1, 1, 1}},
      {VoxelCoord{1, 0, 0}, VoxelCoord{0, 1, 1}},
      {VoxelCoord{0, 1, 0}, VoxelCoord{1, 0, 1}},
      {VoxelCoord{0, 0, 1}, VoxelCoord{1, 1, 0}},
  }};
  int set = 0;
  std::array<std::array<bool, 2>, 4> occ{};
  for (std::size_t k = 0; k < 4; ++k) {
    for (std::size_t e = 0; e < 2; ++e) {
      occ[k][e] = vol.test(p + kPairs[k][e]);
      set += occ[k][e] ? 1 : 0;
    }
  }
  if (set != 2 && set != 6) return std::nullopt;
  const bool want = set == 2;
  for (std::size_t k = 0; k < 4; ++k) {
    if (occ[k][0] == want && occ[k][1] == want) {
      return PathologyInstance{
          want ? PathologyKind::CORNER_SHARE : PathologyKind::COMPLEMENT_CORNER, p,
          {p + kPairs[k][0], p + kPairs[k][1]}};
    }
  }
  return std::nullopt;
}

// The two cells of a 2x2 square not on the diagonal through a and b.
std::array<VoxelCoord, 2> other_diagonal(VoxelCoord a, VoxelCoord b) {
  std::array<VoxelCoord, 2> out{a, a};
  std::size_t k = 0;
  if (a.x != b.x) out[k++].x = b.x;
  if (a.y != b.y) out[k++].y = b.y;
  if (a.z != b.z) out[k++].z = b.z;
  return out;
}

bool still_present(const VoxelVolume& vol, const PathologyInstance& inst) {
  std::optional<PathologyInstance> now;
  if (inst.kind == PathologyKind::EDGE_SHARE) {
    const VoxelCoord span = inst.witnesses[0] - inst.location;
    const VoxelCoord other = inst.witnesses[1] - inst.location;
    // The square's axes are the two non-zero coordinates of the diagonal.
    const VoxelCoord diag{std::max(span.x, other.x), std::max(span.y, other.y),
                          std::max(span.z, other.z)};
    SquareAxes axes = diag.z == 0 ? kSquares[0] : (diag.y == 0 ? kSquares[1] : kSquares[2]);
    now = check_square(vol, inst.location, axes);
  } else {
    now = check_block(vol, inst.location);
  }
  return now.has_value() && *now == inst;
}

}  // namespace

std::string to_string(PathologyKind k) {
  switch (k) {
    case PathologyKind::CORNER_SHARE: return "CORNER_SHARE";
    case PathologyKind::EDGE_SHARE: return "EDGE_SHARE";
    case PathologyKind::COMPLEMENT_CORNER: return "COMPLEMENT_CORNER";
  }
  return "?";
}

std::string describe(const PathologyInstance& p) {
  return to_string(p.kind) + " at " + to_string(p.location) + " witnesses " +
         to_string(p.witnesses[0]) + " " + to_string(p.witnesses[1]);
}

std::vector<PathologyInstance> detect_pathologies(const VoxelVolume& v) {
  std::vector<PathologyInstance> out;
  if (v.cell_count() == 0) return out;
  const VoxelCoord o = v.origin();
  const Dims d = v.dims();
  for (std::int32_t z = 0; z < d.nz; ++z) {
    for (std::int32_t y = 0; y < d.ny; ++y) {
      for (std::int32_t x = 0; x < d.nx; ++x) {
        const VoxelCoord p{o.x + x, o.y + y, o.z + z};
        const bool hx = x + 1 < d.nx, hy = y + 1 < d.ny, hz = z + 1 < d.nz;
        if (hx && hy) {
          if (auto i = check_square(v, p, kSquares[0])) out.push_back(*i);
        }
        if (hx && hz) {
          if (auto i = check_square(v, p, kSquares[1])) out.push_back(*i);
        }
        if (hy && hz) {
          if (auto i = check_square(v, p, kSquares[2])) out.push_back(*i);
        }
        if (hx && hy && hz) {
          if (auto i = check_block(v, p)) out.push_back(*i);
        }
      }
    }
  }
  return out;
}

bool is_well_composed(const VoxelVolume& v) { return detect_pathologies(v).empty(); }

RepairResult repair_volume(const VoxelVolume& v, std::optional<std::uint64_t> budget) {
  RepairResult result{v, {}};
  VoxelVolume& work = result.volume;
  RepairLog& log = result.log;

  auto instances = detect_pathologies(work);
  const std::uint64_t pass_bound = v.count() + instances.size();

  auto over_budget = [&] {
    if (budget && log.modifications() >= *budget) {
      log.aborted = true;
      log.diagnostic = "modification budget of " + std::to_string(*budget) +
                       " exhausted with pathologies remaining";
      return true;
    }
    return false;
  };

  // A cell flips at most once while a fresh alternative exists. Without this
  // the fill and delete rules can undo each other forever on dense noise.
  enum : std::uint8_t { kUntouched = 0, kAdded = 1, kDeleted = 2 };
  std::vector<std::uint8_t> history(work.cell_count(), kUntouched);
  auto fresh = [&](VoxelCoord c, bool fill) {
    return history[work.index_of(c)] != (fill ? kDeleted : kAdded);
  };
  // Fill prefers more set face neighbors, delete prefers fewer; ties go to
  // the smaller index. Cells whose change would revert are skipped.
  auto choose = [&](std::span<const VoxelCoord> cells,
                    bool fill) -> std::optional<VoxelCoord> {
    std::optional<VoxelCoord> best;
    int best_n = 0;
    for (const VoxelCoord& c : cells) {
      if (work.test(c) == fill || !fresh(c, fill)) continue;
      const int n = work.face_neighbor_count(c);
      const bool better = !best || (fill ? n > best_n : n < best_n) ||
                          (n == best_n && work.index_of(c) < work.index_of(*best));
      if (better) {
        best = c;
        best_n = n;
      }
    }
    return best;
  };
  auto block_cells = [](VoxelCoord p) {
    std::array<VoxelCoord, 8> out{};
    std::size_t k = 0;
    for (int dz = 0; dz < 2; ++dz)
      for (int dy = 0; dy < 2; ++dy)
        for (int dx = 0; dx < 2; ++dx) out[k++] = p + VoxelCoord{dx, dy, dz};
    return out;
  };
  auto resolve = [&](const PathologyInstance& inst) {
    const bool fill = inst.kind == PathologyKind::COMPLEMENT_CORNER;
    std::optional<VoxelCoord> pick = choose(inst.witnesses, fill);
    bool value = fill;
    if (!pick) {
      // Both witnesses already flipped the other way. Change a fresh cell of
      // the same square or block in the opposite direction instead.
      if (inst.kind == PathologyKind::EDGE_SHARE) {
        pick = choose(other_diagonal(inst.witnesses[0], inst.witnesses[1]), true);
      } else {
        pick = choose(block_cells(inst.location), !fill);
      }
      value = !fill;
    }
    if (!pick) {
      // Every candidate cell is exhausted; revert and let the pass bound decide.
      pick = inst.witnesses[0];
      value = fill;
    }
    work.set(*pick, value);
    history[work.index_of(*pick)] = value ? kAdded : kDeleted;
    (value ? log.additions : log.deletions).push_back(*pick);
  };

  while (!instances.empty()) {
    if (log.passes >= pass_bound) {
      log.aborted = true;
      log.diagnostic = "pass bound " + std::to_string(pass_bound) +
                       " reached; first remaining: " + describe(instances.front());
      return result;
    }
    ++log.passes;
    for (bool fills : {true, false}) {
      for (const auto& inst : instances) {
        if ((inst.kind == PathologyKind::COMPLEMENT_CORNER) != fills) continue;
        if (!still_present(work, inst)) continue;
        if (over_budget()) return result;
        resolve(inst);
      }
    }
    instances = detect_pathologies(work);
  }
  return result;
}

}  // namespace voxtopo
