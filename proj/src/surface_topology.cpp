#include "voxtopo/surface_topology.hpp"

#include <string>

#include "voxtopo/error.hpp"

namespace voxtopo {

SurfaceClassification classify_points(const BoundaryComplex& c, std::int32_t surface) {
  c.cells_of(surface);  // range check
  SurfaceClassification sc;
  sc.surface = surface;
  for (std::uint32_t p : c.surface_points[std::size_t(surface - 1)]) {
    switch (c.point_incidence[p]) {
      case 3: ++sc.m3; break;
      case 4: ++sc.m4; break;
      case 5: ++sc.m5; break;
      case 6: ++sc.m6; break;
      default: {
        const PointCoord& q = c.points[p];
        throw ClassificationError(
            "not a digital surface point: (" + std::to_string(q.x) + "," +
            std::to_string(q.y) + "," + std::to_string(q.z) + ") has " +
            std::to_string(int(c.point_incidence[p])) + " incident faces");
      }
    }
    ++sc.total_points;
  }
  return sc;
}

std::int64_t genus(const SurfaceClassification& sc) {
  const std::int64_t numerator =
      std::int64_t(sc.m5) + 2 * std::int64_t(sc.m6) - std::int64_t(sc.m3);
  if (numerator % 8 != 0 || 1 + numerator / 8 < 0) {
    throw ClassificationError(
        "classification inconsistent with closed orientable surface (m3=" +
        std::to_string(sc.m3) + " m5=" + std::to_string(sc.m5) +
        " m6=" + std::to_string(sc.m6) + ")");
  }
  return 1 + numerator / 8;
}

std::int64_t total_curvature(const SurfaceClassification& sc) {
  return CurvatureUnits::k3 * std::int64_t(sc.m3) + CurvatureUnits::k4 * std::int64_t(sc.m4) +
         CurvatureUnits::k5 * std::int64_t(sc.m5) + CurvatureUnits::k6 * std::int64_t(sc.m6);
}

bool gauss_bonnet_check(const SurfaceClassification& sc, std::int64_t g) {
  return total_curvature(sc) == CurvatureUnits::full_turn * (2 - 2 * g);
}

std::vector<SurfaceAnalysis> analyze_surfaces(const BoundaryComplex& c) {
  std::vector<SurfaceAnalysis> out;
  out.reserve(std::size_t(c.surface_count));
  for (std::int32_t s = 1; s <= c.surface_count; ++s) {
    SurfaceAnalysis a;
    a.surface = s;
    a.classification = classify_points(c, s);
    a.genus = genus(a.classification);
    a.euler = euler_characteristic(c, s);
    a.faces = c.cells_of(s).faces;
    a.points = c.cells_of(s).points;
    if (a.euler != 2 - 2 * a.genus) {
      throw InternalError("genus/Euler disagreement on surface " + std::to_string(s) +
                          ": genus " + std::to_string(a.genus) + ", chi " +
                          std::to_string(a.euler));
    }
    if (!gauss_bonnet_check(a.classification, a.genus)) {
      throw InternalError("Gauss-Bonnet identity fails on surface " + std::to_string(s));
    }
    out.push_back(a);
  }
  return out;
}

}  // namespace voxtopo
