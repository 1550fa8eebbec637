#include "voxtopo/shapes.hpp"

#include <random>
#include <sstream>

#include "voxtopo/error.hpp"

namespace voxtopo {

namespace {

void require_positive(std::initializer_list<std::int32_t> values, const char* what) {
  for (auto v : values) {
    if (v <= 0) throw ParameterError(std::string(what) + ": dimensions must be positive");
  }
}

VoxelVolume make_cuboid(const Cuboid& s) {
  require_positive({s.a, s.b, s.c}, "cuboid");
  VoxelVolume v({0, 0, 0}, Dims{s.a, s.b, s.c});
  for (std::int32_t z = 0; z < s.c; ++z)
    for (std::int32_t y = 0; y < s.b; ++y)
      for (std::int32_t x = 0; x < s.a; ++x) v.set({x, y, z});
  return v;
}

VoxelVolume make_ball(const Ball& s) {
  require_positive({s.radius}, "ball");
  const std::int32_t r = s.radius;
  VoxelVolume v({-r, -r, -r}, Dims{2 * r, 2 * r, 2 * r});
  // Centers at half-integers; compare doubled coordinates to stay integral.
  const std::int64_t r2 = 4 * std::int64_t(r) * r;
  for (std::int32_t z = -r; z < r; ++z)
    for (std::int32_t y = -r; y < r; ++y)
      for (std::int32_t x = -r; x < r; ++x) {
        const std::int64_t dx = 2 * x + 1, dy = 2 * y + 1, dz = 2 * z + 1;
        if (dx * dx + dy * dy + dz * dz <= r2) v.set({x, y, z});
      }
  return v;
}

VoxelVolume make_ring(const Ring& s) {
  require_positive({s.a, s.b, s.thickness}, "ring");
  VoxelVolume v = make_cuboid({s.a, s.b, s.thickness});
  for (const auto& h : s.holes) {
    if (h.w <= 0 || h.h <= 0) throw ParameterError("ring: hole size must be positive");
    if (h.x < 1 || h.y < 1 || h.x + h.w > s.a - 1 || h.y + h.h > s.b - 1) {
      throw ParameterError("ring: hole overlaps the border");
    }
    for (std::int32_t z = 0; z < s.thickness; ++z)
      for (std::int32_t y = h.y; y < h.y + h.h; ++y)
        for (std::int32_t x = h.x; x < h.x + h.w; ++x) v.set({x, y, z}, false);
  }
  return v;
}

VoxelVolume make_plate(const Plate& s) {
  if (s.holes < 0) throw ParameterError("plate: hole count must be non-negative");
  require_positive({s.thickness}, "plate");
  Ring r;
  r.a = 2 * s.holes + 1;
  r.b = 3;
  r.thickness = s.thickness;
  r.holes.clear();
  for (std::int32_t i = 0; i < s.holes; ++i) r.holes.push_back({2 * i + 1, 1, 1, 1});
  return make_ring(r);
}

VoxelVolume make_shell(const Shell& s) {
  require_positive({s.outer.a, s.outer.b, s.outer.c}, "shell outer");
  require_positive({s.inner.a, s.inner.b, s.inner.c}, "shell inner");
  if (s.outer.a - s.inner.a < 2 || s.outer.b - s.inner.b < 2 ||
      s.outer.c - s.inner.c < 2) {
    throw ParameterError("shell: inner cuboid must leave a wall on every side");
  }
  VoxelVolume v = make_cuboid(s.outer);
  const std::int32_t ox = (s.outer.a - s.inner.a) / 2;
  const std::int32_t oy = (s.outer.b - s.inner.b) / 2;
  const std::int32_t oz = (s.outer.c - s.inner.c) / 2;
  for (std::int32_t z = 0; z < s.inner.c; ++z)
    for (std::int32_t y = 0; y < s.inner.b; ++y)
      for (std::int32_t x = 0; x < s.inner.a; ++x) v.set({ox + x, oy + y, oz + z}, false);
  return v;
}

VoxelVolume make_random(const RandomFill& s) {
  require_positive({s.dims.nx, s.dims.ny, s.dims.nz}, "random");
  if (!(s.density >= 0.0 && s.density <= 1.0)) {
    throw ParameterError("random: density must be in [0, 1]");
  }
  std::mt19937_64 rng(s.seed);
  std::bernoulli_distribution coin(s.density);
  VoxelVolume v({0, 0, 0}, s.dims);
  for (std::uint64_t i = 0; i < v.cell_count(); ++i) {
    if (coin(rng)) v.set_index(i, true);
  }
  if (v.empty()) v.set_index(0, true);
  return v;
}

std::vector<std::int32_t> parse_ints(const std::string& params, const std::string& name) {
  std::vector<std::int32_t> out;
  if (params.empty()) return out;
  std::stringstream ss(params);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      const long long value = std::stoll(tok, &used);
      if (used != tok.size() || value < INT32_MIN || value > INT32_MAX) throw 0;
      out.push_back(std::int32_t(value));
    } catch (...) {
      throw ParameterError(name + ": bad parameter '" + tok + "'");
    }
  }
  return out;
}

}  // namespace

VoxelVolume generate_shape(const ShapeSpec& spec) {
  return std::visit(
      [](const auto& s) -> VoxelVolume {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Cuboid>) return make_cuboid(s);
        else if constexpr (std::is_same_v<T, Ball>) return make_ball(s);
        else if constexpr (std::is_same_v<T, Ring>) return make_ring(s);
        else if constexpr (std::is_same_v<T, Plate>) return make_plate(s);
        else if constexpr (std::is_same_v<T, Shell>) return make_shell(s);
        else return make_random(s);
      },
      spec);
}

ShapeSpec parse_shape_spec(const std::string& text, std::uint64_t seed) {
  const auto colon = text.find(':');
  const std::string name = text.substr(0, colon);
  const std::string params = colon == std::string::npos ? "" : text.substr(colon + 1);
  auto arity = [&](std::size_t got, std::initializer_list<std::size_t> allowed) {
    for (auto a : allowed)
      if (a == got) return;
    throw ParameterError(name + ": wrong number of parameters");
  };
  if (name == "random") {
    const auto comma = params.rfind(',');
    if (comma == std::string::npos) throw ParameterError("random: expected nx,ny,nz,density");
    const auto d = parse_ints(params.substr(0, comma), name);
    arity(d.size(), {3});
    double density = 0;
    try {
      std::size_t used = 0;
      const std::string tok = params.substr(comma + 1);
      density = std::stod(tok, &used);
      if (used != tok.size()) throw 0;
    } catch (...) {
      throw ParameterError("random: bad density");
    }
    return RandomFill{Dims{d[0], d[1], d[2]}, density, seed};
  }
  const auto p = parse_ints(params, name);
  if (name == "cuboid") {
    arity(p.size(), {3});
    return Cuboid{p[0], p[1], p[2]};
  }
  if (name == "ball") {
    arity(p.size(), {1});
    return Ball{p[0]};
  }
  if (name == "ring") {
    arity(p.size(), {0, 3});
    if (p.empty()) return Ring{};
    Ring r;
    r.a = p[0];
    r.b = p[1];
    r.thickness = p[2];
    r.holes = {Rect{1, 1, p[0] - 2, p[1] - 2}};
    return r;
  }
  if (name == "plate") {
    arity(p.size(), {1, 2});
    return Plate{p[0], p.size() > 1 ? p[1] : 1};
  }
  if (name == "shell") {
    arity(p.size(), {0, 6});
    if (p.empty()) return Shell{};
    return Shell{{p[0], p[1], p[2]}, {p[3], p[4], p[5]}};
  }
  throw ParameterError("unknown shape '" + name + "'");
}

}  // namespace voxtopo
