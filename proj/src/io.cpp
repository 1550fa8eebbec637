#include "voxtopo/io.hpp"

#include <array>
#include <charconv>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>
#include <vector>

#include "voxtopo/error.hpp"

namespace voxtopo {

namespace {

constexpr std::array<char, 4> kMagic = {'D', 'V', 'O', 'L'};
constexpr std::uint8_t kVersion = 0x01;
constexpr std::size_t kHeaderSize = 4 + 1 + 12 + 12;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
    s.remove_suffix(1);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return s;
}

void put_u32(std::ostream& out, std::uint32_t v) {
  const char b[4] = {char(v & 0xff), char((v >> 8) & 0xff), char((v >> 16) & 0xff),
                     char((v >> 24) & 0xff)};
  out.write(b, 4);
}

std::uint32_t get_u32(const unsigned char* p) {
  return std::uint32_t(p[0]) | (std::uint32_t(p[1]) << 8) |
         (std::uint32_t(p[2]) << 16) | (std::uint32_t(p[3]) << 24);
}

}  // namespace

std::string to_string(VolumeFormat f) {
  return f == VolumeFormat::dvol ? "dvol" : "voxlist";
}

std::optional<VolumeFormat> parse_format(const std::string& name) {
  if (name == "voxlist") return VolumeFormat::voxlist;
  if (name == "dvol") return VolumeFormat::dvol;
  return std::nullopt;
}

VolumeFormat format_from_extension(const std::filesystem::path& path) {
  return path.extension() == ".dvol" ? VolumeFormat::dvol : VolumeFormat::voxlist;
}

VoxelVolume read_voxlist(std::istream& in) {
  std::vector<VoxelCoord> coords;
  std::string line;
  std::uint64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view s = trim(line);
    if (s.empty() || s.front() == '#') continue;
    std::array<std::int32_t, 3> xyz{};
    const char* p = s.data();
    const char* end = s.data() + s.size();
    for (std::size_t k = 0; k < 3; ++k) {
      if (k > 0) {
        if (p == end || (*p != ' ' && *p != '\t')) {
          throw ParseError("voxlist line " + std::to_string(line_no) +
                               ": expected three integers",
                           line_no);
        }
        while (p != end && (*p == ' ' || *p == '\t')) ++p;
      }
      auto [next, ec] = std::from_chars(p, end, xyz[k]);
      if (ec != std::errc{}) {
        throw ParseError("voxlist line " + std::to_string(line_no) +
                             ": bad integer",
                         line_no);
      }
      p = next;
    }
    if (p != end) {
      throw ParseError("voxlist line " + std::to_string(line_no) +
                           ": trailing characters",
                       line_no);
    }
    coords.push_back({xyz[0], xyz[1], xyz[2]});
  }
  if (in.bad()) throw IoError("read failure");
  if (coords.empty()) throw ParseError("empty volume", line_no);
  try {
    return VoxelVolume::from_coords(coords);
  } catch (const ParameterError& e) {
    throw ParseError(std::string("voxlist: ") + e.what(), line_no);
  }
}

void write_voxlist(const VoxelVolume& v, std::ostream& out) {
  std::string buf;
  v.for_each_voxel([&](VoxelCoord c) {
    buf += std::to_string(c.x);
    buf += ' ';
    buf += std::to_string(c.y);
    buf += ' ';
    buf += std::to_string(c.z);
    buf += '\n';
  });
  out << buf;
}

VoxelVolume read_dvol(std::istream& in) {
  std::vector<unsigned char> data((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("read failure");
  if (data.size() < kHeaderSize) {
    throw ParseError("dvol: truncated header", data.size());
  }
  if (std::memcmp(data.data(), kMagic.data(), kMagic.size()) != 0) {
    throw ParseError("dvol: bad magic", 0);
  }
  if (data[4] != kVersion) {
    throw ParseError("dvol: unsupported version " + std::to_string(data[4]), 4);
  }
  VoxelCoord origin{std::int32_t(get_u32(&data[5])), std::int32_t(get_u32(&data[9])),
                    std::int32_t(get_u32(&data[13]))};
  std::array<std::uint32_t, 3> d{get_u32(&data[17]), get_u32(&data[21]),
                                 get_u32(&data[25])};
  for (std::size_t k = 0; k < 3; ++k) {
    if (d[k] == 0 || d[k] > std::uint32_t(kMaxDimension)) {
      throw ParseError("dvol: dimension out of range", 17 + 4 * k);
    }
  }
  Dims dims{std::int32_t(d[0]), std::int32_t(d[1]), std::int32_t(d[2])};
  const std::uint64_t cells = dims.cells();
  const std::uint64_t payload = (cells + 7) / 8;
  if (data.size() - kHeaderSize != payload) {
    throw ParseError("dvol: payload is " + std::to_string(data.size() - kHeaderSize) +
                         " bytes, expected " + std::to_string(payload),
                     std::min<std::uint64_t>(data.size(), kHeaderSize + payload));
  }
  VoxelVolume v = [&] {
    try {
      return VoxelVolume(origin, dims);
    } catch (const ParameterError& e) {
      throw ParseError(std::string("dvol: ") + e.what(), 5);
    }
  }();
  for (std::uint64_t b = 0; b < payload; ++b) {
    const unsigned char byte = data[kHeaderSize + b];
    if (byte == 0) continue;
    for (int i = 0; i < 8; ++i) {
      if (!((byte >> i) & 1u)) continue;
      const std::uint64_t idx = 8 * b + std::uint64_t(i);
      if (idx >= cells) throw ParseError("dvol: padding bit set", kHeaderSize + b);
      v.set_index(idx, true);
    }
  }
  if (v.empty()) throw ParseError("empty volume", kHeaderSize);
  return v;
}

void write_dvol(const VoxelVolume& v, std::ostream& out) {
  out.write(kMagic.data(), kMagic.size());
  out.put(char(kVersion));
  put_u32(out, std::uint32_t(v.origin().x));
  put_u32(out, std::uint32_t(v.origin().y));
  put_u32(out, std::uint32_t(v.origin().z));
  put_u32(out, std::uint32_t(v.dims().nx));
  put_u32(out, std::uint32_t(v.dims().ny));
  put_u32(out, std::uint32_t(v.dims().nz));
  const std::uint64_t payload = (v.cell_count() + 7) / 8;
  std::string bytes(payload, '\0');
  const auto words = v.words();
  for (std::uint64_t b = 0; b < payload; ++b) {
    bytes[b] = char((words[b / 8] >> (8 * (b % 8))) & 0xff);
  }
  out.write(bytes.data(), std::streamsize(bytes.size()));
}

VoxelVolume load_volume(const std::filesystem::path& path, VolumeFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return format == VolumeFormat::dvol ? read_dvol(in) : read_voxlist(in);
}

void save_volume(const VoxelVolume& v, const std::filesystem::path& path,
                 VolumeFormat format) {
  if (v.empty()) throw ParameterError("refusing to save an empty volume");
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  if (format == VolumeFormat::dvol) {
    write_dvol(v, out);
  } else {
    write_voxlist(v, out);
  }
  out.flush();
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace voxtopo
