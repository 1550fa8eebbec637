#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "voxtopo/volume.hpp"

namespace voxtopo {

/// voxlist: ASCII, one "x y z" voxel per line, '#' lines are comments. The
/// box is the tight bounding box of the listed voxels.
///
/// dvol: "DVOL", version byte 0x01, origin as 3 x int32 LE, dims as
/// 3 x uint32 LE, then ceil(nx*ny*nz / 8) occupancy bytes where bit i
/// (LSB first) of byte b holds linear index 8*b + i.
enum class VolumeFormat { voxlist, dvol };

std::string to_string(VolumeFormat f);
std::optional<VolumeFormat> parse_format(const std::string& name);
/// ".dvol" maps to dvol, anything else to voxlist.
VolumeFormat format_from_extension(const std::filesystem::path& path);

VoxelVolume read_voxlist(std::istream& in);
void write_voxlist(const VoxelVolume& v, std::ostream& out);
VoxelVolume read_dvol(std::istream& in);
void write_dvol(const VoxelVolume& v, std::ostream& out);

VoxelVolume load_volume(const std::filesystem::path& path, VolumeFormat format);
void save_volume(const VoxelVolume& v, const std::filesystem::path& path,
                 VolumeFormat format);

}  // namespace voxtopo
