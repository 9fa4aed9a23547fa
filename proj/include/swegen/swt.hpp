#pragma once

#include "swegen/error.hpp"
#include "swegen/solver.hpp"

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace swegen {

// .swt trajectory file, little-endian throughout.
//
//   offset  type  field
//        0  u8[4] magic "SWT1"
//        4  u16   version (1)
//        6  u16   endianness marker 0x00FF (bytes FF 00)
//        8  u32   nx
//       12  u32   ny
//       16  u32   n_frames
//       20  f64   dx
//       28  f64   dy
//       36  u8    flux scheme (0 lax_friedrichs, 1 rusanov, 2 roe)
//       37  u8    family (0 random_terrain, 1 planar_riverbed, 2 gaussian_bump, 3 dam_break)
//       38  u16   reserved, zero
//       40  f64[nx*ny]              bathymetry
//           f64[nx*ny] x 3 x n_frames  h, hu, hv of each frame
//
// Planes are row-major (y outer). File size is 40 + 8*nx*ny*(1 + 3*n_frames).
// Seed, gravity, t_final and the remaining run configuration travel in the
// scenario JSON written beside the file (<stem>.json).

inline constexpr std::size_t kSwtHeaderBytes = 40;
inline constexpr std::uint16_t kSwtVersion = 1;
inline constexpr std::uint16_t kSwtEndianMarker = 0x00FF;

enum class FormatErrorKind {
    unexpected_end,
    bad_magic,
    version_mismatch,
    bad_endianness,
    size_mismatch,
    invalid_header,
    non_finite_payload,
    invalid_payload,
    sidecar_mismatch,
};

class FormatError : public Error {
public:
    FormatError(FormatErrorKind kind, const std::string& what) : Error(what), kind_(kind) {}
    FormatErrorKind kind() const noexcept { return kind_; }

private:
    FormatErrorKind kind_;
};

/// 64-bit FNV-1a.
std::uint64_t fnv1a64(std::span<const std::byte> bytes) noexcept;

std::size_t swt_file_size(std::size_t nx, std::size_t ny, std::size_t n_frames);

std::vector<std::byte> encode_swt(const Trajectory& traj);

/// Parse an in-memory .swt image. Fields not stored in the file (seed,
/// gravity, t_final, cfl, h_dry, family parameters) take default values.
Trajectory decode_swt(std::span<const std::byte> bytes);

/// Write <path> and the scenario JSON sidecar. Returns the FNV-1a checksum of
/// the .swt bytes.
std::uint64_t write_trajectory(const Trajectory& traj, const std::filesystem::path& path);

/// Read <path>; when the sidecar exists its seed, id, config and family
/// parameters are applied after checking that it agrees with the header.
Trajectory read_trajectory(const std::filesystem::path& path);

std::filesystem::path sidecar_path(const std::filesystem::path& swt_path);

std::vector<std::byte> read_file_bytes(const std::filesystem::path& path);
void write_file_bytes(const std::filesystem::path& path, std::span<const std::byte> bytes);
std::uint64_t file_checksum(const std::filesystem::path& path);

}  // namespace swegen
