#ifndef DZK_SNAPSHOT_IO_HPP
#define DZK_SNAPSHOT_IO_HPP

#include <filesystem>

#include "dzk/field.hpp"

namespace dzk {

// Field snapshot file (.dzkf): 32-byte header
//   bytes 0-3   magic "DZKF"
//   bytes 4-5   version (u16 little-endian, currently 1)
//   bytes 6-9   Nx (u32 LE)
//   bytes 10-13 Ny (u32 LE)
//   bytes 14-21 Lx (f64 LE)
//   bytes 22-31 reserved, zero
// followed by Nx*Ny little-endian f64 samples, row-major with x slow.
void write_snapshot(const std::filesystem::path& path, const Field& f);

Field read_snapshot(const std::filesystem::path& path);

} // namespace dzk

#endif
