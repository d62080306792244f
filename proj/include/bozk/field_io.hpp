#pragma once

#include <string>

#include "bozk/field.hpp"

namespace bozk {

// Binary field snapshot: 8-byte magic "BOZKFLD1", little-endian u32 nx,
// u32 ny, f64 lx, f64 ly, then nx*ny little-endian f64 values row-major
// (x fastest).
void save_field(const RealField& f, const std::string& path);
RealField load_field(const std::string& path);

} // namespace bozk
