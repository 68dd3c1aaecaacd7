#pragma once

#include <string>
#include <vector>

#include "boostkit/linalg.hpp"
#include "boostkit/moments.hpp"

namespace boostkit::csv {

/// Reads a particle system from CSV with the normative header
/// `mass,charge,t,x,y,z,vx,vy,vz`. Throws std::runtime_error on a missing
/// file, wrong header, or malformed row.
moments::ParticleSystem read_particles(const std::string& path);

/// Reads a current loop from CSV with header `mx,my,mz,dlx,dly,dlz,current`
/// (segment midpoint, direction-length vector, current).
moments::StaticCurrentLoop read_loop(const std::string& path);

struct SpectrumRow {
  int index;
  cplx value;
  std::string branch;
};

/// Writes spectrum rows with the normative header `index,re,im,branch`,
/// floats at 17 significant digits.
void write_spectrum(const std::string& path, const std::vector<SpectrumRow>& rows);

}  // namespace boostkit::csv
