#include "boostkit/csv.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace boostkit::csv {

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) {
    // trim surrounding whitespace
    const auto b = field.find_first_not_of(" \t\r");
    const auto e = field.find_last_not_of(" \t\r");
    out.push_back(b == std::string::npos ? "" : field.substr(b, e - b + 1));
  }
  return out;
}

double parse_double(const std::string& s, const std::string& path) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw std::runtime_error(path + ": malformed numeric field '" + s + "'");
  }
}

std::vector<std::vector<double>> read_table(const std::string& path,
                                            const std::string& expected_header) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open CSV file: " + path);
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error(path + ": empty file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != expected_header)
    throw std::runtime_error(path + ": expected header '" + expected_header + "', got '" +
                             line + "'");
  const std::size_t ncols = split(expected_header).size();
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    const auto fields = split(line);
    if (fields.size() != ncols)
      throw std::runtime_error(path + ": row has " + std::to_string(fields.size()) +
                               " fields, expected " + std::to_string(ncols));
    std::vector<double> row;
    row.reserve(ncols);
    for (const auto& f : fields) row.push_back(parse_double(f, path));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

moments::ParticleSystem read_particles(const std::string& path) {
  const auto rows = read_table(path, "mass,charge,t,x,y,z,vx,vy,vz");
  moments::ParticleSystem sys;
  for (const auto& r : rows) {
    moments::ChargedParticle p;
    p.rest_mass = r[0];
    p.charge = r[1];
    p.position << r[2], r[3], r[4], r[5];
    p.velocity << r[6], r[7], r[8];
    sys.particles.push_back(p);
  }
  if (!sys.particles.empty()) sys.common_time = sys.particles.front().position[0];
  sys.validate();
  return sys;
}

moments::StaticCurrentLoop read_loop(const std::string& path) {
  const auto rows = read_table(path, "mx,my,mz,dlx,dly,dlz,current");
  moments::StaticCurrentLoop loop;
  for (const auto& r : rows) {
    moments::LoopSegment s;
    s.midpoint << r[0], r[1], r[2];
    s.dl << r[3], r[4], r[5];
    s.current = r[6];
    loop.segments.push_back(s);
  }
  if (loop.segments.empty()) throw std::runtime_error(path + ": loop has no segments");
  return loop;
}

void write_spectrum(const std::string& path, const std::vector<SpectrumRow>& rows) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << "index,re,im,branch\n";
  char buf[64];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof(buf), "%.17g", r.value.real());
    out << r.index << ',' << buf << ',';
    std::snprintf(buf, sizeof(buf), "%.17g", r.value.imag());
    out << buf << ',' << r.branch << '\n';
  }
}

}  // namespace boostkit::csv
