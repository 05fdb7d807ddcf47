#include "sisframe/signal_io.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace sisframe {

namespace {

static_assert(std::endian::native == std::endian::little,
              "binary dumps assume a little-endian host");

template <typename T>
void put(std::ostream& os, T value) {
  std::array<char, sizeof(T)> buf;
  std::memcpy(buf.data(), &value, sizeof(T));
  os.write(buf.data(), buf.size());
}

template <typename T>
T get(std::istream& is) {
  std::array<char, sizeof(T)> buf;
  if (!is.read(buf.data(), buf.size())) {
    throw std::runtime_error("binary dump truncated");
  }
  T value;
  std::memcpy(&value, buf.data(), sizeof(T));
  return value;
}

std::ofstream open_out(const std::filesystem::path& path, std::ios::openmode mode) {
  std::ofstream os(path, mode);
  if (!os) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  return os;
}

std::ifstream open_in(const std::filesystem::path& path, std::ios::openmode mode) {
  std::ifstream is(path, mode);
  if (!is) throw std::runtime_error("cannot open '" + path.string() + "' for reading");
  return is;
}

}  // namespace

void write_csv(std::ostream& os, const SampledFunction& f) {
  os << "x,re,im\n";
  char line[96];
  for (std::size_t i = 0; i < f.size(); ++i) {
    std::snprintf(line, sizeof(line), "%.17g,%.17g,%.17g\n", f.grid.point(i),
                  f.values[i].real(), f.values[i].imag());
    os << line;
  }
}

void write_csv(const std::filesystem::path& path, const SampledFunction& f) {
  auto os = open_out(path, std::ios::out | std::ios::trunc);
  write_csv(os, f);
}

SampledFunction read_csv(std::istream& is, Domain domain) {
  std::string line;
  std::vector<double> xs;
  std::vector<cplx> vs;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (line.find_first_of("0123456789") != 0 && line[0] != '-' && line[0] != '+' &&
        line[0] != '.') {
      continue;  // header
    }
    std::istringstream ls(line);
    std::array<double, 3> cols{};
    for (std::size_t c = 0; c < cols.size(); ++c) {
      std::string cell;
      if (!std::getline(ls, cell, ',')) {
        throw std::runtime_error("CSV row needs 3 columns (x,re,im): '" + line + "'");
      }
      try {
        cols[c] = std::stod(cell);
      } catch (const std::exception&) {
        throw std::runtime_error("CSV cell is not a number: '" + cell + "'");
      }
    }
    xs.push_back(cols[0]);
    vs.emplace_back(cols[1], cols[2]);
  }
  if (xs.size() < 2) throw std::runtime_error("CSV needs at least two samples");
  Grid g{xs[0], xs[1] - xs[0], xs.size()};
  if (!(g.dx > 0.0)) throw std::runtime_error("CSV abscissae must be increasing");
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (std::abs(xs[i] - g.point(i)) > 1e-9 * std::max(1.0, std::abs(xs[i]))) {
      throw std::runtime_error("CSV abscissae are not uniformly spaced");
    }
  }
  return SampledFunction(g, std::move(vs), domain);
}

SampledFunction read_csv(const std::filesystem::path& path, Domain domain) {
  auto is = open_in(path, std::ios::in);
  return read_csv(is, domain);
}

void write_binary(std::ostream& os, const SampledFunction& f) {
  put<double>(os, f.grid.x0);
  put<double>(os, f.grid.dx);
  put<std::uint64_t>(os, f.grid.n);
  put<std::uint8_t>(os, static_cast<std::uint8_t>(f.domain));
  for (const auto& v : f.values) {
    put<double>(os, v.real());
    put<double>(os, v.imag());
  }
}

void write_binary(const std::filesystem::path& path, const SampledFunction& f) {
  auto os = open_out(path, std::ios::out | std::ios::binary | std::ios::trunc);
  write_binary(os, f);
}

SampledFunction read_binary(std::istream& is) {
  Grid g;
  g.x0 = get<double>(is);
  g.dx = get<double>(is);
  g.n = get<std::uint64_t>(is);
  const auto tag = get<std::uint8_t>(is);
  if (tag > 1) throw std::runtime_error("binary dump: unknown domain tag");
  std::vector<cplx> values(g.n);
  for (auto& v : values) {
    const double re = get<double>(is);
    const double im = get<double>(is);
    v = {re, im};
  }
  return SampledFunction(g, std::move(values), static_cast<Domain>(tag));
}

SampledFunction read_binary(const std::filesystem::path& path) {
  auto is = open_in(path, std::ios::in | std::ios::binary);
  return read_binary(is);
}

}  // namespace sisframe
