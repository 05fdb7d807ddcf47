#pragma once

// Serialization of SampledFunction.
//
// CSV: header "x,re,im", one sample per line, 17 significant digits.
// Binary (little-endian): f64 x0, f64 dx, u64 n, u8 domain (0 time,
// 1 frequency), then n pairs of f64 (re, im).

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "sisframe/signal.hpp"

namespace sisframe {

void write_csv(std::ostream& os, const SampledFunction& f);
void write_csv(const std::filesystem::path& path, const SampledFunction& f);

/// Reads "x,re,im" rows; the grid is recovered from the first two abscissae
/// and checked for uniform spacing.
SampledFunction read_csv(std::istream& is, Domain domain);
SampledFunction read_csv(const std::filesystem::path& path, Domain domain);

void write_binary(std::ostream& os, const SampledFunction& f);
void write_binary(const std::filesystem::path& path, const SampledFunction& f);
SampledFunction read_binary(std::istream& is);
SampledFunction read_binary(const std::filesystem::path& path);

}  // namespace sisframe
