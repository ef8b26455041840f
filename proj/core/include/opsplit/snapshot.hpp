#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "opsplit/fields.hpp"

namespace opsplit {

/// 17 significant digits, enough to round-trip any double.
std::string format_double(double v);

/// `x,u` header, one row per sample.
void write_real_csv(std::ostream& os, const RealField& u);
void write_real_csv(const std::filesystem::path& path, const RealField& u);

/// Reads an `x,u` snapshot onto a grid of length L; n is the row count.
/// Throws std::runtime_error on malformed input or abscissae that do not
/// match x_j = jL/n.
RealField read_real_csv(std::istream& is, double length);
RealField read_real_csv(const std::filesystem::path& path, double length);

/// `m,re,im` header, one row per wavenumber index from -n/2 to n/2 - 1.
void write_spectral_csv(std::ostream& os, const SpectralField& c);
void write_spectral_csv(const std::filesystem::path& path, const SpectralField& c);

/// Reads an `m,re,im` snapshot onto a grid of the given length.
SpectralField read_spectral_csv(std::istream& is, double length);

}  // namespace opsplit
