#include "opsplit/snapshot.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace opsplit {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  return cells;
}

double parse_double(const std::string& text, std::size_t line_no) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw std::runtime_error("csv line " + std::to_string(line_no) + ": not a number: '" + text +
                             "'");
  }
  return v;
}

std::string strip_cr(std::string s) {
  if (!s.empty() && s.back() == '\r') s.pop_back();
  return s;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open " + path.string() + " for writing");
  return os;
}

}  // namespace

std::string format_double(double v) {
  std::ostringstream os;
  os << std::setprecision(std::numeric_limits<double>::max_digits10) << v;
  return os.str();
}

void write_real_csv(std::ostream& os, const RealField& u) {
  os << "x,u\n";
  for (std::size_t j = 0; j < u.size(); ++j) {
    os << format_double(u.grid().x(j)) << ',' << format_double(u[j]) << '\n';
  }
}

void write_real_csv(const std::filesystem::path& path, const RealField& u) {
  auto os = open_out(path);
  write_real_csv(os, u);
}

RealField read_real_csv(std::istream& is, double length) {
  std::string line;
  if (!std::getline(is, line) || strip_cr(line) != "x,u") {
    throw std::runtime_error("csv: expected header 'x,u'");
  }
  std::vector<double> xs, us;
  std::size_t line_no = 1;
  while (std::getline(is, line)) {
    ++line_no;
    line = strip_cr(line);
    if (line.empty()) continue;
    const auto cells = split_csv_line(line);
    if (cells.size() != 2) {
      throw std::runtime_error("csv line " + std::to_string(line_no) + ": expected 2 columns");
    }
    xs.push_back(parse_double(cells[0], line_no));
    us.push_back(parse_double(cells[1], line_no));
  }
  const Grid grid(us.size(), length);
  for (std::size_t j = 0; j < xs.size(); ++j) {
    if (std::abs(xs[j] - grid.x(j)) > 1e-12 * length) {
      throw std::runtime_error("csv: abscissa " + std::to_string(j) +
                               " does not match a uniform grid of length " +
                               std::to_string(length));
    }
  }
  return RealField(grid, std::move(us));
}

RealField read_real_csv(const std::filesystem::path& path, double length) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open " + path.string());
  return read_real_csv(is, length);
}

void write_spectral_csv(std::ostream& os, const SpectralField& c) {
  os << "m,re,im\n";
  const auto half = static_cast<long>(c.size() / 2);
  for (long m = -half; m < half; ++m) {
    const Complex v = c.at_mode(m);
    os << m << ',' << format_double(v.real()) << ',' << format_double(v.imag()) << '\n';
  }
}

void write_spectral_csv(const std::filesystem::path& path, const SpectralField& c) {
  auto os = open_out(path);
  write_spectral_csv(os, c);
}

SpectralField read_spectral_csv(std::istream& is, double length) {
  std::string line;
  if (!std::getline(is, line) || strip_cr(line) != "m,re,im") {
    throw std::runtime_error("csv: expected header 'm,re,im'");
  }
  std::vector<std::pair<long, Complex>> rows;
  std::size_t line_no = 1;
  while (std::getline(is, line)) {
    ++line_no;
    line = strip_cr(line);
    if (line.empty()) continue;
    const auto cells = split_csv_line(line);
    if (cells.size() != 3) {
      throw std::runtime_error("csv line " + std::to_string(line_no) + ": expected 3 columns");
    }
    const double m = parse_double(cells[0], line_no);
    if (m != std::floor(m)) {
      throw std::runtime_error("csv line " + std::to_string(line_no) + ": m must be an integer");
    }
    rows.emplace_back(static_cast<long>(m),
                      Complex(parse_double(cells[1], line_no), parse_double(cells[2], line_no)));
  }
  SpectralField out(Grid(rows.size(), length));
  for (const auto& [m, v] : rows) out.at_mode(m) = v;
  return out;
}

}  // namespace opsplit
