#include "doctest.h"

#include <random>
#include <sstream>

#include "opsplit/snapshot.hpp"
#include "opsplit/spectral.hpp"

using namespace opsplit;

TEST_CASE("real snapshot round-trips bit for bit") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> ud(-1e3, 1e3);
  const Grid g(64, 3.7);
  std::vector<double> v(g.size());
  for (double& x : v) x = ud(rng) * std::pow(10.0, ud(rng) / 200.0);
  const RealField u(g, v);

  std::stringstream ss;
  write_real_csv(ss, u);
  CHECK(ss.str().rfind("x,u\n", 0) == 0);
  const RealField back = read_real_csv(ss, 3.7);
  CHECK(back == u);
}

TEST_CASE("spectral snapshot round-trips bit for bit") {
  const Grid g(32);
  std::mt19937_64 rng(12);
  std::vector<double> v(g.size());
  std::normal_distribution<double> nd;
  for (double& x : v) x = nd(rng);
  const auto c = forward(RealField(g, v));

  std::stringstream ss;
  write_spectral_csv(ss, c);
  std::string header;
  std::getline(ss, header);
  CHECK(header == "m,re,im");
  std::string first;
  std::getline(ss, first);
  CHECK(first.rfind("-16,", 0) == 0);
  ss.seekg(0);
  CHECK(read_spectral_csv(ss, g.length()) == c);
}

TEST_CASE("malformed snapshots are rejected") {
  std::stringstream bad_header("t,u\n0,1\n");
  CHECK_THROWS(read_real_csv(bad_header, 1.0));
  std::stringstream bad_number("x,u\n0,abc\n");
  CHECK_THROWS(read_real_csv(bad_number, 1.0));
  std::stringstream wrong_grid;
  wrong_grid << "x,u\n";
  for (int j = 0; j < 8; ++j) wrong_grid << j * 0.5 << ",0\n";
  CHECK_THROWS(read_real_csv(wrong_grid, 1.0));
}

TEST_CASE("format_double uses 17 significant digits") {
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(std::stod(format_double(1.0 / 3.0)) == 1.0 / 3.0);
}
