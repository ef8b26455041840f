#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "opsplit/errors.hpp"
#include "opsplit/splitting.hpp"

namespace opsplit::cli {

enum class SchemeChoice { Godunov, Strang, Reference };

std::string to_string(SchemeChoice s);

/// Bad key, bad value or inconsistent settings.
class ConfigError : public Error {
public:
  using Error::Error;
  const char* kind() const noexcept override { return "ConfigError"; }
};

/// Everything a subcommand needs. Defaults reproduce the KdV Godunov fixture.
struct RunConfig {
  // equation and scheme
  std::string symbol = "kdv";
  double beta = 1.0;
  double a = 2.0;
  SchemeChoice scheme = SchemeChoice::Godunov;
  SubstepOrder order = SubstepOrder::NonlinearFirst;
  double dt = 0.05;
  double T = 1.0;
  BurgersConfig burgers{};

  // grid and data
  std::size_t n = 256;
  double length = 6.283185307179586;
  /// `sine`, `two_mode`, or the path of an `x,u` snapshot.
  std::string u0 = "two_mode";
  std::filesystem::path out = "out";
  bool snapshots = false;

  // studies
  std::vector<double> sigmas = {0.0, 1.0, 2.0};
  std::vector<double> dts = {0.1, 0.05, 0.025, 0.0125, 0.00625};
  std::size_t ref_divisions = 64;
  std::size_t local_ref_divisions = 256;
  double floor_factor = 10.0;
  std::size_t threads = 0;
  /// Turn the pass/fail checks of converge, local-order and the verifiers on or off.
  bool check = true;

  // verify-symbol
  double ximax = 100.0;
  std::size_t samples = 2048;
  double tol = 1e-12;

  // verify-lemmas
  std::uint64_t seed = 12345;
  std::size_t trials = 200;
  double s = 2.0;
  double lemma_sigma = 1.6;
  std::size_t lemma_n = 64;

  Symbol make_symbol() const;
  Grid grid() const;
  /// Loads or samples u0 on grid(); throws ConfigError if the snapshot grid differs.
  RealField initial_state() const;
  /// Scheme settings for godunov/strang (reference maps to Godunov and is handled by the caller).
  SchemeConfig scheme_config() const;
};

/// Accepted keys in canonical order.
const std::vector<std::string>& config_keys();

/// Environment variable consulted for a key, e.g. `OPSPLIT_SCHEME`.
std::string env_name(const std::string& key);

using Overrides = std::vector<std::pair<std::string, std::string>>;
using EnvLookup = std::function<std::optional<std::string>(const std::string&)>;

/// Reads the real process environment.
EnvLookup process_env();

/// Layers defaults < config text (`key=value` per line, `#` comments) <
/// environment < flags, then validates. Throws ConfigError naming the key
/// and the accepted values.
RunConfig parse_config(std::istream* file, const Overrides& flags = {},
                       const EnvLookup& env = {});
RunConfig parse_config(const std::optional<std::filesystem::path>& file, const Overrides& flags = {},
                       const EnvLookup& env = {});

/// Canonical `key=value` dump; parse_config reads it back to the same config.
void write_config(std::ostream& os, const RunConfig& cfg);

}  // namespace opsplit::cli
