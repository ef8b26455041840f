#include "opsplit/cli/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "opsplit/snapshot.hpp"

namespace opsplit::cli {

std::string to_string(SchemeChoice s) {
  switch (s) {
    case SchemeChoice::Godunov: return "godunov";
    case SchemeChoice::Strang: return "strang";
    case SchemeChoice::Reference: return "reference";
  }
  return "unknown";
}

namespace {

struct Key {
  const char* name;
  const char* accepted;
  std::function<void(RunConfig&, const std::string&)> set;
  std::function<std::string(const RunConfig&)> get;
};

[[noreturn]] void bad_value(const std::string& key, const std::string& value, const char* accepted) {
  throw ConfigError(key + ": invalid value '" + value + "' (accepted: " + accepted + ")");
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& v, const char* accepted) {
  double out = 0.0;
  const auto* end = v.data() + v.size();
  const auto r = std::from_chars(v.data(), end, out);
  if (r.ec != std::errc() || r.ptr != end || !std::isfinite(out)) bad_value(key, v, accepted);
  return out;
}

std::uint64_t to_unsigned(const std::string& key, const std::string& v, const char* accepted) {
  std::uint64_t out = 0;
  const auto* end = v.data() + v.size();
  const auto r = std::from_chars(v.data(), end, out);
  if (r.ec != std::errc() || r.ptr != end) bad_value(key, v, accepted);
  return out;
}

bool to_bool(const std::string& key, const std::string& v, const char* accepted) {
  if (v == "true" || v == "1" || v == "on" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "off" || v == "no") return false;
  bad_value(key, v, accepted);
}

std::vector<double> to_list(const std::string& key, const std::string& v, const char* accepted) {
  std::vector<double> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(to_double(key, trim(item), accepted));
  if (out.empty()) bad_value(key, v, accepted);
  return out;
}

std::string join(const std::vector<double>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + format_double(v[i]);
  return out;
}

std::string symbol_names() {
  std::string out;
  for (const auto& n : catalog_names()) out += (out.empty() ? "" : ", ") + n;
  return out;
}

const std::vector<Key>& keys() {
  static const std::string symbols = symbol_names();
  static const std::vector<Key> table = {
      {"symbol", symbols.c_str(),
       [](RunConfig& c, const std::string& v) {
         const auto& names = catalog_names();
         if (std::find(names.begin(), names.end(), v) == names.end()) bad_value("symbol", v, symbols.c_str());
         c.symbol = v;
       },
       [](const RunConfig& c) { return c.symbol; }},
      {"beta", "a real number > 0",
       [](RunConfig& c, const std::string& v) { c.beta = to_double("beta", v, "a real number > 0"); },
       [](const RunConfig& c) { return format_double(c.beta); }},
      {"a", "a real number in [1, 3]",
       [](RunConfig& c, const std::string& v) { c.a = to_double("a", v, "a real number in [1, 3]"); },
       [](const RunConfig& c) { return format_double(c.a); }},
      {"scheme", "godunov, strang, reference",
       [](RunConfig& c, const std::string& v) {
         if (v == "godunov") c.scheme = SchemeChoice::Godunov;
         else if (v == "strang") c.scheme = SchemeChoice::Strang;
         else if (v == "reference") c.scheme = SchemeChoice::Reference;
         else bad_value("scheme", v, "godunov, strang, reference");
       },
       [](const RunConfig& c) { return to_string(c.scheme); }},
      {"order", "nonlinear_first, linear_first",
       [](RunConfig& c, const std::string& v) {
         if (v == "nonlinear_first") c.order = SubstepOrder::NonlinearFirst;
         else if (v == "linear_first") c.order = SubstepOrder::LinearFirst;
         else bad_value("order", v, "nonlinear_first, linear_first");
       },
       [](const RunConfig& c) { return to_string(c.order); }},
      {"dt", "a real number in (0, T]",
       [](RunConfig& c, const std::string& v) { c.dt = to_double("dt", v, "a real number in (0, T]"); },
       [](const RunConfig& c) { return format_double(c.dt); }},
      {"T", "a real number > 0",
       [](RunConfig& c, const std::string& v) { c.T = to_double("T", v, "a real number > 0"); },
       [](const RunConfig& c) { return format_double(c.T); }},
      {"n", "an even integer >= 8",
       [](RunConfig& c, const std::string& v) { c.n = to_unsigned("n", v, "an even integer >= 8"); },
       [](const RunConfig& c) { return std::to_string(c.n); }},
      {"L", "a real number > 0",
       [](RunConfig& c, const std::string& v) { c.length = to_double("L", v, "a real number > 0"); },
       [](const RunConfig& c) { return format_double(c.length); }},
      {"u0", "sine, two_mode, or a snapshot path",
       [](RunConfig& c, const std::string& v) {
         if (v.empty()) bad_value("u0", v, "sine, two_mode, or a snapshot path");
         c.u0 = v;
       },
       [](const RunConfig& c) { return c.u0; }},
      {"out", "a directory path",
       [](RunConfig& c, const std::string& v) {
         if (v.empty()) bad_value("out", v, "a directory path");
         c.out = v;
       },
       [](const RunConfig& c) { return c.out.string(); }},
      {"snapshots", "true, false",
       [](RunConfig& c, const std::string& v) { c.snapshots = to_bool("snapshots", v, "true, false"); },
       [](const RunConfig& c) { return std::string(c.snapshots ? "true" : "false"); }},
      {"sigmas", "comma-separated reals >= 0",
       [](RunConfig& c, const std::string& v) { c.sigmas = to_list("sigmas", v, "comma-separated reals >= 0"); },
       [](const RunConfig& c) { return join(c.sigmas); }},
      {"dts", "comma-separated reals > 0, each half the previous",
       [](RunConfig& c, const std::string& v) {
         c.dts = to_list("dts", v, "comma-separated reals > 0, each half the previous");
       },
       [](const RunConfig& c) { return join(c.dts); }},
      {"ref_divisions", "an integer >= 1",
       [](RunConfig& c, const std::string& v) {
         c.ref_divisions = to_unsigned("ref_divisions", v, "an integer >= 1");
       },
       [](const RunConfig& c) { return std::to_string(c.ref_divisions); }},
      {"local_ref_divisions", "an integer >= 2",
       [](RunConfig& c, const std::string& v) {
         c.local_ref_divisions = to_unsigned("local_ref_divisions", v, "an integer >= 2");
       },
       [](const RunConfig& c) { return std::to_string(c.local_ref_divisions); }},
      {"floor_factor", "a real number >= 1",
       [](RunConfig& c, const std::string& v) {
         c.floor_factor = to_double("floor_factor", v, "a real number >= 1");
       },
       [](const RunConfig& c) { return format_double(c.floor_factor); }},
      {"threads", "an integer >= 0 (0 = hardware concurrency)",
       [](RunConfig& c, const std::string& v) {
         c.threads = to_unsigned("threads", v, "an integer >= 0 (0 = hardware concurrency)");
       },
       [](const RunConfig& c) { return std::to_string(c.threads); }},
      {"check", "true, false",
       [](RunConfig& c, const std::string& v) { c.check = to_bool("check", v, "true, false"); },
       [](const RunConfig& c) { return std::string(c.check ? "true" : "false"); }},
      {"cfl", "a real number > 0",
       [](RunConfig& c, const std::string& v) { c.burgers.cfl_safety = to_double("cfl", v, "a real number > 0"); },
       [](const RunConfig& c) { return format_double(c.burgers.cfl_safety); }},
      {"min_internal_steps", "an integer >= 1",
       [](RunConfig& c, const std::string& v) {
         c.burgers.min_internal_steps = to_unsigned("min_internal_steps", v, "an integer >= 1");
       },
       [](const RunConfig& c) { return std::to_string(c.burgers.min_internal_steps); }},
      {"dealias", "true, false",
       [](RunConfig& c, const std::string& v) { c.burgers.dealias_on = to_bool("dealias", v, "true, false"); },
       [](const RunConfig& c) { return std::string(c.burgers.dealias_on ? "true" : "false"); }},
      {"blowup_threshold", "a real number > 1",
       [](RunConfig& c, const std::string& v) {
         c.burgers.blowup_threshold = to_double("blowup_threshold", v, "a real number > 1");
       },
       [](const RunConfig& c) { return format_double(c.burgers.blowup_threshold); }},
      {"blowup_sigma", "a real number >= 0",
       [](RunConfig& c, const std::string& v) {
         c.burgers.blowup_sigma = to_double("blowup_sigma", v, "a real number >= 0");
       },
       [](const RunConfig& c) { return format_double(c.burgers.blowup_sigma); }},
      {"filter", "a real number >= 0 (0 = off)",
       [](RunConfig& c, const std::string& v) {
         c.burgers.filter_strength = to_double("filter", v, "a real number >= 0 (0 = off)");
       },
       [](const RunConfig& c) { return format_double(c.burgers.filter_strength); }},
      {"ximax", "a real number > 0",
       [](RunConfig& c, const std::string& v) { c.ximax = to_double("ximax", v, "a real number > 0"); },
       [](const RunConfig& c) { return format_double(c.ximax); }},
      {"samples", "an integer >= 16",
       [](RunConfig& c, const std::string& v) { c.samples = to_unsigned("samples", v, "an integer >= 16"); },
       [](const RunConfig& c) { return std::to_string(c.samples); }},
      {"tol", "a real number >= 0",
       [](RunConfig& c, const std::string& v) { c.tol = to_double("tol", v, "a real number >= 0"); },
       [](const RunConfig& c) { return format_double(c.tol); }},
      {"seed", "an unsigned 64-bit integer",
       [](RunConfig& c, const std::string& v) { c.seed = to_unsigned("seed", v, "an unsigned 64-bit integer"); },
       [](const RunConfig& c) { return std::to_string(c.seed); }},
      {"trials", "an integer >= 1",
       [](RunConfig& c, const std::string& v) { c.trials = to_unsigned("trials", v, "an integer >= 1"); },
       [](const RunConfig& c) { return std::to_string(c.trials); }},
      {"s", "a real number >= lemma_sigma",
       [](RunConfig& c, const std::string& v) { c.s = to_double("s", v, "a real number >= lemma_sigma"); },
       [](const RunConfig& c) { return format_double(c.s); }},
      {"lemma_sigma", "a real number > 1.5",
       [](RunConfig& c, const std::string& v) {
         c.lemma_sigma = to_double("lemma_sigma", v, "a real number > 1.5");
       },
       [](const RunConfig& c) { return format_double(c.lemma_sigma); }},
      {"lemma_n", "a multiple of 4, >= 16",
       [](RunConfig& c, const std::string& v) { c.lemma_n = to_unsigned("lemma_n", v, "a multiple of 4, >= 16"); },
       [](const RunConfig& c) { return std::to_string(c.lemma_n); }},
  };
  return table;
}

const Key& find_key(const std::string& name) {
  for (const auto& k : keys()) {
    if (name == k.name) return k;
  }
  std::string accepted;
  for (const auto& k : keys()) accepted += (accepted.empty() ? "" : ", ") + std::string(k.name);
  throw ConfigError("unknown key '" + name + "' (accepted keys: " + accepted + ")");
}

void require(bool ok, const std::string& key, const std::string& value, const char* accepted) {
  if (!ok) bad_value(key, value, accepted);
}

void validate(const RunConfig& c) {
  auto val = [&](const char* key) { return find_key(key).get(c); };
  auto acc = [&](const char* key) { return find_key(key).accepted; };

  require(c.beta > 0.0, "beta", val("beta"), acc("beta"));
  require(c.a >= 1.0 && c.a <= 3.0, "a", val("a"), acc("a"));
  require(c.T > 0.0, "T", val("T"), acc("T"));
  require(c.dt > 0.0 && c.dt <= c.T, "dt", val("dt"), acc("dt"));
  require(c.n >= 8 && c.n % 2 == 0, "n", val("n"), acc("n"));
  require(c.length > 0.0, "L", val("L"), acc("L"));
  require(std::all_of(c.sigmas.begin(), c.sigmas.end(), [](double s) { return s >= 0.0; }), "sigmas",
          val("sigmas"), acc("sigmas"));
  bool dyadic = std::all_of(c.dts.begin(), c.dts.end(), [](double d) { return d > 0.0; });
  for (std::size_t i = 1; dyadic && i < c.dts.size(); ++i) {
    dyadic = std::abs(c.dts[i - 1] / c.dts[i] - 2.0) <= 1e-9;
  }
  require(dyadic, "dts", val("dts"), acc("dts"));
  require(c.ref_divisions >= 1, "ref_divisions", val("ref_divisions"), acc("ref_divisions"));
  require(c.local_ref_divisions >= 2, "local_ref_divisions", val("local_ref_divisions"),
          acc("local_ref_divisions"));
  require(c.floor_factor >= 1.0, "floor_factor", val("floor_factor"), acc("floor_factor"));
  require(c.burgers.cfl_safety > 0.0, "cfl", val("cfl"), acc("cfl"));
  require(c.burgers.min_internal_steps >= 1, "min_internal_steps", val("min_internal_steps"),
          acc("min_internal_steps"));
  require(c.burgers.blowup_threshold > 1.0, "blowup_threshold", val("blowup_threshold"),
          acc("blowup_threshold"));
  require(c.burgers.blowup_sigma >= 0.0, "blowup_sigma", val("blowup_sigma"), acc("blowup_sigma"));
  require(c.burgers.filter_strength >= 0.0, "filter", val("filter"), acc("filter"));
  require(c.ximax > 0.0, "ximax", val("ximax"), acc("ximax"));
  require(c.samples >= 16, "samples", val("samples"), acc("samples"));
  require(c.tol >= 0.0, "tol", val("tol"), acc("tol"));
  require(c.trials >= 1, "trials", val("trials"), acc("trials"));
  require(c.lemma_sigma > 1.5, "lemma_sigma", val("lemma_sigma"), acc("lemma_sigma"));
  require(c.s >= c.lemma_sigma, "s", val("s"), acc("s"));
  require(c.lemma_n >= 16 && c.lemma_n % 4 == 0, "lemma_n", val("lemma_n"), acc("lemma_n"));
  if (c.u0 != "sine" && c.u0 != "two_mode") {
    std::ifstream probe(c.u0);
    require(probe.good(), "u0", c.u0, acc("u0"));
  }
}

void apply(RunConfig& cfg, const std::string& key, const std::string& value, const std::string& origin) {
  try {
    find_key(key).set(cfg, value);
  } catch (const ConfigError& e) {
    throw ConfigError(origin + ": " + e.what());
  }
}

}  // namespace

Symbol RunConfig::make_symbol() const {
  SymbolParams p;
  p.beta = beta;
  p.a = a;
  return opsplit::make_symbol(symbol, p);
}

Grid RunConfig::grid() const { return Grid(n, length); }

RealField RunConfig::initial_state() const {
  const Grid g = grid();
  if (u0 == "sine") return RealField::sample(g, [](double x) { return 0.5 * std::sin(x); });
  if (u0 == "two_mode") {
    return RealField::sample(g, [](double x) { return 0.5 * std::sin(x) + 0.25 * std::cos(2.0 * x); });
  }
  RealField u = read_real_csv(std::filesystem::path(u0), length);
  if (u.size() != n) {
    throw ConfigError("u0: snapshot '" + u0 + "' has " + std::to_string(u.size()) + " samples but n = " +
                      std::to_string(n));
  }
  return u;
}

SchemeConfig RunConfig::scheme_config() const {
  SchemeConfig cfg;
  cfg.scheme = scheme == SchemeChoice::Strang ? Scheme::Strang : Scheme::Godunov;
  cfg.order = order;
  cfg.dt = dt;
  cfg.T = T;
  cfg.symbol = make_symbol();
  cfg.burgers = burgers;
  return cfg;
}

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& k : keys()) out.emplace_back(k.name);
    return out;
  }();
  return names;
}

std::string env_name(const std::string& key) {
  std::string out = "OPSPLIT_";
  for (char ch : key) out += static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  return out;
}

EnvLookup process_env() {
  return [](const std::string& name) -> std::optional<std::string> {
    if (const char* v = std::getenv(name.c_str())) return std::string(v);
    return std::nullopt;
  };
}

RunConfig parse_config(std::istream* file, const Overrides& flags, const EnvLookup& env) {
  RunConfig cfg;
  if (file) {
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(*file, line)) {
      ++lineno;
      if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      line = trim(line);
      if (line.empty()) continue;
      const auto eq = line.find('=');
      const std::string where = "config line " + std::to_string(lineno);
      if (eq == std::string::npos) throw ConfigError(where + ": expected key=value, got '" + line + "'");
      apply(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)), where);
    }
  }
  if (env) {
    for (const auto& k : keys()) {
      if (auto v = env(env_name(k.name))) apply(cfg, k.name, trim(*v), env_name(k.name));
    }
  }
  for (const auto& [key, value] : flags) apply(cfg, key, value, "--" + key);
  validate(cfg);
  try {
    (void)cfg.make_symbol();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("symbol: ") + e.what());
  }
  return cfg;
}

RunConfig parse_config(const std::optional<std::filesystem::path>& file, const Overrides& flags,
                       const EnvLookup& env) {
  if (!file) return parse_config(static_cast<std::istream*>(nullptr), flags, env);
  std::ifstream in(*file);
  if (!in) throw ConfigError("config: cannot open '" + file->string() + "'");
  return parse_config(&in, flags, env);
}

void write_config(std::ostream& os, const RunConfig& cfg) {
  for (const auto& k : keys()) os << k.name << '=' << k.get(cfg) << '\n';
}

}  // namespace opsplit::cli
