#pragma once

#include <iosfwd>
#include <string>

#include "opsplit/cli/config.hpp"

namespace opsplit::cli {

enum class Subcommand { Run, Converge, LocalOrder, VerifySymbol, VerifyLemmas };

std::string to_string(Subcommand c);
/// Accepts run, converge, local-order, verify-symbol, verify-lemmas.
Subcommand subcommand_from_string(const std::string& name);

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int check_failed = 1;  ///< a slope, condition or stability check did not hold
inline constexpr int config_error = 2;
inline constexpr int runtime_error = 3;  ///< BlowupDetected, FitUnreliable, I/O
}  // namespace exit_code

/// Executes one subcommand, writing files under cfg.out and a key=value
/// report to `log`. Failures are reported as an `error=<Kind>` line followed
/// by `message=...`; the return value is one of exit_code.
///
///   run            trajectory.csv, final.csv, report.txt [, snapshots/step_NNNNN.csv]
///   converge       converge_<scheme>_<symbol>.csv, report.txt, loglog_<scheme>_<symbol>_sigma<s>.dat,
///                  plot_<scheme>_<symbol>.gp
///   local-order    local_order_<scheme>_<symbol>.csv, report.txt, loglog_local_<scheme>_<symbol>_sigma<s>.dat
///   verify-symbol  report.txt
///   verify-lemmas  inequality_<id>.csv, report.txt
int run_command(Subcommand cmd, const RunConfig& cfg, std::ostream& log);

}  // namespace opsplit::cli
