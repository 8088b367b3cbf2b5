#pragma once

#include <iosfwd>
#include <vector>

#include "config.hpp"
#include "ftwave/stationary.hpp"

namespace ftwave::cli {

struct BranchRow {
  Branch branch = Branch::L;
  double omega = 0.0;
  double t_minus = 0.0;
  double t_plus = 0.0;
  double x_minus = 0.0;
  double x_plus = 0.0;
  double mass = 0.0;
  double energy = 0.0;
  double jump_res = 0.0;
  double flux_res = 0.0;
  /// A residual reached 1e-9.
  bool flagged = false;
};

using BranchTable = std::vector<BranchRow>;

/// Rows for every existing branch at omega_min, omega_min + step, ... <= omega_max,
/// sorted by omega then branch. Rows are computed concurrently.
BranchTable build_branch_table(const RunConfig& config);

std::string branch_csv(const BranchTable& table);

int cmd_branch(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_ground_state(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_critical(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_minimize(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_plot(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace ftwave::cli
