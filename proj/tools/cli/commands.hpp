#pragma once

#include <ostream>

#include "run_config.hpp"

namespace echspec::cli {

// Each command writes its data to out only after all of it is computed and
// its diagnostics to err. Exit codes: 0 success, 1 a numerical operation
// failed, 2 invalid input.
int cmd_capacities(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_weyl(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_dk(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_zeta(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_residues(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_envelope(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Dispatches on cfg.command.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// parse_args followed by run; the body of main().
int run_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace echspec::cli
