#pragma once

#include <iosfwd>

#include "cli/config.hpp"

namespace dplane::cli {

enum ExitCode { exit_ok = 0, exit_config = 2, exit_numeric = 3 };

int cmd_trace(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_integrate(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_poly(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_srt_sim(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_render(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Runs the command named in cfg, mapping ConfigError to 2 and other
// library errors to 3.
int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace dplane::cli
