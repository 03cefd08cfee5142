#pragma once

#include <exception>
#include <string>

#include "sphquad/config.hpp"

namespace sphquad {

/// exit_code 0 on success (message, if any, belongs on stdout), 2 on
/// config/input errors, 3 on numerical failures (message is the one-line
/// diagnostic for stderr).
struct CommandOutcome {
    int exit_code = 0;
    std::string message;
};

CommandOutcome cmd_integrate(const Config& cfg);
CommandOutcome cmd_wce(const Config& cfg);
CommandOutcome cmd_geometry(const Config& cfg);
CommandOutcome cmd_gen_design(const Config& cfg);
CommandOutcome cmd_verify(const Config& cfg);
CommandOutcome cmd_partition(const Config& cfg);

/// 3 for the numerical-failure family, 2 otherwise.
int exit_code_for(const std::exception& e);

}  // namespace sphquad
