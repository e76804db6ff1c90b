#pragma once

#include "polychora/polytope.hpp"
#include "polychora/trajectory.hpp"

#include <chrono>
#include <iosfwd>
#include <string>
#include <vector>

namespace polychora::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kUnknownPolytope = 2,
  kIoError = 3,
  kBadTrajectory = 4,
};

/// Runs `polychora <subcommand> ...`; argv[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Named streams: nn-tour, hamiltonian, spin360, spin720. Anything else
/// is read as a trajectory file. Hamiltonian search falls back to the
/// nearest-neighbor tour on timeout.
std::vector<TrajectorySample> makeTrajectory(const std::string& source, PolytopeKind kind, double eatRadius,
                                             std::chrono::milliseconds timeLimit, std::string* plannerUsed = nullptr);

}  // namespace polychora::cli
