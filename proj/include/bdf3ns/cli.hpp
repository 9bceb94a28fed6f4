#pragma once

#include <iosfwd>

namespace bdf3ns {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // blow-up or a failed check
inline constexpr int kExitUsage = 2;

/// Entry point of the `bdf3ns` driver. Subcommands: tg-convergence,
/// tg-longrun, shear-layer, telescope, check.
int cli_main(int argc, const char* const* argv);
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bdf3ns
