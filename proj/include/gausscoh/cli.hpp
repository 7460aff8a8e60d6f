#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace gausscoh::cli {

/// One parsed invocation: a single command, its input files, and options.
struct CommandRequest {
  std::string command;
  std::string state_path, channel_path, superchannel_path;
  double tol = 1e-9;
  double nu_max = 1e3;
  double choi_r = 1.0;
  int cutoff = 100;
  bool strict = false;
  std::string format = "text";
  std::optional<std::uint64_t> sampler_seed;  // from GAUSCOH_SEED
};

/// Parses argv-style arguments and runs the requested command, writing the
/// report to `out` and complaints to `err`. Returns 0 on success, 1 when a
/// parsed object is rejected on domain grounds (or a divergent coherence is
/// reached under --strict), 2 on I/O, usage, or JSON errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gausscoh::cli
