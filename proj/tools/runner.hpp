#pragma once

#include "config.hpp"

namespace fdo::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitResolution = 2;
inline constexpr int kExitCertificate = 3;
inline constexpr int kExitNumeric = 4;

/// Executes the configured command, writing <command>.csv (and optional SVG)
/// into the output directory.  Output files are written atomically and are
/// byte-identical across runs of the same config.  Throws on failure.
void run(const RunConfig& cfg);

/// run() with the exception -> exit-code mapping applied.
int run_guarded(const RunConfig& cfg) noexcept;

/// Worker cap for the lambda sweep: FDO_THREADS, else hardware concurrency.
int worker_count();

}  // namespace fdo::cli
