#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>

#include "curveres/corpus.hpp"
#include "curveres/error.hpp"
#include "curveres/isotopy.hpp"

namespace curveres::cli {

// Stable process exit codes.
enum ExitCode : int {
  kOk = 0,
  kNotSame = 1,  // compare: graphs differ; isotopy: not equisingular
  kMalformed = 2,
  kPrecision = 3,
  kStepLimit = 4,
  kLemmaUnmet = 5,
};

int exit_code_for(ErrorKind kind) noexcept;

struct ResolveOptions {
  int max_steps = kDefaultMaxSteps;
  std::optional<std::filesystem::path> dot;
  std::optional<std::filesystem::path> json;
};

struct IsotopyOptions {
  FieldMode mode = FieldMode::LemmaExact;
  std::optional<std::filesystem::path> csv;
  std::optional<std::filesystem::path> json;
  int samples = 4;
  int max_steps = kDefaultMaxSteps;
  BumpProfile bump;
};

// Each command writes its JSON payload to `out`, diagnostics to `err`, and
// returns the exit code.
int cmd_resolve(const std::filesystem::path& path, const ResolveOptions& options, std::ostream& out,
                std::ostream& err);
int cmd_compare(const std::filesystem::path& first, const std::filesystem::path& second, int max_steps,
                std::ostream& out, std::ostream& err);
int cmd_isotopy(const std::filesystem::path& first, const std::filesystem::path& second,
                const IsotopyOptions& options, std::ostream& out, std::ostream& err);
int cmd_random(std::uint64_t seed, const CorpusOptions& options, std::ostream& out, std::ostream& err);

}  // namespace curveres::cli
