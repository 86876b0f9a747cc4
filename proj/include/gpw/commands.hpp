#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace gpw {

enum ExitCode : int {
  kExitOk = 0,
  kExitViolation = 1,
  kExitInput = 2,
  kExitExhausted = 3,
};

enum class Format { Json, Text };

struct StreamOptions {
  std::size_t n = 2;
  std::size_t k = 1;
  std::string orders = "all";
  std::string dedup = "labeled";
  /// Also enumerate every smaller carrier, starting at 1.
  bool up_to = false;
  std::optional<std::size_t> limit;
  /// 0 picks the OpenMP default.
  int jobs = 0;
  /// Emit the volatile block with wall times and job count.
  bool timings = true;
  Format format = Format::Json;
};

struct CampaignOptions : StreamOptions {
  std::string theorems = "all";
};

struct SearchOptions : StreamOptions {
  std::string expr;
  std::string mode = "first";
};

struct RandomOptions {
  std::size_t n = 3;
  std::size_t k = 1;
  /// Falls back to $GPW_SEED, then 0.
  std::optional<std::uint64_t> seed;
};

// Each command writes its report to `out` and diagnostics to `err`, and
// returns an ExitCode.
int cmd_validate(const std::string& path, std::ostream& out, std::ostream& err, Format format = Format::Json);
int cmd_analyze(const std::string& path, std::ostream& out, std::ostream& err, Format format = Format::Json);
int cmd_check(const std::string& path, const std::string& theorems, std::ostream& out, std::ostream& err,
              Format format = Format::Json);
int cmd_campaign(const CampaignOptions& opt, std::ostream& out, std::ostream& err);
int cmd_search(const SearchOptions& opt, std::ostream& out, std::ostream& err);
int cmd_random(const RandomOptions& opt, std::ostream& out, std::ostream& err);

}  // namespace gpw
