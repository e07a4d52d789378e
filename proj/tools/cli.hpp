#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hurwitz::cli {

enum class Format { Json, Text };

struct RunConfig {
  int base_genus = 1;
  int degree_bound = 6;
  int ramification_bound = 6;
  int x_bound = 8;
  int hbar_bound = 8;
  std::uint64_t oracle_budget = 1'000'000'000ULL;
  std::optional<std::filesystem::path> cache_dir;
  Format format = Format::Json;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

/// Cache directory: explicit flag, else $HURWITZ_CACHE_DIR, else
/// $XDG_CACHE_HOME/hurwitz or ~/.cache/hurwitz; nullopt when none resolves.
std::optional<std::filesystem::path> resolve_cache_dir(const std::optional<std::string>& flag);

/// Parses argv and runs one subcommand. Returns 0 when every identity holds,
/// 1 on a verification failure and 2 on usage or configuration errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

} // namespace hurwitz::cli
