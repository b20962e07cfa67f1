#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace cpoly::cli {

inline constexpr const char* kToolVersion = "1.0.0";

enum ExitCode : int { kPass = 0, kVerificationFailed = 1, kUsageError = 2 };

// Deterministic report envelope; keys serialize sorted.
struct RunReport {
  std::string command;
  nlohmann::json parameters = nlohmann::json::object();
  nlohmann::json results = nlohmann::json::object();
  std::string tool_version = kToolVersion;
  std::optional<std::uint64_t> seed;
  bool pass = false;

  nlohmann::json to_json() const;
};

// args excludes the program name. The report goes to out, diagnostics and
// usage text to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cpoly::cli
