#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace lie_thomas::cli {

inline constexpr const char* kSchema = "lie-thomas/1";

enum ExitCode { kOk = 0, kUsage = 2, kMath = 3 };

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// 64-bit FNV-1a.
std::uint64_t fnv1a(const std::string& text);

}  // namespace lie_thomas::cli
