#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "kuifje/refine/family.hpp"

namespace kuifje {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitSyntax = 1,  // also usage and I/O errors
  kExitType = 2,
  kExitFails = 3,
  kExitInconclusive = 4,
};

/// Runs the tool on `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "k=2,random=50,seed=1,max=20000"; omitted keys keep their defaults.
FamilyOptions parse_family_spec(const std::string& spec);

/// Lowercase hex SHA-256 of the bytes.
std::string sha256_hex(const std::string& bytes);

inline constexpr int kReportSchemaVersion = 1;

}  // namespace kuifje
