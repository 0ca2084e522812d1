#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace vvl {

struct VerifyCheck {
  std::string module;
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Fast fixture checks across every module (seconds, no long runs).
std::vector<VerifyCheck> verify_suite();

/// One row per check plus a summary line.
void print_verify_table(std::ostream& out, std::span<const VerifyCheck> checks);

}  // namespace vvl
