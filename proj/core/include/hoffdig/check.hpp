#pragma once

#include <string>
#include <vector>

namespace hoffdig {

/// One verified identity (or failed one) with a human-readable witness.
struct IdentityCheck {
  std::string name;
  bool ok = false;
  std::string witness;  // first violating index or cell, empty when ok
};

inline bool all_passed(const std::vector<IdentityCheck>& checks) {
  for (const auto& c : checks) {
    if (!c.ok) return false;
  }
  return true;
}

}  // namespace hoffdig
