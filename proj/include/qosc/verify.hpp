#pragma once

#include <string>
#include <vector>

namespace qosc {

struct VerifyCheck {
  std::string suite;
  std::string name;
  double measure = 0.0;    // worst deviation observed
  double threshold = 0.0;  // what it must stay at or below
  bool pass = false;
};

struct VerifyOptions {
  double tol = 1e-13;      // relative solver tolerance for degeneracy roots
  bool extended = false;   // route solver comparisons through extended precision
};

std::vector<VerifyCheck> core_checks(const VerifyOptions& options = {});
std::vector<VerifyCheck> degeneracy_checks(const VerifyOptions& options = {});
std::vector<VerifyCheck> fock_checks(const VerifyOptions& options = {});
std::vector<VerifyCheck> algebra_checks(const VerifyOptions& options = {});
std::vector<VerifyCheck> all_checks(const VerifyOptions& options = {});

inline bool all_pass(const std::vector<VerifyCheck>& checks) {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

}  // namespace qosc
