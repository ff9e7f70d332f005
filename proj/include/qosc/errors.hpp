#pragma once

#include <stdexcept>
#include <string>

namespace qosc {

/// Thrown when a root solver exhausts its iteration budget or a bracket
/// assertion fails.  Carries the best bracket seen so callers can report it.
class SolverError : public std::runtime_error {
 public:
  SolverError(const std::string& what, double bracket_lo, double bracket_hi)
      : std::runtime_error(what), lo_(bracket_lo), hi_(bracket_hi) {}

  double bracket_lo() const { return lo_; }
  double bracket_hi() const { return hi_; }

 private:
  double lo_;
  double hi_;
};

}  // namespace qosc
