#pragma once

#include <stdexcept>

namespace qosc {

enum class Regime { sub_unit, classical, super_unit };

/// Validated deformation parameter q > 0.  q = 0 is rejected: it would
/// collapse every excited level to zero energy.
template <typename Real = double>
class Deformation {
 public:
  explicit Deformation(Real value) : value_(value) {
    if (!(value_ > Real(0)))
      throw std::invalid_argument("deformation parameter q must be positive");
  }

  Real value() const { return value_; }

  Regime regime() const {
    if (value_ < Real(1)) return Regime::sub_unit;
    if (value_ > Real(1)) return Regime::super_unit;
    return Regime::classical;
  }

 private:
  Real value_;
};

using DeformationParameter = Deformation<double>;

}  // namespace qosc
