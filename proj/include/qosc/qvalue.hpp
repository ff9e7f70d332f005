#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "qosc/extended.hpp"

namespace qosc {

namespace detail {
template <typename Real>
Real real_from_decimal(const std::string& text);
template <>
double real_from_decimal<double>(const std::string& text);
template <>
ext_real real_from_decimal<ext_real>(const std::string& text);
}  // namespace detail

/// Parsed command-line q value.  Besides plain decimals the grammar accepts
/// exact symbolic forms, so the irrational special values of the spectrum
/// can be entered without rounding at the text level:
///   0.65            decimal
///   2/3             fraction
///   sqrt(1/3)       square root of a fraction or decimal
///   nextnearest(5)  closed-form parameter at which E_5 = E_7
class QExpression {
 public:
  static QExpression parse(const std::string& text);

  const std::string& text() const { return text_; }

  template <typename Real>
  Real value() const {
    using std::sqrt;
    switch (kind_) {
      case Kind::decimal:
        return detail::real_from_decimal<Real>(decimal_);
      case Kind::fraction:
        return Real(num_) / Real(den_);
      case Kind::sqrt_fraction:
        return sqrt(Real(num_) / Real(den_));
      case Kind::sqrt_decimal:
        return sqrt(detail::real_from_decimal<Real>(decimal_));
      case Kind::next_nearest: {
        const Real m(m_);
        return (Real(1) + sqrt(Real(4) * m * m + Real(12) * m + Real(1))) /
               (Real(2) * (m + Real(3)));
      }
    }
    throw std::invalid_argument("QExpression: unknown kind");
  }

 private:
  enum class Kind { decimal, fraction, sqrt_fraction, sqrt_decimal, next_nearest };

  std::string text_;
  Kind kind_ = Kind::decimal;
  std::string decimal_;
  long long num_ = 0;
  long long den_ = 1;
  int m_ = 0;
};

}  // namespace qosc
