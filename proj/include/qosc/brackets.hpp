#pragma once

#include <cmath>
#include <stdexcept>

#include "qosc/deformation.hpp"

namespace qosc {

/// Deformed number {x}_q = x q^(x-1); reduces to x at q = 1.
template <typename Real>
Real q_bracket(Real x, const Deformation<Real>& q) {
  using std::pow;
  return x * pow(q.value(), x - Real(1));
}

/// Two-parameter bracket (q^x - p^x)/(q - p).
///
/// The difference quotient is undefined at p = q; its limit is x q^(x-1).
/// Near-coincident parameters (|q - p| < 1e-8 q) switch to that limit plus
/// its first-order correction in (p - q), which sidesteps the catastrophic
/// cancellation of the direct quotient.
template <typename Real>
Real qp_bracket(Real x, Real q, Real p) {
  using std::abs;
  using std::pow;
  if (!(q > Real(0)) || !(p > Real(0)))
    throw std::invalid_argument("qp_bracket: q and p must be positive");
  const Real h = p - q;
  if (abs(h) < Real(1e-8) * q) {
    const Real limit = x * pow(q, x - Real(1));
    const Real slope = x * (x - Real(1)) / Real(2) * pow(q, x - Real(2));
    return limit + slope * h;
  }
  return (pow(q, x) - pow(p, x)) / (q - p);
}

/// {n}_q! = {n}_q {n-1}_q ... {1}_q, with the empty product equal to 1.
template <typename Real>
Real q_factorial(int n, const Deformation<Real>& q) {
  if (n < 0) throw std::invalid_argument("q_factorial: n must be nonnegative");
  Real result(1);
  for (int i = 1; i <= n; ++i) result *= q_bracket(Real(i), q);
  return result;
}

/// ln {n}_q! = ln n! + (n(n-1)/2) ln q.  Stays finite far beyond the range
/// where the plain product under- or overflows.
template <typename Real>
Real log_q_factorial(int n, const Deformation<Real>& q) {
  using std::lgamma;
  using std::log;
  if (n < 0)
    throw std::invalid_argument("log_q_factorial: n must be nonnegative");
  const Real half_pairs = Real(n) * Real(n - 1) / Real(2);
  return lgamma(Real(n + 1)) + half_pairs * log(q.value());
}

}  // namespace qosc
