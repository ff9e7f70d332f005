#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "qosc/brackets.hpp"
#include "qosc/deformation.hpp"

namespace qosc {

/// Level energy E_n = ((n+1) q^n + n q^(n-1)) / 2 in units of the quantum
/// of the undeformed oscillator.  E_0 = 1/2 for every q, and for sub-unit q
/// the linear-domain value is allowed to underflow to 0 as n grows (the
/// exact value tends to 0+; use log_energy when the magnitude matters).
template <typename Real>
Real energy(int n, const Deformation<Real>& q) {
  using std::pow;
  if (n < 0) throw std::invalid_argument("energy: level index must be nonnegative");
  const Real qv = q.value();
  return (Real(n + 1) * pow(qv, n) + Real(n) * pow(qv, n - 1)) / Real(2);
}

/// ln E_n = ln((n+1) q + n) + (n-1) ln q - ln 2, finite for every n.
template <typename Real>
Real log_energy(int n, const Deformation<Real>& q) {
  using std::log;
  if (n < 0) throw std::invalid_argument("log_energy: level index must be nonnegative");
  const Real qv = q.value();
  return log(Real(n + 1) * qv + Real(n)) + Real(n - 1) * log(qv) - log(Real(2));
}

template <typename Real = double>
struct BasicSpectrum {
  Deformation<Real> q;
  std::vector<Real> energies;  // energies[n] = E_n, n = 0..n_max
  int n_max = 0;
};

using Spectrum = BasicSpectrum<double>;

template <typename Real>
BasicSpectrum<Real> spectrum(const Deformation<Real>& q, int n_max) {
  if (n_max < 0) throw std::invalid_argument("spectrum: n_max must be nonnegative");
  BasicSpectrum<Real> spec{q, {}, n_max};
  spec.energies.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) spec.energies.push_back(energy(n, q));
  return spec;
}

/// Largest level index up to which the spacing E_{n+1} - E_n stays
/// nonnegative: floor((1 + q^2)/(1 - q^2)), defined for 0 < q < 1 only.
///
/// When (1 + q^2)/(1 - q^2) is an exact integer the boundary level is
/// included.  Double rounding of an exact-boundary q can land the ratio a few
/// ulp below the integer, so near-integers (within 1e-12 relative) snap to
/// the integer before the floor.
inline std::int64_t truncation_index(const DeformationParameter& q) {
  if (q.regime() != Regime::sub_unit)
    throw std::invalid_argument(
        "truncation_index: defined for 0 < q < 1 only (for q >= 1 the spacing never turns negative)");
  const double q2 = q.value() * q.value();
  const double ratio = (1.0 + q2) / (1.0 - q2);
  const double nearest = std::round(ratio);
  if (std::abs(ratio - nearest) <= 1e-12 * std::max(1.0, ratio))
    return static_cast<std::int64_t>(nearest);
  return static_cast<std::int64_t>(std::floor(ratio));
}

struct FibonacciCoefficients {
  double alpha;
  double beta;
};

/// Coefficients of the three-term identity E_{n+1} = alpha E_n + beta E_{n-1}
/// satisfied by the whole spectrum: alpha = 2q, beta = -q^2.
inline FibonacciCoefficients fibonacci_coefficients(const DeformationParameter& q) {
  return {2.0 * q.value(), -q.value() * q.value()};
}

/// Max absolute residual of E_{n+1} - 2q E_n + q^2 E_{n-1} over the spectrum.
template <typename Real>
Real fibonacci_residual(const BasicSpectrum<Real>& spec) {
  using std::abs;
  if (spec.energies.size() < 3)
    throw std::invalid_argument("fibonacci_residual: need at least 3 levels");
  const Real qv = spec.q.value();
  Real worst(0);
  for (std::size_t n = 1; n + 1 < spec.energies.size(); ++n) {
    const Real r = spec.energies[n + 1] - Real(2) * qv * spec.energies[n] +
                   qv * qv * spec.energies[n - 1];
    if (abs(r) > worst) worst = abs(r);
  }
  return worst;
}

/// Same residual normalized step by step against the largest of the three
/// terms entering it, floored at 1e-300 so the deep decay tail (where the
/// energies underflow) cannot inflate the ratio.
template <typename Real>
Real fibonacci_relative_residual(const BasicSpectrum<Real>& spec) {
  using std::abs;
  if (spec.energies.size() < 3)
    throw std::invalid_argument("fibonacci_relative_residual: need at least 3 levels");
  const Real qv = spec.q.value();
  Real worst(0);
  for (std::size_t n = 1; n + 1 < spec.energies.size(); ++n) {
    const Real a = abs(spec.energies[n + 1]);
    const Real b = abs(Real(2) * qv * spec.energies[n]);
    const Real c = abs(qv * qv * spec.energies[n - 1]);
    Real scale = a > b ? a : b;
    if (c > scale) scale = c;
    if (scale < Real(1e-300)) scale = Real(1e-300);
    const Real r = abs(spec.energies[n + 1] - Real(2) * qv * spec.energies[n] +
                       qv * qv * spec.energies[n - 1]) /
                   scale;
    if (r > worst) worst = r;
  }
  return worst;
}

enum class LocalRatioVariant {
  below_degenerate,  // degenerate pair (m-1, m); predicts E_{m+1}/E_m, m > 1
  above_degenerate,  // degenerate pair (m, m+1); predicts E_{m-1}/E_m, m > 0
  next_nearest,      // degenerate pair (m, m+2); predicts E_{m+1}/E_m, m >= 0
};

struct LocalRatio {
  double q;      // the parameter value that creates the degeneracy
  double ratio;  // the predicted energy ratio at that q
};

/// Local form of the three-term identity around a degenerate pair.  Each
/// variant fixes q so one pair of levels coincides and returns the ratio the
/// identity then forces on the neighboring level:
///   below_degenerate: q = sqrt((m-1)/(m+1)),  E_{m+1}/E_m = q(2-q)
///   above_degenerate: q = sqrt(m/(m+2)),      E_{m-1}/E_m = (2q-1)/q^2
///   next_nearest:     q from the E_m = E_{m+2} closed form,
///                                             E_{m+1}/E_m = (1+q^2)/(2q)
inline LocalRatio fibonacci_local_ratio(int m, LocalRatioVariant variant) {
  switch (variant) {
    case LocalRatioVariant::below_degenerate: {
      if (m <= 1)
        throw std::invalid_argument("fibonacci_local_ratio: below_degenerate needs m > 1");
      const double q = std::sqrt((m - 1.0) / (m + 1.0));
      return {q, q * (2.0 - q)};
    }
    case LocalRatioVariant::above_degenerate: {
      if (m <= 0)
        throw std::invalid_argument("fibonacci_local_ratio: above_degenerate needs m > 0");
      const double q = std::sqrt(m / (m + 2.0));
      return {q, (2.0 * q - 1.0) / (q * q)};
    }
    case LocalRatioVariant::next_nearest: {
      if (m < 0)
        throw std::invalid_argument("fibonacci_local_ratio: next_nearest needs m >= 0");
      const double q =
          (1.0 + std::sqrt(4.0 * m * m + 12.0 * m + 1.0)) / (2.0 * (m + 3.0));
      return {q, (1.0 + q * q) / (2.0 * q)};
    }
  }
  throw std::invalid_argument("fibonacci_local_ratio: unknown variant");
}

}  // namespace qosc
