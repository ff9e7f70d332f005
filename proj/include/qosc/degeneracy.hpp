#pragma once

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "qosc/deformation.hpp"
#include "qosc/extended.hpp"

namespace qosc {

/// A two-fold level coincidence E_m = E_{m+k}.  The pair (0, 1) is excluded:
/// that coincidence would require q = 0.
struct DegeneracyQuery {
  int m = 0;  // lower level
  int k = 1;  // gap; the coincident pair is (m, m+k)
};

enum class SolveMethod { closed_form_k1, closed_form_k2, root_solve };

std::string to_string(SolveMethod method);

struct DegeneracySolution {
  DegeneracyQuery query;
  double q_value = 0.0;   // in (0, 1)
  double residual = 0.0;  // |E_m - E_{m+k}| at q_value
  SolveMethod method = SolveMethod::root_solve;
};

/// Polynomial whose unique root in (0, 1) makes E_m and E_{m+k} coincide:
///   (m+k+1) q^(k+1) + (m+k) q^k - (m+1) q - m.
/// Its coefficient signs are (+, +, -, -), so it has exactly one positive
/// real root; the polynomial is positive at q = 1 (value 2k).
template <typename Real>
Real degeneracy_polynomial(int m, int k, Real q) {
  using std::pow;
  const Real qk = pow(q, k);
  return Real(m + k + 1) * qk * q + Real(m + k) * qk - Real(m + 1) * q - Real(m);
}

template <typename Real>
Real degeneracy_polynomial_derivative(int m, int k, Real q) {
  using std::pow;
  const Real qk1 = pow(q, k - 1);
  return Real(m + k + 1) * Real(k + 1) * qk1 * q + Real(m + k) * Real(k) * qk1 -
         Real(m + 1);
}

/// Dense integer coefficients of the same polynomial, index = power of q.
std::vector<long long> degeneracy_polynomial_coefficients(int m, int k);

/// Closed form for E_m = E_{m+1}: q = sqrt(m/(m+2)), m >= 1.
double q_nearest_neighbor(int m);
ext_real q_nearest_neighbor_ext(int m);

/// Closed form for E_m = E_{m+2}: q = (1 + sqrt(4m^2+12m+1))/(2(m+3)), m >= 0.
double q_next_nearest(int m);
ext_real q_next_nearest_ext(int m);

/// Solve E_0 = E_n, n >= 2, on the reciprocal variable z = 1/q where the
/// condition reads z^n - n z - (n+1) = 0 with a single root z* > 1.
DegeneracySolution q_zero_level(int n, double tol = 1e-13);
ext_real q_zero_level_ext(int n);

/// Solve the general condition E_m = E_{m+k} for the unique q in (0, 1).
DegeneracySolution q_general(const DegeneracyQuery& query, double tol = 1e-13);
ext_real q_general_ext(const DegeneracyQuery& query);

/// Dispatch used by the command layer: closed form for k in {1, 2}
/// (cross-checked against the root solver), root solver otherwise.
DegeneracySolution solve_degeneracy(const DegeneracyQuery& query, double tol = 1e-13);

/// |E_m - E_{m+k}| at the given q.  Falls back to the extended-precision
/// path when the linear-domain energies drop below 1e-200.
double verify_degeneracy(int m, int k, double q);

/// Sign changes of the degeneracy polynomial over equispaced panels on
/// (0, 1); exactly one for every admissible query.
int unit_interval_sign_changes(const DegeneracyQuery& query, int panels = 64);

struct ZeroLevelRow {
  int n;
  ext_real q;       // extended-precision root
  double residual;  // |E_0 - E_n| at that root
};

/// Rows (n, q_n) for the ground-level coincidences E_0 = E_n, solved at
/// extended precision.
std::vector<ZeroLevelRow> zero_level_table(std::span<const int> n_values);

}  // namespace qosc
