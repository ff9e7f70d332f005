#include "qosc/degeneracy.hpp"

#include <algorithm>
#include <limits>

#include "qosc/errors.hpp"
#include "qosc/rootfind.hpp"
#include "qosc/spectrum.hpp"

namespace qosc {

namespace {

void validate_query(const DegeneracyQuery& query) {
  if (query.m < 0)
    throw std::invalid_argument("degeneracy: m must be nonnegative");
  if (query.k < 1)
    throw std::invalid_argument("degeneracy: k must be positive");
  if (query.m == 0 && query.k == 1)
    throw std::invalid_argument(
        "degeneracy of levels 0 and 1 is impossible: it would require q = 0, "
        "which is outside the admissible range");
}

template <typename Real>
Real horner(const std::vector<Real>& coeffs, Real x) {
  Real acc(0);
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
  return acc;
}

template <typename Real>
Real horner_derivative(const std::vector<Real>& coeffs, Real x) {
  Real acc(0);
  for (std::size_t i = coeffs.size(); i-- > 1;) acc = acc * x + Real(i) * coeffs[i];
  return acc;
}

/// Synthetic division by (q + 1).  Valid when -1 is a root, which happens
/// for every even gap k.
template <typename Real>
std::vector<Real> deflate_root_minus_one(const std::vector<Real>& coeffs) {
  std::vector<Real> out(coeffs.size() - 1);
  Real carry(0);
  for (std::size_t i = coeffs.size(); i-- > 1;) {
    carry = coeffs[i] - carry;  // quotient coefficient of q^(i-1)
    out[i - 1] = carry;
  }
  return out;
}

double panel_zero_eps(int m, int k) {
  // noise floor: a multiple of machine epsilon times the coefficient scale
  const double l1 = 4.0 * m + 2.0 * k + 2.0;
  return 64.0 * std::numeric_limits<double>::epsilon() * l1;
}

/// Bisection on the certified bracket (eps, 1), then a short safeguarded
/// Newton polish.  If a Newton iterate strays out of the bracket and k is
/// even, the spurious root at q = -1 is divided out before continuing;
/// otherwise the step falls back to bisection.
double solve_unit_interval(int m, int k) {
  const auto f = [m, k](double x) { return degeneracy_polynomial(m, k, x); };
  double lo = 1e-9;
  double hi = 1.0;
  if (!(f(lo) < 0.0) || !(f(hi) > 0.0))
    throw SolverError("degeneracy solver: bracket endpoints lost their signs", lo, hi);

  const int changes = detail::count_sign_changes(f, lo, hi, 64, panel_zero_eps(m, k));
  if (changes != 1)
    throw SolverError(
        "degeneracy solver: expected exactly one sign change in (0, 1), found " +
            std::to_string(changes),
        lo, hi);

  detail::bisect(f, lo, hi, 1e-4);
  if (lo == hi) return lo;

  std::vector<double> deflated;
  bool use_deflated = false;
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 8; ++it) {
    double fx, dfx;
    if (use_deflated) {
      fx = horner(deflated, x);
      dfx = horner_derivative(deflated, x);
    } else {
      fx = degeneracy_polynomial(m, k, x);
      dfx = degeneracy_polynomial_derivative(m, k, x);
    }
    if (fx == 0.0) return x;
    (fx < 0.0 ? lo : hi) = x;
    if (dfx != 0.0) {
      const double step = fx / dfx;
      const double next = x - step;
      if (std::abs(step) <= 4.0 * std::numeric_limits<double>::epsilon() * x)
        return next;  // converged
      if (next > lo && next < hi) {
        x = next;
        continue;
      }
      if (k % 2 == 0 && !use_deflated) {
        std::vector<long long> ic = degeneracy_polynomial_coefficients(m, k);
        deflated = deflate_root_minus_one(std::vector<double>(ic.begin(), ic.end()));
        use_deflated = true;
        continue;
      }
    }
    x = 0.5 * (lo + hi);
  }
  return x;
}

/// Plain Newton continuation in extended precision, starting from a root
/// already converged in double.
ext_real polish_unit_interval_ext(int m, int k, double seed) {
  ext_real x(seed);
  for (int it = 0; it < 6; ++it) {
    const ext_real fx = degeneracy_polynomial(m, k, x);
    const ext_real dfx = degeneracy_polynomial_derivative(m, k, x);
    if (dfx == 0) break;
    x -= fx / dfx;
  }
  return x;
}

template <typename Real>
Real zero_level_poly(int n, Real z) {
  using std::pow;
  return pow(z, n) - Real(n) * z - Real(n + 1);
}

template <typename Real>
Real zero_level_poly_derivative(int n, Real z) {
  using std::pow;
  return Real(n) * (pow(z, n - 1) - Real(1));
}

/// Root z* > 1 of z^n - n z - (n+1); the polynomial is strictly increasing
/// on z > 1, so bisection plus Newton cannot escape.
double solve_zero_level_z(int n) {
  const auto g = [n](double z) { return zero_level_poly(n, z); };
  double lo = 1.0 + 1e-9;
  double hi = 2.0 * std::pow(double(n), 1.0 / (n - 1)) + 2.0;
  if (!(g(lo) < 0.0) || !(g(hi) > 0.0))
    throw SolverError("zero-level solver: bracket endpoints lost their signs", lo, hi);

  const double zero_eps = 64.0 * std::numeric_limits<double>::epsilon() * (2.0 * n + 2.0);
  const int changes = detail::count_sign_changes(g, lo, hi, 64, zero_eps);
  if (changes != 1)
    throw SolverError(
        "zero-level solver: expected exactly one sign change on the bracket, found " +
            std::to_string(changes),
        lo, hi);

  detail::bisect(g, lo, hi, 1e-4);
  if (lo == hi) return lo;

  double z = 0.5 * (lo + hi);
  for (int it = 0; it < 8; ++it) {
    const double fz = zero_level_poly(n, z);
    const double dfz = zero_level_poly_derivative(n, z);
    if (fz == 0.0) return z;
    (fz < 0.0 ? lo : hi) = z;
    if (dfz != 0.0) {
      const double step = fz / dfz;
      const double next = z - step;
      if (std::abs(step) <= 4.0 * std::numeric_limits<double>::epsilon() * z)
        return next;  // converged
      if (next > lo && next < hi) {
        z = next;
        continue;
      }
    }
    z = 0.5 * (lo + hi);
  }
  return z;
}

ext_real polish_zero_level_ext(int n, double seed) {
  ext_real z(seed);
  for (int it = 0; it < 6; ++it) {
    const ext_real fz = zero_level_poly(n, z);
    const ext_real dfz = zero_level_poly_derivative(n, z);
    if (dfz == 0) break;
    z -= fz / dfz;
  }
  return z;
}

void enforce_residual_bound(const DegeneracySolution& sol, double tol) {
  const DeformationParameter q(sol.q_value);
  const double scale = std::max(
      {energy(sol.query.m, q), energy(sol.query.m + sol.query.k, q), 1e-300});
  if (sol.residual > 10.0 * tol * scale)
    throw SolverError("degeneracy solver: residual " + std::to_string(sol.residual) +
                          " exceeds the requested tolerance",
                      sol.q_value, sol.q_value);
}

}  // namespace

std::string to_string(SolveMethod method) {
  switch (method) {
    case SolveMethod::closed_form_k1: return "closed_form_k1";
    case SolveMethod::closed_form_k2: return "closed_form_k2";
    case SolveMethod::root_solve: return "root_solve";
  }
  return "unknown";
}

std::vector<long long> degeneracy_polynomial_coefficients(int m, int k) {
  std::vector<long long> c(static_cast<std::size_t>(k) + 2, 0);
  c[static_cast<std::size_t>(k) + 1] = m + k + 1;
  c[static_cast<std::size_t>(k)] = m + k;
  c[1] += -(static_cast<long long>(m) + 1);  // += keeps k = 1 correct, where powers collide
  c[0] += -static_cast<long long>(m);
  return c;
}

double q_nearest_neighbor(int m) {
  if (m < 1)
    throw std::invalid_argument(
        "q_nearest_neighbor: requires m >= 1 (levels 0 and 1 never coincide)");
  return std::sqrt(double(m) / (m + 2));
}

ext_real q_nearest_neighbor_ext(int m) {
  if (m < 1)
    throw std::invalid_argument(
        "q_nearest_neighbor_ext: requires m >= 1 (levels 0 and 1 never coincide)");
  return sqrt(ext_real(m) / ext_real(m + 2));
}

double q_next_nearest(int m) {
  if (m < 0) throw std::invalid_argument("q_next_nearest: requires m >= 0");
  return (1.0 + std::sqrt(4.0 * m * m + 12.0 * m + 1.0)) / (2.0 * (m + 3));
}

ext_real q_next_nearest_ext(int m) {
  if (m < 0) throw std::invalid_argument("q_next_nearest_ext: requires m >= 0");
  const ext_real mm(m);
  return (1 + sqrt(4 * mm * mm + 12 * mm + 1)) / (2 * (mm + 3));
}

DegeneracySolution q_zero_level(int n, double tol) {
  if (n < 2)
    throw std::invalid_argument(
        "q_zero_level: requires n >= 2 (levels 0 and 1 never coincide)");
  if (!(tol > 0.0)) throw std::invalid_argument("q_zero_level: tol must be positive");
  double z = solve_zero_level_z(n);
  double q = n > 50 ? double(1 / polish_zero_level_ext(n, z)) : 1.0 / z;
  DegeneracySolution sol{{0, n}, q, verify_degeneracy(0, n, q), SolveMethod::root_solve};
  enforce_residual_bound(sol, tol);
  return sol;
}

ext_real q_zero_level_ext(int n) {
  if (n < 2)
    throw std::invalid_argument(
        "q_zero_level_ext: requires n >= 2 (levels 0 and 1 never coincide)");
  return 1 / polish_zero_level_ext(n, solve_zero_level_z(n));
}

DegeneracySolution q_general(const DegeneracyQuery& query, double tol) {
  validate_query(query);
  if (!(tol > 0.0)) throw std::invalid_argument("q_general: tol must be positive");
  double q = solve_unit_interval(query.m, query.k);
  if (query.m > 50 || query.k > 20)
    q = double(polish_unit_interval_ext(query.m, query.k, q));
  DegeneracySolution sol{query, q, verify_degeneracy(query.m, query.k, q),
                         SolveMethod::root_solve};
  enforce_residual_bound(sol, tol);
  return sol;
}

ext_real q_general_ext(const DegeneracyQuery& query) {
  validate_query(query);
  return polish_unit_interval_ext(query.m, query.k,
                                  solve_unit_interval(query.m, query.k));
}

DegeneracySolution solve_degeneracy(const DegeneracyQuery& query, double tol) {
  validate_query(query);
  if (query.k > 2) return q_general(query, tol);

  const double closed =
      query.k == 1 ? q_nearest_neighbor(query.m) : q_next_nearest(query.m);
  const DegeneracySolution solved = q_general(query, tol);
  if (std::abs(closed - solved.q_value) > 1e-12)
    throw SolverError("degeneracy: closed form and root solver disagree",
                      std::min(closed, solved.q_value),
                      std::max(closed, solved.q_value));
  DegeneracySolution sol{query, closed, verify_degeneracy(query.m, query.k, closed),
                         query.k == 1 ? SolveMethod::closed_form_k1
                                      : SolveMethod::closed_form_k2};
  enforce_residual_bound(sol, tol);
  return sol;
}

double verify_degeneracy(int m, int k, double q) {
  if (m < 0 || k < 1)
    throw std::invalid_argument("verify_degeneracy: need m >= 0 and k >= 1");
  const DeformationParameter qd(q);
  const double em = energy(m, qd);
  const double ek = energy(m + k, qd);
  if (std::min(em, ek) < 1e-200) {
    const Deformation<ext_real> qe{ext_real(q)};
    return double(abs(energy(m, qe) - energy(m + k, qe)));
  }
  return std::abs(em - ek);
}

int unit_interval_sign_changes(const DegeneracyQuery& query, int panels) {
  validate_query(query);
  if (panels < 1) throw std::invalid_argument("unit_interval_sign_changes: panels >= 1");
  const auto f = [&query](double x) {
    return degeneracy_polynomial(query.m, query.k, x);
  };
  return detail::count_sign_changes(f, 1e-9, 1.0, panels,
                                    panel_zero_eps(query.m, query.k));
}

std::vector<ZeroLevelRow> zero_level_table(std::span<const int> n_values) {
  std::vector<ZeroLevelRow> rows;
  rows.reserve(n_values.size());
  for (int n : n_values) {
    const ext_real q = q_zero_level_ext(n);
    const Deformation<ext_real> qe{q};
    rows.push_back({n, q, double(abs(energy(0, qe) - energy(n, qe)))});
  }
  return rows;
}

}  // namespace qosc
