#include "qosc/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "qosc/algebra.hpp"
#include "qosc/brackets.hpp"
#include "qosc/degeneracy.hpp"
#include "qosc/fock.hpp"
#include "qosc/spectrum.hpp"

namespace qosc {

namespace {

VerifyCheck make_check(std::string suite, std::string name, double measure,
                       double threshold) {
  VerifyCheck c{std::move(suite), std::move(name), measure, threshold, false};
  c.pass = c.measure <= c.threshold;
  return c;
}

double relative_gap(double a, double b) {
  const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
  return std::abs(a - b) / scale;
}

}  // namespace

std::vector<VerifyCheck> core_checks(const VerifyOptions&) {
  std::vector<VerifyCheck> out;
  const std::array<double, 4> q_grid{0.1, 0.5, 0.9, 1.5};

  {
    double worst = 0.0;
    for (double qv : q_grid) {
      const DeformationParameter q(qv);
      for (int k = 0; k <= 40; ++k)
        worst = std::max(worst,
                         std::abs(qp_bracket(double(k), qv, qv) - q_bracket(double(k), q)));
    }
    out.push_back(make_check("core", "bracket_limit_branch_exact", worst, 0.0));
  }

  {
    // |qp(k, q, q(1+eps)) - {k}_q| must shrink linearly with eps
    double worst_ratio = 0.0;
    for (double qv : q_grid) {
      const DeformationParameter q(qv);
      for (int k = 0; k <= 40; ++k) {
        const double exact = q_bracket(double(k), q);
        const auto err = [&](double eps) {
          return std::abs(qp_bracket(double(k), qv, qv * (1.0 + eps)) - exact);
        };
        const double slope = err(1e-2) / 1e-2;
        const double floor = 1e-11 * std::abs(exact) + 1e-300;
        worst_ratio = std::max(worst_ratio, err(1e-4) / (2.0 * slope * 1e-4 + floor));
        worst_ratio = std::max(worst_ratio, err(1e-6) / (4.0 * slope * 1e-6 + floor));
      }
    }
    out.push_back(make_check("core", "bracket_near_coincident_linear", worst_ratio, 1.0));
  }

  {
    double worst = 0.0;
    for (double qv : {0.1, 0.33, 0.7, 0.95, 1.0, 1.3})
      worst = std::max(worst,
                       fibonacci_relative_residual(spectrum(DeformationParameter(qv), 501)));
    out.push_back(make_check("core", "three_term_recurrence_identity", worst, 1e-12));
  }

  {
    // past the truncation index the levels fall strictly and reach any floor
    double worst_spacing = -1.0;
    bool reached_floor = true;
    for (double qv : {0.2, 0.5, 0.8, 0.95}) {
      const DeformationParameter q(qv);
      const auto idx = truncation_index(q);
      double prev = energy(static_cast<int>(idx) + 1, q);
      for (int n = static_cast<int>(idx) + 1; n < idx + 400; ++n) {
        const double next = energy(n + 1, q);
        if (prev == 0.0) break;  // underflowed; the exact value kept falling
        if (next > 0.0) worst_spacing = std::max(worst_spacing, next - prev);
        prev = next;
      }
      bool below = false;
      for (int n = static_cast<int>(idx) + 1; n < 2000000; n *= 2)
        if (log_energy(n, q) < -230.2585092994046) {  // ln(1e-100)
          below = true;
          break;
        }
      reached_floor = reached_floor && below;
    }
    out.push_back(make_check("core", "sub_unit_monotone_decay",
                             reached_floor ? worst_spacing : 1.0, 0.0));
  }

  {
    double worst = 0.0;  // spacing must grow strictly: spacing(n+1) > spacing(n)
    for (double qv : {1.05, 1.5, 2.0}) {
      const DeformationParameter q(qv);
      for (int n = 0; n < 100; ++n) {
        const double s0 = energy(n + 1, q) - energy(n, q);
        const double s1 = energy(n + 2, q) - energy(n + 1, q);
        worst = std::max(worst, s0 - s1);
      }
    }
    out.push_back(make_check("core", "super_unit_spacing_growth", worst, 0.0));
  }

  {
    // {n+1}_q - q {n}_q = q^n, the scalar shadow of the defining relation
    double worst = 0.0;
    for (double qv : {0.1, 0.5, 0.9, 1.0, 1.5}) {
      const DeformationParameter q(qv);
      for (int n = 0; n <= 100; ++n) {
        const double lhs =
            q_bracket(double(n + 1), q) - qv * q_bracket(double(n), q);
        const double rhs = std::pow(qv, n);
        worst = std::max(worst, std::abs(lhs - rhs) / rhs);
      }
    }
    out.push_back(make_check("core", "scalar_defining_identity", worst, 1e-13));
  }

  return out;
}

std::vector<VerifyCheck> degeneracy_checks(const VerifyOptions& options) {
  std::vector<VerifyCheck> out;

  const auto solver_root = [&options](int m, int k) {
    return options.extended ? double(q_general_ext({m, k}))
                            : q_general({m, k}, options.tol).q_value;
  };

  {
    double worst = 0.0;
    for (int m = 1; m <= 1000; ++m)
      worst = std::max(worst, std::abs(solver_root(m, 1) - q_nearest_neighbor(m)));
    out.push_back(make_check("degeneracy", "closed_vs_solver_gap1", worst, 1e-12));
  }

  {
    double worst = 0.0;
    for (int m = 0; m <= 1000; ++m)
      worst = std::max(worst, std::abs(solver_root(m, 2) - q_next_nearest(m)));
    out.push_back(make_check("degeneracy", "closed_vs_solver_gap2", worst, 1e-12));
  }

  {
    // (q+1)((m+3)q^2 - q - m) must reproduce the gap-2 polynomial coefficients
    long long worst = 0;
    for (int m = 0; m <= 100; ++m) {
      const std::array<long long, 4> product{-static_cast<long long>(m),
                                             -(static_cast<long long>(m) + 1),
                                             static_cast<long long>(m) + 2,
                                             static_cast<long long>(m) + 3};
      const auto coeffs = degeneracy_polynomial_coefficients(m, 2);
      for (std::size_t i = 0; i < product.size(); ++i)
        worst = std::max(worst, std::abs(coeffs[i] - product[i]));
    }
    out.push_back(make_check("degeneracy", "gap2_factorization", double(worst), 0.0));
  }

  {
    // both closed-form families approach 1 from below, monotonically
    double worst = 0.0;
    double prev = 0.0;
    for (int m = 1; m <= 1000; ++m) {
      const double q = q_nearest_neighbor(m);
      if (q <= prev || q >= 1.0) worst = 1.0;
      prev = q;
    }
    prev = 0.0;
    for (int n : {2, 3, 4, 5, 6, 10, 25, 50, 100, 200, 400}) {
      const double q = q_zero_level(n, options.tol).q_value;
      if (q <= prev || q >= 1.0) worst = 1.0;
      prev = q;
    }
    out.push_back(make_check("degeneracy", "closed_form_limits_monotone", worst, 0.0));
  }

  {
    double worst = 0.0;
    for (int m : {0, 1, 2, 5, 10, 50, 100})
      for (int k : {1, 2, 3, 7, 20}) {
        if (m == 0 && k == 1) continue;
        const DegeneracySolution sol = q_general({m, k}, options.tol);
        const DeformationParameter q(sol.q_value);
        const double scale = std::max({energy(m, q), energy(m + k, q), 1e-300});
        worst = std::max(worst, sol.residual / (10.0 * options.tol * scale));
      }
    out.push_back(make_check("degeneracy", "solution_residuals", worst, 1.0));
  }

  {
    // at the nearest-neighbor value only the tuned pair coincides
    int violations = 0;
    for (int m : {1, 2, 5, 9, 20}) {
      const DeformationParameter q(q_nearest_neighbor(m));
      const auto spec = spectrum(q, m + 10);
      for (int i = 0; i <= m + 10; ++i)
        for (int j = i + 1; j <= m + 10; ++j) {
          const bool tuned = i == m && j == m + 1;
          const bool close = std::abs(spec.energies[static_cast<std::size_t>(i)] -
                                      spec.energies[static_cast<std::size_t>(j)]) <= 1e-9;
          if (close != tuned) ++violations;
        }
    }
    out.push_back(make_check("degeneracy", "isolated_pair", double(violations), 0.0));
  }

  {
    int worst = 0;
    for (int m : {0, 1, 3, 10, 40, 150})
      for (int k : {1, 2, 3, 5, 11, 20}) {
        if (m == 0 && k == 1) continue;
        worst = std::max(worst, std::abs(unit_interval_sign_changes({m, k}) - 1));
      }
    out.push_back(make_check("degeneracy", "panel_uniqueness", double(worst), 0.0));
  }

  return out;
}

std::vector<VerifyCheck> fock_checks(const VerifyOptions&) {
  std::vector<VerifyCheck> out;
  const int dim = 32;
  const std::array<double, 4> q_grid{0.3, 0.5, 0.9, 1.0};

  double conjugacy = 0.0;
  double ladder = 0.0;
  double spectral = 0.0;
  double localization = 0.0;
  double relations_ratio = 0.0;
  for (double qv : q_grid) {
    const DeformationParameter q(qv);
    const FockRep rep = build_fock_rep(dim, q);

    conjugacy = std::max(conjugacy, max_abs_difference(rep.a_dag, rep.a.transpose()));

    for (int n = 0; n < dim; ++n) {
      std::vector<double> basis(static_cast<std::size_t>(dim), 0.0);
      basis[static_cast<std::size_t>(n)] = 1.0;
      const auto raised = rep.a_dag.apply(basis);
      const auto lowered = rep.a.apply(basis);
      for (int i = 0; i < dim; ++i) {
        double expect_up = 0.0;
        if (n + 1 < dim && i == n + 1) expect_up = std::sqrt((n + 1) * std::pow(qv, n));
        ladder = std::max(ladder, std::abs(raised[static_cast<std::size_t>(i)] - expect_up));
        double expect_down = 0.0;
        if (n >= 1 && i == n - 1) expect_down = std::sqrt(n * std::pow(qv, n - 1));
        ladder = std::max(ladder, std::abs(lowered[static_cast<std::size_t>(i)] - expect_down));
      }
    }

    const auto diag = hamiltonian(rep).diagonal_entries();
    for (int n = 0; n <= dim - 2; ++n)
      spectral = std::max(spectral,
                          relative_gap(diag[static_cast<std::size_t>(n)], energy(n, q)));

    const Matrix defect = defining_relation_defect(rep);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        if (i != dim - 1 || j != dim - 1)
          localization = std::max(localization, std::abs(defect(i, j)));

    const RelationResiduals res = check_defining_relations(rep);
    relations_ratio = std::max({relations_ratio, res.deformed_commutation / 1e-13,
                                res.number_commutators / 1e-14, res.number_link / 1e-13});
  }
  out.push_back(make_check("fock", "conjugacy", conjugacy, 0.0));
  out.push_back(make_check("fock", "ladder_action", ladder, 1e-13));
  out.push_back(make_check("fock", "spectral_consistency", spectral, 1e-13));
  out.push_back(make_check("fock", "truncation_localization", localization, 1e-13));
  out.push_back(make_check("fock", "defining_relations", relations_ratio, 1.0));

  {
    // raising the vacuum n times lands on sqrt({n}_q!) |n>
    double worst = 0.0;
    for (double qv : {0.5, 0.9}) {
      const DeformationParameter q(qv);
      const int d = 16;
      const FockRep rep = build_fock_rep(d, q);
      std::vector<double> state(static_cast<std::size_t>(d), 0.0);
      state[0] = 1.0;
      for (int n = 1; n <= d - 1; ++n) {
        state = rep.a_dag.apply(state);
        const double expected = std::sqrt(q_factorial(n, q));
        for (int i = 0; i < d; ++i) {
          const double want = i == n ? expected : 0.0;
          worst = std::max(worst, std::abs(state[static_cast<std::size_t>(i)] - want) /
                                      std::max(expected, 1e-300));
        }
      }
    }
    out.push_back(make_check("fock", "state_construction", worst, 1e-12));
  }

  {
    double worst = 0.0;
    for (int m = 1; m <= 50; ++m) {
      const CommutatorZero zero = scan_commutator_zero(m);
      if (zero.sign_changes != 1) worst = 1.0;
      worst = std::max(worst, std::abs(zero.root - classical_q(m)));
    }
    out.push_back(make_check("fock", "commutator_zero_crossing", worst, 1e-10));
  }

  return out;
}

std::vector<VerifyCheck> algebra_checks(const VerifyOptions&) {
  std::vector<VerifyCheck> out;
  const std::array<double, 4> q_grid{0.1, 0.5, 0.9, 1.0};

  {
    double worst = 0.0;
    for (double qv : q_grid) {
      const DeformationParameter q(qv);
      for (int two_j = 0; two_j <= 40; ++two_j)
        worst = std::max(worst, check_spin_relations(build_spin_module(two_j, q)));
    }
    out.push_back(make_check("algebra", "spin_relations", worst, 1e-10));
  }

  {
    double worst = 0.0;
    for (double qv : q_grid) {
      const DeformationParameter q(qv);
      for (int two_j : {0, 1, 2, 3, 4, 5, 10, 20, 40}) {
        const SpinModule mod = build_spin_module(two_j, q);
        worst = std::max(worst, max_abs_difference(mod.j_minus, mod.j_plus.transpose()));
      }
    }
    out.push_back(make_check("algebra", "transpose_symmetry", worst, 0.0));
  }

  {
    double worst = 0.0;
    for (double qv : {0.5, 0.9, 1.0}) {
      const DeformationParameter q(qv);
      const int mode_dim = 6;
      const TwoModeRealization real = build_two_mode(mode_dim, q);
      for (int two_j = 0; two_j <= mode_dim - 2; ++two_j) {
        const SpinModule mod = build_spin_module(two_j, q);
        worst = std::max(worst, max_abs_difference(two_mode_block(real.j_plus, mode_dim, two_j),
                                                   mod.j_plus));
        worst = std::max(worst, max_abs_difference(two_mode_block(real.j_minus, mode_dim, two_j),
                                                   mod.j_minus));
        worst = std::max(worst, max_abs_difference(two_mode_block(real.j0, mode_dim, two_j),
                                                   mod.j0));
        worst = std::max(worst, max_abs_difference(two_mode_block(real.j3, mode_dim, two_j),
                                                   mod.j3));
      }
    }
    out.push_back(make_check("algebra", "block_equivalence", worst, 1e-12));
  }

  {
    double worst = 0.0;
    for (int mode_dim : {4, 6})
      for (double qv : {0.5, 0.7, 1.0})
        worst = std::max(worst,
                         check_two_mode_relations(build_two_mode(mode_dim, DeformationParameter(qv))));
    out.push_back(make_check("algebra", "two_mode_relations", worst, 1e-12));
  }

  {
    // raising elements die off with growing j at sub-unit q while the j3
    // eigenvalue (= j) is unbounded
    const DeformationParameter q(0.9);
    int violations = 0;
    double prev = large_j_matrix_element(2 * 10, 0, q);
    for (int j = 11; j <= 60; ++j) {
      const double el = large_j_matrix_element(2 * j, 0, q);
      if (el >= prev) ++violations;
      prev = el;
    }
    int crossover = -1;
    for (int j = 1; j <= 2000; ++j)
      if (large_j_matrix_element(2 * j, 0, q) < 1e-8) {
        crossover = j;
        break;
      }
    if (crossover < 0) ++violations;
    out.push_back(make_check("algebra", "asymptotic_separation", double(violations), 0.0));
  }

  {
    // at q = 1 the same sequence grows without bound instead
    const DeformationParameter q(1.0);
    int violations = 0;
    double prev = 0.0;
    for (int j = 1; j <= 100; ++j) {
      const double el = large_j_matrix_element(2 * j, 0, q);
      if (el <= prev) ++violations;
      prev = el;
    }
    out.push_back(make_check("algebra", "undeformed_contrast", double(violations), 0.0));
  }

  return out;
}

std::vector<VerifyCheck> all_checks(const VerifyOptions& options) {
  std::vector<VerifyCheck> out = core_checks(options);
  for (auto&& suite : {degeneracy_checks(options), fock_checks(options), algebra_checks(options)})
    out.insert(out.end(), suite.begin(), suite.end());
  return out;
}

}  // namespace qosc
