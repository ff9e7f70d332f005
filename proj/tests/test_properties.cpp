// Randomized properties with deterministic seeds; each case draws fresh
// inputs from a plain mt19937 so failures reproduce exactly.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "qosc/brackets.hpp"
#include "qosc/degeneracy.hpp"
#include "qosc/extended.hpp"
#include "qosc/fock.hpp"
#include "qosc/spectrum.hpp"

using namespace qosc;

namespace {

struct Gen {
  std::mt19937 rng;
  explicit Gen(unsigned seed) : rng(seed) {}
  double uniform(double lo, double hi) {
    return lo + (hi - lo) * (rng() / double(std::mt19937::max()));
  }
  int integer(int lo, int hi) { return lo + static_cast<int>(rng() % (hi - lo + 1)); }
};

double rel_gap(double a, double b) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
}

}  // namespace

TEST_CASE("energy: factored and expanded routes agree") {
  Gen gen(1u);
  for (int trial = 0; trial < 400; ++trial) {
    const double qv = gen.uniform(0.05, 2.0);
    const int n = gen.integer(0, 300);
    const double expanded = energy(n, DeformationParameter(qv));
    const double factored = 0.5 * std::pow(qv, n - 1) * ((n + 1) * qv + n);
    if (factored == 0.0 && expanded == 0.0) continue;  // common underflow
    CHECK(rel_gap(expanded, factored) < 1e-13);
  }
}

TEST_CASE("energy: extended and double paths agree") {
  Gen gen(2u);
  for (int trial = 0; trial < 200; ++trial) {
    const double qv = gen.uniform(0.1, 1.5);
    const int n = gen.integer(0, 100);
    const double via_ext =
        double(energy(n, Deformation<ext_real>(ext_real(qv))));
    CHECK(rel_gap(via_ext, energy(n, DeformationParameter(qv))) < 1e-14);
  }
}

TEST_CASE("qp_bracket is symmetric in its two parameters") {
  Gen gen(3u);
  for (int trial = 0; trial < 400; ++trial) {
    const double x = gen.uniform(0.0, 20.0);
    const double q = gen.uniform(0.1, 2.0);
    const double p = gen.uniform(0.1, 2.0);
    CHECK(rel_gap(qp_bracket(x, q, p), qp_bracket(x, p, q)) < 1e-12);
  }
}

TEST_CASE("log factorial tracks the plain product while it exists") {
  Gen gen(4u);
  for (int trial = 0; trial < 200; ++trial) {
    const double qv = gen.uniform(0.4, 1.6);
    const int n = gen.integer(0, 40);
    const DeformationParameter q(qv);
    const double direct = q_factorial(n, q);
    if (direct <= 0.0 || !std::isfinite(direct)) continue;
    CHECK(rel_gap(std::exp(log_q_factorial(n, q)), direct) < 1e-11);
  }
}

TEST_CASE("three-term recurrence holds at random q") {
  Gen gen(5u);
  for (int trial = 0; trial < 60; ++trial) {
    const double qv = gen.uniform(0.05, 1.6);
    CHECK(fibonacci_relative_residual(spectrum(DeformationParameter(qv), 300)) <= 1e-12);
  }
}

TEST_CASE("spacing flips sign exactly at the truncation index") {
  Gen gen(6u);
  for (int trial = 0; trial < 120; ++trial) {
    const DeformationParameter q(gen.uniform(0.05, 0.98));
    const auto idx = truncation_index(q);
    for (int n = 0; n < idx; ++n)
      CHECK(energy(n + 1, q) - energy(n, q) > -1e-15 * energy(n, q));
    for (int n = static_cast<int>(idx); n < idx + 20; ++n)
      CHECK(energy(n + 1, q) < energy(n, q));
  }
}

TEST_CASE("solved degeneracies bracket a genuine sign change") {
  Gen gen(7u);
  for (int trial = 0; trial < 80; ++trial) {
    const int m = gen.integer(0, 80);
    const int k = gen.integer(1, 12);
    if (m == 0 && k == 1) continue;
    const DegeneracySolution sol = q_general({m, k});
    CHECK(sol.q_value > 0.0);
    CHECK(sol.q_value < 1.0);
    CHECK(unit_interval_sign_changes({m, k}) == 1);

    const DeformationParameter q(sol.q_value);
    const double scale = std::max(energy(m, q), energy(m + k, q));
    CHECK(sol.residual <= 1e-12 * scale);

    // the polynomial is negative just below the root and positive just above
    CHECK(degeneracy_polynomial(m, k, sol.q_value * (1.0 - 1e-6)) < 0.0);
    CHECK(degeneracy_polynomial(m, k, sol.q_value * (1.0 + 1e-6)) > 0.0);
  }
}

TEST_CASE("commutator eigenvalue is negative below m/(m+1) and positive above") {
  Gen gen(8u);
  for (int trial = 0; trial < 100; ++trial) {
    const int m = gen.integer(1, 60);
    const double tuned = classical_q(m);
    const double below = gen.uniform(0.02, 0.98) * tuned;
    const double above = tuned + (1.0 - tuned) * gen.uniform(0.02, 0.98);
    CHECK(xp_commutator_value(m, DeformationParameter(below)) < 0.0);
    CHECK(xp_commutator_value(m, DeformationParameter(above)) > 0.0);
  }
}

TEST_CASE("spectrum entries match per-level evaluation") {
  Gen gen(9u);
  for (int trial = 0; trial < 50; ++trial) {
    const DeformationParameter q(gen.uniform(0.1, 1.8));
    const int n_max = gen.integer(2, 120);
    const auto spec = spectrum(q, n_max);
    REQUIRE(spec.energies.size() == static_cast<std::size_t>(n_max) + 1);
    const int probe = gen.integer(0, n_max);
    CHECK(spec.energies[static_cast<std::size_t>(probe)] == energy(probe, q));
  }
}
