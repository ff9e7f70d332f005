#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <functional>

#include "qosc/degeneracy.hpp"
#include "qosc/errors.hpp"
#include "qosc/spectrum.hpp"

using namespace qosc;

namespace {

// Independent oracle: plain bisection, no Newton, no panel logic.
double bisect_oracle(const std::function<double(double)>& f, double lo, double hi) {
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (f(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

// E_0 = E_n condition in the q variable: (n+1) q^n + n q^(n-1) - 1 = 0.
double zero_level_condition(int n, double q) {
  return (n + 1) * std::pow(q, n) + n * std::pow(q, n - 1) - 1.0;
}

}  // namespace

TEST_CASE("nearest-neighbor closed form") {
  CHECK(q_nearest_neighbor(1) == std::sqrt(1.0 / 3.0));
  CHECK(q_nearest_neighbor(2) == std::sqrt(2.0 / 4.0));
  CHECK(q_nearest_neighbor(9) == std::sqrt(9.0 / 11.0));
  CHECK_THROWS_AS(q_nearest_neighbor(0), std::invalid_argument);

  for (int m = 1; m <= 40; ++m) {
    const double q = q_nearest_neighbor(m);
    CHECK(q > 0.0);
    CHECK(q < 1.0);
    CHECK(verify_degeneracy(m, 1, q) < 1e-12);
  }
}

TEST_CASE("next-nearest closed form") {
  CHECK(q_next_nearest(0) == 1.0 / 3.0);
  CHECK(q_next_nearest(5) == (1.0 + std::sqrt(161.0)) / 16.0);
  CHECK(q_next_nearest(1) == (1.0 + std::sqrt(17.0)) / 8.0);
  CHECK_THROWS_AS(q_next_nearest(-1), std::invalid_argument);

  for (int m = 0; m <= 40; ++m) {
    const double q = q_next_nearest(m);
    CHECK(q > 0.0);
    CHECK(q < 1.0);
    CHECK(verify_degeneracy(m, 2, q) < 1e-12);
  }
}

TEST_CASE("ground-level degeneracy solver") {
  CHECK(std::abs(q_zero_level(2).q_value - 1.0 / 3.0) < 1e-15);
  CHECK(std::abs(q_zero_level(3).q_value - 0.45541) < 5e-6);
  CHECK(std::abs(q_zero_level(10).q_value - 0.725405) < 5e-7);
  CHECK(std::abs(q_zero_level(400).q_value - 0.98340363) < 5e-8);
  CHECK_THROWS_AS(q_zero_level(1), std::invalid_argument);
  CHECK_THROWS_AS(q_zero_level(0), std::invalid_argument);

  for (int n : {2, 3, 7, 10, 25}) {
    const double oracle = bisect_oracle(
        [n](double q) { return zero_level_condition(n, q); }, 1e-6, 1.0 - 1e-12);
    CHECK(std::abs(q_zero_level(n).q_value - oracle) < 1e-12);
  }

  for (int n : {2, 5, 30, 120}) {
    const DegeneracySolution sol = q_zero_level(n);
    CHECK(std::abs(zero_level_condition(n, sol.q_value)) < 1e-12);
    CHECK(sol.residual < 1e-13);
    CHECK(sol.method == SolveMethod::root_solve);
  }
}

TEST_CASE("general solver reduces to the closed forms") {
  CHECK(std::abs(q_general({1, 1}).q_value - q_nearest_neighbor(1)) < 1e-14);
  CHECK(std::abs(q_general({0, 2}).q_value - 1.0 / 3.0) < 1e-14);
  for (int m : {1, 2, 3, 5, 9, 20, 100, 500, 1000})
    CHECK(std::abs(q_general({m, 1}).q_value - q_nearest_neighbor(m)) < 1e-12);
  for (int m : {0, 1, 2, 5, 9, 20, 100, 500, 1000})
    CHECK(std::abs(q_general({m, 2}).q_value - q_next_nearest(m)) < 1e-12);
}

TEST_CASE("general solver against an independent quartic oracle") {
  // E_1 = E_4: q^4 + (4/5) q^3 - (2/5) q - 1/5 = 0
  const double oracle = bisect_oracle(
      [](double q) {
        return q * q * q * q + 0.8 * q * q * q - 0.4 * q - 0.2;
      },
      1e-6, 1.0);
  const DegeneracySolution sol = q_general({1, 3});
  CHECK(std::abs(sol.q_value - oracle) < 1e-12);
  CHECK(verify_degeneracy(1, 3, sol.q_value) < 1e-13);

  const DeformationParameter q(sol.q_value);
  CHECK(std::abs(energy(1, q) - energy(4, q)) < 1e-13);
}

TEST_CASE("general solver agrees with the ground-level solver") {
  for (int k : {2, 3, 5, 10, 20})
    CHECK(std::abs(q_general({0, k}).q_value - q_zero_level(k).q_value) < 1e-12);
}

TEST_CASE("impossible pair is rejected with an explanation") {
  bool threw = false;
  try {
    q_general({0, 1});
  } catch (const std::invalid_argument& e) {
    threw = true;
    CHECK(std::string(e.what()).find("q = 0") != std::string::npos);
  }
  CHECK(threw);
  CHECK_THROWS_AS(q_general({-1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(q_general({1, 0}), std::invalid_argument);
}

TEST_CASE("dispatch picks the closed form for small gaps") {
  CHECK(solve_degeneracy({3, 1}).method == SolveMethod::closed_form_k1);
  CHECK(solve_degeneracy({3, 2}).method == SolveMethod::closed_form_k2);
  CHECK(solve_degeneracy({3, 3}).method == SolveMethod::root_solve);
  CHECK(solve_degeneracy({3, 1}).q_value == q_nearest_neighbor(3));
  CHECK(solve_degeneracy({3, 2}).q_value == q_next_nearest(3));
}

TEST_CASE("solution invariants over a grid") {
  for (int m : {0, 1, 4, 17, 60})
    for (int k : {1, 2, 3, 8, 15}) {
      if (m == 0 && k == 1) continue;
      const DegeneracySolution sol = q_general({m, k});
      CHECK(sol.q_value > 0.0);
      CHECK(sol.q_value < 1.0);
      const DeformationParameter q(sol.q_value);
      const double scale = std::max(energy(m, q), energy(m + k, q));
      CHECK(sol.residual <= 10.0 * 1e-13 * scale);
      CHECK(unit_interval_sign_changes({m, k}) == 1);
    }
}

TEST_CASE("gap-2 polynomial factors through (q + 1)") {
  for (int m = 0; m <= 50; ++m) {
    const auto coeffs = degeneracy_polynomial_coefficients(m, 2);
    // (q + 1)((m+3) q^2 - q - m), expanded
    CHECK(coeffs[3] == m + 3);
    CHECK(coeffs[2] == m + 2);
    CHECK(coeffs[1] == -(m + 1));
    CHECK(coeffs[0] == -m);
  }
}

TEST_CASE("closed forms rise monotonically toward 1") {
  double prev = 0.0;
  for (int m = 1; m <= 1000; ++m) {
    const double q = q_nearest_neighbor(m);
    CHECK(q > prev);
    CHECK(q < 1.0);
    prev = q;
  }
  prev = 0.0;
  for (int n : {2, 3, 4, 5, 6, 10, 25, 50, 100, 200, 400}) {
    const double q = q_zero_level(n).q_value;
    CHECK(q > prev);
    CHECK(q < 1.0);
    prev = q;
  }
}

TEST_CASE("tuned pair is the only coincidence nearby") {
  for (int m : {1, 2, 5, 9}) {
    const DeformationParameter q(q_nearest_neighbor(m));
    const auto spec = spectrum(q, m + 10);
    for (int i = 0; i <= m + 10; ++i)
      for (int j = i + 1; j <= m + 10; ++j) {
        const bool tuned = (i == m && j == m + 1);
        const bool close = std::abs(spec.energies[i] - spec.energies[j]) <= 1e-9;
        CHECK(close == tuned);
      }
  }
}

TEST_CASE("verify_degeneracy") {
  CHECK(verify_degeneracy(1, 1, std::sqrt(1.0 / 3.0)) < 1e-15);
  CHECK(verify_degeneracy(0, 2, 1.0 / 3.0) < 1e-15);
  CHECK(verify_degeneracy(1, 1, 0.9) > 0.1);  // generic q breaks the equality
  CHECK_THROWS_AS(verify_degeneracy(1, 1, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(verify_degeneracy(-1, 1, 0.5), std::invalid_argument);

  // deep decay region: the double-domain energies underflow past 1e-200 and
  // the extended path takes over
  const double tail = verify_degeneracy(500, 1, 0.3);
  CHECK(tail > 0.0);
  CHECK(tail < 1e-250);
}

TEST_CASE("extended-precision roots sharpen the double ones") {
  for (int n : {2, 10, 60}) {
    const ext_real q = q_zero_level_ext(n);
    CHECK(std::abs(double(q) - q_zero_level(n).q_value) < 1e-14);
    const Deformation<ext_real> qe{q};
    CHECK(abs(energy(0, qe) - energy(n, qe)) < ext_real("1e-40"));
  }
  const ext_real q = q_general_ext({2, 3});
  const Deformation<ext_real> qe{q};
  CHECK(abs(energy(2, qe) - energy(5, qe)) < ext_real("1e-40"));
}

TEST_CASE("zero-level table rows") {
  const std::vector<int> levels{2, 10};
  const auto rows = zero_level_table(levels);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].n == 2);
  CHECK(abs(rows[0].q - ext_real(1) / 3) < ext_real("1e-45"));
  CHECK(std::abs(double(rows[1].q) - q_zero_level(10).q_value) < 1e-14);
  CHECK(rows[0].residual < 1e-40);
  CHECK(rows[1].residual < 1e-40);
}
