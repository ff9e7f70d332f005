#include "qosc/fock.hpp"

#include <algorithm>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "qosc/rootfind.hpp"
#include "qosc/spectrum.hpp"

namespace qosc {

FockRep build_fock_rep(int dim, const DeformationParameter& q) {
  if (dim < 2) throw std::invalid_argument("build_fock_rep: dim must be at least 2");
  FockRep rep{dim, q, Matrix(dim, dim), Matrix(dim, dim), Matrix(dim, dim)};
  for (int n = 1; n < dim; ++n)
    rep.a(n - 1, n) = std::sqrt(n * std::pow(q.value(), n - 1));
  rep.a_dag = rep.a.transpose();
  for (int n = 0; n < dim; ++n) rep.n_op(n, n) = n;
  return rep;
}

namespace {

Matrix power_of_q_diag(const FockRep& rep, int shift) {
  // diag(q^(n + shift)), n = 0..D-1
  std::vector<double> d(static_cast<std::size_t>(rep.dim));
  for (int n = 0; n < rep.dim; ++n)
    d[static_cast<std::size_t>(n)] = std::pow(rep.q.value(), n + shift);
  return Matrix::diagonal(d);
}

double max_abs_on_block(const Matrix& m, int limit) {
  double worst = 0.0;
  for (int i = 0; i < limit; ++i)
    for (int j = 0; j < limit; ++j) worst = std::max(worst, std::abs(m(i, j)));
  return worst;
}

}  // namespace

Matrix defining_relation_defect(const FockRep& rep) {
  return rep.a * rep.a_dag - (rep.a_dag * rep.a).scaled(rep.q.value()) -
         power_of_q_diag(rep, 0);
}

RelationResiduals check_defining_relations(const FockRep& rep) {
  RelationResiduals res{};
  res.deformed_commutation = max_abs_on_block(defining_relation_defect(rep), rep.dim - 1);

  // N is diagonal, so [N, M] acts entrywise by the level difference; keeping
  // the integer weight exact avoids i*v - j*v rounding in the residual
  double number_residual = 0.0;
  for (int i = 0; i < rep.dim; ++i)
    for (int j = 0; j < rep.dim; ++j) {
      const double weight = rep.n_op(i, i) - rep.n_op(j, j);
      number_residual = std::max(number_residual,
                                 std::abs((weight + 1.0) * rep.a(i, j)));
      number_residual = std::max(number_residual,
                                 std::abs((weight - 1.0) * rep.a_dag(i, j)));
    }
  res.number_commutators = number_residual;

  // N q^(N-1) = diag(n q^(n-1)); the n = 0 entry is 0 regardless of q
  std::vector<double> link(static_cast<std::size_t>(rep.dim), 0.0);
  for (int n = 1; n < rep.dim; ++n)
    link[static_cast<std::size_t>(n)] = n * std::pow(rep.q.value(), n - 1);
  res.number_link = (rep.a_dag * rep.a - Matrix::diagonal(link)).max_abs();
  return res;
}

Matrix hamiltonian(const FockRep& rep) {
  return (rep.a * rep.a_dag + rep.a_dag * rep.a).scaled(0.5);
}

double classical_q(int m) {
  if (m < 1)
    throw std::invalid_argument(
        "classical_q: requires m >= 1 (m = 0 would need q = 0)");
  return double(m) / (m + 1);
}

PhaseSpaceOps build_phase_space(const FockRep& rep) {
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  PhaseSpaceOps ops{(rep.a + rep.a_dag).scaled(inv_sqrt2),
                    (rep.a_dag - rep.a).scaled(inv_sqrt2),
                    {}};
  ops.commutator_diag = (rep.a * rep.a_dag - rep.a_dag * rep.a).diagonal_entries();
  return ops;
}

CommutatorZero scan_commutator_zero(int m, int panels) {
  if (m < 1) throw std::invalid_argument("scan_commutator_zero: requires m >= 1");
  if (panels < 2) throw std::invalid_argument("scan_commutator_zero: panels >= 2");
  const auto value = [m](double q) {
    return xp_commutator_value(m, DeformationParameter(q));
  };
  const double lo = 1e-9;
  const double hi = 1.0 - 1e-12;
  const double zero_eps = 64.0 * std::numeric_limits<double>::epsilon() * (m + 1.0);
  CommutatorZero result{};
  result.sign_changes = detail::count_sign_changes(value, lo, hi, panels, zero_eps);

  // bracket the zero: the eigenvalue is q^(m-1) ((m+1) q - m), negative
  // below m/(m+1) and positive above
  double a = lo, b = hi;
  detail::bisect(value, a, b, 1e-13);
  result.root = 0.5 * (a + b);
  return result;
}

}  // namespace qosc
