#include "qosc/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "qosc/fock.hpp"

namespace qosc {

SpinModule build_spin_module(int two_j, const DeformationParameter& q) {
  if (two_j < 0) throw std::invalid_argument("build_spin_module: 2j must be nonnegative");
  const int dim = two_j + 1;
  SpinModule mod{two_j, q, dim, Matrix(dim, dim), Matrix(dim, dim), Matrix(dim, dim),
                 Matrix(dim, dim)};
  // i indexes m = -j + i; the prefactor q^(j-1/2) is shared by J+ and J-
  for (int i = 0; i + 1 < dim; ++i) {
    const int two_m = -two_j + 2 * i;
    const double prefactor = std::pow(q.value(), 0.5 * (two_j - 1));
    mod.j_plus(i + 1, i) =
        prefactor * std::sqrt(0.25 * (two_j - two_m) * (two_j + two_m + 2));
  }
  for (int i = 1; i < dim; ++i) {
    const int two_m = -two_j + 2 * i;
    const double prefactor = std::pow(q.value(), 0.5 * (two_j - 1));
    mod.j_minus(i - 1, i) =
        prefactor * std::sqrt(0.25 * (two_j + two_m) * (two_j - two_m + 2));
  }
  for (int i = 0; i < dim; ++i) {
    mod.j0(i, i) = 0.5 * (-two_j + 2 * i);
    mod.j3(i, i) = 0.5 * two_j;
  }
  return mod;
}

double check_spin_relations(const SpinModule& module) {
  const double deform = std::pow(module.q.value(), module.two_j - 1);  // q^(2J3 - 1)
  double worst = 0.0;
  worst = std::max(worst, (commutator(module.j0, module.j_plus) - module.j_plus).max_abs());
  worst = std::max(worst, (commutator(module.j0, module.j_minus) + module.j_minus).max_abs());
  worst = std::max(worst, (commutator(module.j_plus, module.j_minus) -
                           module.j0.scaled(2.0 * deform))
                              .max_abs());
  worst = std::max(worst, commutator(module.j0, module.j3).max_abs());
  worst = std::max(worst, commutator(module.j_plus, module.j3).max_abs());
  worst = std::max(worst, commutator(module.j_minus, module.j3).max_abs());
  return worst;
}

double large_j_matrix_element(int two_j, int two_m, const DeformationParameter& q) {
  if (two_j < 0) throw std::invalid_argument("large_j_matrix_element: 2j must be nonnegative");
  if (std::abs(two_m) > two_j)
    throw std::invalid_argument("large_j_matrix_element: |m| must not exceed j");
  if ((two_j - two_m) % 2 != 0)
    throw std::invalid_argument("large_j_matrix_element: j and m must differ by an integer");
  return std::pow(q.value(), 0.5 * (two_j - 1)) *
         std::sqrt(0.25 * (two_j - two_m) * (two_j + two_m + 2));
}

TwoModeRealization build_two_mode(int mode_dim, const DeformationParameter& q) {
  if (mode_dim < 2) throw std::invalid_argument("build_two_mode: mode_dim must be at least 2");
  const FockRep mode = build_fock_rep(mode_dim, q);
  TwoModeRealization real{mode_dim, q, {}, {}, {}, {}};
  real.j_plus = Matrix::kron(mode.a_dag, mode.a);
  real.j_minus = Matrix::kron(mode.a, mode.a_dag);
  const Matrix n1 = Matrix::kron(mode.n_op, Matrix::identity(mode_dim));
  const Matrix n2 = Matrix::kron(Matrix::identity(mode_dim), mode.n_op);
  real.j0 = (n1 - n2).scaled(0.5);
  real.j3 = (n1 + n2).scaled(0.5);
  return real;
}

namespace {

double max_abs_on_safe_zone(const Matrix& m, int mode_dim) {
  // states with n1 + n2 <= D - 2
  double worst = 0.0;
  for (int r1 = 0; r1 < mode_dim; ++r1)
    for (int r2 = 0; r1 + r2 <= mode_dim - 2; ++r2)
      for (int c1 = 0; c1 < mode_dim; ++c1)
        for (int c2 = 0; c1 + c2 <= mode_dim - 2; ++c2)
          worst = std::max(worst, std::abs(m(r1 * mode_dim + r2, c1 * mode_dim + c2)));
  return worst;
}

}  // namespace

double check_two_mode_relations(const TwoModeRealization& realization) {
  const int dim = realization.mode_dim;
  // q^(2J3 - 1) is diagonal: entry q^(n1 + n2 - 1)
  std::vector<double> deform(static_cast<std::size_t>(dim) * dim);
  for (int n1 = 0; n1 < dim; ++n1)
    for (int n2 = 0; n2 < dim; ++n2)
      deform[static_cast<std::size_t>(n1) * dim + n2] =
          std::pow(realization.q.value(), n1 + n2 - 1);
  const Matrix deform_diag = Matrix::diagonal(deform);

  double worst = 0.0;
  worst = std::max(worst, max_abs_on_safe_zone(commutator(realization.j0, realization.j_plus) -
                                                   realization.j_plus,
                                               dim));
  worst = std::max(worst, max_abs_on_safe_zone(commutator(realization.j0, realization.j_minus) +
                                                   realization.j_minus,
                                               dim));
  worst = std::max(
      worst, max_abs_on_safe_zone(commutator(realization.j_plus, realization.j_minus) -
                                      (deform_diag * realization.j0).scaled(2.0),
                                  dim));
  worst = std::max(worst, max_abs_on_safe_zone(commutator(realization.j0, realization.j3), dim));
  worst = std::max(worst,
                   max_abs_on_safe_zone(commutator(realization.j_plus, realization.j3), dim));
  worst = std::max(worst,
                   max_abs_on_safe_zone(commutator(realization.j_minus, realization.j3), dim));
  return worst;
}

Matrix two_mode_block(const Matrix& op, int mode_dim, int two_j) {
  if (two_j < 0 || two_j > mode_dim - 1)
    throw std::invalid_argument("two_mode_block: need 0 <= 2j <= D - 1");
  if (op.rows() != mode_dim * mode_dim || op.cols() != mode_dim * mode_dim)
    throw std::invalid_argument("two_mode_block: operator shape mismatch");
  const int dim = two_j + 1;
  Matrix block(dim, dim);
  const auto state = [mode_dim, two_j](int i) {
    return i * mode_dim + (two_j - i);  // |n1 = i, n2 = 2j - i>
  };
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) block(r, c) = op(state(r), state(c));
  return block;
}

}  // namespace qosc
