#pragma once

#include "qosc/deformation.hpp"
#include "qosc/matrix.hpp"

namespace qosc {

/// Spin-j representation of the deformed su(2)+u(1) algebra on the basis
/// |j,m>, m = -j..j in ascending order (so j0 = diag(-j, ..., j)).  Spin
/// labels are carried as twice-values (2j, 2m) to keep them exact.
///
/// Raising/lowering elements carry the deformation prefactor q^(j-1/2):
///   <j,m+1| J+ |j,m> = q^(j-1/2) sqrt((j-m)(j+m+1))
///   <j,m-1| J- |j,m> = q^(j-1/2) sqrt((j+m)(j-m+1))
/// and the algebra closes as [J0,J+-] = +-J+-, [J+,J-] = 2 J0 q^(2 J3 - 1),
/// with J3 = j central.
struct SpinModule {
  int two_j = 0;
  DeformationParameter q;
  int dim = 0;  // 2j + 1
  Matrix j_plus;
  Matrix j_minus;
  Matrix j0;
  Matrix j3;
};

SpinModule build_spin_module(int two_j, const DeformationParameter& q);

/// Max absolute entry over all commutation-relation defects of the module.
double check_spin_relations(const SpinModule& module);

/// Raising element <j,m+1| J+ |j,m> for twice-values (2j, 2m).
double large_j_matrix_element(int two_j, int two_m, const DeformationParameter& q);

/// The same generators realized on two commuting oscillator copies:
/// J+ = a1+ a2, J- = a2+ a1, J0 = (N1 - N2)/2, J3 = (N1 + N2)/2,
/// on the product space with basis |n1, n2> ordered lexicographically
/// (index n1 * D + n2).  The relations hold on total occupation <= D-2.
struct TwoModeRealization {
  int mode_dim = 0;
  DeformationParameter q;
  Matrix j_plus;
  Matrix j_minus;
  Matrix j0;
  Matrix j3;
};

TwoModeRealization build_two_mode(int mode_dim, const DeformationParameter& q);

/// Max absolute commutation-relation defect restricted to the safe zone
/// n1 + n2 <= D - 2.
double check_two_mode_relations(const TwoModeRealization& realization);

/// Block of a two-mode operator on the states with n1 + n2 = 2j, ordered by
/// m = (n1 - n2)/2 ascending, i.e. the basis map |j,m> = |n1=j+m, n2=j-m>.
Matrix two_mode_block(const Matrix& op, int mode_dim, int two_j);

}  // namespace qosc
