#pragma once

#include <cmath>
#include <vector>

#include "qosc/deformation.hpp"
#include "qosc/matrix.hpp"

namespace qosc {

/// Truncated number-state representation on |0>..|D-1>.  The annihilator a
/// lives on the first superdiagonal with a[n-1][n] = sqrt(n q^(n-1)); the
/// creator is its transpose (all entries are real).  Operator identities of
/// the untruncated algebra hold on the "safe zone" |0>..|D-2>; the top level
/// unavoidably picks up a truncation defect.
struct FockRep {
  int dim = 0;
  DeformationParameter q;
  Matrix a;
  Matrix a_dag;
  Matrix n_op;
};

FockRep build_fock_rep(int dim, const DeformationParameter& q);

struct RelationResiduals {
  double deformed_commutation;  // a a+ - q a+ a - q^N, rows/cols 0..D-2
  double number_commutators;    // [N, a] + a and [N, a+] - a+, all entries
  double number_link;           // a+ a - N q^(N-1), all entries
};

RelationResiduals check_defining_relations(const FockRep& rep);

/// Full defect matrix a a+ - q a+ a - q^N.  Everything except the top
/// corner entry (D-1, D-1) vanishes; that corner holds the dropped ladder
/// term, magnitude D q^(D-1).
Matrix defining_relation_defect(const FockRep& rep);

/// H = (a a+ + a+ a)/2.  Diagonal entry n equals the level energy for
/// n <= D-2; the top entry is polluted by truncation.
Matrix hamiltonian(const FockRep& rep);

/// Eigenvalue of [a, a+] on |n>: q^n (1 + n (1 - 1/q)).  With the standard
/// X = (a + a+)/sqrt(2), P = i (a+ - a)/sqrt(2) one has [X, P] = i [a, a+],
/// so these are also the eigenvalues of -i [X, P].
template <typename Real>
Real xp_commutator_value(int n, const Deformation<Real>& q) {
  using std::pow;
  if (n < 0) throw std::invalid_argument("xp_commutator_value: n must be nonnegative");
  if (n == 0) return Real(1);
  const Real qv = q.value();
  return pow(qv, n - 1) * (Real(n + 1) * qv - Real(n));
}

/// The parameter value q = m/(m+1) at which [X, P] vanishes on the single
/// state |m> and nowhere else.
double classical_q(int m);

struct PhaseSpaceOps {
  Matrix x;       // (a + a+)/sqrt(2)
  Matrix p_imag;  // P = i * p_imag with p_imag = (a+ - a)/sqrt(2), real antisymmetric
  std::vector<double> commutator_diag;  // [a, a+] eigenvalues; top entry polluted
};

PhaseSpaceOps build_phase_space(const FockRep& rep);

struct CommutatorZero {
  int sign_changes;  // over the panel scan of q on (0, 1)
  double root;       // refined location of the single zero
};

/// Panel scan of q -> [a, a+] eigenvalue on |m| over (0, 1), plus a bisection
/// refinement of the zero it brackets.
CommutatorZero scan_commutator_zero(int m, int panels = 64);

}  // namespace qosc
