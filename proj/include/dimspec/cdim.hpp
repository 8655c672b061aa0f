#pragma once

#include <utility>
#include <vector>

#include "dimspec/eigen.hpp"
#include "dimspec/matrix.hpp"

namespace dimspec {

/// The 2x2 quotient [[gamma1, delta*sqrt(r*s)], [delta*sqrt(r*s), gamma2]] of
/// the block matrix C(H) of K_{M,S} = mK2 v (s isolated vertices), r = 2m.
///
/// gamma1/gamma2 are the row sums of the diagonal blocks C1/C2:
///   Adjacency          C1 = A(mK2),        C2 = 0       -> (1, 0),     delta = +1
///   Laplacian          C1 = L(mK2) + s I,  C2 = r I     -> (s, r),     delta = -1
///   SignlessLaplacian  C1 = Q(mK2) + s I,  C2 = r I     -> (s + 2, r), delta = +1
/// The Laplacian diagonal is the shifted one. The unshifted block constants
/// (-s, -r) never appear in B; its eigenvalues are then {n, 0}.
struct QuotientMatrix {
  MatrixKind kind = MatrixKind::Adjacency;
  double gamma1 = 0.0;
  double gamma2 = 0.0;
  double delta = 1.0;
  int r = 0;
  int s = 0;

  double off_diagonal() const;
  SymMatrix as_matrix() const;
};

/// Throws InputError if m < 1 or s < 1.
QuotientMatrix quotient_matrix(MatrixKind kind, int m, int s);

/// (theta1, theta2) with theta1 >= theta2, from the explicit radical formulas.
std::pair<double, double> quotient_eigenvalues(const QuotientMatrix& b);

/// x such that (1, x) is an eigenvector of B for theta (read off B's first row).
double quotient_eigenvector_tail(const QuotientMatrix& b, double theta);

/// (j_r, sqrt(r/s) * x * j_s): an eigenvector of C(H) whenever (1, x) is one of B.
std::vector<double> lift_eigenvector(double theta, double x, int r, int s);

/// Closed-form spectrum of K_{M,S} with |M| = m on n vertices. Empty groups are
/// dropped and coinciding values merged. Throws InputError if n <= 2m or m < 1.
Spectrum cdim_spectrum(MatrixKind kind, int n, int m);

/// Closed-form spectral radius and principal eigenvector (unit leading block).
PrincipalPair cdim_principal(MatrixKind kind, int n, int m);

/// Largest index and signless Laplacian index attainable by a graph of order
/// n with a DIM of size m; K_{M,S} attains both.
struct RadiusUpperBounds {
  double adjacency = 0.0;
  double signless = 0.0;
};
RadiusUpperBounds cdim_radius_upper_bounds(int n, int m);

}  // namespace dimspec
