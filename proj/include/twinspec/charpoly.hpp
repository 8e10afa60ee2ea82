#pragma once

// Exact characteristic polynomials, adjugate entries and the twin-deletion
// identity  Φ(G) = (λ + a)·[Φ(G − v_ell) − h_{ell,k}].

#include <optional>

#include "twinspec/graph.hpp"
#include "twinspec/matrix.hpp"
#include "twinspec/polynomial.hpp"

namespace twinspec {

DenseMatrix<Integer> adjacency_matrix(const Graph& g);

/// det(λI - M) for a square integer matrix (Berkowitz).
Polynomial charpoly(const DenseMatrix<Integer>& m);
Polynomial charpoly(const Graph& g);

/// Fraction-free Gaussian elimination with row pivoting.
Integer bareiss_determinant(DenseMatrix<Integer> m);

/// h_{ell,k}: entry (ell, k) of adj(λI - A). Evaluates the (n-1)×(n-1)
/// minor at n consecutive integers around 0 and interpolates exactly.
Polynomial cofactor(const Graph& g, int ell, int k);

/// Φ(G)/(λ + a) + h_{ell,k}, which is Φ(G − v_ell) for twins.
Polynomial twin_deleted_charpoly(const Graph& g, const TwinPair& pair);

struct TwinIdentityReport {
  Polynomial phi_g;
  Polynomial phi_g_minus;  // computed directly from G − v_ell
  Polynomial h;
  std::optional<Polynomial> quotient;  // Φ(G)/(λ + a) when exact
  bool identity_holds = false;
  std::optional<Polynomial> discrepancy;  // Φ(G) - (λ+a)(Φ(G−v) - h) when nonzero
};

/// Both sides of the identity computed independently and compared exactly.
TwinIdentityReport verify_twin_identity(const Graph& g, const TwinPair& pair);

/// P^T A P with a π/4 rotation on the pair (after moving it to the front):
/// entries (0,0) = a, (1,1) = -a, row/column 1 otherwise zero, and √2·b
/// coupling row/column 0 to the rest.
DenseMatrix<double> givens_reduced(const Graph& g, const TwinPair& pair);

/// Monic m of least degree with m(A)·j = 0 (j the all-ones vector); its
/// roots are the main eigenvalues.
Polynomial main_polynomial(const Graph& g);

}  // namespace twinspec
