#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hoffdig/digraph.hpp"
#include "hoffdig/int_matrix.hpp"

namespace hoffdig {

/// Eigenvalues of a real symmetric matrix from cyclic Jacobi rotations.
struct SymmetricSpectrum {
  std::vector<double> eigenvalues;  // ascending
  double residual = 0.0;            // max |off-diagonal| when the sweeps stopped
  int sweeps = 0;
};

struct JacobiOptions {
  double relative_tolerance = 1e-12;  // against the Frobenius norm
  int max_sweeps = 100;
};

class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

class NotNormalError : public std::invalid_argument {
 public:
  explicit NotNormalError(const std::string& what) : std::invalid_argument(what) {}
};

/// Throws std::invalid_argument unless m is exactly symmetric.
SymmetricSpectrum jacobi_eigenvalues(const IntMatrix& m, const JacobiOptions& opts = {});

/// Row-major n x n symmetric input; symmetry is the caller's responsibility.
SymmetricSpectrum jacobi_eigenvalues(std::span<const double> m, std::size_t n, const JacobiOptions& opts = {});

/// Exact test of A A^T == A^T A. Throws DimensionError for a non-square input.
bool is_normal(const IntMatrix& m);

/// Real parts of the eigenvalues of a normal digraph, i.e. the spectrum of (A + A^T) / 2.
/// Throws NotNormalError.
SymmetricSpectrum re_spectrum(const Digraph& g);

/// Minimum real part over the adjacency eigenvalues. 0 for an edgeless digraph.
/// Throws NotNormalError.
double theta_min(const Digraph& g);

struct EigenvalueCluster {
  double value;
  std::size_t multiplicity;
};

/// Groups sorted values whose consecutive gaps are at most tol.
std::vector<EigenvalueCluster> cluster_values(std::span<const double> sorted, double tol = 1e-6);

/// True iff exactly one eigenvalue (as a value) of the normal adjacency
/// matrix has real part theta_min, i.e. that eigenvalue is real.
///
/// For normal A write S = (A+A^T)/2, T = (A-A^T)/2. They commute, so
/// Z = S + T^T T acts as Re(t) + Im(t)^2 on each common eigenvector. The
/// eigenvalues at Re = theta_min are all real iff theta_min keeps the same
/// multiplicity in Z as in S.
bool min_real_part_is_simple(const Digraph& g, double tol = 1e-6);

}  // namespace hoffdig
