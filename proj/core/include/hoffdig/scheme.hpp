#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hoffdig/check.hpp"
#include "hoffdig/digraph.hpp"
#include "hoffdig/gauss.hpp"
#include "hoffdig/int_matrix.hpp"

namespace hoffdig {

class SchemeError : public std::invalid_argument {
 public:
  SchemeError(std::string identity, const std::string& what)
      : std::invalid_argument(what), identity_(std::move(identity)) {}
  const std::string& identity() const { return identity_; }

 private:
  std::string identity_;
};

/// A commutative association scheme A_0..A_d on n points with its
/// intersection numbers p_ij^k. Only verify_scheme() creates one.
class AssociationScheme {
 public:
  std::size_t n() const { return n_; }
  std::size_t d() const { return mats_.size() - 1; }
  std::size_t classes() const { return d() + 1; }
  const std::vector<IntMatrix>& mats() const { return mats_; }
  const IntMatrix& mat(std::size_t i) const { return mats_.at(i); }
  bool symmetric() const { return symmetric_; }
  /// j with A_i^T = A_j.
  std::size_t transpose_of(std::size_t i) const { return transpose_.at(i); }
  std::int64_t p(std::size_t i, std::size_t j, std::size_t k) const;
  std::int64_t valency(std::size_t i) const { return p(i, transpose_of(i), 0); }
  /// relation index of cell (x, y)
  std::size_t relation(std::size_t x, std::size_t y) const { return relation_[x * n_ + y]; }

 private:
  friend AssociationScheme verify_scheme(const std::vector<IntMatrix>& mats);

  std::size_t n_ = 0;
  std::vector<IntMatrix> mats_;
  bool symmetric_ = false;
  std::vector<std::size_t> transpose_;
  std::vector<std::int64_t> p_;  // (d+1)^3, index (i*(d+1)+j)*(d+1)+k
  std::vector<std::size_t> relation_;
};

/// Runs every axiom and reports each one; later axioms that cannot be
/// evaluated after a structural failure are reported as failed with a reason.
std::vector<IdentityCheck> check_scheme_axioms(const std::vector<IntMatrix>& mats);

/// All five axioms verified exactly. p_ij^k is read at one support cell of
/// A_k and then checked to be constant over the whole support. Throws
/// SchemeError naming the first failing axiom with a witness cell.
AssociationScheme verify_scheme(const std::vector<IntMatrix>& mats);

/// B_i = (p_ij^k) with rows indexed by j and columns by k.
IntMatrix intersection_matrix(const AssociationScheme& s, std::size_t i);

Digraph relation_graph(const AssociationScheme& s, std::size_t i);

/// Verified first and second eigenmatrices with the primitive idempotents
/// E_j = (1/n) sum_i Q_ij A_i.
struct EigenSystem {
  GaussMatrix P;
  GaussMatrix Q;
  std::vector<GaussMatrix> idempotents;
};

/// Every identity, without short-circuiting.
std::vector<IdentityCheck> check_eigensystem(const AssociationScheme& s, const GaussMatrix& P, const GaussMatrix& Q);

/// Checks PQ = nI, E_0 = J/n, E_i E_j = delta_ij E_i, sum E_i = I and
/// A_j = sum_i P_ij E_i in exact Gaussian-rational arithmetic. Throws
/// SchemeError on the first violated identity.
EigenSystem verify_eigensystem(const AssociationScheme& s, const GaussMatrix& P, const GaussMatrix& Q);

/// Permutation perm with permute_rows(P, perm) * Q == n I, if one exists.
/// Lets a P whose rows follow a different eigenspace labelling than Q be
/// matched exactly.
std::optional<std::vector<std::size_t>> align_eigenmatrix_rows(const GaussMatrix& P, const GaussMatrix& Q,
                                                               std::int64_t n);

using ComplexMatrix = std::vector<std::vector<std::complex<double>>>;

struct NumericEigenmatrices {
  ComplexMatrix P;
  ComplexMatrix Q;
  int attempts = 0;
};

class EigenComputationError : public std::runtime_error {
 public:
  explicit EigenComputationError(const std::string& what) : std::runtime_error(what) {}
};

/// Floating-point eigenmatrices from the intersection matrices: exact
/// characteristic polynomial of a generic integer combination (Faddeev-LeVerrier),
/// roots by Durand-Kerner, common eigenvectors by complex elimination.
/// Rows are ordered by descending real part of the A_1 column, then by
/// descending imaginary part, then lexicographically over later columns.
/// The seed only affects retries after a degenerate combination.
NumericEigenmatrices compute_eigenmatrices(const AssociationScheme& s, std::uint64_t seed = 0);

/// Integer characteristic polynomial det(xI - M), coefficients from x^0 up to x^n.
std::vector<std::int64_t> characteristic_polynomial(const IntMatrix& m);

/// Roots of a monic-after-scaling polynomial given low-to-high coefficients.
std::vector<std::complex<double>> polynomial_roots(const std::vector<std::int64_t>& coeffs);

/// Permutation perm with |numeric[r] - exact[perm[r]]| <= tol entrywise, if any.
std::optional<std::vector<std::size_t>> match_rows(const ComplexMatrix& numeric, const GaussMatrix& exact,
                                                   double tol = 1e-8);

}  // namespace hoffdig
