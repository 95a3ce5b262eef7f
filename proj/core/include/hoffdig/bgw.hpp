#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hoffdig/gauss.hpp"
#include "hoffdig/hadamard.hpp"
#include "hoffdig/int_matrix.hpp"
#include "hoffdig/io.hpp"
#include "hoffdig/scheme.hpp"

namespace hoffdig {

class BgwError : public std::invalid_argument {
 public:
  BgwError(std::string identity, const std::string& what)
      : std::invalid_argument(what), identity_(std::move(identity)) {}
  const std::string& identity() const { return identity_; }

 private:
  std::string identity_;
};

/// Square matrix over the cyclic group C_m with a zero adjoined.
/// Entry 0 is the zero element and i in 1..m stands for g^i, so m is the identity.
class GroupRingMatrix {
 public:
  GroupRingMatrix() = default;
  /// Throws std::invalid_argument for a non-square table or an entry outside 0..m.
  GroupRingMatrix(std::int64_t group_order, IntMatrix entries);

  std::size_t size() const { return entries_.rows(); }
  std::int64_t group_order() const { return group_order_; }
  const IntMatrix& entries() const { return entries_; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return entries_(r, c); }
  bool is_zero(std::size_t r, std::size_t c) const { return entries_(r, c) == 0; }

  friend bool operator==(const GroupRingMatrix&, const GroupRingMatrix&) = default;

 private:
  std::int64_t group_order_ = 1;
  IntMatrix entries_;
};

GroupRingMatrix transpose(const GroupRingMatrix& w);

/// Skew BGW(10,9,8) over C_8 used for the order-160 example. The first row
/// carries the identity (8) and the first column g^4 = -1, which makes the
/// expansion skew-symmetric.
GroupRingMatrix w10();
/// The same table with g^1 across the first row instead of the identity.
/// It is a BGW(10,9,8) but its expansion is not skew-symmetric.
GroupRingMatrix w10_as_printed();

struct BgwCheck {
  bool ok = false;
  std::string witness;
  explicit operator bool() const { return ok; }
};

/// Row and column weights k, and for every pair of distinct rows the quotients
/// w_ir w_jr^{-1} over common nonzero positions cover C_m exactly lam/m times.
/// Column balance is checked by passing transpose(w).
BgwCheck is_bgw(const GroupRingMatrix& w, std::int64_t k, std::int64_t lam);

/// Order 4n^2: I_{2n} on the block superdiagonal and -I_{2n} in the bottom-left block.
IntMatrix negacirculant_generator(std::size_t n);
/// gen^i for 1 <= i <= 4n, where gen is a generator of order 4n^2.
IntMatrix rho(const IntMatrix& gen, std::int64_t i);
/// R_{2n} (x) I_{2n}.
IntMatrix r_matrix(std::size_t n);
/// Negacirculant block matrix with first block row (0, C_2, ..., C_{2n}) built
/// from the row projectors of the normalized input. Verified to commute with
/// the generator.
IntMatrix h_block(const SignMatrix& h2n);

/// Block (i,j) = H rho(gen, w_ij) R, zero where w_ij is the zero element.
IntMatrix expand(const GroupRingMatrix& w, const IntMatrix& h, const IntMatrix& gen, const IntMatrix& r);

struct TwinPair {
  IntMatrix a1;
  IntMatrix a2;
};

/// A_1 from the +1 entries, A_2 from the -1 entries. Throws BgwError unless
/// A_2 = A_1^T and A_1 is a DRAD.
TwinPair twin_split(const IntMatrix& g);

/// {I, A_1, A_2, A_3, A_4, A_5} with A_4 = I (x) (J_{2n} - I_{2n}),
/// A_5 = I (x) (J_{4n^2} - I_{2n} (x) J_{2n}) and A_3 the complement of the
/// others. Not verified; A_3 may contain entries outside {0,1} on bad input.
std::vector<IntMatrix> class5_relations(std::size_t n, const TwinPair& twins);

/// One product identity A_i A_j = sum_k coeffs[k] A_k shared by several (i,j).
struct ProductIdentity {
  std::string name;
  std::vector<std::pair<std::size_t, std::size_t>> products;
  std::vector<std::int64_t> coeffs;
};

struct Class5Expected {
  std::int64_t m = 0;  // 2n^2 - 2n + 1
  std::vector<ProductIdentity> identities;
  GaussMatrix P;
  GaussMatrix Q;
};

/// Intersection identities and eigenmatrices of the class-5 scheme for a given n.
Class5Expected class5_expected(std::int64_t n);
/// A variant of the eigenmatrices with four cells differing from
/// class5_expected. Kept for comparison only.
Class5Expected class5_displayed(std::int64_t n);

struct Class5Construction {
  std::size_t n = 0;
  IntMatrix g;
  TwinPair twins;
  AssociationScheme scheme;
};

/// Builds G from (w, h2n), splits it into twins and adds A_4, A_5 and the
/// complement A_3. Verifies the BGW parameters, skewness of G, the scheme
/// axioms, all twelve product identities and A_1 + A_2 + A_3 = J - I (x) J.
/// Throws BgwError or SchemeError naming the failed identity.
Class5Construction build_class5(std::size_t n, const GroupRingMatrix& w, const SignMatrix& h2n);
inline AssociationScheme class5_scheme(std::size_t n, const GroupRingMatrix& w, const SignMatrix& h2n) {
  return build_class5(n, w, h2n).scheme;
}

/// The order-160 instance: n = 2, w10() and the Sylvester matrix of order 4.
Class5Construction drad160();

/// Each of the twelve product identities checked exactly on the matrices.
std::vector<IdentityCheck> check_class5_identities(const AssociationScheme& s, std::int64_t n);
/// A_2 = A_1^T, A_1 + A_2 + A_3 = J - I (x) J_{4n^2}, A_4 + A_5 = I (x) (J - I).
std::vector<IdentityCheck> check_class5_structure(const AssociationScheme& s, std::int64_t n);

GroupRingMatrix from_table(const io::Bgw1Table& t);
io::Bgw1Table to_table(const GroupRingMatrix& w);

}  // namespace hoffdig
