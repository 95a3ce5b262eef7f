#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "hoffdig/check.hpp"
#include "hoffdig/digraph.hpp"
#include "hoffdig/int_matrix.hpp"

namespace hoffdig {

/// Square matrix with every entry +1 or -1.
class SignMatrix {
 public:
  SignMatrix() = default;
  /// Throws std::invalid_argument unless m is square with entries in {+1,-1}.
  explicit SignMatrix(IntMatrix m);

  std::size_t order() const { return m_.rows(); }
  const IntMatrix& matrix() const { return m_; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return m_(r, c); }

  friend bool operator==(const SignMatrix&, const SignMatrix&) = default;

 private:
  IntMatrix m_;
};

/// H H^T = n I.
bool is_hadamard(const SignMatrix& h);
bool is_hadamard(const IntMatrix& h);

/// Entries, H H^T = nI and the admissible-order sanity check, each reported.
std::vector<IdentityCheck> check_hadamard(const IntMatrix& h);
/// check_hadamard plus the Bush-type block conditions, and skewness of
/// H - I (x) J when skew is set.
std::vector<IdentityCheck> check_bush_type(const IntMatrix& h, bool skew);

/// Hadamard orders are 1, 2 or multiples of 4.
bool is_admissible_hadamard_order(std::size_t m);

/// Sylvester matrix of order 2^k.
SignMatrix sylvester(unsigned k);

/// Row and column sign flips making the first row and column all ones.
/// Throws std::invalid_argument for a non-Hadamard input.
SignMatrix normalize(const SignMatrix& h);

/// A sign matrix of order (2n)^2 viewed as a 2n x 2n grid of 2n x 2n blocks.
class BlockPartitionedHadamard {
 public:
  /// Throws std::invalid_argument unless the order is (2n)^2 for some n >= 1.
  explicit BlockPartitionedHadamard(SignMatrix base);

  const SignMatrix& base() const { return base_; }
  std::size_t block() const { return block_; }      // 2n
  std::size_t half_block() const { return block_ / 2; }  // n
  IntMatrix block_at(std::size_t i, std::size_t j) const;

  friend bool operator==(const BlockPartitionedHadamard&, const BlockPartitionedHadamard&) = default;

 private:
  SignMatrix base_;
  std::size_t block_ = 0;
};

/// Hadamard, diagonal blocks J_{2n}, off-diagonal blocks with zero row and column sums.
bool is_bush_type(const BlockPartitionedHadamard& h);
/// Bush-type with H - I_{2n} (x) J_{2n} skew-symmetric.
bool is_skew_bush_type(const BlockPartitionedHadamard& h);

/// Order-4 skew-Bush-type matrix whose digraph is the 4-cycle 0->2->1->3->0.
BlockPartitionedHadamard order4_skew_bush();

/// Skew-Bush-type matrix of order 4n^2 from a Hadamard matrix of order 2n:
/// off-diagonal block (i,j), i<j, is +C_{f(i,j)} and block (j,i) is -C_{f(i,j)},
/// where C_s are the row projectors of the normalized input and f is the
/// round-robin one-factorization of K_{2n} labelled by 2..2n.
BlockPartitionedHadamard skew_bush_from_hadamard(const SignMatrix& h2n);

class ConversionError : public std::invalid_argument {
 public:
  explicit ConversionError(const std::string& what) : std::invalid_argument(what) {}
};

struct DigraphWithPartition {
  Digraph digraph;
  std::vector<VertexSet> parts;
};

/// A = (J - H)/2, which is a DRAD(4n^2, 2n^2 - n, n^2 - n) whose diagonal
/// blocks are 2n cocliques of size 2n. Both facts are verified.
DigraphWithPartition skew_bush_to_drad(const BlockPartitionedHadamard& h);

/// Reorders the vertices part by part (ascending inside a part) and returns
/// H = A^T - A + I_{2n} (x) J_{2n}, verified to be skew-Bush-type. This inverts
/// skew_bush_to_drad exactly; A - A^T + I (x) J would give H^T instead.
BlockPartitionedHadamard drad_to_skew_bush(const Digraph& g, const std::vector<VertexSet>& parts);

}  // namespace hoffdig
