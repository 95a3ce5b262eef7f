#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hoffdig/gauss.hpp"
#include "hoffdig/hadamard.hpp"
#include "hoffdig/int_matrix.hpp"
#include "hoffdig/rational.hpp"
#include "hoffdig/scheme.hpp"

namespace hoffdig {

/// C_i = h_i^T h_i for the rows h_i of a normalized Hadamard matrix.
/// mats[0] is C_1 = J_n.
struct RowProjectors {
  std::size_t n = 0;
  std::vector<IntMatrix> mats;
};

/// Every projector identity, each listed separately.
std::vector<IdentityCheck> check_row_projectors(const RowProjectors& p);

/// Throws std::invalid_argument for a non-Hadamard or non-normalized input,
/// and std::logic_error if any projector identity fails.
RowProjectors row_projectors(const SignMatrix& h);

/// l(i,j) = ((i + j) mod q) + 2, a symmetric Latin square on {2, ..., q+1}.
IntMatrix addition_latin(std::size_t q);

enum class BiangularVariant { symmetric, skew };

const char* to_string(BiangularVariant v);
/// "symmetric" or "skew"; throws std::invalid_argument otherwise.
BiangularVariant parse_biangular_variant(std::string_view text);

struct BiangularMatrix {
  std::size_t n = 0;
  BiangularVariant variant = BiangularVariant::symmetric;
  IntMatrix m;  // order n(n-1), (n-1) x (n-1) grid of n x n blocks
};

/// M M^T = n(n-1) I - n I_{n-1} (x) (J_n - I_n).
bool satisfies_gram_identity(const BiangularMatrix& b);
/// M = M^T for the symmetric variant; M_ij^T = -M_ji off the block diagonal
/// and symmetric diagonal blocks for the skew variant.
bool has_variant_symmetry(const BiangularMatrix& b);

/// Distinct normalized |<u,v>| / (n(n-1)) values within row classes and across them.
struct InnerProductMagnitudes {
  std::vector<Rational> same_class;
  std::vector<Rational> cross_class;
};
InnerProductMagnitudes inner_product_magnitudes(const BiangularMatrix& b);

/// Block (i,j) is C_{l(i,j)}; the skew variant negates blocks below the diagonal.
/// The input is normalized first. Throws std::logic_error if verification fails.
BiangularMatrix biangular(const SignMatrix& h, BiangularVariant variant);
inline BiangularMatrix biangular_symmetric(const SignMatrix& h) { return biangular(h, BiangularVariant::symmetric); }
inline BiangularMatrix biangular_skew(const SignMatrix& h) { return biangular(h, BiangularVariant::skew); }

/// A_0 = I; off-diagonal blocks split into A_1 (+1) and A_2 (-1), diagonal
/// blocks without the main diagonal into A_3 (+1) and A_4 (-1).
std::vector<IntMatrix> biangular_relations(const BiangularMatrix& b);

/// The relations above verified as a class-4 scheme with the symmetry pattern
/// of the variant. Throws SchemeError.
AssociationScheme scheme_from_biangular(const BiangularMatrix& b);

/// Closed-form tables for the class-4 schemes. P follows the displayed row
/// order; for the skew variant it has to be row-aligned to Q before use
/// (see align_eigenmatrix_rows).
struct Class4Expected {
  std::vector<IntMatrix> intersection;  // B_0..B_4
  GaussMatrix P;
  GaussMatrix Q;
};

/// Requires n >= 4 and 4 | n. Throws std::invalid_argument otherwise.
Class4Expected class4_expected(std::int64_t n, BiangularVariant variant);

}  // namespace hoffdig
