#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hoffdig/digraph.hpp"
#include "hoffdig/rational.hpp"

namespace hoffdig {

/// Parameters (n, k, lambda, mu) of a normally regular digraph:
/// A A^T = k I + lambda (A + A^T) + mu (J - I - A - A^T).
struct NrdParams {
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::int64_t lambda = 0;
  std::int64_t mu = 0;
  friend bool operator==(const NrdParams&, const NrdParams&) = default;
};

/// Doubly regular asymmetric digraph parameters (v, k, lambda), i.e. lambda == mu.
struct DradParams {
  std::int64_t v = 0;
  std::int64_t k = 0;
  std::int64_t lambda = 0;
  friend bool operator==(const DradParams&, const DradParams&) = default;
};

/// Outcome of the normally-regular test, with the first failing cell when
/// the defining identity breaks.
struct NrdCheck {
  std::optional<NrdParams> params;
  std::string failure;  // empty on success
  std::optional<std::size_t> row;
  std::optional<std::size_t> col;
};

NrdCheck check_nrd(const Digraph& g);
std::optional<NrdParams> nrd_parameters(const Digraph& g);
std::optional<DradParams> is_drad(const Digraph& g);

/// One eigenvalue family in closed form: real_part +- sqrt(radicand).
/// A negative radicand means a complex-conjugate pair.
struct AlgebraicEigenvalue {
  enum class Kind { real, imaginary_pair, shifted_root_pair };
  Kind kind = Kind::real;
  Rational real_part;
  Rational radicand;

  /// Real parts contributed by this family (one value for real and complex
  /// pairs, two for real root pairs).
  std::vector<double> real_parts() const;
  std::string to_string() const;
};

/// Eigenvalue values of A when A + A^T = J_n - I_r (x) J_{n/r}:
/// k, +-sqrt(-k + mu), and -n/(2r) +- sqrt(k - mu + (mu - lambda) n / r - n^2/(4 r^2)).
/// Values only; multiplicities are not predicted. Throws std::invalid_argument
/// when r does not divide n.
std::vector<AlgebraicEigenvalue> closed_form_spectrum(const NrdParams& params, std::int64_t r);

/// Exact test of A + A^T == J_n - I_r (x) J_{n/r}.
bool has_block_complement_symmetrization(const Digraph& g, std::size_t r);

/// Smallest r >= 1 dividing n with the structure above, if any.
std::optional<std::size_t> find_block_complement_divisor(const Digraph& g);

}  // namespace hoffdig
