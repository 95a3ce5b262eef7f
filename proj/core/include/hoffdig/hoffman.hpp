#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hoffdig/digraph.hpp"
#include "hoffdig/rational.hpp"

namespace hoffdig {

/// Which precondition of the coclique bound failed.
enum class HoffmanViolation {
  empty,
  not_strongly_connected,
  not_regular,
  zero_valency,
  not_normal,
  not_coclique,
  not_partition,
};

const char* to_string(HoffmanViolation v);

class HoffmanError : public std::invalid_argument {
 public:
  HoffmanError(HoffmanViolation v, const std::string& what) : std::invalid_argument(what), violation_(v) {}
  HoffmanViolation violation() const { return violation_; }

 private:
  HoffmanViolation violation_;
};

/// Nearest p/q with 1 <= q <= max_den; empty when the best candidate is
/// farther than tol from x. Among equally close candidates the smallest q wins.
std::optional<Rational> snap_to_rational(double x, std::int64_t max_den, double tol = 1e-6);

/// The coclique bound n(-theta_min)/(k - theta_min).
///
/// theta_min is snapped to a rational with denominator <= 2n. When that
/// fails, exact is empty and only the floating value is meaningful.
struct HoffmanBound {
  std::size_t n = 0;
  std::size_t k = 0;
  double theta_min = 0.0;
  std::optional<Rational> theta_min_exact;
  double value = 0.0;
  std::optional<Rational> exact;
  // Exactly one eigenvalue has real part theta_min.
  bool theta_min_simple = false;

  bool approximate() const { return !exact.has_value(); }
};

/// Requires g strongly connected, k-regular with k >= 1, and normal.
/// Throws HoffmanError naming the first violated precondition.
HoffmanBound hoffman_bound(const Digraph& g);

struct HoffmanReport {
  HoffmanBound bound;
  std::size_t coclique_size = 0;
  bool attains = false;
  // Only evaluated when attains; -2 theta_min and -theta_min respectively.
  bool condition_i = false;
  bool condition_ii_applicable = false;
  bool condition_ii = false;
  std::optional<std::size_t> condition_i_witness;   // first x outside C that fails (i)
  std::optional<std::size_t> condition_ii_witness;  // first x outside C that fails (ii)
};

/// Throws HoffmanError if c is not a coclique or the bound preconditions fail.
HoffmanReport hoffman_report(const Digraph& g, std::span<const std::size_t> c);
/// Same, reusing an already computed bound for g.
HoffmanReport hoffman_report(const Digraph& g, const HoffmanBound& bound, std::span<const std::size_t> c);

struct PartResult {
  std::size_t size = 0;
  bool coclique = false;
  bool attains = false;
};

struct PartitionReport {
  HoffmanBound bound;
  std::vector<PartResult> parts;
  std::optional<std::size_t> first_failing;
  bool ok() const { return !first_failing.has_value(); }
};

/// Every part must be a coclique attaining the bound. Throws HoffmanError
/// with not_partition when parts do not partition the vertex set.
PartitionReport verify_coclique_partition(const Digraph& g, const std::vector<VertexSet>& parts);

/// Consecutive blocks {0..b-1}, {b..2b-1}, ...
std::vector<VertexSet> consecutive_blocks(std::size_t n, std::size_t block);

}  // namespace hoffdig
