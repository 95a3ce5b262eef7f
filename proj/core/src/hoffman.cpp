#include "hoffdig/hoffman.hpp"

#include <cmath>

#include "hoffdig/spectral.hpp"

namespace hoffdig {

const char* to_string(HoffmanViolation v) {
  switch (v) {
    case HoffmanViolation::empty: return "empty digraph";
    case HoffmanViolation::not_strongly_connected: return "not strongly connected";
    case HoffmanViolation::not_regular: return "not regular";
    case HoffmanViolation::zero_valency: return "valency 0";
    case HoffmanViolation::not_normal: return "adjacency matrix not normal";
    case HoffmanViolation::not_coclique: return "vertex set is not a coclique";
    case HoffmanViolation::not_partition: return "parts do not partition the vertex set";
  }
  return "unknown";
}

std::optional<Rational> snap_to_rational(double x, std::int64_t max_den, double tol) {
  std::optional<Rational> best;
  double best_dist = tol;
  for (std::int64_t q = 1; q <= max_den; ++q) {
    const double p = std::round(x * static_cast<double>(q));
    const double dist = std::abs(x - p / static_cast<double>(q));
    // strict improvement keeps the smallest denominator on ties
    if (dist < best_dist - 1e-15 || (!best && dist <= tol)) {
      best = Rational(static_cast<std::int64_t>(p), q);
      best_dist = dist;
    }
  }
  return best;
}

HoffmanBound hoffman_bound(const Digraph& g) {
  if (g.order() == 0) throw HoffmanError(HoffmanViolation::empty, "coclique bound: empty digraph");
  if (!is_strongly_connected(g)) {
    throw HoffmanError(HoffmanViolation::not_strongly_connected, "coclique bound: digraph is not strongly connected");
  }
  auto k = regularity(g);
  if (!k) throw HoffmanError(HoffmanViolation::not_regular, "coclique bound: digraph is not regular");
  if (*k == 0) throw HoffmanError(HoffmanViolation::zero_valency, "coclique bound: valency is 0");
  if (!is_normal(g.adjacency())) {
    throw HoffmanError(HoffmanViolation::not_normal, "coclique bound: adjacency matrix is not normal");
  }

  HoffmanBound b;
  b.n = g.order();
  b.k = *k;
  b.theta_min = theta_min(g);
  const double n = static_cast<double>(b.n);
  b.value = n * (-b.theta_min) / (static_cast<double>(b.k) - b.theta_min);
  b.theta_min_simple = min_real_part_is_simple(g);
  b.theta_min_exact = snap_to_rational(b.theta_min, 2 * static_cast<std::int64_t>(b.n));
  if (b.theta_min_exact) {
    const Rational t = *b.theta_min_exact;
    b.exact = Rational(static_cast<std::int64_t>(b.n)) * (-t) / (Rational(static_cast<std::int64_t>(b.k)) - t);
  }
  return b;
}

namespace {

bool count_matches(std::size_t count, const HoffmanBound& b, std::int64_t factor) {
  // factor * (-theta_min), exact when available
  if (b.theta_min_exact) return Rational(static_cast<std::int64_t>(count)) == Rational(factor) * -*b.theta_min_exact;
  return std::abs(static_cast<double>(count) + static_cast<double>(factor) * b.theta_min) <= 1e-6;
}

bool size_attains(std::size_t size, const HoffmanBound& b) {
  if (b.exact) return Rational(static_cast<std::int64_t>(size)) == *b.exact;
  return std::abs(static_cast<double>(size) - b.value) <= 1e-6;
}

}  // namespace

HoffmanReport hoffman_report(const Digraph& g, std::span<const std::size_t> c) {
  return hoffman_report(g, hoffman_bound(g), c);
}

HoffmanReport hoffman_report(const Digraph& g, const HoffmanBound& bound, std::span<const std::size_t> c) {
  if (!is_coclique(g, c)) throw HoffmanError(HoffmanViolation::not_coclique, "vertex set is not a coclique");
  HoffmanReport r;
  r.bound = bound;
  std::vector<bool> in_c(g.order(), false);
  for (auto v : c) in_c[v] = true;
  std::size_t size = 0;
  for (bool b : in_c) size += b;
  r.coclique_size = size;
  r.attains = size_attains(size, bound);
  if (!r.attains) return r;

  r.condition_ii_applicable = bound.theta_min_simple;
  r.condition_i = true;
  r.condition_ii = r.condition_ii_applicable;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (in_c[x]) continue;
    std::size_t out_arcs = 0, in_arcs = 0;
    for (auto y : c) {
      out_arcs += g.has_arc(x, y);
      in_arcs += g.has_arc(y, x);
    }
    if (r.condition_i && !count_matches(out_arcs + in_arcs, bound, 2)) {
      r.condition_i = false;
      r.condition_i_witness = x;
    }
    if (r.condition_ii && !count_matches(out_arcs, bound, 1)) {
      r.condition_ii = false;
      r.condition_ii_witness = x;
    }
  }
  return r;
}

PartitionReport verify_coclique_partition(const Digraph& g, const std::vector<VertexSet>& parts) {
  std::vector<int> seen(g.order(), 0);
  for (const auto& part : parts) {
    for (auto v : part) {
      if (v >= g.order()) {
        throw HoffmanError(HoffmanViolation::not_partition, "vertex " + std::to_string(v) + " out of range");
      }
      if (seen[v]++) {
        throw HoffmanError(HoffmanViolation::not_partition, "vertex " + std::to_string(v) + " appears twice");
      }
    }
  }
  for (std::size_t v = 0; v < g.order(); ++v) {
    if (!seen[v]) throw HoffmanError(HoffmanViolation::not_partition, "vertex " + std::to_string(v) + " uncovered");
  }

  PartitionReport rep;
  rep.bound = hoffman_bound(g);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    PartResult pr;
    pr.size = parts[i].size();
    pr.coclique = is_coclique(g, parts[i]);
    pr.attains = pr.coclique && size_attains(pr.size, rep.bound);
    if (!pr.attains && !rep.first_failing) rep.first_failing = i;
    rep.parts.push_back(pr);
  }
  return rep;
}

std::vector<VertexSet> consecutive_blocks(std::size_t n, std::size_t block) {
  if (block == 0 || n % block != 0) throw std::invalid_argument("block size must divide the order");
  std::vector<VertexSet> parts(n / block);
  for (std::size_t v = 0; v < n; ++v) parts[v / block].push_back(v);
  return parts;
}

}  // namespace hoffdig
