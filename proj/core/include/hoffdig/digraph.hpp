#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hoffdig/int_matrix.hpp"

namespace hoffdig {

using VertexSet = std::vector<std::size_t>;

/// Loop-free directed graph stored as its 0/1 adjacency matrix.
class Digraph {
 public:
  Digraph() = default;
  /// Throws std::invalid_argument unless adjacency is square, 0/1, with zero diagonal.
  explicit Digraph(IntMatrix adjacency);

  std::size_t order() const { return adjacency_.rows(); }
  const IntMatrix& adjacency() const { return adjacency_; }
  bool has_arc(std::size_t from, std::size_t to) const { return adjacency_(from, to) != 0; }
  bool edgeless() const;

  std::size_t out_degree(std::size_t v) const;
  std::size_t in_degree(std::size_t v) const;

 private:
  IntMatrix adjacency_;
};

/// k when every in- and out-degree equals k.
std::optional<std::size_t> regularity(const Digraph& g);

/// A + A^T is a 0/1 matrix.
bool is_asymmetric(const Digraph& g);

bool is_strongly_connected(const Digraph& g);

/// Strongly connected components (Tarjan), each listed in discovery order.
std::vector<VertexSet> strong_components(const Digraph& g);

/// No arc between any two members of s, in either direction.
/// Throws std::out_of_range for a vertex index >= order.
bool is_coclique(const Digraph& g, std::span<const std::size_t> s);

}  // namespace hoffdig
