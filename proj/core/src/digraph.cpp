#include "hoffdig/digraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hoffdig {

Digraph::Digraph(IntMatrix adjacency) : adjacency_(std::move(adjacency)) {
  if (!adjacency_.is_square()) throw std::invalid_argument("adjacency matrix must be square");
  for (std::size_t i = 0; i < adjacency_.rows(); ++i) {
    for (std::size_t j = 0; j < adjacency_.cols(); ++j) {
      auto v = adjacency_(i, j);
      if (v != 0 && v != 1) {
        throw std::invalid_argument("adjacency entry (" + std::to_string(i) + "," + std::to_string(j) +
                                    ") is " + std::to_string(v) + ", expected 0 or 1");
      }
    }
    if (adjacency_(i, i) != 0) throw std::invalid_argument("loop at vertex " + std::to_string(i));
  }
}

bool Digraph::edgeless() const {
  auto e = adjacency_.entries();
  return std::all_of(e.begin(), e.end(), [](auto v) { return v == 0; });
}

std::size_t Digraph::out_degree(std::size_t v) const {
  std::size_t d = 0;
  for (auto x : adjacency_.row(v)) d += static_cast<std::size_t>(x);
  return d;
}

std::size_t Digraph::in_degree(std::size_t v) const {
  std::size_t d = 0;
  for (std::size_t u = 0; u < order(); ++u) d += static_cast<std::size_t>(adjacency_(u, v));
  return d;
}

std::optional<std::size_t> regularity(const Digraph& g) {
  if (g.order() == 0) return std::nullopt;
  const std::size_t k = g.out_degree(0);
  for (std::size_t v = 0; v < g.order(); ++v) {
    if (g.out_degree(v) != k || g.in_degree(v) != k) return std::nullopt;
  }
  return k;
}

bool is_asymmetric(const Digraph& g) {
  for (std::size_t i = 0; i < g.order(); ++i) {
    for (std::size_t j = i + 1; j < g.order(); ++j) {
      if (g.has_arc(i, j) && g.has_arc(j, i)) return false;
    }
  }
  return true;
}

std::vector<VertexSet> strong_components(const Digraph& g) {
  // Iterative Tarjan.
  const std::size_t n = g.order();
  constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, unvisited), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<VertexSet> components;
  std::size_t counter = 0;

  struct Frame {
    std::size_t v;
    std::size_t next;
  };
  std::vector<Frame> call;

  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != unvisited) continue;
    call.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.next < n) {
        std::size_t w = f.next++;
        if (!g.has_arc(f.v, w)) continue;
        if (index[w] == unvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      const std::size_t v = f.v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      if (low[v] == index[v]) {
        VertexSet comp;
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp.push_back(w);
        } while (w != v);
        std::reverse(comp.begin(), comp.end());
        components.push_back(std::move(comp));
      }
    }
  }
  return components;
}

bool is_strongly_connected(const Digraph& g) {
  if (g.order() == 0) return false;
  return strong_components(g).size() == 1;
}

bool is_coclique(const Digraph& g, std::span<const std::size_t> s) {
  for (auto v : s) {
    if (v >= g.order()) {
      throw std::out_of_range("vertex " + std::to_string(v) + " out of range for order " + std::to_string(g.order()));
    }
  }
  for (auto x : s) {
    for (auto y : s) {
      if (g.has_arc(x, y)) return false;
    }
  }
  return true;
}

}  // namespace hoffdig
