#include "fixtures.hpp"

#include "hoffdig/bgw.hpp"
#include "hoffdig/biangular.hpp"
#include "hoffdig/hadamard.hpp"

namespace hoffdig::fixtures {

Digraph directed_cycle(std::size_t n) {
  IntMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) a(i, (i + 1) % n) = 1;
  return Digraph(std::move(a));
}

Digraph undirected_cycle(std::size_t n) {
  IntMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, (i + 1) % n) = 1;
    a((i + 1) % n, i) = 1;
  }
  return Digraph(std::move(a));
}

Digraph complete_graph(std::size_t n) { return Digraph(sub(IntMatrix::all_ones(n), IntMatrix::identity(n))); }

Digraph petersen() {
  IntMatrix a(10, 10);
  auto edge = [&](std::size_t u, std::size_t v) { a(u, v) = a(v, u) = 1; };
  for (std::size_t i = 0; i < 5; ++i) {
    edge(i, (i + 1) % 5);
    edge(i, i + 5);
    edge(i + 5, (i + 2) % 5 + 5);
  }
  return Digraph(std::move(a));
}

Digraph cube_graph() {
  IntMatrix a(8, 8);
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t bit = 1; bit < 8; bit <<= 1) a(i, i ^ bit) = 1;
  }
  return Digraph(std::move(a));
}

Digraph paley_tournament(std::size_t q) {
  std::vector<bool> square(q, false);
  for (std::size_t x = 1; x < q; ++x) square[(x * x) % q] = true;
  IntMatrix a(q, q);
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = 0; j < q; ++j) {
      if (i != j && square[(j + q - i) % q]) a(i, j) = 1;
    }
  }
  return Digraph(std::move(a));
}

std::vector<NamedDigraph> small_digraphs() {
  std::vector<NamedDigraph> out;
  out.push_back({"directed 3-cycle", directed_cycle(3)});
  out.push_back({"directed 6-cycle", directed_cycle(6)});
  out.push_back({"5-cycle", undirected_cycle(5)});
  out.push_back({"8-cycle", undirected_cycle(8)});
  out.push_back({"K5", complete_graph(5)});
  out.push_back({"Petersen graph", petersen()});
  out.push_back({"3-cube", cube_graph()});
  out.push_back({"Paley tournament 7", paley_tournament(7)});
  out.push_back({"Paley tournament 11", paley_tournament(11)});
  out.push_back({"DRAD(4,1,0)", skew_bush_to_drad(order4_skew_bush()).digraph});
  out.push_back({"DRAD(16,6,2)", skew_bush_to_drad(skew_bush_from_hadamard(sylvester(2))).digraph});
  for (auto variant : {BiangularVariant::symmetric, BiangularVariant::skew}) {
    const auto rel = biangular_relations(biangular(sylvester(2), variant));
    for (std::size_t i = 1; i < rel.size(); ++i) {
      out.push_back({std::string("biangular ") + to_string(variant) + " n=4 A_" + std::to_string(i), Digraph(rel[i])});
    }
  }
  return out;
}

std::vector<NamedDigraph> all_digraphs() {
  auto out = small_digraphs();
  out.push_back({"Paley tournament 19", paley_tournament(19)});
  out.push_back({"DRAD(64,28,12)", skew_bush_to_drad(skew_bush_from_hadamard(sylvester(3))).digraph});
  const auto rel = biangular_relations(biangular(sylvester(3), BiangularVariant::skew));
  out.push_back({"biangular skew n=8 A_1", Digraph(rel[1])});
  out.push_back({"class-5 n=2 A_1", Digraph(drad160().twins.a1)});
  return out;
}

}  // namespace hoffdig::fixtures
