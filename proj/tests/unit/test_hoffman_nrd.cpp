#include <algorithm>

#include "doctest.h"
#include "fixtures.hpp"
#include "hoffdig/bgw.hpp"
#include "hoffdig/hadamard.hpp"
#include "hoffdig/hoffman.hpp"
#include "hoffdig/nrd.hpp"

using namespace hoffdig;

namespace {

Digraph four_cycle() {
  IntMatrix a(4, 4);
  a(0, 2) = a(2, 1) = a(1, 3) = a(3, 0) = 1;
  return Digraph(a);
}

std::size_t max_coclique(const Digraph& g) {
  const std::size_t n = g.order();
  std::vector<std::uint32_t> nbr(n, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (g.has_arc(x, y) || g.has_arc(y, x)) nbr[x] |= 1u << y;
  std::size_t best = 0;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    const auto size = static_cast<std::size_t>(__builtin_popcount(s));
    if (size <= best) continue;
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x)
      if ((s >> x & 1u) && (nbr[x] & s)) ok = false;
    if (ok) best = size;
  }
  return best;
}

}  // namespace

TEST_CASE("snap_to_rational") {
  CHECK(snap_to_rational(-6.0000000001, 320) == std::optional<Rational>(Rational(-6)));
  CHECK(snap_to_rational(0.3333333333, 10) == std::optional<Rational>(Rational(1, 3)));
  CHECK_FALSE(snap_to_rational(0.123456789, 3).has_value());
}

TEST_CASE("hoffman bound on small oracles") {
  const auto b = hoffman_bound(four_cycle());
  CHECK(b.k == 1);
  CHECK(b.exact == std::optional<Rational>(Rational(2)));
  CHECK(b.theta_min_exact == std::optional<Rational>(Rational(-1)));

  const auto p = hoffman_bound(fixtures::petersen());
  CHECK(p.exact == std::optional<Rational>(Rational(4)));
}

TEST_CASE("hoffman bound preconditions") {
  auto violation = [](const Digraph& g) {
    try {
      hoffman_bound(g);
    } catch (const HoffmanError& e) {
      return std::optional<HoffmanViolation>(e.violation());
    }
    return std::optional<HoffmanViolation>();
  };
  CHECK(violation(Digraph(IntMatrix(0, 0))) == HoffmanViolation::empty);
  IntMatrix two(4, 4);
  two(0, 1) = two(1, 0) = two(2, 3) = two(3, 2) = 1;
  CHECK(violation(Digraph(two)) == HoffmanViolation::not_strongly_connected);
  IntMatrix irregular{{0, 1, 1}, {1, 0, 0}, {1, 0, 0}};
  CHECK(violation(Digraph(irregular)) == HoffmanViolation::not_regular);
  CHECK(std::string(to_string(HoffmanViolation::not_normal)).size() > 0);
}

TEST_CASE("report on attaining and non-attaining cocliques") {
  const Digraph c = four_cycle();
  const VertexSet full{0, 1};
  const auto r = hoffman_report(c, full);
  CHECK(r.attains);
  CHECK(r.condition_i);
  CHECK(r.condition_ii_applicable);
  CHECK(r.condition_ii);

  const VertexSet small{0};
  const auto s = hoffman_report(c, small);
  CHECK_FALSE(s.attains);

  const VertexSet arc{0, 2};
  CHECK_THROWS_AS(hoffman_report(c, arc), HoffmanError);
}

TEST_CASE("coclique partitions") {
  const Digraph c = four_cycle();
  CHECK(verify_coclique_partition(c, {{0, 1}, {2, 3}}).ok());
  const auto bad = verify_coclique_partition(c, {{0, 2}, {1, 3}});
  CHECK_FALSE(bad.ok());
  CHECK(bad.first_failing == std::optional<std::size_t>(0));
  try {
    verify_coclique_partition(c, {{0, 1}, {1, 2, 3}});
    FAIL("expected HoffmanError");
  } catch (const HoffmanError& e) {
    CHECK(e.violation() == HoffmanViolation::not_partition);
  }
  CHECK(consecutive_blocks(6, 2) == std::vector<VertexSet>{{0, 1}, {2, 3}, {4, 5}});
}

TEST_CASE("brute-force cocliques never exceed the bound") {
  for (const auto& [name, g] : fixtures::small_digraphs()) {
    CAPTURE(name);
    if (!is_strongly_connected(g)) continue;
    const auto b = hoffman_bound(g);
    CHECK(static_cast<double>(max_coclique(g)) <= b.value + 1e-9);
  }
}

TEST_CASE("nrd parameters") {
  CHECK(nrd_parameters(four_cycle()) == std::optional<NrdParams>(NrdParams{4, 1, 0, 0}));
  CHECK(is_drad(four_cycle()) == std::optional<DradParams>(DradParams{4, 1, 0}));
  CHECK_FALSE(nrd_parameters(fixtures::complete_graph(3)).has_value());
  const auto bad = check_nrd(fixtures::complete_graph(3));
  CHECK_FALSE(bad.params.has_value());
  CHECK_FALSE(bad.failure.empty());

  const auto paley = nrd_parameters(fixtures::paley_tournament(7));
  REQUIRE(paley.has_value());
  CHECK(*paley == NrdParams{7, 3, 1, 0});
  CHECK(is_drad(fixtures::paley_tournament(7)) == std::optional<DradParams>(DradParams{7, 3, 1}));

  const auto sb = skew_bush_to_drad(order4_skew_bush());
  CHECK(is_drad(sb.digraph) == std::optional<DradParams>(DradParams{4, 1, 0}));
}

TEST_CASE("nrd with lambda != mu is not a DRAD") {
  // Cayley digraph on Z_6 with connection set {1, 4}
  IntMatrix a(6, 6);
  for (std::size_t x = 0; x < 6; ++x) a(x, (x + 1) % 6) = a(x, (x + 4) % 6) = 1;
  const Digraph g(a);
  CHECK(nrd_parameters(g) == std::optional<NrdParams>(NrdParams{6, 2, 0, 2}));
  CHECK_FALSE(is_drad(g).has_value());
}

TEST_CASE("closed-form spectrum matches Jacobi real parts") {
  auto real_parts = [](const std::vector<AlgebraicEigenvalue>& ev) {
    std::vector<double> out;
    for (const auto& e : ev)
      for (double x : e.real_parts()) out.push_back(x);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end(), [](double a, double b) { return std::abs(a - b) < 1e-9; }),
              out.end());
    return out;
  };
  CHECK(real_parts(closed_form_spectrum({4, 1, 0, 0}, 2)) == std::vector<double>{-1, 0, 1});
  for (std::int64_t n : {1, 2, 3}) {
    const NrdParams p{4 * n * n, 2 * n * n - n, n * n - n, n * n - n};
    const auto rp = real_parts(closed_form_spectrum(p, 2 * n));
    CHECK(rp == std::vector<double>{static_cast<double>(-n), 0.0, static_cast<double>(2 * n * n - n)});
  }
}

TEST_CASE("block complement structure") {
  const auto sb = skew_bush_to_drad(order4_skew_bush());
  CHECK(has_block_complement_symmetrization(sb.digraph, 2));
  CHECK(find_block_complement_divisor(sb.digraph) == std::optional<std::size_t>(2));
  CHECK(find_block_complement_divisor(fixtures::paley_tournament(7)) == std::optional<std::size_t>(7));
}
