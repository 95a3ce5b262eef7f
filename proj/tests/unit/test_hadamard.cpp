#include "doctest.h"
#include "fixtures.hpp"
#include "hoffdig/hadamard.hpp"
#include "hoffdig/nrd.hpp"

using namespace hoffdig;

namespace {

const IntMatrix kX{{1, -1}, {-1, 1}};

IntMatrix symmetric_bush4() { return block_compose({{IntMatrix::all_ones(2), kX}, {kX, IntMatrix::all_ones(2)}}); }

}  // namespace

TEST_CASE("hadamard recognition") {
  CHECK(is_hadamard(IntMatrix{{1, 1}, {1, -1}}));
  CHECK_FALSE(is_hadamard(IntMatrix::all_ones(4)));
  CHECK(is_hadamard(sylvester(4)));
  CHECK(sylvester(4).order() == 16);
  CHECK(sylvester(0).matrix() == IntMatrix{{1}});
  CHECK(is_admissible_hadamard_order(12));
  CHECK_FALSE(is_admissible_hadamard_order(6));
  CHECK_THROWS_AS(SignMatrix(IntMatrix{{1, 0}, {1, 1}}), std::invalid_argument);
}

TEST_CASE("check_hadamard reports every identity") {
  const auto ok = check_hadamard(sylvester(3).matrix());
  CHECK(all_passed(ok));

  const auto bad = check_hadamard(IntMatrix{{1, 1, 1}, {1, 0, 1}, {1, 1, 1}});
  CHECK_FALSE(all_passed(bad));
  int failures = 0;
  for (const auto& c : bad) {
    if (!c.ok) {
      ++failures;
      CHECK_FALSE(c.witness.empty());
    }
  }
  CHECK(failures >= 3);
}

TEST_CASE("normalization keeps the Hadamard property") {
  IntMatrix h = sylvester(3).matrix();
  for (std::size_t c = 0; c < 8; ++c) h(0, c) = -h(0, c);
  for (std::size_t r = 0; r < 8; ++r) h(r, 5) = -h(r, 5);
  const SignMatrix n = normalize(SignMatrix(h));
  CHECK(is_hadamard(n));
  for (std::size_t i = 0; i < 8; ++i) {
    CHECK(n(0, i) == 1);
    CHECK(n(i, 0) == 1);
  }
  CHECK_THROWS_AS(normalize(SignMatrix(IntMatrix::all_ones(4))), std::invalid_argument);
}

TEST_CASE("bush-type recognition") {
  const auto sb = order4_skew_bush();
  CHECK(is_bush_type(sb));
  CHECK(is_skew_bush_type(sb));
  CHECK(all_passed(check_bush_type(sb.base().matrix(), true)));

  const BlockPartitionedHadamard syl{sylvester(2)};
  CHECK_FALSE(is_bush_type(syl));

  const BlockPartitionedHadamard sym{SignMatrix(symmetric_bush4())};
  CHECK(is_bush_type(sym));
  CHECK_FALSE(is_skew_bush_type(sym));
  const auto checks = check_bush_type(symmetric_bush4(), true);
  CHECK_FALSE(all_passed(checks));
  CHECK(checks.back().name == "H - I (x) J is skew-symmetric");
  CHECK_FALSE(checks.back().ok);

  CHECK_THROWS_AS(BlockPartitionedHadamard(sylvester(3)), std::invalid_argument);
}

TEST_CASE("skew-bush to DRAD and back") {
  const auto sb = order4_skew_bush();
  const auto dw = skew_bush_to_drad(sb);
  CHECK(is_drad(dw.digraph) == std::optional<DradParams>(DradParams{4, 1, 0}));
  CHECK(dw.parts == std::vector<VertexSet>{{0, 1}, {2, 3}});
  CHECK(drad_to_skew_bush(dw.digraph, dw.parts) == sb);

  for (unsigned k : {2u, 3u}) {
    const auto big = skew_bush_from_hadamard(sylvester(k));
    const auto n = static_cast<std::int64_t>(std::size_t{1} << k) / 2;
    CAPTURE(n);
    CHECK(is_skew_bush_type(big));
    const auto d = skew_bush_to_drad(big);
    CHECK(is_drad(d.digraph) == std::optional<DradParams>(DradParams{4 * n * n, 2 * n * n - n, n * n - n}));
    CHECK(drad_to_skew_bush(d.digraph, d.parts) == big);
  }
}

TEST_CASE("conversion errors") {
  CHECK_THROWS_AS(skew_bush_to_drad(BlockPartitionedHadamard(SignMatrix(symmetric_bush4()))), ConversionError);

  const auto dw = skew_bush_to_drad(order4_skew_bush());
  CHECK_THROWS_AS(drad_to_skew_bush(dw.digraph, {{0}, {1, 2, 3}}), ConversionError);
  CHECK_THROWS_AS(drad_to_skew_bush(dw.digraph, {{0, 2}, {1, 3}}), ConversionError);
  CHECK_THROWS_AS(drad_to_skew_bush(dw.digraph, {{0, 1}, {1, 3}}), ConversionError);
  CHECK_THROWS_AS(drad_to_skew_bush(fixtures::directed_cycle(16), {{0, 1, 2, 3}, {4, 5, 6, 7}, {8, 9, 10, 11},
                                                                  {12, 13, 14, 15}}),
                  ConversionError);
  CHECK_THROWS_AS(drad_to_skew_bush(fixtures::paley_tournament(7), {{0}}), ConversionError);
}
