#include <limits>
#include <random>
#include <sstream>

#include "doctest.h"
#include "hoffdig/checked.hpp"
#include "hoffdig/gauss.hpp"
#include "hoffdig/int_matrix.hpp"
#include "hoffdig/io.hpp"
#include "hoffdig/rational.hpp"

using namespace hoffdig;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int lo = -5, int hi = 5) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

}  // namespace

TEST_CASE("rational arithmetic stays reduced") {
  const Rational a(6, -4);
  CHECK(a.num() == -3);
  CHECK(a.den() == 2);
  CHECK((a + Rational(1, 2)) == Rational(-1));
  CHECK((Rational(2, 3) * Rational(3, 4)) == Rational(1, 2));
  CHECK((Rational(1) / Rational(-3)).to_string() == "-1/3");
  CHECK(Rational::parse("10/4") == Rational(5, 2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational overflow is detected") {
  const Rational big(std::numeric_limits<std::int64_t>::max());
  CHECK_THROWS_AS(big + Rational(1), OverflowError);
  CHECK_THROWS_AS(big * Rational(2), OverflowError);
  CHECK_THROWS_AS(Rational::parse("99999999999999999999"), OverflowError);
}

TEST_CASE("kron of identity and all-ones") {
  const IntMatrix a = kron(IntMatrix::identity(2), IntMatrix::all_ones(2));
  CHECK(a == IntMatrix{{1, 1, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, 1}, {0, 0, 1, 1}});
  const IntMatrix b = kron(IntMatrix::all_ones(2), IntMatrix::identity(2));
  CHECK(b == IntMatrix{{1, 0, 1, 0}, {0, 1, 0, 1}, {1, 0, 1, 0}, {0, 1, 0, 1}});

  const IntMatrix big = kron(IntMatrix::identity(10), IntMatrix::all_ones(16));
  CHECK(big.rows() == 160);
  CHECK(big(15, 15) == 1);
  CHECK(big(15, 16) == 0);
  CHECK(big(159, 144) == 1);
}

TEST_CASE("block_compose") {
  CHECK(block_compose({{IntMatrix{{1}}, IntMatrix{{2}}}, {IntMatrix{{3}}, IntMatrix{{4}}}}) ==
        IntMatrix{{1, 2}, {3, 4}});
  const IntMatrix j = IntMatrix::all_ones(2), z = IntMatrix::zeros(2, 2);
  CHECK(block_compose({{j, z}, {z, j}}) == kron(IntMatrix::identity(2), j));

  std::vector<std::vector<IntMatrix>> grid(10, std::vector<IntMatrix>(10, IntMatrix::zeros(16, 16)));
  const IntMatrix g = block_compose(grid);
  CHECK(g.rows() == 160);
  CHECK(g.cols() == 160);

  CHECK_THROWS_AS(block_compose({{j, IntMatrix::zeros(3, 2)}}), DimensionError);
  CHECK_THROWS_AS(block_compose({{j, z}, {z}}), DimensionError);
}

TEST_CASE("basic products") {
  CHECK(IntMatrix::back_identity(3) == IntMatrix{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
  CHECK(IntMatrix::all_ones(4) * IntMatrix::all_ones(4) == 4 * IntMatrix::all_ones(4));
  CHECK(trace(IntMatrix::identity(7)) == 7);
  CHECK(power(IntMatrix::back_identity(5), 2) == IntMatrix::identity(5));
  CHECK_THROWS_AS(mul(IntMatrix(2, 3), IntMatrix(2, 3)), DimensionError);
  CHECK_THROWS_AS(add(IntMatrix(2, 3), IntMatrix(3, 2)), DimensionError);
  CHECK_THROWS_AS(IntMatrix(2, 2).at(2, 0), std::out_of_range);
}

TEST_CASE("randomized algebraic identities") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    const IntMatrix a = random_matrix(rng, 4, 3), b = random_matrix(rng, 3, 5), c = random_matrix(rng, 5, 2);
    CHECK(transpose(transpose(a)) == a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(transpose(a * b) == transpose(b) * transpose(a));
    const IntMatrix p = random_matrix(rng, 2, 2), q = random_matrix(rng, 3, 3), r = random_matrix(rng, 2, 2),
                    s = random_matrix(rng, 3, 3);
    CHECK(kron(p, q) * kron(r, s) == kron(p * r, q * s));
  }
}

TEST_CASE("gaussian rationals") {
  const GaussRational z = GaussRational::parse("1/2-3i");
  CHECK(z.real() == Rational(1, 2));
  CHECK(z.imag() == Rational(-3));
  CHECK(z.to_string() == "1/2-3i");
  CHECK(GaussRational::parse("i") == GaussRational::i());
  CHECK(GaussRational::parse("-2/3i").imag() == Rational(-2, 3));
  CHECK(GaussRational::i() * GaussRational::i() == GaussRational(-1));
  CHECK(GaussRational(1) / GaussRational(Rational(0), Rational(2)) == GaussRational(Rational(0), Rational(-1, 2)));
}

TEST_CASE("gaussian matrix inverse") {
  CHECK(inverse(GaussMatrix::identity(3)) == GaussMatrix::identity(3));
  const GaussMatrix d = GaussMatrix::diagonal({GaussRational(2), GaussRational::i()});
  CHECK(inverse(d) == GaussMatrix::diagonal({GaussRational(Rational(1, 2)), -GaussRational::i()}));
  CHECK_THROWS_AS(inverse(GaussMatrix(IntMatrix::all_ones(3))), SingularMatrixError);

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const GaussMatrix m(random_matrix(rng, 4, 4));
    try {
      CHECK(m * inverse(m) == GaussMatrix::identity(4));
    } catch (const SingularMatrixError&) {
    }
  }
}

TEST_CASE("MAT1 round trip and errors") {
  std::mt19937_64 rng(5);
  const IntMatrix m = random_matrix(rng, 3, 4, -100, 100);
  std::stringstream ss;
  io::write_mat1(ss, m);
  CHECK(io::read_mat1(ss) == m);

  std::istringstream header("2 2\n1 2\n3 4\n");
  CHECK(io::read_mat1(header) == IntMatrix{{1, 2}, {3, 4}});

  std::istringstream bad_token("2 2\n1 2\n3 x\n");
  try {
    io::read_mat1(bad_token, "m.mat");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 3);
  }
  std::istringstream short_row("2 2\n1 2\n3\n");
  CHECK_THROWS_AS(io::read_mat1(short_row), ParseError);
  std::istringstream missing_row("2 2\n1 2\n");
  CHECK_THROWS_AS(io::read_mat1(missing_row), ParseError);
  std::istringstream trailing("1 1\n5\n6\n");
  CHECK_THROWS_AS(io::read_mat1(trailing), ParseError);
  std::istringstream empty("");
  CHECK_THROWS_AS(io::read_mat1(empty), ParseError);
}

TEST_CASE("GMAT1 round trip") {
  const GaussMatrix g{{GaussRational(1), GaussRational::parse("1/2+i")}, {GaussRational::parse("-3i"), GaussRational(0)}};
  std::stringstream ss;
  io::write_gmat1(ss, g);
  CHECK(io::read_gmat1(ss) == g);
  std::istringstream bad("1 1\n1/0\n");
  CHECK_THROWS_AS(io::read_gmat1(bad), ParseError);
}

TEST_CASE("BGW1 entries must lie in 0..m") {
  std::istringstream ok("2 4\n0 1\n4 2\n");
  const auto t = io::read_bgw1(ok);
  CHECK(t.group_order == 4);
  CHECK(t.entries == IntMatrix{{0, 1}, {4, 2}});
  std::stringstream ss;
  io::write_bgw1(ss, t);
  CHECK(io::read_bgw1(ss).entries == t.entries);

  std::istringstream bad("2 4\n0 5\n1 1\n");
  try {
    io::read_bgw1(bad);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 3);
  }
}

TEST_CASE("vertex sets and partitions") {
  std::istringstream one("0 3 5\n");
  CHECK(io::read_vertex_set(one) == VertexSet{0, 3, 5});
  std::istringstream parts("0 1\n2 3\n");
  const auto p = io::read_partition(parts);
  REQUIRE(p.size() == 2);
  CHECK(p[1] == VertexSet{2, 3});
  std::istringstream neg("0 -1\n");
  CHECK_THROWS_AS(io::read_vertex_set(neg), ParseError);
}
