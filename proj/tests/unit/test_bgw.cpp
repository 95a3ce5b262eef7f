#include "doctest.h"
#include "hoffdig/bgw.hpp"
#include "hoffdig/hoffman.hpp"
#include "hoffdig/nrd.hpp"

using namespace hoffdig;

TEST_CASE("group ring tables") {
  CHECK_THROWS_AS(GroupRingMatrix(4, IntMatrix{{0, 5}, {1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(GroupRingMatrix(4, IntMatrix(2, 3)), std::invalid_argument);
  const GroupRingMatrix w(4, IntMatrix{{0, 1}, {3, 4}});
  CHECK(w.is_zero(0, 0));
  CHECK(transpose(w)(0, 1) == 3);
  CHECK(from_table(to_table(w10())) == w10());
}

TEST_CASE("the built-in BGW(10,9,8)") {
  const auto w = w10();
  CHECK(w.size() == 10);
  CHECK(w.group_order() == 8);
  CHECK(is_bgw(w, 9, 8).ok);
  CHECK(is_bgw(transpose(w), 9, 8).ok);
  CHECK(w(0, 1) == 8);
  CHECK(w(1, 0) == 4);
  CHECK_FALSE(is_bgw(w, 9, 16).ok);

  IntMatrix t = w.entries();
  t(2, 3) = t(2, 3) % 8 + 1;
  const auto broken = is_bgw(GroupRingMatrix(8, t), 9, 8);
  CHECK_FALSE(broken.ok);
  CHECK_FALSE(broken.witness.empty());
}

TEST_CASE("the g^1 first-row table is a BGW but does not expand to a skew matrix") {
  const auto printed = w10_as_printed();
  CHECK(is_bgw(printed, 9, 8).ok);
  CHECK(is_bgw(transpose(printed), 9, 8).ok);
  try {
    build_class5(2, printed, sylvester(2));
    FAIL("expected BgwError");
  } catch (const BgwError& e) {
    CHECK(e.identity() == "G^T = -G");
  }
}

TEST_CASE("expansion ingredients at n = 2") {
  const IntMatrix gen = negacirculant_generator(2);
  CHECK(gen.rows() == 16);
  CHECK(power(gen, 4) == negate(IntMatrix::identity(16)));
  CHECK(power(gen, 8) == IntMatrix::identity(16));
  CHECK(rho(gen, 1) == gen);
  CHECK(rho(gen, 8) == IntMatrix::identity(16));
  CHECK_THROWS(rho(gen, 0));
  CHECK_THROWS(rho(gen, 9));

  CHECK(r_matrix(2) == kron(IntMatrix::back_identity(4), IntMatrix::identity(4)));

  const IntMatrix h = h_block(sylvester(2));
  CHECK(h * gen == gen * h);
}

TEST_CASE("drad160") {
  const auto c = drad160();
  CHECK(c.g.rows() == 160);
  CHECK(transpose(c.g) == negate(c.g));
  CHECK(is_drad(Digraph(c.twins.a1)) == std::optional<DradParams>(DradParams{160, 54, 18}));
  CHECK(c.scheme.d() == 5);
  CHECK_FALSE(c.scheme.symmetric());
  CHECK(all_passed(check_class5_identities(c.scheme, 2)));
  CHECK(check_class5_identities(c.scheme, 2).size() == 12);
  CHECK(all_passed(check_class5_structure(c.scheme, 2)));

  const auto e = class5_expected(2);
  CHECK(e.m == 5);
  CHECK(all_passed(check_eigensystem(c.scheme, e.P, e.Q)));
  CHECK(mul(e.P, e.Q) == scalar_mul(GaussRational(160), GaussMatrix::identity(6)));
  CHECK(e.Q == scalar_mul(GaussRational(160), inverse(e.P)));

  const auto d = class5_displayed(2);
  CHECK_FALSE(all_passed(check_eigensystem(c.scheme, d.P, d.Q)));

  const Digraph a1(c.twins.a1);
  const auto bound = hoffman_bound(a1);
  CHECK(bound.exact == std::optional<Rational>(Rational(16)));
  CHECK(bound.theta_min == doctest::Approx(-6.0).epsilon(1e-10));
  for (const auto& part : consecutive_blocks(160, 16)) {
    const auto r = hoffman_report(a1, bound, part);
    CHECK(r.attains);
    CHECK(r.condition_i);
    CHECK(r.condition_ii_applicable);
    CHECK(r.condition_ii);
  }
}

TEST_CASE("twin split and build errors") {
  CHECK_THROWS_AS(twin_split(IntMatrix{{0, 2}, {-2, 0}}), BgwError);
  CHECK_THROWS_AS(twin_split(IntMatrix{{0, 1}, {1, 0}}), BgwError);
  CHECK_THROWS_AS(build_class5(2, w10(), sylvester(1)), BgwError);
  CHECK_THROWS_AS(build_class5(3, w10(), sylvester(1)), BgwError);
  CHECK_THROWS_AS(build_class5(0, w10(), sylvester(2)), std::invalid_argument);
}
