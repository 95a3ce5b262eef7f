#include "hoffdig/bgw.hpp"

#include <cmath>

#include "hoffdig/biangular.hpp"
#include "hoffdig/nrd.hpp"

namespace hoffdig {

namespace {

std::string cell(std::size_t r, std::size_t c) { return "(" + std::to_string(r) + "," + std::to_string(c) + ")"; }

std::int64_t mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

std::size_t isqrt_exact(std::size_t v) {
  const auto r = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(v))));
  if (r * r != v) throw DimensionError("order " + std::to_string(v) + " is not a perfect square");
  return r;
}

const IntMatrix kW10Printed{
    {0, 1, 1, 1, 1, 1, 1, 1, 1, 1},
    {4, 0, 3, 7, 5, 6, 8, 1, 4, 2},
    {4, 7, 0, 3, 8, 5, 6, 2, 1, 4},
    {4, 3, 7, 0, 6, 8, 5, 4, 2, 1},
    {4, 1, 4, 2, 0, 3, 7, 5, 6, 8},
    {4, 2, 1, 4, 7, 0, 3, 8, 5, 6},
    {4, 4, 2, 1, 3, 7, 0, 6, 8, 5},
    {4, 5, 6, 8, 1, 4, 2, 0, 3, 7},
    {4, 8, 5, 6, 2, 1, 4, 7, 0, 3},
    {4, 6, 8, 5, 4, 2, 1, 3, 7, 0},
};

}  // namespace

GroupRingMatrix::GroupRingMatrix(std::int64_t group_order, IntMatrix entries)
    : group_order_(group_order), entries_(std::move(entries)) {
  if (group_order_ < 1) throw std::invalid_argument("group order must be positive");
  if (!entries_.is_square()) throw std::invalid_argument("group-ring matrix must be square");
  for (std::size_t r = 0; r < entries_.rows(); ++r) {
    for (std::size_t c = 0; c < entries_.cols(); ++c) {
      if (entries_(r, c) < 0 || entries_(r, c) > group_order_) {
        throw std::invalid_argument("entry " + cell(r, c) + " outside 0.." + std::to_string(group_order_));
      }
    }
  }
}

GroupRingMatrix transpose(const GroupRingMatrix& w) { return GroupRingMatrix(w.group_order(), transpose(w.entries())); }

GroupRingMatrix w10_as_printed() { return GroupRingMatrix(8, kW10Printed); }

GroupRingMatrix w10() {
  IntMatrix t = kW10Printed;
  for (std::size_t c = 1; c < t.cols(); ++c) t(0, c) = 8;
  return GroupRingMatrix(8, std::move(t));
}

BgwCheck is_bgw(const GroupRingMatrix& w, std::int64_t k, std::int64_t lam) {
  const std::size_t v = w.size();
  const std::int64_t m = w.group_order();
  if (lam % m != 0) return {false, "lambda " + std::to_string(lam) + " is not divisible by |G| = " + std::to_string(m)};
  for (std::size_t r = 0; r < v; ++r) {
    std::int64_t row = 0, col = 0;
    for (std::size_t c = 0; c < v; ++c) {
      row += w.is_zero(r, c) ? 0 : 1;
      col += w.is_zero(c, r) ? 0 : 1;
    }
    if (row != k) return {false, "row " + std::to_string(r) + " has weight " + std::to_string(row)};
    if (col != k) return {false, "column " + std::to_string(r) + " has weight " + std::to_string(col)};
  }
  const std::int64_t each = lam / m;
  for (std::size_t a = 0; a < v; ++a) {
    for (std::size_t b = 0; b < v; ++b) {
      if (a == b) continue;
      std::vector<std::int64_t> count(static_cast<std::size_t>(m), 0);
      for (std::size_t c = 0; c < v; ++c) {
        if (w.is_zero(a, c) || w.is_zero(b, c)) continue;
        ++count[static_cast<std::size_t>(mod(w(a, c) - w(b, c), m))];
      }
      for (std::int64_t g = 0; g < m; ++g) {
        if (count[static_cast<std::size_t>(g)] != each) {
          return {false, "rows " + std::to_string(a) + "," + std::to_string(b) + ": quotient g^" + std::to_string(g) +
                             " appears " + std::to_string(count[static_cast<std::size_t>(g)]) + " times"};
        }
      }
    }
  }
  return {true, {}};
}

IntMatrix negacirculant_generator(std::size_t n) {
  if (n == 0) throw std::invalid_argument("negacirculant_generator: n must be positive");
  const std::size_t b = 2 * n;
  IntMatrix g(b * b, b * b);
  for (std::size_t blk = 0; blk + 1 < b; ++blk) {
    for (std::size_t t = 0; t < b; ++t) g(blk * b + t, (blk + 1) * b + t) = 1;
  }
  for (std::size_t t = 0; t < b; ++t) g((b - 1) * b + t, t) = -1;
  return g;
}

IntMatrix rho(const IntMatrix& gen, std::int64_t i) {
  const std::size_t b = isqrt_exact(gen.rows());
  const auto order = static_cast<std::int64_t>(2 * b);
  if (i < 1 || i > order) {
    throw std::out_of_range("rho: exponent " + std::to_string(i) + " outside 1.." + std::to_string(order));
  }
  return power(gen, static_cast<unsigned>(i));
}

IntMatrix r_matrix(std::size_t n) {
  if (n == 0) throw std::invalid_argument("r_matrix: n must be positive");
  return kron(IntMatrix::back_identity(2 * n), IntMatrix::identity(2 * n));
}

IntMatrix h_block(const SignMatrix& h2n) {
  const std::size_t b = h2n.order();
  if (b < 2 || b % 2 != 0) throw std::invalid_argument("h_block: order must be even");
  const RowProjectors proj = row_projectors(normalize(h2n));
  std::vector<std::vector<IntMatrix>> grid(b, std::vector<IntMatrix>(b));
  for (std::size_t r = 0; r < b; ++r) {
    for (std::size_t c = 0; c < b; ++c) {
      const std::size_t d = (c + b - r) % b;
      if (d == 0) {
        grid[r][c] = IntMatrix::zeros(b, b);
      } else {
        grid[r][c] = c < r ? negate(proj.mats[d]) : proj.mats[d];
      }
    }
  }
  IntMatrix h = block_compose(grid);
  const IntMatrix gen = negacirculant_generator(b / 2);
  if (!(mul(h, gen) == mul(gen, h))) throw std::logic_error("h_block: H does not commute with the generator");
  return h;
}

IntMatrix expand(const GroupRingMatrix& w, const IntMatrix& h, const IntMatrix& gen, const IntMatrix& r) {
  const std::size_t N = h.rows();
  if (!h.is_square() || gen.rows() != N || !gen.is_square() || r.rows() != N || !r.is_square()) {
    throw DimensionError("expand: H, gen and R must be square of one order");
  }
  const std::size_t b = isqrt_exact(N);
  if (w.group_order() != static_cast<std::int64_t>(2 * b)) {
    throw DimensionError("expand: group order " + std::to_string(w.group_order()) + " does not match the generator");
  }
  std::vector<IntMatrix> blocks(static_cast<std::size_t>(w.group_order()) + 1);
  IntMatrix gp = IntMatrix::identity(N);
  for (std::int64_t e = 1; e <= w.group_order(); ++e) {
    gp = mul(gp, gen);
    blocks[static_cast<std::size_t>(e)] = mul(mul(h, gp), r);
  }
  const std::size_t v = w.size();
  std::vector<std::vector<IntMatrix>> grid(v, std::vector<IntMatrix>(v));
  for (std::size_t i = 0; i < v; ++i) {
    for (std::size_t j = 0; j < v; ++j) {
      grid[i][j] = w.is_zero(i, j) ? IntMatrix::zeros(N, N) : blocks[static_cast<std::size_t>(w(i, j))];
    }
  }
  return block_compose(grid);
}

TwinPair twin_split(const IntMatrix& g) {
  if (!g.is_square()) throw DimensionError("twin_split: matrix must be square");
  const std::size_t N = g.rows();
  TwinPair t{IntMatrix(N, N), IntMatrix(N, N)};
  for (std::size_t r = 0; r < N; ++r) {
    for (std::size_t c = 0; c < N; ++c) {
      const auto v = g(r, c);
      if (v == 1) {
        t.a1(r, c) = 1;
      } else if (v == -1) {
        t.a2(r, c) = 1;
      } else if (v != 0) {
        throw BgwError("entries", "twin_split: entry " + cell(r, c) + " is not in {-1,0,1}");
      }
    }
  }
  if (!(t.a2 == transpose(t.a1))) throw BgwError("A_2 = A_1^T", "twin_split: input is not skew-symmetric");
  if (!is_drad(Digraph(t.a1))) throw BgwError("DRAD", "twin_split: A_1 is not a doubly regular asymmetric digraph");
  return t;
}

namespace {

std::vector<ProductIdentity> class5_identities(std::int64_t n) {
  const std::int64_t s = 2 * n - 1;
  const std::int64_t s2 = s * s;
  const std::int64_t a = (n - 1) * s * (2 * n * n - n);
  const std::int64_t c = s2 * (n * n - n);
  const std::int64_t t = 2 * n * (n - 1) * s;
  const std::int64_t f = 4 * n * (n - 1);
  const std::int64_t g = 2 * n * (n - 1);
  return {
      {"A_1A_1 = A_2A_2", {{1, 1}, {2, 2}}, {0, a, a, a, n * n * s2, a}},
      {"A_1A_2", {{1, 2}, {2, 1}}, {n * n * s2 + c, c, c, c, c, c}},
      {"A_1A_3 = A_2A_3", {{1, 3}, {2, 3}}, {0, t, t, t, 0, n * s2}},
      {"A_1A_4", {{1, 4}}, {0, n - 1, n, 0, 0, 0}},
      {"A_1A_5 = A_2A_5", {{1, 5}, {2, 5}}, {0, g, g, n * s, 0, 0}},
      {"A_2A_4", {{2, 4}}, {0, n, n - 1, 0, 0, 0}},
      {"A_3A_3", {{3, 3}}, {2 * n * s2, f, f, f, 2 * n * s2, 0}},
      {"A_3A_4", {{3, 4}}, {0, 0, 0, s, 0, 0}},
      {"A_3A_5", {{3, 5}}, {0, 2 * n, 2 * n, 0, 0, 0}},
      {"A_4A_4", {{4, 4}}, {s, 0, 0, 0, 2 * n - 2, 0}},
      {"A_4A_5", {{4, 5}}, {0, 0, 0, 0, 0, s}},
      {"A_5A_5", {{5, 5}}, {2 * n * s, 0, 0, 0, 2 * n * s, f}},
  };
}

Class5Expected class5_tables(std::int64_t n, bool displayed) {
  if (n < 1) throw std::invalid_argument("class5_expected: n must be positive");
  const std::int64_t s = 2 * n - 1;
  const std::int64_t m = 2 * n * n - 2 * n + 1;
  const GaussRational i = GaussRational::i();
  const GaussRational ns = GaussRational(n * s);
  Class5Expected out;
  out.m = m;
  out.identities = class5_identities(n);
  out.P = GaussMatrix{
      {1, n * s * s * s, n * s * s * s, 2 * n * s * s, s, 2 * n * s},
      {1, n * s, n * s, -2 * n * s, s, -2 * n},
      {1, ns * i, -ns * i, 0, -1, 0},
      {1, -ns * i, ns * i, 0, -1, 0},
      {1, -n * s, -n * s, -2 * n, s, 2 * n * s},
      {1, -n * s, -n * s, 2 * n * s, s, -2 * n},
  };
  const GaussRational ms(Rational(m, s));
  const GaussRational cross = GaussRational(Rational(2 * n * m, s)) * i;
  out.Q = GaussMatrix{
      {1, s * m, 2 * n * s * m, 2 * n * s * m, s * s, s * m},
      {1, ms, -cross, cross, -1, -ms},
      {1, ms, cross, -cross, -1, -ms},
      {1, -m, 0, 0, -1, m},
      {1, s * m, -2 * n * m, -2 * n * m, s * s, s * m},
      {1, -m, 0, 0, s * s, -m},
  };
  if (displayed) {
    out.P(5, 3) = GaussRational(-2 * n * s);
    out.Q(3, 5) = GaussRational(-s);
    out.Q(4, 1) = GaussRational(m);
    out.Q(4, 5) = GaussRational(m);
  }
  return out;
}

}  // namespace

Class5Expected class5_expected(std::int64_t n) { return class5_tables(n, false); }
Class5Expected class5_displayed(std::int64_t n) { return class5_tables(n, true); }

std::vector<IdentityCheck> check_class5_identities(const AssociationScheme& s, std::int64_t n) {
  std::vector<IdentityCheck> out;
  if (s.classes() != 6) {
    out.push_back({"class count", false, "expected 6 relations, got " + std::to_string(s.classes())});
    return out;
  }
  const std::size_t N = s.n();
  for (const auto& id : class5_identities(n)) {
    IdentityCheck check{id.name, true, {}};
    for (const auto& [i, j] : id.products) {
      const IntMatrix prod = mul(s.mat(i), s.mat(j));
      for (std::size_t x = 0; x < N && check.ok; ++x) {
        for (std::size_t y = 0; y < N && check.ok; ++y) {
          const auto want = id.coeffs[s.relation(x, y)];
          if (prod(x, y) != want) {
            check.ok = false;
            check.witness = "A_" + std::to_string(i) + "A_" + std::to_string(j) + " cell " + cell(x, y) + ": " +
                            std::to_string(prod(x, y)) + " != " + std::to_string(want);
          }
        }
      }
    }
    out.push_back(std::move(check));
  }
  return out;
}

std::vector<IdentityCheck> check_class5_structure(const AssociationScheme& s, std::int64_t n) {
  std::vector<IdentityCheck> out;
  if (s.classes() != 6) {
    out.push_back({"class count", false, "expected 6 relations, got " + std::to_string(s.classes())});
    return out;
  }
  const std::size_t N = s.n();
  const auto block = static_cast<std::size_t>(4 * n * n);
  const auto small = static_cast<std::size_t>(2 * n);
  auto check = [&](std::string name, auto&& want) {
    IdentityCheck c{std::move(name), true, {}};
    for (std::size_t x = 0; x < N && c.ok; ++x) {
      for (std::size_t y = 0; y < N && c.ok; ++y) {
        const auto [got, expected] = want(x, y);
        if (got != expected) {
          c.ok = false;
          c.witness = "cell " + cell(x, y) + ": " + std::to_string(got) + " != " + std::to_string(expected);
        }
      }
    }
    out.push_back(std::move(c));
  };
  check("A_2 = A_1^T", [&](std::size_t x, std::size_t y) { return std::pair{s.mat(2)(x, y), s.mat(1)(y, x)}; });
  check("A_1 + A_2 + A_3 = J - I (x) J_{4n^2}", [&](std::size_t x, std::size_t y) {
    const std::int64_t got = s.mat(1)(x, y) + s.mat(2)(x, y) + s.mat(3)(x, y);
    return std::pair{got, std::int64_t{x / block == y / block ? 0 : 1}};
  });
  check("A_4 = I (x) (J_{2n} - I_{2n})", [&](std::size_t x, std::size_t y) {
    return std::pair{s.mat(4)(x, y), std::int64_t{x / small == y / small && x != y ? 1 : 0}};
  });
  check("A_4 + A_5 = I (x) (J_{4n^2} - I_{4n^2})", [&](std::size_t x, std::size_t y) {
    return std::pair{s.mat(4)(x, y) + s.mat(5)(x, y), std::int64_t{x / block == y / block && x != y ? 1 : 0}};
  });
  return out;
}

std::vector<IntMatrix> class5_relations(std::size_t n, const TwinPair& twins) {
  const std::size_t N = twins.a1.rows();
  const std::size_t b = 2 * n;
  if (n == 0 || N % (b * b) != 0 || twins.a2.rows() != N) throw DimensionError("class5_relations: bad order");
  const IntMatrix a4 = kron(IntMatrix::identity(N / b), sub(IntMatrix::all_ones(b), IntMatrix::identity(b)));
  const IntMatrix a5 = kron(IntMatrix::identity(N / (b * b)),
                            sub(IntMatrix::all_ones(b * b), kron(IntMatrix::identity(b), IntMatrix::all_ones(b))));
  IntMatrix a3 = sub(IntMatrix::all_ones(N), IntMatrix::identity(N));
  for (const IntMatrix* m : std::initializer_list<const IntMatrix*>{&twins.a1, &twins.a2, &a4, &a5}) a3 = sub(a3, *m);
  return {IntMatrix::identity(N), twins.a1, twins.a2, a3, a4, a5};
}

Class5Construction build_class5(std::size_t n, const GroupRingMatrix& w, const SignMatrix& h2n) {
  if (n == 0) throw std::invalid_argument("build_class5: n must be positive");
  const auto nn = static_cast<std::int64_t>(n);
  const std::int64_t p = 2 * nn - 1;
  const auto v = static_cast<std::size_t>(p * p + 1);
  if (w.size() != v) throw BgwError("BGW size", "expected a " + std::to_string(v) + "x" + std::to_string(v) + " BGW");
  if (w.group_order() != 4 * nn) throw BgwError("BGW group", "expected group order " + std::to_string(4 * nn));
  if (auto c = is_bgw(w, p * p, p * p - 1); !c) throw BgwError("BGW rows", "not a BGW: " + c.witness);
  if (auto c = is_bgw(transpose(w), p * p, p * p - 1); !c) throw BgwError("BGW columns", "not a BGW: " + c.witness);
  if (h2n.order() != 2 * n || !is_hadamard(h2n)) {
    throw BgwError("Hadamard", "expected a Hadamard matrix of order " + std::to_string(2 * n));
  }

  Class5Construction out;
  out.n = n;
  out.g = expand(w, h_block(h2n), negacirculant_generator(n), r_matrix(n));
  if (!(transpose(out.g) == negate(out.g))) {
    const std::size_t N = out.g.rows();
    for (std::size_t x = 0; x < N; ++x) {
      for (std::size_t y = 0; y < N; ++y) {
        if (out.g(x, y) != -out.g(y, x)) throw BgwError("G^T = -G", "G is not skew-symmetric at cell " + cell(x, y));
      }
    }
  }
  out.twins = twin_split(out.g);

  const auto rel = class5_relations(n, out.twins);
  const IntMatrix& a3 = rel[3];
  const std::size_t N = a3.rows();
  for (std::size_t x = 0; x < N; ++x) {
    for (std::size_t y = 0; y < N; ++y) {
      if (a3(x, y) != 0 && a3(x, y) != 1) throw BgwError("A_3 complement", "relations overlap at cell " + cell(x, y));
    }
  }
  out.scheme = verify_scheme(rel);
  if (out.scheme.symmetric()) throw SchemeError("nonsymmetric", "class-5 scheme is unexpectedly symmetric");
  for (const auto& c : check_class5_identities(out.scheme, nn)) {
    if (!c.ok) throw SchemeError(c.name, c.name + " fails: " + c.witness);
  }
  for (const auto& c : check_class5_structure(out.scheme, nn)) {
    if (!c.ok) throw SchemeError(c.name, c.name + " fails: " + c.witness);
  }
  return out;
}

Class5Construction drad160() { return build_class5(2, w10(), sylvester(2)); }

GroupRingMatrix from_table(const io::Bgw1Table& t) { return GroupRingMatrix(t.group_order, t.entries); }
io::Bgw1Table to_table(const GroupRingMatrix& w) { return {w.group_order(), w.entries()}; }

}  // namespace hoffdig
