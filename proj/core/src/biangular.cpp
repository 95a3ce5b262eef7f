#include "hoffdig/biangular.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace hoffdig {

namespace {

std::string cell(std::size_t r, std::size_t c) { return "(" + std::to_string(r) + "," + std::to_string(c) + ")"; }

IdentityCheck make_check(std::string name, std::string witness) {
  IdentityCheck c;
  c.name = std::move(name);
  c.ok = witness.empty();
  c.witness = std::move(witness);
  return c;
}

// Witness of the first differing cell, empty when equal.
std::string diff_witness(const IntMatrix& got, const IntMatrix& want) {
  if (got.rows() != want.rows() || got.cols() != want.cols()) return "shape mismatch";
  for (std::size_t r = 0; r < got.rows(); ++r) {
    for (std::size_t c = 0; c < got.cols(); ++c) {
      if (got(r, c) != want(r, c)) {
        return "cell " + cell(r, c) + ": " + std::to_string(got(r, c)) + " != " + std::to_string(want(r, c));
      }
    }
  }
  return {};
}

bool is_normalized(const IntMatrix& h) {
  for (std::size_t i = 0; i < h.rows(); ++i) {
    if (h(0, i) != 1 || h(i, 0) != 1) return false;
  }
  return true;
}

}  // namespace

std::vector<IdentityCheck> check_row_projectors(const RowProjectors& p) {
  const std::size_t n = p.n;
  const auto nn = static_cast<std::int64_t>(n);
  std::vector<IdentityCheck> out;
  if (p.mats.size() != n || n == 0) {
    out.push_back(make_check("projector count", "expected " + std::to_string(n) + " matrices"));
    return out;
  }

  out.push_back(make_check("C_1 = J", diff_witness(p.mats[0], IntMatrix::all_ones(n))));

  std::string w;
  for (std::size_t i = 0; i < n && w.empty(); ++i) {
    for (std::size_t j = 0; j < n && w.empty(); ++j) {
      if (i == j) continue;
      const auto d = diff_witness(mul(p.mats[i], p.mats[j]), IntMatrix::zeros(n, n));
      if (!d.empty()) w = "C_" + std::to_string(i + 1) + " C_" + std::to_string(j + 1) + " " + d;
    }
  }
  out.push_back(make_check("C_i C_j = 0 (i != j)", w));

  w.clear();
  IntMatrix sq_sum = IntMatrix::zeros(n, n);
  for (std::size_t i = 0; i < n && w.empty(); ++i) {
    const IntMatrix sq = mul(p.mats[i], p.mats[i]);
    if (i > 0) sq_sum = add(sq_sum, sq);
    const auto d = diff_witness(sq, scalar_mul(nn, p.mats[i]));
    if (!d.empty()) w = "C_" + std::to_string(i + 1) + " " + d;
  }
  out.push_back(make_check("C_i^2 = n C_i", w));

  IntMatrix sum = IntMatrix::zeros(n, n);
  for (const auto& c : p.mats) sum = add(sum, c);
  out.push_back(make_check("sum C_i = n I", diff_witness(sum, scalar_mul(nn, IntMatrix::identity(n)))));

  w.clear();
  for (std::size_t i = 1; i < n && w.empty(); ++i) {
    for (std::size_t r = 0; r < n && w.empty(); ++r) {
      std::int64_t rs = 0, cs = 0;
      for (std::size_t c = 0; c < n; ++c) {
        rs += p.mats[i](r, c);
        cs += p.mats[i](c, r);
      }
      if (rs != 0) w = "C_" + std::to_string(i + 1) + " row " + std::to_string(r) + " sums to " + std::to_string(rs);
      if (cs != 0) w = "C_" + std::to_string(i + 1) + " column " + std::to_string(r) + " sums to " + std::to_string(cs);
    }
  }
  out.push_back(make_check("zero row and column sums (i >= 2)", w));

  // Recompute the squares if an earlier failure stopped the accumulation.
  sq_sum = IntMatrix::zeros(n, n);
  for (std::size_t i = 1; i < n; ++i) sq_sum = add(sq_sum, mul(p.mats[i], p.mats[i]));
  const IntMatrix want = sub(scalar_mul(nn * nn, IntMatrix::identity(n)), scalar_mul(nn, IntMatrix::all_ones(n)));
  out.push_back(make_check("sum_{i>=2} C_i^2 = n^2 I - n J", diff_witness(sq_sum, want)));
  return out;
}

RowProjectors row_projectors(const SignMatrix& h) {
  if (!is_hadamard(h)) throw std::invalid_argument("row_projectors: input is not a Hadamard matrix");
  if (!is_normalized(h.matrix())) throw std::invalid_argument("row_projectors: input is not normalized");
  const std::size_t n = h.order();
  RowProjectors out;
  out.n = n;
  for (std::size_t i = 0; i < n; ++i) {
    IntMatrix c(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t s = 0; s < n; ++s) c(r, s) = h(i, r) * h(i, s);
    }
    out.mats.push_back(std::move(c));
  }
  for (const auto& check : check_row_projectors(out)) {
    if (!check.ok) throw std::logic_error("row_projectors: " + check.name + " fails: " + check.witness);
  }
  return out;
}

IntMatrix addition_latin(std::size_t q) {
  if (q == 0) throw std::invalid_argument("addition_latin: q must be positive");
  IntMatrix l(q, q);
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = 0; j < q; ++j) l(i, j) = static_cast<std::int64_t>((i + j) % q) + 2;
  }
  return l;
}

const char* to_string(BiangularVariant v) { return v == BiangularVariant::symmetric ? "symmetric" : "skew"; }

BiangularVariant parse_biangular_variant(std::string_view text) {
  if (text == "symmetric") return BiangularVariant::symmetric;
  if (text == "skew") return BiangularVariant::skew;
  throw std::invalid_argument("unknown biangular variant '" + std::string(text) + "'");
}

bool satisfies_gram_identity(const BiangularMatrix& b) {
  const std::size_t n = b.n;
  if (n < 2 || b.m.rows() != n * (n - 1) || !b.m.is_square()) return false;
  const auto nn = static_cast<std::int64_t>(n);
  const IntMatrix want =
      sub(scalar_mul(nn * (nn - 1), IntMatrix::identity(n * (n - 1))),
          scalar_mul(nn, kron(IntMatrix::identity(n - 1), sub(IntMatrix::all_ones(n), IntMatrix::identity(n)))));
  return mul(b.m, transpose(b.m)) == want;
}

bool has_variant_symmetry(const BiangularMatrix& b) {
  if (b.variant == BiangularVariant::symmetric) return b.m.is_symmetric();
  const std::size_t n = b.n;
  const std::size_t q = n - 1;
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = i; j < q; ++j) {
      const IntMatrix mij = b.m.block(i * n, j * n, n, n);
      const IntMatrix mji = b.m.block(j * n, i * n, n, n);
      if (i == j ? !(transpose(mij) == mij) : !(transpose(mij) == negate(mji))) return false;
    }
  }
  return true;
}

InnerProductMagnitudes inner_product_magnitudes(const BiangularMatrix& b) {
  const std::size_t n = b.n;
  const std::size_t order = b.m.rows();
  const IntMatrix gram = mul(b.m, transpose(b.m));
  const Rational norm(static_cast<std::int64_t>(n * (n - 1)));
  std::set<Rational> same, cross;
  for (std::size_t r = 0; r < order; ++r) {
    for (std::size_t c = 0; c < order; ++c) {
      if (r == c) continue;
      const Rational v = abs(Rational(gram(r, c)) / norm);
      (r / n == c / n ? same : cross).insert(v);
    }
  }
  return {{same.begin(), same.end()}, {cross.begin(), cross.end()}};
}

BiangularMatrix biangular(const SignMatrix& h, BiangularVariant variant) {
  const std::size_t n = h.order();
  if (n < 2) throw std::invalid_argument("biangular: Hadamard order must be at least 2");
  const RowProjectors proj = row_projectors(normalize(h));
  const std::size_t q = n - 1;
  const IntMatrix latin = addition_latin(q);
  std::vector<std::vector<IntMatrix>> grid(q, std::vector<IntMatrix>(q));
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = 0; j < q; ++j) {
      const IntMatrix& c = proj.mats[static_cast<std::size_t>(latin(i, j)) - 1];
      grid[i][j] = (variant == BiangularVariant::skew && i > j) ? negate(c) : c;
    }
  }
  BiangularMatrix out{n, variant, block_compose(grid)};
  if (!satisfies_gram_identity(out)) throw std::logic_error("biangular: Gram identity fails");
  if (!has_variant_symmetry(out)) throw std::logic_error("biangular: symmetry type fails");
  return out;
}

std::vector<IntMatrix> biangular_relations(const BiangularMatrix& b) {
  const std::size_t n = b.n;
  const std::size_t order = b.m.rows();
  std::vector<IntMatrix> a(5, IntMatrix::zeros(order, order));
  a[0] = IntMatrix::identity(order);
  for (std::size_t r = 0; r < order; ++r) {
    for (std::size_t c = 0; c < order; ++c) {
      if (r == c) continue;
      const bool diag_block = r / n == c / n;
      const bool plus = b.m(r, c) == 1;
      a[diag_block ? (plus ? 3 : 4) : (plus ? 1 : 2)](r, c) = 1;
    }
  }
  return a;
}

AssociationScheme scheme_from_biangular(const BiangularMatrix& b) {
  const auto a = biangular_relations(b);
  const IntMatrix rebuilt = sub(add(sub(add(a[0], a[1]), a[2]), a[3]), a[4]);
  if (!(rebuilt == b.m)) throw SchemeError("decomposition", "M != A_0 + A_1 - A_2 + A_3 - A_4");
  if (!a[3].is_symmetric() || !a[4].is_symmetric()) throw SchemeError("symmetry pattern", "A_3 or A_4 is not symmetric");
  if (b.variant == BiangularVariant::symmetric) {
    if (!a[1].is_symmetric() || !a[2].is_symmetric()) {
      throw SchemeError("symmetry pattern", "A_1 or A_2 is not symmetric");
    }
  } else if (!(transpose(a[1]) == a[2])) {
    throw SchemeError("symmetry pattern", "A_1 != A_2^T");
  }
  AssociationScheme s = verify_scheme(a);
  if (s.symmetric() != (b.variant == BiangularVariant::symmetric)) {
    throw SchemeError("symmetry pattern", "scheme symmetry does not match the variant");
  }
  return s;
}

Class4Expected class4_expected(std::int64_t n, BiangularVariant variant) {
  if (n < 4 || n % 4 != 0) throw std::invalid_argument("class4_expected: n must be a positive multiple of 4");
  const std::int64_t n2 = n * n;
  const std::int64_t a = (n2 - 2 * n) / 2;  // (n^2 - 2n)/2
  const std::int64_t b = (n2 - 3 * n) / 4;
  const std::int64_t c = (n2 - 4 * n) / 4;
  const std::int64_t d = (n2 - 2 * n) / 4;
  const std::int64_t e = n2 / 4;
  const std::int64_t f = n / 4;
  const std::int64_t h = n / 2;

  Class4Expected out;
  out.intersection.push_back(IntMatrix::identity(5));
  IntMatrix b1{{0, 1, 0, 0, 0}, {a, b, b, c, d}, {0, b, b, e, d}, {0, f - 1, f, 0, 0}, {0, f, f, 0, 0}};
  IntMatrix b2{{0, 0, 1, 0, 0}, {0, b, b, e, d}, {a, b, b, c, d}, {0, f, f - 1, 0, 0}, {0, f, f, 0, 0}};
  IntMatrix b3{{0, 0, 0, 1, 0}, {0, f - 1, f, 0, 0}, {0, f, f - 1, 0, 0}, {h - 1, 0, 0, h - 2, 0}, {0, 0, 0, 0, h - 1}};
  IntMatrix b4{{0, 0, 0, 0, 1}, {0, f, f, 0, 0}, {0, f, f, 0, 0}, {0, 0, 0, 0, h - 1}, {h, 0, 0, h, 0}};
  if (variant == BiangularVariant::skew) {
    for (IntMatrix* m : {&b1, &b2}) {
      for (std::size_t k = 0; k < 5; ++k) std::swap((*m)(1, k), (*m)(2, k));
    }
  }
  out.intersection.insert(out.intersection.end(), {b1, b2, b3, b4});

  const GaussRational unit = variant == BiangularVariant::skew ? GaussRational::i() : GaussRational(1);
  const GaussRational hn = unit * GaussRational(h);
  out.P = GaussMatrix{
      {1, n * (n - 2) / 2, n * (n - 2) / 2, (n - 2) / 2, h},
      {1, 0, 0, (n - 2) / 2, -h},
      {1, -h, -h, (n - 2) / 2, h},
      {1, -hn, hn, -1, 0},
      {1, hn, -hn, -1, 0},
  };
  const GaussRational half = unit * GaussRational(Rational(n - 1, 2));
  const std::int64_t t = (n - 1) * (n - 2) / 2;
  out.Q = GaussMatrix{
      {1, n - 1, n - 2, t, t},
      {1, 0, -1, -half, half},
      {1, 0, -1, half, -half},
      {1, n - 1, n - 2, 1 - n, 1 - n},
      {1, 1 - n, n - 2, 0, 0},
  };
  return out;
}

}  // namespace hoffdig
