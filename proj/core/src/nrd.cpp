#include "hoffdig/nrd.hpp"

#include <cmath>
#include <stdexcept>

namespace hoffdig {

NrdCheck check_nrd(const Digraph& g) {
  NrdCheck out;
  const std::size_t n = g.order();
  if (n == 0) {
    out.failure = "empty digraph";
    return out;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (g.has_arc(i, j) && g.has_arc(j, i)) {
        out.failure = "not asymmetric: arcs in both directions";
        out.row = i;
        out.col = j;
        return out;
      }
    }
  }
  const IntMatrix& a = g.adjacency();
  const IntMatrix gram = mul(a, transpose(a));

  // k from the diagonal, lambda and mu from the first cell of each class,
  // then the identity is checked everywhere.
  const std::int64_t k = gram(0, 0);
  std::optional<std::int64_t> lambda, mu;
  for (std::size_t i = 0; i < n && !(lambda && mu); ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (a(i, j) + a(j, i) == 1) {
        if (!lambda) lambda = gram(i, j);
      } else if (!mu) {
        mu = gram(i, j);
      }
    }
  }
  // A tournament has no mu-cells and a null digraph no lambda-cells; the
  // missing parameter is then arbitrary and reported as 0.
  const std::int64_t lam = lambda.value_or(0);
  const std::int64_t m = mu.value_or(0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::int64_t expected;
      if (i == j) {
        expected = k;
      } else if (a(i, j) + a(j, i) == 1) {
        expected = lam;
      } else {
        expected = m;
      }
      if (gram(i, j) != expected) {
        out.failure = "A A^T entry " + std::to_string(gram(i, j)) + " != " + std::to_string(expected);
        out.row = i;
        out.col = j;
        return out;
      }
    }
  }
  out.params = NrdParams{static_cast<std::int64_t>(n), k, lam, m};
  return out;
}

std::optional<NrdParams> nrd_parameters(const Digraph& g) { return check_nrd(g).params; }

std::optional<DradParams> is_drad(const Digraph& g) {
  auto p = nrd_parameters(g);
  if (!p) return std::nullopt;
  const bool tournament_like = [&] {
    for (std::size_t i = 0; i < g.order(); ++i) {
      for (std::size_t j = 0; j < g.order(); ++j) {
        if (i != j && !g.has_arc(i, j) && !g.has_arc(j, i)) return false;
      }
    }
    return true;
  }();
  // In a tournament mu is unconstrained, so lambda alone decides.
  if (p->lambda != p->mu && !tournament_like) return std::nullopt;
  return DradParams{p->n, p->k, p->lambda};
}

std::vector<double> AlgebraicEigenvalue::real_parts() const {
  const double re = real_part.to_double();
  if (radicand.sign() <= 0) return {re};
  const double root = std::sqrt(radicand.to_double());
  return {re - root, re + root};
}

std::string AlgebraicEigenvalue::to_string() const {
  switch (kind) {
    case Kind::real: return real_part.to_string();
    case Kind::imaginary_pair:
    case Kind::shifted_root_pair:
      return real_part.to_string() + " +- sqrt(" + radicand.to_string() + ")";
  }
  return {};
}

std::vector<AlgebraicEigenvalue> closed_form_spectrum(const NrdParams& p, std::int64_t r) {
  if (r <= 0 || p.n % r != 0) {
    throw std::invalid_argument("r=" + std::to_string(r) + " does not divide n=" + std::to_string(p.n));
  }
  using Kind = AlgebraicEigenvalue::Kind;
  std::vector<AlgebraicEigenvalue> out;
  out.push_back({Kind::real, Rational(p.k), Rational(0)});
  out.push_back({Kind::imaginary_pair, Rational(0), Rational(p.mu - p.k)});
  const Rational n(p.n), rr(r);
  const Rational shift = -n / (Rational(2) * rr);
  const Rational rad = Rational(p.k - p.mu) + Rational(p.mu - p.lambda) * n / rr - n * n / (Rational(4) * rr * rr);
  out.push_back({Kind::shifted_root_pair, shift, rad});
  return out;
}

bool has_block_complement_symmetrization(const Digraph& g, std::size_t r) {
  const std::size_t n = g.order();
  if (r == 0 || n % r != 0) return false;
  const std::size_t block = n / r;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::int64_t sym = g.adjacency()(i, j) + g.adjacency()(j, i);
      const std::int64_t expected = (i / block == j / block) ? 0 : 1;
      if (sym != expected) return false;
    }
  }
  return true;
}

std::optional<std::size_t> find_block_complement_divisor(const Digraph& g) {
  for (std::size_t r = 1; r <= g.order(); ++r) {
    if (g.order() % r == 0 && has_block_complement_symmetrization(g, r)) return r;
  }
  return std::nullopt;
}

}  // namespace hoffdig
