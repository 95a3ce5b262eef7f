#include "hoffdig/scheme.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>

#include "hoffdig/checked.hpp"

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

constexpr const char* kShape = "square 0/1 matrices of one order";
constexpr const char* kIdentity = "A_0 = I";
constexpr const char* kPartition = "sum A_i = J";
constexpr const char* kTranspose = "A_i^T in the family";
constexpr const char* kProducts = "A_i A_j = sum_k p_ij^k A_k";
constexpr const char* kCommute = "A_i A_j = A_j A_i";

struct Analysis {
  std::vector<IdentityCheck> checks;
  std::size_t n = 0;
  bool symmetric = true;
  std::vector<std::size_t> transpose;
  std::vector<std::int64_t> p;
  std::vector<std::size_t> relation;
};

std::string shape_witness(const std::vector<IntMatrix>& mats) {
  if (mats.size() < 2) return "need at least two matrices, got " + std::to_string(mats.size());
  const std::size_t n = mats[0].rows();
  if (n == 0) return "A_0 is empty";
  for (std::size_t i = 0; i < mats.size(); ++i) {
    const auto& m = mats[i];
    if (m.rows() != n || m.cols() != n) {
      return "A_" + std::to_string(i) + " is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols());
    }
    bool nonzero = false;
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        if (m(r, c) != 0 && m(r, c) != 1) return "A_" + std::to_string(i) + " cell " + cell(r, c) + " is not 0/1";
        nonzero = nonzero || m(r, c) != 0;
      }
    }
    if (!nonzero) return "A_" + std::to_string(i) + " is zero";
  }
  return {};
}

// Runs the axioms in order. With stop_first the first failure throws.
Analysis analyze(const std::vector<IntMatrix>& mats, bool stop_first) {
  Analysis out;
  auto record = [&](const char* name, std::string witness) {
    if (stop_first && !witness.empty()) throw SchemeError(name, std::string(name) + " fails: " + witness);
    out.checks.push_back(make_check(name, std::move(witness)));
  };

  const std::string shape = shape_witness(mats);
  record(kShape, shape);
  if (!shape.empty()) {
    for (const char* name : {kIdentity, kPartition, kTranspose, kProducts, kCommute}) {
      out.checks.push_back(make_check(name, "not evaluated: shape check failed"));
    }
    return out;
  }
  const std::size_t n = mats[0].rows();
  const std::size_t D = mats.size();
  out.n = n;

  {
    std::string w;
    for (std::size_t r = 0; r < n && w.empty(); ++r) {
      for (std::size_t c = 0; c < n && w.empty(); ++c) {
        if (mats[0](r, c) != (r == c ? 1 : 0)) w = "cell " + cell(r, c);
      }
    }
    record(kIdentity, w);
  }

  bool partition_ok = true;
  {
    out.relation.assign(n * n, 0);
    std::string w;
    for (std::size_t r = 0; r < n && w.empty(); ++r) {
      for (std::size_t c = 0; c < n && w.empty(); ++c) {
        int count = 0;
        for (std::size_t i = 0; i < D; ++i) {
          if (mats[i](r, c) != 0) {
            ++count;
            out.relation[r * n + c] = i;
          }
        }
        if (count != 1) w = "cell " + cell(r, c) + " is covered " + std::to_string(count) + " times";
      }
    }
    partition_ok = w.empty();
    record(kPartition, w);
  }

  {
    std::string w;
    out.transpose.assign(D, D);
    for (std::size_t i = 0; i < D && w.empty(); ++i) {
      const IntMatrix t = transpose(mats[i]);
      for (std::size_t j = 0; j < D; ++j) {
        if (t == mats[j]) {
          out.transpose[i] = j;
          break;
        }
      }
      if (out.transpose[i] == D) w = "A_" + std::to_string(i) + "^T is not in the family";
      if (out.transpose[i] != i) out.symmetric = false;
    }
    record(kTranspose, w);
  }

  std::vector<IntMatrix> products(D * D);
  for (std::size_t i = 0; i < D; ++i) {
    for (std::size_t j = 0; j < D; ++j) products[i * D + j] = mul(mats[i], mats[j]);
  }

  if (partition_ok) {
    std::string w;
    out.p.assign(D * D * D, 0);
    for (std::size_t i = 0; i < D && w.empty(); ++i) {
      for (std::size_t j = 0; j < D && w.empty(); ++j) {
        const IntMatrix& prod = products[i * D + j];
        std::vector<bool> seen(D, false);
        for (std::size_t r = 0; r < n && w.empty(); ++r) {
          for (std::size_t c = 0; c < n && w.empty(); ++c) {
            const std::size_t k = out.relation[r * n + c];
            auto& slot = out.p[(i * D + j) * D + k];
            if (!seen[k]) {
              seen[k] = true;
              slot = prod(r, c);
            } else if (prod(r, c) != slot) {
              w = "A_" + std::to_string(i) + " A_" + std::to_string(j) + " is not constant on A_" + std::to_string(k) +
                  " at cell " + cell(r, c) + ": " + std::to_string(prod(r, c)) + " != " + std::to_string(slot);
            }
          }
        }
      }
    }
    record(kProducts, w);
  } else {
    out.checks.push_back(make_check(kProducts, "not evaluated: relations do not partition the cells"));
  }

  {
    std::string w;
    for (std::size_t i = 0; i < D && w.empty(); ++i) {
      for (std::size_t j = i + 1; j < D && w.empty(); ++j) {
        const IntMatrix& ab = products[i * D + j];
        const IntMatrix& ba = products[j * D + i];
        for (std::size_t r = 0; r < n && w.empty(); ++r) {
          for (std::size_t c = 0; c < n && w.empty(); ++c) {
            if (ab(r, c) != ba(r, c)) {
              w = "A_" + std::to_string(i) + ", A_" + std::to_string(j) + " differ at cell " + cell(r, c);
            }
          }
        }
      }
    }
    record(kCommute, w);
  }
  return out;
}

}  // namespace

std::int64_t AssociationScheme::p(std::size_t i, std::size_t j, std::size_t k) const {
  const std::size_t D = classes();
  if (i >= D || j >= D || k >= D) throw std::out_of_range("intersection number index out of range");
  return p_[(i * D + j) * D + k];
}

std::vector<IdentityCheck> check_scheme_axioms(const std::vector<IntMatrix>& mats) { return analyze(mats, false).checks; }

AssociationScheme verify_scheme(const std::vector<IntMatrix>& mats) {
  Analysis a = analyze(mats, true);
  AssociationScheme s;
  s.n_ = a.n;
  s.mats_ = mats;
  s.symmetric_ = a.symmetric;
  s.transpose_ = std::move(a.transpose);
  s.p_ = std::move(a.p);
  s.relation_ = std::move(a.relation);
  return s;
}

IntMatrix intersection_matrix(const AssociationScheme& s, std::size_t i) {
  const std::size_t D = s.classes();
  if (i >= D) throw std::out_of_range("intersection_matrix: index " + std::to_string(i) + " out of range");
  IntMatrix b(D, D);
  for (std::size_t j = 0; j < D; ++j) {
    for (std::size_t k = 0; k < D; ++k) b(j, k) = s.p(i, j, k);
  }
  return b;
}

Digraph relation_graph(const AssociationScheme& s, std::size_t i) {
  if (i == 0 || i > s.d()) throw std::out_of_range("relation_graph: index " + std::to_string(i) + " out of range");
  return Digraph(s.mat(i));
}

namespace {

struct EigenAnalysis {
  std::vector<IdentityCheck> checks;
  std::vector<GaussMatrix> idempotents;
};

std::string gauss_cell(const char* what, std::size_t r, std::size_t c, const GaussRational& got,
                       const GaussRational& want) {
  return std::string(what) + " cell " + cell(r, c) + ": " + got.to_string() + " != " + want.to_string();
}

EigenAnalysis analyze_eigen(const AssociationScheme& s, const GaussMatrix& P, const GaussMatrix& Q, bool stop_first) {
  EigenAnalysis out;
  auto record = [&](const char* name, std::string witness) {
    if (stop_first && !witness.empty()) throw SchemeError(name, std::string(name) + " fails: " + witness);
    out.checks.push_back(make_check(name, std::move(witness)));
  };
  const std::size_t D = s.classes();
  const std::size_t N = s.n();
  const GaussRational inv_n(Rational(1, static_cast<std::int64_t>(N)));

  std::string shape;
  if (P.rows() != D || P.cols() != D) shape = "P is " + std::to_string(P.rows()) + "x" + std::to_string(P.cols());
  if (Q.rows() != D || Q.cols() != D) shape = "Q is " + std::to_string(Q.rows()) + "x" + std::to_string(Q.cols());
  record("P and Q are (d+1)x(d+1)", shape);
  if (!shape.empty()) return out;

  {
    const GaussMatrix pq = mul(P, Q);
    std::string w;
    for (std::size_t r = 0; r < D && w.empty(); ++r) {
      for (std::size_t c = 0; c < D && w.empty(); ++c) {
        const GaussRational want = r == c ? GaussRational(static_cast<std::int64_t>(N)) : GaussRational(0);
        if (!(pq(r, c) == want)) w = gauss_cell("PQ", r, c, pq(r, c), want);
      }
    }
    record("PQ = nI", w);
  }

  // E_j = (1/n) sum_i Q_ij A_i, materialized cell by cell from the relation index.
  out.idempotents.reserve(D);
  for (std::size_t j = 0; j < D; ++j) {
    std::vector<GaussRational> scaled(D);
    for (std::size_t i = 0; i < D; ++i) scaled[i] = Q(i, j) * inv_n;
    GaussMatrix e(N, N);
    for (std::size_t x = 0; x < N; ++x) {
      for (std::size_t y = 0; y < N; ++y) e(x, y) = scaled[s.relation(x, y)];
    }
    out.idempotents.push_back(std::move(e));
  }

  {
    std::string w;
    for (std::size_t x = 0; x < N && w.empty(); ++x) {
      for (std::size_t y = 0; y < N && w.empty(); ++y) {
        if (!(out.idempotents[0](x, y) == inv_n)) w = gauss_cell("E_0", x, y, out.idempotents[0](x, y), inv_n);
      }
    }
    record("E_0 = J/n", w);
  }

  {
    // In the Bose-Mesner algebra through the intersection numbers.
    std::string w;
    auto coeffs = [&](std::size_t j) {
      std::vector<GaussRational> c(D);
      for (std::size_t i = 0; i < D; ++i) c[i] = Q(i, j) * inv_n;
      return c;
    };
    for (std::size_t a = 0; a < D && w.empty(); ++a) {
      const auto ea = coeffs(a);
      for (std::size_t b = a; b < D && w.empty(); ++b) {
        const auto eb = coeffs(b);
        for (std::size_t k = 0; k < D && w.empty(); ++k) {
          GaussRational acc;
          for (std::size_t i = 0; i < D; ++i) {
            if (ea[i].is_zero()) continue;
            for (std::size_t j = 0; j < D; ++j) {
              const std::int64_t pk = s.p(i, j, k);
              if (pk != 0) acc += ea[i] * eb[j] * GaussRational(pk);
            }
          }
          const GaussRational want = a == b ? ea[k] : GaussRational(0);
          if (!(acc == want)) {
            w = "E_" + std::to_string(a) + " E_" + std::to_string(b) + " coefficient of A_" + std::to_string(k) + ": " +
                acc.to_string() + " != " + want.to_string();
          }
        }
      }
    }
    // Also as explicit matrices when they are small.
    constexpr std::size_t kMatrixLevelLimit = 64;
    if (w.empty() && N <= kMatrixLevelLimit) {
      for (std::size_t a = 0; a < D && w.empty(); ++a) {
        for (std::size_t b = a; b < D && w.empty(); ++b) {
          const GaussMatrix prod = mul(out.idempotents[a], out.idempotents[b]);
          for (std::size_t x = 0; x < N && w.empty(); ++x) {
            for (std::size_t y = 0; y < N && w.empty(); ++y) {
              const GaussRational want = a == b ? out.idempotents[a](x, y) : GaussRational(0);
              if (!(prod(x, y) == want)) {
                w = gauss_cell(("E_" + std::to_string(a) + " E_" + std::to_string(b)).c_str(), x, y, prod(x, y), want);
              }
            }
          }
        }
      }
    }
    record("E_i E_j = delta_ij E_i", w);
  }

  {
    std::string w;
    for (std::size_t x = 0; x < N && w.empty(); ++x) {
      for (std::size_t y = 0; y < N && w.empty(); ++y) {
        GaussRational acc;
        for (const auto& e : out.idempotents) acc += e(x, y);
        const GaussRational want = x == y ? GaussRational(1) : GaussRational(0);
        if (!(acc == want)) w = gauss_cell("sum E_i", x, y, acc, want);
      }
    }
    record("sum E_i = I", w);
  }

  {
    std::string w;
    for (std::size_t j = 0; j < D && w.empty(); ++j) {
      for (std::size_t x = 0; x < N && w.empty(); ++x) {
        for (std::size_t y = 0; y < N && w.empty(); ++y) {
          GaussRational acc;
          for (std::size_t i = 0; i < D; ++i) acc += P(i, j) * out.idempotents[i](x, y);
          const GaussRational want(s.mat(j)(x, y));
          if (!(acc == want)) w = gauss_cell(("A_" + std::to_string(j)).c_str(), x, y, acc, want);
        }
      }
    }
    record("A_j = sum_i P_ij E_i", w);
  }
  return out;
}

}  // namespace

std::vector<IdentityCheck> check_eigensystem(const AssociationScheme& s, const GaussMatrix& P, const GaussMatrix& Q) {
  return analyze_eigen(s, P, Q, false).checks;
}

EigenSystem verify_eigensystem(const AssociationScheme& s, const GaussMatrix& P, const GaussMatrix& Q) {
  EigenAnalysis a = analyze_eigen(s, P, Q, true);
  return EigenSystem{P, Q, std::move(a.idempotents)};
}

std::optional<std::vector<std::size_t>> align_eigenmatrix_rows(const GaussMatrix& P, const GaussMatrix& Q,
                                                               std::int64_t n) {
  if (!P.is_square() || !Q.is_square() || P.rows() != Q.rows()) return std::nullopt;
  const std::size_t D = P.rows();
  const GaussMatrix pq = mul(P, Q);
  std::vector<std::size_t> perm(D, D);
  for (std::size_t a = 0; a < D; ++a) {
    std::optional<std::size_t> col;
    for (std::size_t c = 0; c < D; ++c) {
      if (pq(a, c).is_zero()) continue;
      if (col || !(pq(a, c) == GaussRational(n))) return std::nullopt;
      col = c;
    }
    if (!col || perm[*col] != D) return std::nullopt;
    perm[*col] = a;
  }
  return perm;
}

namespace {

using cd = std::complex<double>;
using I128Poly = std::vector<__int128>;

// Faddeev-LeVerrier in 128-bit checked integers.
I128Poly char_poly_128(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (!m.is_square()) throw DimensionError("characteristic_polynomial: matrix is not square");
  I128Poly c(n + 1, 0);
  c[n] = 1;
  std::vector<__int128> mk(n * n, 0);  // M_0 = 0
  std::vector<__int128> next(n * n, 0);
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = M M_{k-1} + c_{n-k+1} I
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t col = 0; col < n; ++col) {
        __int128 acc = r == col ? c[n - k + 1] : 0;
        for (std::size_t t = 0; t < n; ++t) {
          if (m(r, t) != 0) acc = checked::add128(acc, checked::mul128(m(r, t), mk[t * n + col]));
        }
        next[r * n + col] = acc;
      }
    }
    mk.swap(next);
    __int128 tr = 0;
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t t = 0; t < n; ++t) {
        if (m(r, t) != 0) tr = checked::add128(tr, checked::mul128(m(r, t), mk[t * n + r]));
      }
    }
    const auto kk = static_cast<__int128>(k);
    if (tr % kk != 0) throw std::logic_error("characteristic_polynomial: inexact division");
    c[n - k] = -tr / kk;
  }
  return c;
}

cd eval_poly(const std::vector<long double>& a, cd z) {
  std::complex<long double> acc = 0;
  const std::complex<long double> zz(z.real(), z.imag());
  for (std::size_t i = a.size(); i-- > 0;) acc = acc * zz + a[i];
  return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

cd eval_derivative(const std::vector<long double>& a, cd z) {
  std::complex<long double> acc = 0;
  const std::complex<long double> zz(z.real(), z.imag());
  for (std::size_t i = a.size(); i-- > 1;) acc = acc * zz + static_cast<long double>(i) * a[i];
  return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

std::vector<cd> roots_of(const std::vector<long double>& a) {
  const std::size_t deg = a.size() - 1;
  if (deg == 0) return {};
  std::vector<long double> monic(a);
  for (auto& v : monic) v /= a[deg];
  long double radius = 0;
  for (std::size_t i = 0; i < deg; ++i) radius = std::max(radius, std::abs(monic[i]));
  radius += 1;
  std::vector<cd> z(deg);
  const cd seed(0.4, 0.9);
  cd w = 1;
  for (std::size_t i = 0; i < deg; ++i) {
    w *= seed;
    z[i] = w * static_cast<double>(radius);
  }
  const double scale = static_cast<double>(radius);
  bool converged = false;
  for (int iter = 0; iter < 5000 && !converged; ++iter) {
    double change = 0;
    for (std::size_t i = 0; i < deg; ++i) {
      cd denom = 1;
      for (std::size_t j = 0; j < deg; ++j) {
        if (j != i) denom *= z[i] - z[j];
      }
      if (std::abs(denom) == 0) denom = 1e-300;
      const cd step = eval_poly(monic, z[i]) / denom;
      z[i] -= step;
      change = std::max(change, std::abs(step));
    }
    converged = change <= 1e-15 * scale;
  }
  if (!converged) throw EigenComputationError("root iteration did not converge");
  for (auto& r : z) {
    for (int k = 0; k < 3; ++k) {
      const cd d = eval_derivative(monic, r);
      if (std::abs(d) == 0) break;
      r -= eval_poly(monic, r) / d;
    }
  }
  return z;
}

// A nonzero x with m x = 0 for a numerically rank-deficient square m.
std::vector<cd> null_vector(std::vector<cd> m, std::size_t n) {
  std::vector<std::size_t> col_of(n);
  for (std::size_t i = 0; i < n; ++i) col_of[i] = i;
  double scale = 0;
  for (const auto& v : m) scale = std::max(scale, std::abs(v));
  if (scale == 0) scale = 1;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
  for (std::size_t step = 0; step < n; ++step) {
    // full pivoting over the remaining submatrix
    double best = 0;
    std::size_t br = step, bc = step;
    for (std::size_t r = step; r < n; ++r) {
      for (std::size_t c = step; c < n; ++c) {
        if (std::abs(m[r * n + c]) > best) {
          best = std::abs(m[r * n + c]);
          br = r;
          bc = c;
        }
      }
    }
    if (best <= 1e-9 * scale) break;
    for (std::size_t c = 0; c < n; ++c) std::swap(m[step * n + c], m[br * n + c]);
    for (std::size_t r = 0; r < n; ++r) std::swap(m[r * n + step], m[r * n + bc]);
    std::swap(col_of[step], col_of[bc]);
    for (std::size_t r = step + 1; r < n; ++r) {
      const cd f = m[r * n + step] / m[step * n + step];
      if (f == cd(0)) continue;
      for (std::size_t c = step; c < n; ++c) m[r * n + c] -= f * m[step * n + c];
    }
    ++rank;
  }
  if (rank == n) throw EigenComputationError("matrix is not singular at the computed root");
  // Free variable: permuted column `rank` set to 1, the rest of the free ones to 0.
  std::vector<cd> y(n, 0);
  y[rank] = 1;
  for (std::size_t r = rank; r-- > 0;) {
    cd acc = 0;
    for (std::size_t c = r + 1; c < n; ++c) acc += m[r * n + c] * y[c];
    y[r] = -acc / m[r * n + r];
  }
  std::vector<cd> x(n);
  for (std::size_t i = 0; i < n; ++i) x[col_of[i]] = y[i];
  return x;
}

ComplexMatrix complex_inverse(const ComplexMatrix& a) {
  const std::size_t n = a.size();
  ComplexMatrix m = a;
  ComplexMatrix inv(n, std::vector<cd>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r) {
      if (std::abs(m[r][c]) > std::abs(m[piv][c])) piv = r;
    }
    if (std::abs(m[piv][c]) < 1e-12) throw EigenComputationError("computed P is singular");
    std::swap(m[c], m[piv]);
    std::swap(inv[c], inv[piv]);
    const cd d = m[c][c];
    for (std::size_t k = 0; k < n; ++k) {
      m[c][k] /= d;
      inv[c][k] /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c) continue;
      const cd f = m[r][c];
      if (f == cd(0)) continue;
      for (std::size_t k = 0; k < n; ++k) {
        m[r][k] -= f * m[c][k];
        inv[r][k] -= f * inv[c][k];
      }
    }
  }
  return inv;
}

bool row_before(const std::vector<cd>& a, const std::vector<cd>& b) {
  constexpr double eps = 1e-9;
  for (std::size_t c = 1; c < a.size(); ++c) {
    if (std::abs(a[c].real() - b[c].real()) > eps) return a[c].real() > b[c].real();
    if (std::abs(a[c].imag() - b[c].imag()) > eps) return a[c].imag() > b[c].imag();
  }
  return false;
}

}  // namespace

std::vector<std::int64_t> characteristic_polynomial(const IntMatrix& m) {
  const I128Poly c = char_poly_128(m);
  std::vector<std::int64_t> out;
  out.reserve(c.size());
  for (auto v : c) out.push_back(checked::narrow(v));
  return out;
}

std::vector<std::complex<double>> polynomial_roots(const std::vector<std::int64_t>& coeffs) {
  if (coeffs.empty() || coeffs.back() == 0) throw std::invalid_argument("polynomial_roots: leading coefficient is zero");
  std::vector<long double> a(coeffs.begin(), coeffs.end());
  return roots_of(a);
}

NumericEigenmatrices compute_eigenmatrices(const AssociationScheme& s, std::uint64_t seed) {
  const std::size_t D = s.classes();
  if (s.d() > 8) throw std::invalid_argument("compute_eigenmatrices: at most 8 classes are supported");
  // L_i = B_i^T acts on coefficient vectors by left multiplication with A_i.
  std::vector<IntMatrix> L;
  for (std::size_t i = 0; i < D; ++i) L.push_back(transpose(intersection_matrix(s, i)));

  constexpr std::array<std::int64_t, 9> kPrimes{2, 3, 5, 7, 11, 13, 17, 19, 23};
  constexpr int kAttempts = 6;
  std::mt19937_64 rng(seed);
  std::string last_error = "no attempt made";
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    std::vector<std::int64_t> coeff(D, 0);
    for (std::size_t i = 1; i < D; ++i) {
      coeff[i] = attempt == 0 ? kPrimes[i - 1] : static_cast<std::int64_t>(rng() % 29) + 1;
    }
    try {
      IntMatrix M = IntMatrix::zeros(D, D);
      for (std::size_t i = 1; i < D; ++i) M = add(M, scalar_mul(coeff[i], L[i]));
      const I128Poly cp = char_poly_128(M);
      std::vector<long double> a(cp.begin(), cp.end());
      const std::vector<cd> roots = roots_of(a);

      double spread = 0;
      for (const auto& r : roots) spread = std::max(spread, std::abs(r));
      spread = std::max(spread, 1.0);
      for (std::size_t i = 0; i < roots.size(); ++i) {
        for (std::size_t j = i + 1; j < roots.size(); ++j) {
          if (std::abs(roots[i] - roots[j]) < 1e-6 * spread) throw EigenComputationError("defective generic combination");
        }
      }

      ComplexMatrix P;
      for (const auto& lambda : roots) {
        std::vector<cd> shifted(D * D);
        for (std::size_t r = 0; r < D; ++r) {
          for (std::size_t c = 0; c < D; ++c) shifted[r * D + c] = static_cast<double>(M(r, c)) - (r == c ? lambda : 0.0);
        }
        const std::vector<cd> x = null_vector(shifted, D);
        std::size_t t = 0;
        for (std::size_t i = 1; i < D; ++i) {
          if (std::abs(x[i]) > std::abs(x[t])) t = i;
        }
        std::vector<cd> row(D);
        for (std::size_t j = 0; j < D; ++j) {
          cd acc = 0;
          for (std::size_t c = 0; c < D; ++c) acc += static_cast<double>(L[j](t, c)) * x[c];
          row[j] = acc / x[t];
        }
        P.push_back(std::move(row));
      }
      std::sort(P.begin(), P.end(), row_before);
      ComplexMatrix Q = complex_inverse(P);
      for (auto& r : Q) {
        for (auto& v : r) v *= static_cast<double>(s.n());
      }
      return NumericEigenmatrices{std::move(P), std::move(Q), attempt + 1};
    } catch (const EigenComputationError& e) {
      last_error = e.what();
    } catch (const OverflowError& e) {
      last_error = e.what();
    }
  }
  throw EigenComputationError("compute_eigenmatrices failed after " + std::to_string(kAttempts) +
                              " attempts: " + last_error);
}

std::optional<std::vector<std::size_t>> match_rows(const ComplexMatrix& numeric, const GaussMatrix& exact,
                                                   double tol) {
  const std::size_t D = numeric.size();
  if (exact.rows() != D) return std::nullopt;
  for (const auto& r : numeric) {
    if (r.size() != exact.cols()) return std::nullopt;
  }
  std::vector<std::vector<bool>> close(D, std::vector<bool>(D, false));
  for (std::size_t a = 0; a < D; ++a) {
    for (std::size_t b = 0; b < D; ++b) {
      bool ok = true;
      for (std::size_t c = 0; c < exact.cols() && ok; ++c) ok = std::abs(numeric[a][c] - exact(b, c).to_complex()) <= tol;
      close[a][b] = ok;
    }
  }
  std::vector<std::size_t> perm(D);
  std::vector<bool> used(D, false);
  auto assign = [&](auto&& self, std::size_t a) -> bool {
    if (a == D) return true;
    for (std::size_t b = 0; b < D; ++b) {
      if (used[b] || !close[a][b]) continue;
      used[b] = true;
      perm[a] = b;
      if (self(self, a + 1)) return true;
      used[b] = false;
    }
    return false;
  };
  if (!assign(assign, 0)) return std::nullopt;
  return perm;
}

}  // namespace hoffdig
