#include "hoffdig/spectral.hpp"

#include <algorithm>
#include <cmath>

namespace hoffdig {

SymmetricSpectrum jacobi_eigenvalues(std::span<const double> input, std::size_t n, const JacobiOptions& opts) {
  if (input.size() != n * n) throw DimensionError("jacobi_eigenvalues: entry count mismatch");
  std::vector<double> a(input.begin(), input.end());
  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };

  double frob = 0.0;
  for (double v : a) frob += v * v;
  frob = std::sqrt(frob);
  const double threshold = opts.relative_tolerance * frob;

  auto max_off = [&] {
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) m = std::max(m, std::abs(at(i, j)));
    }
    return m;
  };

  SymmetricSpectrum out;
  double off = max_off();
  while (off > threshold) {
    if (out.sweeps == opts.max_sweeps) {
      throw ConvergenceError("Jacobi did not converge after " + std::to_string(opts.max_sweeps) +
                             " sweeps (residual " + std::to_string(off) + ")");
    }
    ++out.sweeps;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (std::abs(apq) <= threshold * 1e-3) continue;
        const double app = at(p, p), aqq = at(q, q);
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = at(k, p), akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = at(p, k), aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
        at(p, q) = at(q, p) = 0.0;
      }
    }
    off = max_off();
  }
  out.residual = off;
  out.eigenvalues.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.eigenvalues[i] = at(i, i);
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end());
  return out;
}

SymmetricSpectrum jacobi_eigenvalues(const IntMatrix& m, const JacobiOptions& opts) {
  if (!m.is_square()) throw DimensionError("jacobi_eigenvalues: matrix is not square");
  if (!m.is_symmetric()) throw std::invalid_argument("jacobi_eigenvalues: matrix is not symmetric");
  std::vector<double> a(m.entries().begin(), m.entries().end());
  return jacobi_eigenvalues(a, m.rows(), opts);
}

bool is_normal(const IntMatrix& m) {
  if (!m.is_square()) throw DimensionError("is_normal: matrix is not square");
  const IntMatrix t = transpose(m);
  return mul(m, t) == mul(t, m);
}

SymmetricSpectrum re_spectrum(const Digraph& g) {
  const IntMatrix& a = g.adjacency();
  if (!is_normal(a)) throw NotNormalError("adjacency matrix is not normal (A A^T != A^T A)");
  // A + A^T stays integral; the halving happens on the floating side.
  auto spec = jacobi_eigenvalues(add(a, transpose(a)));
  for (double& v : spec.eigenvalues) v /= 2.0;
  spec.residual /= 2.0;
  return spec;
}

double theta_min(const Digraph& g) {
  if (g.edgeless()) return 0.0;
  return re_spectrum(g).eigenvalues.front();
}

std::vector<EigenvalueCluster> cluster_values(std::span<const double> sorted, double tol) {
  std::vector<EigenvalueCluster> out;
  double sum = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i == 0 || sorted[i] - sorted[i - 1] > tol) {
      if (!out.empty()) out.back().value = sum / static_cast<double>(out.back().multiplicity);
      out.push_back({sorted[i], 0});
      sum = 0.0;
    }
    ++out.back().multiplicity;
    sum += sorted[i];
  }
  if (!out.empty()) out.back().value = sum / static_cast<double>(out.back().multiplicity);
  return out;
}

bool min_real_part_is_simple(const Digraph& g, double tol) {
  const IntMatrix& a = g.adjacency();
  const auto s_spec = re_spectrum(g);
  const auto s_clusters = cluster_values(s_spec.eigenvalues, tol);
  const double theta = s_clusters.front().value;
  const std::size_t mult = s_clusters.front().multiplicity;

  const std::size_t n = g.order();
  const IntMatrix at = transpose(a);
  const IntMatrix skew = sub(a, at);                       // 2T
  const IntMatrix skew_gram = mul(transpose(skew), skew);  // 4 T^T T
  std::vector<double> z(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      z[i * n + j] = static_cast<double>(a(i, j) + at(i, j)) / 2.0 + static_cast<double>(skew_gram(i, j)) / 4.0;
    }
  }
  const auto z_spec = jacobi_eigenvalues(z, n);
  std::size_t z_mult = 0;
  for (double v : z_spec.eigenvalues) {
    if (std::abs(v - theta) <= tol) ++z_mult;
  }
  return z_mult == mult;
}

}  // namespace hoffdig
