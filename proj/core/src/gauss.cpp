#include "hoffdig/gauss.hpp"

#include <ostream>
#include <stdexcept>

namespace hoffdig {

GaussRational& GaussRational::operator+=(const GaussRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussRational& GaussRational::operator-=(const GaussRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussRational& GaussRational::operator*=(const GaussRational& o) {
  if (im_.is_zero() && o.im_.is_zero()) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = re;
  im_ = im;
  return *this;
}

GaussRational& GaussRational::operator/=(const GaussRational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  if (o.im_.is_zero()) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  Rational norm = o.re_ * o.re_ + o.im_ * o.im_;
  *this *= o.conj();
  re_ /= norm;
  im_ /= norm;
  return *this;
}

std::string GaussRational::to_string() const {
  if (im_.is_zero()) return re_.to_string();
  std::string imag = im_.to_string() + "i";
  if (re_.is_zero()) return imag;
  return re_.to_string() + (im_.sign() > 0 ? "+" : "") + imag;
}

GaussRational GaussRational::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty Gaussian rational");
  if (text.back() != 'i') return GaussRational(Rational::parse(text));
  std::string_view body = text.substr(0, text.size() - 1);
  // The imaginary part starts at the last sign that is not the leading one.
  std::size_t split = std::string_view::npos;
  for (std::size_t p = body.size(); p-- > 1;) {
    if (body[p] == '+' || body[p] == '-') {
      split = p;
      break;
    }
  }
  std::string_view real_text = split == std::string_view::npos ? std::string_view{} : body.substr(0, split);
  std::string_view imag_text = split == std::string_view::npos ? body : body.substr(split);
  Rational imag;
  if (imag_text.empty() || imag_text == "+") {
    imag = 1;
  } else if (imag_text == "-") {
    imag = -1;
  } else {
    imag = Rational::parse(imag_text);
  }
  Rational real = real_text.empty() ? Rational(0) : Rational::parse(real_text);
  return {real, imag};
}

std::ostream& operator<<(std::ostream& os, const GaussRational& z) { return os << z.to_string(); }

GaussMatrix::GaussMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

GaussMatrix::GaussMatrix(std::size_t rows, std::size_t cols, std::vector<GaussRational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) throw DimensionError("GaussMatrix entry count mismatch");
}

GaussMatrix::GaussMatrix(std::initializer_list<std::initializer_list<GaussRational>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged initializer list");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

GaussMatrix::GaussMatrix(const IntMatrix& m) : rows_(m.rows()), cols_(m.cols()) {
  entries_.reserve(rows_ * cols_);
  for (auto v : m.entries()) entries_.emplace_back(v);
}

GaussMatrix GaussMatrix::identity(std::size_t n) {
  GaussMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

GaussMatrix GaussMatrix::diagonal(const std::vector<GaussRational>& d) {
  GaussMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

GaussMatrix add(const GaussMatrix& a, const GaussMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("GaussMatrix add: shape mismatch");
  GaussMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
  }
  return out;
}

GaussMatrix sub(const GaussMatrix& a, const GaussMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("GaussMatrix sub: shape mismatch");
  GaussMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) - b(i, j);
  }
  return out;
}

GaussMatrix scalar_mul(const GaussRational& s, const GaussMatrix& a) {
  GaussMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = s * a(i, j);
  }
  return out;
}

GaussMatrix mul(const GaussMatrix& a, const GaussMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("GaussMatrix mul: inner dimension mismatch");
  GaussMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

GaussMatrix transpose(const GaussMatrix& a) {
  GaussMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  }
  return out;
}

GaussMatrix conjugate_transpose(const GaussMatrix& a) {
  GaussMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j).conj();
  }
  return out;
}

GaussMatrix inverse(const GaussMatrix& m) {
  if (!m.is_square()) throw DimensionError("inverse of non-square matrix");
  const std::size_t n = m.rows();
  GaussMatrix work = m;
  GaussMatrix inv = GaussMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work(pivot, col).is_zero()) ++pivot;
    if (pivot == n) throw SingularMatrixError("matrix is singular (column " + std::to_string(col) + ")");
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(work(pivot, j), work(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    }
    const GaussRational p = work(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      work(col, j) /= p;
      inv(col, j) /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || work(r, col).is_zero()) continue;
      const GaussRational f = work(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        work(r, j) -= f * work(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

GaussMatrix permute_rows(const GaussMatrix& m, const std::vector<std::size_t>& perm) {
  if (perm.size() != m.rows()) throw DimensionError("row permutation length mismatch");
  GaussMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(perm[r], c);
  }
  return out;
}

GaussMatrix permute_cols(const GaussMatrix& m, const std::vector<std::size_t>& perm) {
  if (perm.size() != m.cols()) throw DimensionError("column permutation length mismatch");
  GaussMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, perm[c]);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const GaussMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ' ';
      os << m(i, j);
    }
    os << '\n';
  }
  return os;
}

}  // namespace hoffdig
