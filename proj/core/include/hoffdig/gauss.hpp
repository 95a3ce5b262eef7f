#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "hoffdig/int_matrix.hpp"
#include "hoffdig/rational.hpp"

namespace hoffdig {

/// Exact Gaussian rational a + b i with rational a, b.
class GaussRational {
 public:
  GaussRational() = default;
  GaussRational(Rational re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussRational(std::int64_t re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussRational(Rational re, Rational im) : re_(re), im_(im) {}

  static GaussRational i() { return {Rational(0), Rational(1)}; }

  const Rational& real() const { return re_; }
  const Rational& imag() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  GaussRational conj() const { return {re_, -im_}; }
  std::complex<double> to_complex() const { return {re_.to_double(), im_.to_double()}; }

  /// GMAT1 token: "a", "a/b", "c/di", "a/b+c/di" (zero parts omitted).
  std::string to_string() const;
  /// Accepts the GMAT1 token forms above plus "i", "-i", "a+i" etc.
  static GaussRational parse(std::string_view text);

  GaussRational operator-() const { return {-re_, -im_}; }
  GaussRational& operator+=(const GaussRational& o);
  GaussRational& operator-=(const GaussRational& o);
  GaussRational& operator*=(const GaussRational& o);
  GaussRational& operator/=(const GaussRational& o);

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
  friend bool operator==(const GaussRational& a, const GaussRational& b) = default;

 private:
  Rational re_;
  Rational im_;
};

std::ostream& operator<<(std::ostream& os, const GaussRational& z);

/// Thrown by inverse() on a singular matrix.
class SingularMatrixError : public std::domain_error {
 public:
  explicit SingularMatrixError(const std::string& what) : std::domain_error(what) {}
};

/// Dense row-major matrix over Gaussian rationals.
class GaussMatrix {
 public:
  GaussMatrix() = default;
  GaussMatrix(std::size_t rows, std::size_t cols);
  GaussMatrix(std::size_t rows, std::size_t cols, std::vector<GaussRational> entries);
  GaussMatrix(std::initializer_list<std::initializer_list<GaussRational>> rows);
  explicit GaussMatrix(const IntMatrix& m);

  static GaussMatrix identity(std::size_t n);
  static GaussMatrix diagonal(const std::vector<GaussRational>& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const GaussRational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  GaussRational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  friend bool operator==(const GaussMatrix& a, const GaussMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GaussRational> entries_;
};

GaussMatrix add(const GaussMatrix& a, const GaussMatrix& b);
GaussMatrix sub(const GaussMatrix& a, const GaussMatrix& b);
GaussMatrix scalar_mul(const GaussRational& s, const GaussMatrix& a);
GaussMatrix mul(const GaussMatrix& a, const GaussMatrix& b);
GaussMatrix transpose(const GaussMatrix& a);
GaussMatrix conjugate_transpose(const GaussMatrix& a);
/// Exact inverse by Gauss-Jordan elimination. Throws SingularMatrixError.
GaussMatrix inverse(const GaussMatrix& m);

/// Reorders rows: result row r is input row perm[r].
GaussMatrix permute_rows(const GaussMatrix& m, const std::vector<std::size_t>& perm);
/// Reorders columns: result column c is input column perm[c].
GaussMatrix permute_cols(const GaussMatrix& m, const std::vector<std::size_t>& perm);

inline GaussMatrix operator*(const GaussMatrix& a, const GaussMatrix& b) { return mul(a, b); }
inline GaussMatrix operator+(const GaussMatrix& a, const GaussMatrix& b) { return add(a, b); }
inline GaussMatrix operator-(const GaussMatrix& a, const GaussMatrix& b) { return sub(a, b); }

std::ostream& operator<<(std::ostream& os, const GaussMatrix& m);

}  // namespace hoffdig
