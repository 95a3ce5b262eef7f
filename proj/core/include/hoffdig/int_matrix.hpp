#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hoffdig {

/// Thrown when operand shapes are not conformable.
class DimensionError : public std::invalid_argument {
 public:
  explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

/// Dense exact-integer matrix in row-major order.
///
/// Values are immutable in spirit: every operation below returns a new
/// matrix. Arithmetic is overflow-checked (see checked.hpp); dot products
/// accumulate in 128 bits and are narrowed once per entry.
class IntMatrix {
 public:
  using value_type = std::int64_t;

  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols, value_type fill = 0);
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<value_type> entries);
  IntMatrix(std::initializer_list<std::initializer_list<value_type>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix all_ones(std::size_t n) { return all_ones(n, n); }
  static IntMatrix all_ones(std::size_t rows, std::size_t cols);
  static IntMatrix zeros(std::size_t rows, std::size_t cols) { return IntMatrix(rows, cols); }
  /// Anti-diagonal permutation matrix R_n.
  static IntMatrix back_identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return entries_.empty(); }

  value_type operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  value_type& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  value_type at(std::size_t r, std::size_t c) const;

  std::span<const value_type> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }
  std::span<const value_type> entries() const { return entries_; }

  /// Copy of the rows x cols window starting at (r0, c0).
  IntMatrix block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const;

  bool is_symmetric() const;
  /// True iff every entry is 0 or 1.
  bool is_binary() const;

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<value_type> entries_;
};

IntMatrix add(const IntMatrix& a, const IntMatrix& b);
IntMatrix sub(const IntMatrix& a, const IntMatrix& b);
IntMatrix negate(const IntMatrix& a);
IntMatrix scalar_mul(std::int64_t s, const IntMatrix& a);
IntMatrix mul(const IntMatrix& a, const IntMatrix& b);
IntMatrix transpose(const IntMatrix& a);
IntMatrix kron(const IntMatrix& a, const IntMatrix& b);
/// a^e for square a and e >= 0.
IntMatrix power(const IntMatrix& a, unsigned e);
std::int64_t trace(const IntMatrix& a);

/// Assembles a grid of blocks. Blocks in one grid row must share a height and
/// blocks in one grid column must share a width.
IntMatrix block_compose(const std::vector<std::vector<IntMatrix>>& grid);

inline IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) { return add(a, b); }
inline IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) { return sub(a, b); }
inline IntMatrix operator-(const IntMatrix& a) { return negate(a); }
inline IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) { return mul(a, b); }
inline IntMatrix operator*(std::int64_t s, const IntMatrix& a) { return scalar_mul(s, a); }

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

}  // namespace hoffdig
