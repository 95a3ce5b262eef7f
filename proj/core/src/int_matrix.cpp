#include "hoffdig/int_matrix.hpp"

#include <ostream>

#include "hoffdig/checked.hpp"

namespace hoffdig {

namespace {

std::string shape(const IntMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void require_same_shape(const IntMatrix& a, const IntMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError(std::string(op) + ": shape mismatch " + shape(a) + " vs " + shape(b));
  }
}

}  // namespace

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, value_type fill)
    : rows_(rows), cols_(cols), entries_(rows * cols, fill) {}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<value_type> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) {
    throw DimensionError("entry count " + std::to_string(entries_.size()) + " does not match " +
                         std::to_string(rows) + "x" + std::to_string(cols));
  }
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<value_type>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged initializer list");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::all_ones(std::size_t rows, std::size_t cols) { return IntMatrix(rows, cols, 1); }

IntMatrix IntMatrix::back_identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, n - 1 - i) = 1;
  return m;
}

IntMatrix::value_type IntMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) {
    throw std::out_of_range("index (" + std::to_string(r) + "," + std::to_string(c) +
                            ") outside " + shape(*this));
  }
  return (*this)(r, c);
}

IntMatrix IntMatrix::block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const {
  if (r0 + rows > rows_ || c0 + cols > cols_) throw DimensionError("block window outside matrix");
  IntMatrix out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
  }
  return out;
}

bool IntMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i + 1; j < cols_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

bool IntMatrix::is_binary() const {
  for (auto v : entries_) {
    if (v != 0 && v != 1) return false;
  }
  return true;
}

IntMatrix add(const IntMatrix& a, const IntMatrix& b) {
  require_same_shape(a, b, "add");
  IntMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = checked::add(a(i, j), b(i, j));
  }
  return out;
}

IntMatrix sub(const IntMatrix& a, const IntMatrix& b) {
  require_same_shape(a, b, "sub");
  IntMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = checked::sub(a(i, j), b(i, j));
  }
  return out;
}

IntMatrix negate(const IntMatrix& a) { return scalar_mul(-1, a); }

IntMatrix scalar_mul(std::int64_t s, const IntMatrix& a) {
  IntMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = checked::mul(s, a(i, j));
  }
  return out;
}

IntMatrix mul(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("mul: " + shape(a) + " times " + shape(b));
  const std::size_t n = a.rows(), m = a.cols(), p = b.cols();
  IntMatrix out(n, p);
  std::vector<__int128> acc(p);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < m; ++k) {
      const std::int64_t aik = a(i, k);
      if (aik == 0) continue;  // most inputs are sparse 0/1 or 0/+-1 matrices
      auto brow = b.row(k);
      // each product fits in 2^126; the running sum is still checked
      for (std::size_t j = 0; j < p; ++j) {
        acc[j] = checked::add128(acc[j], static_cast<__int128>(aik) * brow[j]);
      }
    }
    for (std::size_t j = 0; j < p; ++j) out(i, j) = checked::narrow(acc[j]);
  }
  return out;
}

IntMatrix transpose(const IntMatrix& a) {
  IntMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  }
  return out;
}

IntMatrix kron(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const auto aij = a(i, j);
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          out(i * b.rows() + k, j * b.cols() + l) = checked::mul(aij, b(k, l));
        }
      }
    }
  }
  return out;
}

IntMatrix power(const IntMatrix& a, unsigned e) {
  if (!a.is_square()) throw DimensionError("power of non-square matrix " + shape(a));
  IntMatrix result = IntMatrix::identity(a.rows());
  IntMatrix base = a;
  while (e > 0) {
    if (e & 1U) result = mul(result, base);
    e >>= 1U;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

std::int64_t trace(const IntMatrix& a) {
  if (!a.is_square()) throw DimensionError("trace of non-square matrix " + shape(a));
  std::int64_t t = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) t = checked::add(t, a(i, i));
  return t;
}

IntMatrix block_compose(const std::vector<std::vector<IntMatrix>>& grid) {
  if (grid.empty()) return {};
  const std::size_t grid_cols = grid.front().size();
  std::vector<std::size_t> heights(grid.size()), widths(grid_cols);
  for (std::size_t gi = 0; gi < grid.size(); ++gi) {
    if (grid[gi].size() != grid_cols) throw DimensionError("block_compose: ragged grid");
    for (std::size_t gj = 0; gj < grid_cols; ++gj) {
      const auto& blk = grid[gi][gj];
      if (gj == 0) heights[gi] = blk.rows();
      if (gi == 0) widths[gj] = blk.cols();
      if (blk.rows() != heights[gi]) {
        throw DimensionError("block_compose: block (" + std::to_string(gi) + "," + std::to_string(gj) +
                             ") height " + std::to_string(blk.rows()) + " != row height " +
                             std::to_string(heights[gi]));
      }
      if (blk.cols() != widths[gj]) {
        throw DimensionError("block_compose: block (" + std::to_string(gi) + "," + std::to_string(gj) +
                             ") width " + std::to_string(blk.cols()) + " != column width " +
                             std::to_string(widths[gj]));
      }
    }
  }
  std::size_t total_rows = 0, total_cols = 0;
  for (auto h : heights) total_rows += h;
  for (auto w : widths) total_cols += w;
  IntMatrix out(total_rows, total_cols);
  std::size_t r0 = 0;
  for (std::size_t gi = 0; gi < grid.size(); ++gi) {
    std::size_t c0 = 0;
    for (std::size_t gj = 0; gj < grid_cols; ++gj) {
      const auto& blk = grid[gi][gj];
      for (std::size_t i = 0; i < blk.rows(); ++i) {
        for (std::size_t j = 0; j < blk.cols(); ++j) out(r0 + i, c0 + j) = blk(i, j);
      }
      c0 += widths[gj];
    }
    r0 += heights[gi];
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
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
