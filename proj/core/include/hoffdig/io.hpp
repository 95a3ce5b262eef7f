#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "hoffdig/digraph.hpp"
#include "hoffdig/gauss.hpp"
#include "hoffdig/int_matrix.hpp"

namespace hoffdig {

/// Malformed text input. line and column are 1-based (0 = unknown).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, std::size_t line, std::size_t column, const std::string& message);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

namespace io {

// MAT1: "rows cols" then `rows` lines of `cols` whitespace-separated integers.
IntMatrix read_mat1(std::istream& in, const std::string& source = "<stream>");
IntMatrix read_mat1(const std::filesystem::path& path);
void write_mat1(std::ostream& out, const IntMatrix& m);
void write_mat1(const std::filesystem::path& path, const IntMatrix& m);

// GMAT1: same layout, entries are Gaussian rationals such as 3, -1/2, 2i, 1/2-3/4i.
GaussMatrix read_gmat1(std::istream& in, const std::string& source = "<stream>");
GaussMatrix read_gmat1(const std::filesystem::path& path);
void write_gmat1(std::ostream& out, const GaussMatrix& m);
void write_gmat1(const std::filesystem::path& path, const GaussMatrix& m);

// BGW1: "size group_order" then `size` lines of `size` entries in
// 0..group_order, where 0 is the zero element and i stands for g^i.
struct Bgw1Table {
  std::int64_t group_order = 0;
  IntMatrix entries;
};
Bgw1Table read_bgw1(std::istream& in, const std::string& source = "<stream>");
Bgw1Table read_bgw1(const std::filesystem::path& path);
void write_bgw1(std::ostream& out, const Bgw1Table& table);
void write_bgw1(const std::filesystem::path& path, const Bgw1Table& table);

/// One line of whitespace-separated 0-based vertex indices.
VertexSet read_vertex_set(std::istream& in, const std::string& source = "<stream>");
VertexSet read_vertex_set(const std::filesystem::path& path);
/// One part per non-blank line.
std::vector<VertexSet> read_partition(std::istream& in, const std::string& source = "<stream>");
std::vector<VertexSet> read_partition(const std::filesystem::path& path);
void write_partition(std::ostream& out, const std::vector<VertexSet>& parts);
void write_partition(const std::filesystem::path& path, const std::vector<VertexSet>& parts);

/// Splits a line into tokens with their 1-based starting columns.
struct Token {
  std::string text;
  std::size_t column;
};
std::vector<Token> tokenize(const std::string& line);

}  // namespace io
}  // namespace hoffdig
