#include "hoffdig/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>

#include "hoffdig/checked.hpp"

namespace hoffdig {

ParseError::ParseError(const std::string& source, std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace io {

namespace {

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "' for reading");
  return in;
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  return out;
}

// Reads lines, skipping blank ones, keeping the physical line number.
struct LineReader {
  std::istream& in;
  std::size_t number = 0;

  bool next(std::string& line) {
    while (std::getline(in, line)) {
      ++number;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.find_first_not_of(" \t") != std::string::npos) return true;
    }
    return false;
  }
};

std::int64_t to_int(const Token& tok, const std::string& source, std::size_t line) {
  std::string_view text = tok.text;
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw ParseError(source, line, tok.column, "expected an integer, got '" + tok.text + "'");
  }
  return v;
}

std::size_t to_count(const Token& tok, const std::string& source, std::size_t line) {
  auto v = to_int(tok, source, line);
  if (v < 0) throw ParseError(source, line, tok.column, "expected a non-negative count, got '" + tok.text + "'");
  return static_cast<std::size_t>(v);
}

std::pair<std::size_t, std::size_t> read_header(LineReader& reader, const std::string& source,
                                                const char* format) {
  std::string line;
  if (!reader.next(line)) throw ParseError(source, reader.number + 1, 1, std::string("missing ") + format + " header");
  auto toks = tokenize(line);
  if (toks.size() != 2) {
    throw ParseError(source, reader.number, toks.empty() ? 1 : toks.front().column,
                     std::string(format) + " header must be 'rows cols'");
  }
  return {to_count(toks[0], source, reader.number), to_count(toks[1], source, reader.number)};
}

template <typename Entry, typename Convert>
std::vector<Entry> read_body(LineReader& reader, const std::string& source, std::size_t rows, std::size_t cols,
                             Convert convert) {
  std::vector<Entry> entries;
  entries.reserve(rows * cols);
  std::string line;
  for (std::size_t r = 0; r < rows; ++r) {
    if (!reader.next(line)) {
      throw ParseError(source, reader.number + 1, 1,
                       "expected " + std::to_string(rows) + " rows, found " + std::to_string(r));
    }
    auto toks = tokenize(line);
    if (toks.size() != cols) {
      std::size_t col = toks.size() > cols ? toks[cols].column : line.size() + 1;
      throw ParseError(source, reader.number, col,
                       "expected " + std::to_string(cols) + " entries, found " + std::to_string(toks.size()));
    }
    for (const auto& tok : toks) entries.push_back(convert(tok, reader.number));
  }
  if (reader.next(line)) throw ParseError(source, reader.number, 1, "trailing content after matrix body");
  return entries;
}

}  // namespace

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i >= line.size()) break;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

IntMatrix read_mat1(std::istream& in, const std::string& source) {
  LineReader reader{in};
  auto [rows, cols] = read_header(reader, source, "MAT1");
  auto entries = read_body<std::int64_t>(reader, source, rows, cols, [&](const Token& tok, std::size_t line) {
    return to_int(tok, source, line);
  });
  return IntMatrix(rows, cols, std::move(entries));
}

IntMatrix read_mat1(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_mat1(in, path.string());
}

void write_mat1(std::ostream& out, const IntMatrix& m) {
  out << m.rows() << ' ' << m.cols() << '\n' << m;
}

void write_mat1(const std::filesystem::path& path, const IntMatrix& m) {
  auto out = open_output(path);
  write_mat1(out, m);
}

GaussMatrix read_gmat1(std::istream& in, const std::string& source) {
  LineReader reader{in};
  auto [rows, cols] = read_header(reader, source, "GMAT1");
  auto entries = read_body<GaussRational>(reader, source, rows, cols, [&](const Token& tok, std::size_t line) {
    try {
      return GaussRational::parse(tok.text);
    } catch (const std::exception& e) {
      throw ParseError(source, line, tok.column, "bad Gaussian rational '" + tok.text + "': " + e.what());
    }
  });
  return GaussMatrix(rows, cols, std::move(entries));
}

GaussMatrix read_gmat1(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_gmat1(in, path.string());
}

void write_gmat1(std::ostream& out, const GaussMatrix& m) {
  out << m.rows() << ' ' << m.cols() << '\n' << m;
}

void write_gmat1(const std::filesystem::path& path, const GaussMatrix& m) {
  auto out = open_output(path);
  write_gmat1(out, m);
}

Bgw1Table read_bgw1(std::istream& in, const std::string& source) {
  LineReader reader{in};
  auto [size, order] = read_header(reader, source, "BGW1");
  if (order == 0) throw ParseError(source, reader.number, 1, "group order must be positive");
  const auto m = static_cast<std::int64_t>(order);
  auto entries = read_body<std::int64_t>(reader, source, size, size, [&](const Token& tok, std::size_t line) {
    const auto v = to_int(tok, source, line);
    if (v < 0 || v > m) {
      throw ParseError(source, line, tok.column, "entry " + tok.text + " outside 0.." + std::to_string(m));
    }
    return v;
  });
  return {m, IntMatrix(size, size, std::move(entries))};
}

Bgw1Table read_bgw1(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_bgw1(in, path.string());
}

void write_bgw1(std::ostream& out, const Bgw1Table& table) {
  out << table.entries.rows() << ' ' << table.group_order << '\n' << table.entries;
}

void write_bgw1(const std::filesystem::path& path, const Bgw1Table& table) {
  auto out = open_output(path);
  write_bgw1(out, table);
}

VertexSet read_vertex_set(std::istream& in, const std::string& source) {
  LineReader reader{in};
  std::string line;
  VertexSet out;
  if (!reader.next(line)) return out;
  for (const auto& tok : tokenize(line)) out.push_back(to_count(tok, source, reader.number));
  if (reader.next(line)) throw ParseError(source, reader.number, 1, "vertex-set file must hold a single line");
  return out;
}

VertexSet read_vertex_set(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_vertex_set(in, path.string());
}

std::vector<VertexSet> read_partition(std::istream& in, const std::string& source) {
  LineReader reader{in};
  std::string line;
  std::vector<VertexSet> parts;
  while (reader.next(line)) {
    VertexSet part;
    for (const auto& tok : tokenize(line)) part.push_back(to_count(tok, source, reader.number));
    parts.push_back(std::move(part));
  }
  return parts;
}

std::vector<VertexSet> read_partition(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_partition(in, path.string());
}

void write_partition(std::ostream& out, const std::vector<VertexSet>& parts) {
  for (const auto& part : parts) {
    for (std::size_t i = 0; i < part.size(); ++i) out << (i ? " " : "") << part[i];
    out << '\n';
  }
}

void write_partition(const std::filesystem::path& path, const std::vector<VertexSet>& parts) {
  auto out = open_output(path);
  write_partition(out, parts);
}

}  // namespace io
}  // namespace hoffdig
