#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace hoffdig::cli {

enum class Status { pass, fail, error };

const char* to_string(Status s);

struct Check {
  std::string name;
  bool ok = false;
  std::optional<std::string> witness;
  std::optional<std::string> value;
};

/// A titled block of free text, e.g. a spectrum or a matrix.
struct Section {
  std::string title;
  std::vector<std::string> lines;
};

struct Report {
  std::string command;
  std::vector<Check> checks;
  std::vector<Section> sections;
  std::vector<std::string> outputs;
  std::optional<std::string> error;

  Check& add(std::string name, bool ok, std::optional<std::string> witness = std::nullopt,
             std::optional<std::string> value = std::nullopt);
  Status status() const;
  int exit_code() const;
};

void write_text(std::ostream& out, const Report& r);
void write_json(std::ostream& out, const Report& r);

}  // namespace hoffdig::cli
