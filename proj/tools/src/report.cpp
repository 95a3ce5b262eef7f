#include "hoffdig_cli/report.hpp"

#include "json.hpp"

namespace hoffdig::cli {

const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::error: return "error";
  }
  return "error";
}

Check& Report::add(std::string name, bool ok, std::optional<std::string> witness, std::optional<std::string> value) {
  if (!ok && !witness) witness = "identity does not hold";
  checks.push_back({std::move(name), ok, std::move(witness), std::move(value)});
  return checks.back();
}

Status Report::status() const {
  if (error) return Status::error;
  for (const auto& c : checks) {
    if (!c.ok) return Status::fail;
  }
  return Status::pass;
}

int Report::exit_code() const {
  switch (status()) {
    case Status::pass: return 0;
    case Status::fail: return 1;
    case Status::error: return 2;
  }
  return 2;
}

void write_text(std::ostream& out, const Report& r) {
  out << r.command << ": " << to_string(r.status()) << '\n';
  if (r.error) out << "  error: " << *r.error << '\n';
  for (const auto& c : r.checks) {
    out << (c.ok ? "  pass  " : "  FAIL  ") << c.name;
    if (c.value) out << " = " << *c.value;
    if (!c.ok && c.witness) out << "  [" << *c.witness << "]";
    out << '\n';
  }
  for (const auto& s : r.sections) {
    out << s.title << ":\n";
    for (const auto& line : s.lines) out << "  " << line << '\n';
  }
  for (const auto& f : r.outputs) out << "wrote " << f << '\n';
}

void write_json(std::ostream& out, const Report& r) {
  nlohmann::ordered_json j;
  j["command"] = r.command;
  j["status"] = to_string(r.status());
  if (r.error) j["error"] = *r.error;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json cj;
    cj["name"] = c.name;
    cj["status"] = c.ok ? "pass" : "fail";
    if (c.witness) cj["witness"] = *c.witness;
    if (c.value) cj["value"] = *c.value;
    j["checks"].push_back(std::move(cj));
  }
  if (!r.sections.empty()) {
    nlohmann::ordered_json sj = nlohmann::ordered_json::object();
    for (const auto& s : r.sections) sj[s.title] = s.lines;
    j["data"] = std::move(sj);
  }
  if (!r.outputs.empty()) j["outputs"] = r.outputs;
  out << j.dump(2) << '\n';
}

}  // namespace hoffdig::cli
