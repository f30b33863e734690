#include "cremona/verifier/report.hpp"

#include <sstream>

#include "json.hpp"

namespace cremona {

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::erratum_note:
      return "erratum-note";
  }
  return "fail";
}

ReportSummary VerificationReport::summary() const {
  ReportSummary s;
  for (const auto& c : checks) {
    switch (c.status) {
      case CheckStatus::pass:
        ++s.passed;
        break;
      case CheckStatus::fail:
        ++s.failed;
        break;
      case CheckStatus::erratum_note:
        ++s.erratum_notes;
        break;
    }
  }
  return s;
}

std::optional<ReportFormat> parse_report_format(std::string_view name) {
  if (name == "json") return ReportFormat::json;
  if (name == "md" || name == "markdown") return ReportFormat::markdown;
  return std::nullopt;
}

namespace {

std::string render_json(const VerificationReport& r) {
  nlohmann::ordered_json out;
  out["suite"] = r.suite;
  out["seed"] = r.seed;
  out["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json j;
    j["id"] = c.id;
    j["paper_ref"] = c.reference;
    j["expected"] = c.expected;
    j["actual"] = c.actual;
    j["status"] = to_string(c.status);
    j["runtime_ms"] = c.runtime_ms;
    out["checks"].push_back(std::move(j));
  }
  out["table"] = nlohmann::ordered_json::array();
  for (const auto& row : r.table) {
    nlohmann::ordered_json j;
    j["surface"] = row.surface;
    j["structure"] = row.structure;
    j["order"] = row.order ? nlohmann::ordered_json(*row.order) : nlohmann::ordered_json(nullptr);
    j["status"] = to_string(row.status);
    out["table"].push_back(std::move(j));
  }
  return out.dump(2) + "\n";
}

// Pipes would split a markdown cell.
std::string cell(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += "\\|";
    else if (c == '\n') out += ' ';
    else out += c;
  }
  return out;
}

std::string render_markdown(const VerificationReport& r) {
  std::ostringstream os;
  os << "| Surface | Structure | Order | Status |\n";
  os << "|---|---|---|---|\n";
  for (const auto& row : r.table) {
    os << "| " << cell(row.surface) << " | " << cell(row.structure) << " | "
       << (row.order ? std::to_string(*row.order) : std::string("-")) << " | " << to_string(row.status) << " |\n";
  }
  os << "\n| Check | Expected | Actual | Status |\n";
  os << "|---|---|---|---|\n";
  for (const auto& c : r.checks) {
    os << "| " << cell(c.id) << " | " << cell(c.expected) << " | " << cell(c.actual) << " | " << to_string(c.status)
       << " |\n";
  }
  return os.str();
}

}  // namespace

std::string render_report(const VerificationReport& report, ReportFormat format) {
  return format == ReportFormat::json ? render_json(report) : render_markdown(report);
}

}  // namespace cremona
