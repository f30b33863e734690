#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cremona {

enum class CheckStatus { pass, fail, erratum_note };

std::string_view to_string(CheckStatus s);

/// One executed check. `reference` names the claim being checked and is
/// serialized as the "paper_ref" field.
struct CheckResult {
  std::string id;
  std::string reference;
  std::string expected;
  std::string actual;
  CheckStatus status = CheckStatus::fail;
  double runtime_ms = 0.0;
};

/// A row of the maximal-order table. `order` is the computed order, absent if
/// the backing check did not produce one.
struct TableRow {
  std::string surface;
  std::string structure;
  std::optional<long> order;
  std::vector<std::string> check_ids;
  CheckStatus status = CheckStatus::fail;
};

struct ReportSummary {
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t erratum_notes = 0;

  friend bool operator==(const ReportSummary&, const ReportSummary&) = default;
};

struct VerificationReport {
  std::string suite;
  std::uint64_t seed = 1;
  std::vector<CheckResult> checks;  // sorted by id
  std::vector<TableRow> table;

  ReportSummary summary() const;
  /// No check has status fail.
  bool ok() const { return summary().failed == 0; }
};

enum class ReportFormat { json, markdown };

/// "json", "md" or "markdown".
std::optional<ReportFormat> parse_report_format(std::string_view name);

/// JSON: {suite, seed, checks: [{id, paper_ref, expected, actual, status,
/// runtime_ms}], table: [{surface, structure, order, status}]}.
/// Markdown: the Surface | Structure | Order | Status table followed by the
/// per-check table.
std::string render_report(const VerificationReport& report, ReportFormat format);

}  // namespace cremona
