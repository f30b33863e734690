#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "cremona/verifier/report.hpp"
#include "cremona/verifier/suites.hpp"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of finite automorphism groups of rational surfaces"};
  app.require_subcommand(1);

  std::string suite;
  std::string format = "markdown";
  std::uint64_t seed = 1;
  std::size_t cap = cremona::kDefaultClosureCap;
  std::string out_path;

  auto* run = app.add_subcommand("run", "Run a verification suite and print the report");
  run->add_option("--suite", suite, "Suite to run")->required()->check(CLI::IsMember(cremona::suite_names()));
  run->add_option("--format", format, "Report format")->check(CLI::IsMember({"md", "markdown", "json"}));
  run->add_option("--seed", seed, "Seed for randomized checks")->capture_default_str();
  run->add_option("--cap", cap, "Maximum group size during closures")->capture_default_str()->check(CLI::PositiveNumber);
  run->add_option("--out", out_path, "Write the report to this file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const auto report = cremona::run_suite(suite, seed, cap);
  const std::string text = cremona::render_report(report, *cremona::parse_report_format(format));
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot open " << out_path << " for writing\n";
      return kExitUsage;
    }
    out << text;
  }
  return report.ok() ? 0 : kExitFailure;
}
