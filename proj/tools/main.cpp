#include "report.hpp"

#include "parageom/errors.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace parageom;
using report::Row;

int main(int argc, char** argv) {
  CLI::App app{"parageom: exact verification of para-complex structure classifications"};
  app.require_subcommand(1, 1);
  std::string case_name, params, json_path;
  std::uint64_t seed = 1;
  bool pretty = false;

  for (const auto& name : report::subcommands()) {
    auto* sub = app.add_subcommand(name);
    if (name != "report-all") sub->add_option("--case", case_name, "case name")->required();
    if (name != "report-all") sub->add_option("--params", params, "k=v[,k=v]");
    sub->add_option("--json", json_path, "also write JSON lines to PATH");
    sub->add_option("--seed", seed, "seed for sampled levels");
    sub->add_flag("--pretty", pretty, "human-readable table instead of JSON lines");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return e.get_exit_code() == 0 ? rc : 2;
  }

  std::vector<Row> rows;
  try {
    const std::string sub = app.get_subcommands().front()->get_name();
    if (sub == "report-all") {
      rows = report::report_all(seed);
    } else {
      rows = report::run(sub, case_name, report::parse_params(params), seed);
      report::sort_rows(rows);
    }
  } catch (const report::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceError& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }

  std::ofstream file;
  if (!json_path.empty()) {
    file.open(json_path);
    if (!file) {
      std::cerr << "cannot write " << json_path << "\n";
      return 2;
    }
  }
  bool all = true;
  for (const auto& r : rows) {
    all = all && r.match;
    std::string line = r.to_json().dump();
    if (!pretty) std::cout << line << "\n";
    if (file) file << line << "\n";
  }
  if (pretty) std::cout << report::pretty_table(rows);
  return all ? 0 : 1;
}
