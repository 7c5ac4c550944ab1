#pragma once

#include "parageom/scalar.hpp"

#include <json.hpp>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace parageom::report {

using json = nlohmann::json;
using Params = std::map<std::string, Scalar>;

/// Bad case/parameter combination; the driver maps it to exit code 2.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Row {
  std::string case_name;
  std::string operation;
  std::string check;
  json inputs = json::object();
  json outputs = json::object();
  json expected;  // null when nothing was printed for this quantity
  std::string citation;
  bool match = true;

  json to_json() const;
};

/// "k=v,k=v" with rational values.
Params parse_params(const std::string& text);

const std::vector<std::string>& subcommands();

/// Rows for one subcommand on one case, in emission order.
std::vector<Row> run(const std::string& subcommand, const std::string& case_name, const Params& params,
                     std::uint64_t seed);

/// Every applicable subcommand over the whole catalog.
std::vector<Row> report_all(std::uint64_t seed);

/// Stable sort by case name, then operation.
void sort_rows(std::vector<Row>& rows);

std::string pretty_table(const std::vector<Row>& rows);

}  // namespace parageom::report
