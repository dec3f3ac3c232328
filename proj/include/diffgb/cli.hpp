#ifndef DIFFGB_CLI_HPP
#define DIFFGB_CLI_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace diffgb {

/// Inclusive integer range "a..b"; a single integer "a" means a..a.
struct Range {
  int lo;
  int hi;

  /// Throws std::invalid_argument on malformed or empty ranges.
  static Range parse(std::string_view text);
  std::string to_string() const;
};

struct RunConfig {
  std::string command;
  std::string ideal = "x2";
  std::string order = "wrevlex";
  /// Defaults to 9 for x2 and 8 for xy.
  std::optional<int> weight_bound;
  int series_order = 100;
  std::string name;
  std::string range = "1..200";
  std::string j = "1";
  std::string k = "1";
  int n = 1;
  int l = 1;
  int s = 1;
  int i = 1;
  bool check = false;
  /// twocolor only: restrict every part to be >= j.
  bool shifted = false;
  std::string format = "table";
  std::string out;

  nlohmann::json to_json() const;
};

struct Report {
  std::string command;
  nlohmann::json config;
  nlohmann::json results = nlohmann::json::array();
  bool pass = true;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> notes;

  int exit_code() const { return pass ? 0 : 1; }
  /// {"command", "config", "results", "pass"}.
  nlohmann::json envelope() const;
  /// format is table, json or csv.
  std::string render(std::string_view format) const;
};

/// rr, rrnm1, rrnm2 (over --k), twocolor (over --j).
Report cmd_identity(const RunConfig& cfg);
/// x2 or xy under wlex or wrevlex; xy with wlex is rejected.
Report cmd_gb(const RunConfig& cfg);
Report cmd_witness(const RunConfig& cfg);
/// hnl, hk, rr_sum, node, partition, two_color_left, ab.
Report cmd_series(const RunConfig& cfg);
Report cmd_partitions(const RunConfig& cfg);

/// Dispatches on cfg.command. Bad input raises std::invalid_argument.
Report run(const RunConfig& cfg);

}  // namespace diffgb

#endif  // DIFFGB_CLI_HPP
