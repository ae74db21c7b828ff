#pragma once

// Command-line front end.  A job is a parameter set plus an ordered task
// list; every task emits flat records with a fixed field schema, rendered as
// an aligned table, as key=value lines, or as CSV.  Output for a given job is
// byte-identical across runs; timing goes to the diagnostic stream only.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "udrf/groups.hpp"

namespace udrf {

struct JobConfig {
  std::optional<int> n, m, alpha, beta, gamma, p;
  std::vector<int> ell_list;          // empty: all ell in [1, n/2 - 1]
  std::vector<std::string> tasks;     // executed in order
  std::string output = "table";       // table | records | csv
  std::string out_path;               // empty: stdout
  int max_prime = 1000;
};

extern const std::vector<std::string> kTaskNames;
extern const std::vector<std::string> kRecordFields;

struct Record {
  std::string task;
  std::optional<int> n, m, alpha, beta, gamma, p, ell, rep_id, d1, d2;
  std::string udr;
  std::string kernel;
  std::optional<int> dioph_A, dioph_B, fusion_gcd;
  std::string verdict;
};

std::string record_to_kv(const Record& r);
std::string record_to_csv(const Record& r);
std::string csv_header();

// Throws ParamError on malformed files or unknown keys.
JobConfig parse_config_file(const std::string& path);
// argv-style arguments (without the program name); flags override config.
JobConfig parse_args(const std::vector<std::string>& args);

// Exit code: 0 all verified, 1 some task refuted, 2 invalid input,
// 3 internal consistency failure.
int run(const JobConfig& cfg, std::ostream& out, std::ostream& diag);

int cli_main(int argc, char** argv);

std::string usage_text();

}  // namespace udrf
