#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "doctest.h"
#include "udrf/cli.hpp"

using namespace udrf;

namespace {

// Writes content to a scratch file in the working directory and removes it
// when the scope ends.
struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name, const std::string& content)
      : path(name) {
    std::ofstream out(path);
    out << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

int run_job(const JobConfig& cfg, std::string* out_text = nullptr) {
  std::ostringstream out, diag;
  const int code = run(cfg, out, diag);
  if (out_text) *out_text = out.str();
  return code;
}

JobConfig small_config() {
  JobConfig cfg;
  cfg.n = 4;
  cfg.m = 2;
  cfg.alpha = 1;
  cfg.beta = 0;
  cfg.gamma = 0;
  return cfg;
}

}  // namespace

TEST_CASE("config file parsing") {
  const TempFile file("cli_test_config.tmp",
                      "# scratch job\n"
                      "n = 4\n"
                      "m=2\n"
                      "  alpha = 1  \n"
                      "\n"
                      "tasks = check-embeddable, characters\n"
                      "ell_list = 1\n"
                      "output = csv\n"
                      "max_prime = 200\n");
  const JobConfig cfg = parse_config_file(file.path);
  CHECK(cfg.n == 4);
  CHECK(cfg.m == 2);
  CHECK(cfg.alpha == 1);
  CHECK_FALSE(cfg.beta.has_value());
  CHECK(cfg.tasks == std::vector<std::string>{"check-embeddable", "characters"});
  CHECK(cfg.ell_list == std::vector<int>{1});
  CHECK(cfg.output == "csv");
  CHECK(cfg.max_prime == 200);

  const TempFile bad_key("cli_test_badkey.tmp", "frobnicate = 3\n");
  CHECK_THROWS_AS(parse_config_file(bad_key.path), ParamError);
  const TempFile bad_line("cli_test_badline.tmp", "just words\n");
  CHECK_THROWS_AS(parse_config_file(bad_line.path), ParamError);
  const TempFile bad_task("cli_test_badtask.tmp", "tasks = frobnicate\n");
  CHECK_THROWS_AS(parse_config_file(bad_task.path), ParamError);
  const TempFile bad_int("cli_test_badint.tmp", "n = four\n");
  CHECK_THROWS_AS(parse_config_file(bad_int.path), ParamError);
  CHECK_THROWS_AS(parse_config_file("no_such_file.tmp"), ParamError);
}

TEST_CASE("argument parsing") {
  const JobConfig cfg = parse_args(
      {"--n", "6", "--m", "2", "--gamma", "1", "--ell", "1,2",
       "--task", "fusion,kernels", "--output", "records"});
  CHECK(cfg.n == 6);
  CHECK(cfg.gamma == 1);
  CHECK(cfg.ell_list == std::vector<int>{1, 2});
  CHECK(cfg.tasks == std::vector<std::string>{"fusion", "kernels"});
  CHECK(cfg.output == "records");

  // flags override the config file
  const TempFile file("cli_test_override.tmp", "n = 4\nm = 2\nalpha = 0\n");
  const JobConfig merged =
      parse_args({"--config", file.path, "--alpha", "1"});
  CHECK(merged.n == 4);
  CHECK(merged.alpha == 1);

  CHECK_THROWS_AS(parse_args({"--frobnicate", "1"}), ParamError);
  CHECK_THROWS_AS(parse_args({"--n"}), ParamError);
  CHECK_THROWS_AS(parse_args({"stray"}), ParamError);
  CHECK_THROWS_AS(parse_args({"--task", "frobnicate"}), ParamError);
}

TEST_CASE("record rendering") {
  Record r;
  r.task = "kernels";
  r.n = 4;
  r.p = 17;
  r.kernel = "0,0,0;0,0,1";
  CHECK(record_to_kv(r) == "task=kernels n=4 p=17 kernel=0,0,0;0,0,1");

  const std::string csv = record_to_csv(r);
  // the kernel contains commas, so CSV must quote it (plain fields stay bare)
  CHECK(csv.find("\"0,0,0;0,0,1\"") != std::string::npos);
  CHECK(csv.substr(0, 10) == "kernels,4,");

  CHECK(csv_header().substr(0, 22) == "task,n,m,alpha,beta,ga");
  std::size_t commas = 0;
  for (char c : csv_header())
    if (c == ',') ++commas;
  CHECK(commas == kRecordFields.size() - 1);
}

TEST_CASE("run exit codes") {
  {
    JobConfig cfg;  // no tasks at all
    std::string text;
    CHECK(run_job(cfg, &text) == 0);
    CHECK(text.empty());
  }
  {
    JobConfig cfg = small_config();
    cfg.tasks = {"check-embeddable"};
    std::string text;
    CHECK(run_job(cfg, &text) == 0);
    CHECK(text.find("verified") != std::string::npos);
  }
  {
    JobConfig cfg = small_config();
    cfg.alpha = 0;  // (4,2,0,0,0) does not embed
    cfg.tasks = {"check-embeddable"};
    std::string text;
    CHECK(run_job(cfg, &text) == 1);
    CHECK(text.find("refuted") != std::string::npos);
  }
  {
    JobConfig cfg = small_config();
    cfg.n = 5;
    cfg.alpha = 0;  // odd n: outside the supported regime
    cfg.tasks = {"check-embeddable"};
    std::string text;
    CHECK(run_job(cfg, &text) == 2);
    CHECK(text.find("unsupported-regime") != std::string::npos);
  }
  {
    JobConfig cfg = small_config();
    cfg.p = 11;  // not 1 mod lcm(2n, 2m)
    cfg.tasks = {"characters"};
    CHECK(run_job(cfg) == 2);
  }
  {
    JobConfig cfg = small_config();
    cfg.tasks = {"frobnicate"};
    CHECK(run_job(cfg) == 2);
  }
  {
    JobConfig cfg = small_config();
    cfg.tasks = {"characters"};
    cfg.output = "yaml";
    CHECK(run_job(cfg) == 2);
  }
  {
    JobConfig cfg = small_config();
    cfg.tasks = {"kernels"};
    cfg.ell_list = {4};  // rho_4 is reducible for n = 4
    CHECK(run_job(cfg) == 2);
  }
}

TEST_CASE("output formats") {
  JobConfig cfg = small_config();
  cfg.tasks = {"check-embeddable", "kernels"};

  cfg.output = "records";
  std::string records;
  REQUIRE(run_job(cfg, &records) == 0);
  CHECK(records.find("task=check-embeddable") != std::string::npos);
  CHECK(records.find("task=kernels") != std::string::npos);
  CHECK(records.find("dioph_A=") != std::string::npos);
  CHECK(records.find("ell=1") != std::string::npos);

  cfg.output = "csv";
  std::string csv;
  REQUIRE(run_job(cfg, &csv) == 0);
  // header appears exactly once even across several tasks
  const std::string header = csv_header() + "\n";
  CHECK(csv.substr(0, header.size()) == header);
  CHECK(csv.find(header, header.size()) == std::string::npos);
  // 1 check-embeddable record + kernels for ell=1, twists 0 and 1
  std::size_t lines = 0;
  for (char c : csv)
    if (c == '\n') ++lines;
  CHECK(lines == 4);

  cfg.output = "table";
  std::string table;
  REQUIRE(run_job(cfg, &table) == 0);
  CHECK(table.find("task") != std::string::npos);
  CHECK(table.find("verdict") != std::string::npos);

  // byte-identical across runs
  std::string again;
  REQUIRE(run_job(cfg, &again) == 0);
  CHECK(table == again);
}

TEST_CASE("output to a file") {
  JobConfig cfg = small_config();
  cfg.tasks = {"characters"};
  cfg.output = "records";
  cfg.out_path = "cli_test_out.tmp";
  CHECK(run_job(cfg) == 0);
  std::ifstream in(cfg.out_path);
  REQUIRE(static_cast<bool>(in));
  std::string line;
  std::getline(in, line);
  CHECK(line.find("task=characters") != std::string::npos);
  in.close();
  std::remove(cfg.out_path.c_str());

  cfg.out_path = "no_such_dir/cli_test_out.tmp";
  CHECK(run_job(cfg) == 2);
}

TEST_CASE("bundled example job") {
  JobConfig cfg;
  cfg.tasks = {"paper-example"};
  std::string text;
  REQUIRE(run_job(cfg, &text) == 0);
  CHECK(text.find("step rule: 12σ - 2τ") != std::string::npos);
  CHECK(text.find("period: 12") != std::string::npos);
  CHECK(text.find("ell=5 equation list matches ell=1: yes") != std::string::npos);
  CHECK(text.find("ell=5 kernel set matches ell=1: no") != std::string::npos);
  CHECK(text.find("verdict: verified") != std::string::npos);
  CHECK(text.find("18σ + τ") != std::string::npos);  // top left cell

  cfg.output = "records";
  std::string records;
  REQUIRE(run_job(cfg, &records) == 0);
  CHECK(records.find("verdict=verified") != std::string::npos);
  // 52 grid cells + 13 ell=5 rows + step-rule record + summary record
  std::size_t lines = 0;
  for (char c : records)
    if (c == '\n') ++lines;
  CHECK(lines == 67);
}

TEST_CASE("top-level entry point") {
  // keep the test log clean while exercising the real entry point
  std::ostringstream captured_out, captured_err;
  auto* old_out = std::cout.rdbuf(captured_out.rdbuf());
  auto* old_err = std::cerr.rdbuf(captured_err.rdbuf());

  {
    const char* argv[] = {"udrfusion", "--help"};
    CHECK(cli_main(2, const_cast<char**>(argv)) == 0);
  }
  {
    const char* argv[] = {"udrfusion", "--frobnicate", "1"};
    CHECK(cli_main(3, const_cast<char**>(argv)) == 2);
  }

  std::cout.rdbuf(old_out);
  std::cerr.rdbuf(old_err);
  CHECK(captured_out.str().find("usage:") != std::string::npos);
  CHECK(captured_err.str().find("--help for usage") != std::string::npos);

  const std::string usage = usage_text();
  for (const std::string& task : kTaskNames)
    CHECK(usage.find(task) != std::string::npos);
}
