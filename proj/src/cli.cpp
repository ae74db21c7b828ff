#include "udrf/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include "udrf/cohomology.hpp"
#include "udrf/ffield.hpp"
#include "udrf/fusion.hpp"
#include "udrf/reps.hpp"
#include "udrf/verify.hpp"

namespace udrf {

const std::vector<std::string> kTaskNames = {
    "check-embeddable", "enumerate-reps", "characters",  "udr-table",
    "fusion",           "kernels",        "verify-thm1", "verify-thm2",
    "paper-example",    "sweep"};

const std::vector<std::string> kRecordFields = {
    "task",   "n",  "m",  "alpha",   "beta",    "gamma",      "p",
    "ell",    "rep_id", "d1", "d2",  "udr",     "kernel",     "dioph_A",
    "dioph_B", "fusion_gcd", "verdict"};

namespace {

std::string opt_str(const std::optional<int>& v) {
  return v ? std::to_string(*v) : std::string();
}

std::vector<std::string> record_values(const Record& r) {
  return {r.task,
          opt_str(r.n),
          opt_str(r.m),
          opt_str(r.alpha),
          opt_str(r.beta),
          opt_str(r.gamma),
          opt_str(r.p),
          opt_str(r.ell),
          opt_str(r.rep_id),
          opt_str(r.d1),
          opt_str(r.d2),
          r.udr,
          r.kernel,
          opt_str(r.dioph_A),
          opt_str(r.dioph_B),
          opt_str(r.fusion_gcd),
          r.verdict};
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

// Codepoint count; the only multibyte output characters are one column wide.
std::size_t display_width(const std::string& s) {
  std::size_t w = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++w;
  return w;
}

std::string pad_to(const std::string& s, std::size_t width) {
  std::string out = s;
  for (std::size_t w = display_width(s); w < width; ++w) out += ' ';
  return out;
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

int parse_int(const std::string& s, const std::string& what) {
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(s, &pos);
  } catch (const std::exception&) {
    throw ParamError("expected an integer for " + what + ", got \"" + s +
                     "\"");
  }
  if (pos != s.size())
    throw ParamError("expected an integer for " + what + ", got \"" + s +
                     "\"");
  return v;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, ',')) {
    cur = trim(cur);
    if (!cur.empty()) parts.push_back(cur);
  }
  return parts;
}

bool known_task(const std::string& t) {
  return std::find(kTaskNames.begin(), kTaskNames.end(), t) !=
         kTaskNames.end();
}

void check_output_format(const std::string& fmt) {
  if (fmt != "table" && fmt != "records" && fmt != "csv")
    throw ParamError("output format must be table, records, or csv, got \"" +
                     fmt + "\"");
}

// Shared by the config file and the command-line flags.
void set_key(JobConfig& cfg, const std::string& key, const std::string& value,
             const std::string& where) {
  if (key == "n")
    cfg.n = parse_int(value, where);
  else if (key == "m")
    cfg.m = parse_int(value, where);
  else if (key == "alpha")
    cfg.alpha = parse_int(value, where);
  else if (key == "beta")
    cfg.beta = parse_int(value, where);
  else if (key == "gamma")
    cfg.gamma = parse_int(value, where);
  else if (key == "p")
    cfg.p = parse_int(value, where);
  else if (key == "max_prime")
    cfg.max_prime = parse_int(value, where);
  else if (key == "ell_list") {
    cfg.ell_list.clear();
    for (const std::string& part : split_list(value))
      cfg.ell_list.push_back(parse_int(part, where));
  } else if (key == "tasks") {
    cfg.tasks.clear();
    for (const std::string& part : split_list(value)) {
      if (!known_task(part)) throw ParamError("unknown task \"" + part + "\"");
      cfg.tasks.push_back(part);
    }
  } else if (key == "output") {
    check_output_format(value);
    cfg.output = value;
  } else if (key == "out_path")
    cfg.out_path = value;
  else
    throw ParamError("unknown key \"" + key + "\" in " + where);
}

ExtensionParams require_params(const JobConfig& cfg, const std::string& task) {
  if (!cfg.n || !cfg.m) throw ParamError("task " + task + " requires n and m");
  return {*cfg.n, *cfg.m, cfg.alpha.value_or(0), cfg.beta.value_or(0),
          cfg.gamma.value_or(0)};
}

PrimeField resolve_field(const ExtensionParams& par, const JobConfig& cfg) {
  validate_params(par);
  if (cfg.p) {
    if (!valid_prime(par, *cfg.p))
      throw ParamError(
          "p = " + std::to_string(*cfg.p) +
          " is not a prime congruent to 1 mod lcm(2n, 2m) and coprime to 2nm");
    return PrimeField(*cfg.p);
  }
  return PrimeField(select_prime(par, cfg.max_prime));
}

std::vector<int> resolve_ells(const JobConfig& cfg, int n) {
  if (!cfg.ell_list.empty()) return cfg.ell_list;
  std::vector<int> ells;
  for (int ell = 1; ell <= n / 2 - 1; ++ell) ells.push_back(ell);
  return ells;
}

Record base_record(const std::string& task, const ExtensionParams& par,
                   int p) {
  Record r;
  r.task = task;
  r.n = par.n;
  r.m = par.m;
  r.alpha = par.alpha;
  r.beta = par.beta;
  r.gamma = par.gamma;
  r.p = p;
  return r;
}

struct TaskOutput {
  std::vector<Record> records;
  std::vector<std::string> special_lines;  // replaces the table rendering
};

TaskOutput task_check_embeddable(const JobConfig& cfg) {
  const ExtensionParams par = require_params(cfg, "check-embeddable");
  const PrimeField F = resolve_field(par, cfg);
  Record r = base_record("check-embeddable", par, F.p());
  try {
    const bool emb = embeddable(par);
    find_embedding_base(par, F);  // cross-checks the formula constructively
    r.verdict = emb ? "verified" : "refuted";
  } catch (const RegimeError&) {
    r.verdict = "unsupported-regime";
  }
  return {{r}, {}};
}

TaskOutput task_enumerate_reps(const JobConfig& cfg) {
  const ExtensionParams par = require_params(cfg, "enumerate-reps");
  const PrimeField F = resolve_field(par, cfg);
  const Group G(par);
  const auto irreps = enumerate_irreps2(G, F);
  TaskOutput out;
  for (std::size_t i = 0; i < irreps.size(); ++i) {
    Record r = base_record("enumerate-reps", par, F.p());
    r.rep_id = static_cast<int>(i);
    r.kernel = subgroup_to_string(kernel_direct(G, F, irreps[i]));
    out.records.push_back(std::move(r));
  }
  return out;
}

TaskOutput task_characters(const JobConfig& cfg) {
  const ExtensionParams par = require_params(cfg, "characters");
  const PrimeField F = resolve_field(par, cfg);
  const Group G(par);
  const auto chars = enumerate_characters(G, F);
  TaskOutput out;
  for (std::size_t i = 0; i < chars.size(); ++i) {
    Record r = base_record("characters", par, F.p());
    r.rep_id = static_cast<int>(i);
    r.kernel = subgroup_to_string(char_kernel(G, F, chars[i]));
    out.records.push_back(std::move(r));
  }
  return out;
}

// d2 needs an exact solve in p^2 + 3 unknowns per transformed cocycle; only
// worth it for small fields.
constexpr int kD2PrimeBound = 43;

TaskOutput task_udr_table(const JobConfig& cfg) {
  const ExtensionParams par = require_params(cfg, "udr-table");
  const PrimeField F = resolve_field(par, cfg);
  const Group G(par);
  const auto irreps = enumerate_irreps2(G, F);
  TaskOutput out;
  for (int ell : resolve_ells(cfg, par.n)) {
    const Rep2 phi = inflate(theta_ell(par.n, F, ell));
    for (std::size_t i = 0; i < irreps.size(); ++i) {
      Record r = base_record("udr-table", par, F.p());
      r.ell = ell;
      r.rep_id = static_cast<int>(i);
      CohomDims dims;
      dims.d1 = d1_multiplicity(F, phi, irreps[i]);
      if (F.p() <= kD2PrimeBound)
        dims.d2 = d2_invariants(F, phi, irreps[i]);
      r.d1 = dims.d1;
      r.d2 = dims.d2;
      r.udr = udr_tag_string(classify_udr(dims).tag);
      out.records.push_back(std::move(r));
    }
  }
  return out;
}

TaskOutput task_fusion(const JobConfig& cfg) {
  const ExtensionParams par = require_params(cfg, "fusion");
  const PrimeField F = resolve_field(par, cfg);
  TaskOutput out;
  for (int ell : resolve_ells(cfg, par.n)) {
    const FusionPartition closed = fusion_closed_form(par.n, F, ell);
    if (!(closed == fusion_bruteforce(F, inflate(theta_ell(par.n, F, ell)))))
      throw ConsistencyError(
          "fusion task: closed form differs from brute force at ell " +
          std::to_string(ell));
    Record r = base_record("fusion", par, F.p());
    r.ell = ell;
    r.fusion_gcd = std::gcd(par.n, ell);
    out.records.push_back(std::move(r));
  }
  return out;
}

TaskOutput task_kernels(const JobConfig& cfg) {
  const ExtensionParams par = require_params(cfg, "kernels");
  const PrimeField F = resolve_field(par, cfg);
  const Group G(par);
  TaskOutput out;
  for (int ell : resolve_ells(cfg, par.n))
    for (int k = 0; k < par.m; ++k) {
      const auto [eq, sub] = kernel_diophantine(G, F, ell, k);
      Record r = base_record("kernels", par, F.p());
      r.ell = ell;
      r.rep_id = k;
      r.dioph_A = eq.A;
      r.dioph_B = eq.B;
      r.kernel = subgroup_to_string(sub);
      out.records.push_back(std::move(r));
    }
  return out;
}

TaskOutput task_verify(const JobConfig& cfg, const std::string& task,
                       std::ostream& diag) {
  const ExtensionParams par = require_params(cfg, task);
  const PrimeField F = resolve_field(par, cfg);
  const Group G(par);
  const VerificationReport rep =
      task == "verify-thm1" ? verify_theorem1(G, F) : verify_theorem2(G, F);
  if (!rep.witness.empty())
    diag << task << " witness: " << rep.witness << "\n";
  Record r = base_record(task, par, F.p());
  r.verdict = verdict_string(rep.verdict);
  return {{r}, {}};
}

std::vector<std::string> example_lines(const ExampleTable& t) {
  std::vector<std::string> lines;
  {
    std::ostringstream os;
    os << "paper-example  n=" << t.params.n << " m=" << t.params.m
       << " alpha=" << t.params.alpha << " beta=" << t.params.beta
       << " gamma=" << t.params.gamma << "  p=" << t.p;
    lines.push_back(os.str());
  }
  lines.push_back("");

  const int cols = static_cast<int>(t.ells.size());
  const int done_rows = static_cast<int>(t.cells.size()) / cols;
  std::vector<std::vector<std::string>> grid;
  {
    std::vector<std::string> head{"twist"};
    for (int ell : t.ells) head.push_back("ell=" + std::to_string(ell));
    grid.push_back(head);
  }
  for (int row = 0; row < done_rows; ++row) {
    std::vector<std::string> line{"chi^" + std::to_string(row)};
    for (int c = 0; c < cols; ++c)
      line.push_back(t.cells[row * cols + c].rendered);
    grid.push_back(line);
  }
  std::vector<std::size_t> width(cols + 1, 0);
  for (const auto& line : grid)
    for (int c = 0; c <= cols; ++c)
      width[c] = std::max(width[c], display_width(line[c]));
  for (const auto& line : grid) {
    std::string s;
    for (int c = 0; c <= cols; ++c) {
      if (c) s += "  ";
      s += pad_to(line[c], width[c]);
    }
    while (!s.empty() && s.back() == ' ') s.pop_back();
    lines.push_back(s);
  }

  lines.push_back("");
  lines.push_back("step rule: " + t.step_rule);
  lines.push_back("period: " + std::to_string(t.period));
  lines.push_back(std::string("ell=5 equation list matches ell=1: ") +
                  (t.ell5_same_equations ? "yes" : "no"));
  lines.push_back(std::string("ell=5 kernel set matches ell=1: ") +
                  (t.ell5_same_kernels ? "yes" : "no"));
  lines.push_back("verdict: " + verdict_string(t.verdict));
  if (!t.witness.empty()) lines.push_back("witness: " + t.witness);
  return lines;
}

TaskOutput task_paper_example(const std::string& fmt, std::ostream& diag) {
  const ExampleTable t = reproduce_example();
  if (!t.witness.empty()) diag << "paper-example witness: " << t.witness << "\n";
  TaskOutput out;
  for (const ExampleCell& cell : t.cells) {
    Record r = base_record("paper-example", t.params, t.p);
    r.ell = cell.ell;
    r.rep_id = cell.k;
    r.dioph_A = cell.A;
    r.dioph_B = cell.B;
    out.records.push_back(std::move(r));
  }
  for (const ExampleCell& cell : t.ell5_cells) {
    Record r = base_record("paper-example", t.params, t.p);
    r.ell = cell.ell;
    r.rep_id = cell.k;
    r.dioph_A = cell.A;
    r.dioph_B = cell.B;
    out.records.push_back(std::move(r));
  }
  {
    // The step rule as a record: no ell, coefficient deltas mod m.
    Record r = base_record("paper-example", t.params, t.p);
    r.dioph_A = 12;
    r.dioph_B = 22;
    out.records.push_back(std::move(r));
  }
  {
    Record r = base_record("paper-example", t.params, t.p);
    r.verdict = verdict_string(t.verdict);
    out.records.push_back(std::move(r));
  }
  if (fmt == "table") out.special_lines = example_lines(t);
  return out;
}

TaskOutput task_sweep(const JobConfig& cfg) {
  if (!cfg.n || !cfg.m) throw ParamError("task sweep requires n and m");
  TaskOutput out;
  for (const SweepOutcome& o : sweep_family(*cfg.n, *cfg.m, cfg.max_prime)) {
    Record r = base_record("sweep", o.params, o.p);
    r.verdict = verdict_string(o.verdict);
    out.records.push_back(std::move(r));
  }
  return out;
}

TaskOutput run_task(const std::string& task, const JobConfig& cfg,
                    std::ostream& diag) {
  if (task == "check-embeddable") return task_check_embeddable(cfg);
  if (task == "enumerate-reps") return task_enumerate_reps(cfg);
  if (task == "characters") return task_characters(cfg);
  if (task == "udr-table") return task_udr_table(cfg);
  if (task == "fusion") return task_fusion(cfg);
  if (task == "kernels") return task_kernels(cfg);
  if (task == "verify-thm1" || task == "verify-thm2")
    return task_verify(cfg, task, diag);
  if (task == "paper-example") return task_paper_example(cfg.output, diag);
  if (task == "sweep") return task_sweep(cfg);
  throw ParamError("unknown task \"" + task + "\"");
}

void render_generic_table(const std::vector<Record>& records,
                          std::ostream& out) {
  if (records.empty()) return;
  std::vector<std::vector<std::string>> rows;
  for (const Record& r : records) rows.push_back(record_values(r));
  const std::size_t nf = kRecordFields.size();
  std::vector<bool> used(nf, false);
  for (const auto& row : rows)
    for (std::size_t i = 0; i < nf; ++i)
      if (!row[i].empty()) used[i] = true;
  std::vector<std::size_t> width(nf, 0);
  for (std::size_t i = 0; i < nf; ++i)
    if (used[i]) width[i] = display_width(kRecordFields[i]);
  for (const auto& row : rows)
    for (std::size_t i = 0; i < nf; ++i)
      if (used[i]) width[i] = std::max(width[i], display_width(row[i]));
  const auto emit_row = [&](const std::vector<std::string>& row) {
    std::string s;
    bool first = true;
    for (std::size_t i = 0; i < nf; ++i) {
      if (!used[i]) continue;
      if (!first) s += "  ";
      first = false;
      s += pad_to(row[i], width[i]);
    }
    while (!s.empty() && s.back() == ' ') s.pop_back();
    out << s << "\n";
  };
  emit_row(std::vector<std::string>(kRecordFields.begin(),
                                    kRecordFields.end()));
  for (const auto& row : rows) emit_row(row);
}

int verdict_exit_code(const std::vector<Record>& records) {
  int code = 0;
  for (const Record& r : records) {
    if (r.verdict == "refuted") code = std::max(code, 1);
    if (r.verdict == "unsupported-regime") code = std::max(code, 2);
  }
  return code;
}

}  // namespace

std::string record_to_kv(const Record& r) {
  const auto values = record_values(r);
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i].empty()) continue;
    if (!out.empty()) out += ' ';
    out += kRecordFields[i];
    out += '=';
    out += values[i];
  }
  return out;
}

std::string record_to_csv(const Record& r) {
  const auto values = record_values(r);
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += csv_escape(values[i]);
  }
  return out;
}

std::string csv_header() {
  std::string out;
  for (std::size_t i = 0; i < kRecordFields.size(); ++i) {
    if (i) out += ',';
    out += kRecordFields[i];
  }
  return out;
}

JobConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParamError("cannot open config file \"" + path + "\"");
  JobConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    const std::size_t eq = stripped.find('=');
    if (eq == std::string::npos)
      throw ParamError("config line " + std::to_string(lineno) +
                       " is not key=value: \"" + stripped + "\"");
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key.empty())
      throw ParamError("config line " + std::to_string(lineno) +
                       " has an empty key");
    set_key(cfg, key, value, "config key " + key);
  }
  return cfg;
}

JobConfig parse_args(const std::vector<std::string>& args) {
  JobConfig cfg;
  // The config file loads first so that every flag can override it.
  for (std::size_t i = 0; i < args.size(); ++i)
    if (args[i] == "--config") {
      if (i + 1 >= args.size())
        throw ParamError("flag --config requires a value");
      cfg = parse_config_file(args[i + 1]);
    }
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& flag = args[i];
    if (flag.size() < 3 || flag[0] != '-' || flag[1] != '-')
      throw ParamError("unexpected argument \"" + flag + "\"");
    if (i + 1 >= args.size())
      throw ParamError("flag " + flag + " requires a value");
    const std::string value = args[++i];
    if (flag == "--config") continue;  // already applied
    const std::string where = "flag " + flag;
    if (flag == "--n")
      set_key(cfg, "n", value, where);
    else if (flag == "--m")
      set_key(cfg, "m", value, where);
    else if (flag == "--alpha")
      set_key(cfg, "alpha", value, where);
    else if (flag == "--beta")
      set_key(cfg, "beta", value, where);
    else if (flag == "--gamma")
      set_key(cfg, "gamma", value, where);
    else if (flag == "--p")
      set_key(cfg, "p", value, where);
    else if (flag == "--ell")
      set_key(cfg, "ell_list", value, where);
    else if (flag == "--task")
      set_key(cfg, "tasks", value, where);
    else if (flag == "--output")
      set_key(cfg, "output", value, where);
    else if (flag == "--out")
      set_key(cfg, "out_path", value, where);
    else if (flag == "--max-prime")
      set_key(cfg, "max_prime", value, where);
    else
      throw ParamError("unknown flag \"" + flag + "\"");
  }
  return cfg;
}

int run(const JobConfig& cfg, std::ostream& out, std::ostream& diag) {
  try {
    check_output_format(cfg.output);
    for (const std::string& task : cfg.tasks)
      if (!known_task(task)) throw ParamError("unknown task \"" + task + "\"");

    std::ofstream file;
    std::ostream* sink = &out;
    if (!cfg.out_path.empty()) {
      file.open(cfg.out_path);
      if (!file)
        throw ParamError("cannot open output file \"" + cfg.out_path + "\"");
      sink = &file;
    }

    int code = 0;
    bool csv_header_done = false;
    bool first_block = true;
    for (const std::string& task : cfg.tasks) {
      const auto t0 = std::chrono::steady_clock::now();
      const TaskOutput res = run_task(task, cfg, diag);
      if (cfg.output == "records") {
        for (const Record& r : res.records) *sink << record_to_kv(r) << "\n";
      } else if (cfg.output == "csv") {
        if (!csv_header_done && !res.records.empty()) {
          *sink << csv_header() << "\n";
          csv_header_done = true;
        }
        for (const Record& r : res.records) *sink << record_to_csv(r) << "\n";
      } else {
        if (!first_block) *sink << "\n";
        if (res.special_lines.empty())
          render_generic_table(res.records, *sink);
        else
          for (const std::string& line : res.special_lines)
            *sink << line << "\n";
      }
      if (!res.records.empty()) first_block = false;
      code = std::max(code, verdict_exit_code(res.records));
      const double secs = std::chrono::duration<double>(
                              std::chrono::steady_clock::now() - t0)
                              .count();
      diag << "task " << task << ": " << secs << "s\n";
    }
    sink->flush();
    return code;
  } catch (const ConsistencyError& e) {
    diag << "consistency error: " << e.what() << "\n";
    return 3;
  } catch (const ParamError& e) {
    diag << "error: " << e.what() << "\n";
    return 2;
  } catch (const RegimeError& e) {
    diag << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    diag << "internal error: " << e.what() << "\n";
    return 3;
  }
}

int cli_main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  for (const std::string& a : args)
    if (a == "--help" || a == "-h") {
      std::cout << usage_text();
      return 0;
    }
  JobConfig cfg;
  try {
    cfg = parse_args(args);
  } catch (const ParamError& e) {
    std::cerr << "error: " << e.what() << "\n"
              << "run with --help for usage\n";
    return 2;
  }
  return run(cfg, std::cout, std::cerr);
}

std::string usage_text() {
  return
      "udrfusion: central extensions of dihedral groups, their deformation\n"
      "rings over F_p, and the fusion of (F_p)^2 in the semidirect product.\n"
      "\n"
      "usage: udrfusion [--config PATH] [--n INT] [--m INT] [--alpha INT]\n"
      "                 [--beta INT] [--gamma INT] [--p PRIME]\n"
      "                 [--ell L1,L2,...] [--task T1,T2,...]\n"
      "                 [--output table|records|csv] [--out PATH]\n"
      "                 [--max-prime BOUND]\n"
      "\n"
      "tasks (run in the order given):\n"
      "  check-embeddable  does G(n,m,alpha,beta,gamma) embed in GL_2?\n"
      "  enumerate-reps    degree-two irreducible classes and their kernels\n"
      "  characters        degree-one representations and their kernels\n"
      "  udr-table         d1, d2, and deformation-ring tag per (ell, class)\n"
      "  fusion            orbit data for theta_ell; closed form vs brute\n"
      "  kernels           Diophantine kernel description per (ell, twist)\n"
      "  verify-thm1       nontrivial deformation ring iff trivial on center\n"
      "  verify-thm2       kernel sets <=> fusion <=> gcd(n, ell)\n"
      "  paper-example     the bundled (n,m) = (20,24) coefficient table\n"
      "  sweep             all (alpha,beta,gamma) for fixed (n,m)\n"
      "\n"
      "The config file is flat key=value text with the same keys as the\n"
      "flags (n, m, alpha, beta, gamma, p, ell_list, tasks, output,\n"
      "out_path, max_prime); lists are comma separated; flags override the\n"
      "file.  alpha, beta, gamma default to 0.  Without --p a prime\n"
      "p = 1 mod lcm(2n, 2m) is chosen automatically below max_prime.\n"
      "\n"
      "exit codes: 0 verified, 1 refuted, 2 invalid input, 3 internal\n"
      "consistency failure.\n";
}

}  // namespace udrf
