// hbcells: command line front end.
//
//   hbcells staircase --m 1,1,3
//   hbcells resultant --m 3,3 --restrict a[1,2,2],a[2,1,2]
//   hbcells verify --m 2,2 --cochar -7,-8 --samples 25 --seed 1
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hbcells.hpp"
#include "hbcells/report.hpp"

namespace {

using namespace hbcells;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct RunConfig {
  std::string m;
  std::string staircase_file;
  std::string cochar;
  std::string cochar_file;
  std::string restrict_to;
  std::string assign_file;
  unsigned samples = 25;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  bool json = false;
  bool pi_minus = false;
};

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw parse_error(path + ": " + e.what());
  }
}

std::vector<long long> parse_int_list(const std::string& text, const char* what) {
  std::vector<long long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw parse_error(std::string("bad ") + what + " entry '" + item + "'");
    }
  }
  return out;
}

Staircase staircase_of(const RunConfig& cfg) {
  if (!cfg.staircase_file.empty()) return staircase_from_json(read_json_file(cfg.staircase_file));
  if (cfg.m.empty()) throw parse_error("a staircase is required: --m m1,...,mt or --staircase FILE");
  std::vector<unsigned> m;
  for (auto v : parse_int_list(cfg.m, "--m")) {
    if (v < 0) throw validation_error("staircase exponents must be non-negative");
    m.push_back(static_cast<unsigned>(v));
  }
  return Staircase::from_m(std::move(m));
}

std::optional<Cocharacter> cochar_of(const RunConfig& cfg) {
  if (!cfg.cochar_file.empty()) return cocharacter_from_json(read_json_file(cfg.cochar_file));
  if (cfg.cochar.empty()) return std::nullopt;
  auto v = parse_int_list(cfg.cochar, "--cochar");
  if (v.size() != 2) throw parse_error("--cochar expects alpha,beta");
  return Cocharacter(v[0], v[1]);
}

Cocharacter require_cochar(const RunConfig& cfg) {
  auto psi = cochar_of(cfg);
  if (!psi) throw parse_error("this command needs --cochar alpha,beta");
  return *psi;
}

std::optional<Assignment> assignment_of(const RunConfig& cfg) {
  if (cfg.assign_file.empty()) return std::nullopt;
  return assignment_from_json(read_json_file(cfg.assign_file));
}

// Text form: one "key: value" line per field, nested objects indented,
// arrays of scalars comma separated, anything else as compact JSON.
void print_text(const ojson& j, std::ostream& out, int indent = 0) {
  const std::string pad(indent, ' ');
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      out << pad << key << ":\n";
      print_text(value, out, indent + 2);
    } else if (value.is_array() && !value.empty() && value.front().is_object()) {
      out << pad << key << ":\n";
      for (const auto& item : value) out << pad << "  - " << item.dump() << "\n";
    } else if (value.is_array() && std::all_of(value.begin(), value.end(), [](const ojson& v) { return v.is_primitive(); })) {
      out << pad << key << ": ";
      bool first = true;
      for (const auto& item : value) {
        out << (first ? "" : ", ") << (item.is_string() ? item.get<std::string>() : item.dump());
        first = false;
      }
      out << "\n";
    } else if (value.is_string()) {
      out << pad << key << ": " << value.get<std::string>() << "\n";
    } else {
      out << pad << key << ": " << value.dump() << "\n";
    }
  }
}

void emit(const RunConfig& cfg, const ojson& report) {
  if (cfg.json)
    std::cout << report.dump(2) << "\n";
  else
    print_text(report, std::cout);
}

Mode mode_of(const RunConfig& cfg) { return cfg.pi_minus ? Mode::minus : Mode::plus; }

int cmd_staircase(const RunConfig& cfg) {
  emit(cfg, staircase_report(staircase_of(cfg)));
  return kOk;
}

int cmd_matrix(const RunConfig& cfg) {
  SpreadOutMatrix m(staircase_of(cfg));
  emit(cfg, matrix_report(m, assignment_of(cfg)));
  return kOk;
}

int cmd_resultant(const RunConfig& cfg) {
  SpreadOutMatrix m(staircase_of(cfg));
  std::optional<std::vector<ParamKey>> restrict_to;
  if (!cfg.restrict_to.empty()) restrict_to = parse_param_list(cfg.restrict_to);
  emit(cfg, resultant_report(m, restrict_to, cochar_of(cfg)));
  return kOk;
}

int cmd_cell(const RunConfig& cfg) {
  SpreadOutMatrix m(staircase_of(cfg));
  emit(cfg, cell_report(m, require_cochar(cfg)));
  return kOk;
}

int cmd_specialize(const RunConfig& cfg) {
  SpreadOutMatrix m(staircase_of(cfg));
  emit(cfg, specialize_report(m, assignment_of(cfg).value_or(Assignment{}), mode_of(cfg)));
  return kOk;
}

int cmd_limit(const RunConfig& cfg) {
  SpreadOutMatrix m(staircase_of(cfg));
  auto report = limit_report(m, assignment_of(cfg).value_or(Assignment{}), mode_of(cfg), require_cochar(cfg));
  emit(cfg, report);
  return report.contains("limit") ? kOk : kFailed;
}

int cmd_tangent(const RunConfig& cfg) {
  auto report = tangent_report(staircase_of(cfg));
  emit(cfg, report);
  return report["ok"].get<bool>() ? kOk : kFailed;
}

// With --assign a single point is checked: against the cell of --cochar if
// given, otherwise only its colength (in the mode chosen by --pi-minus).
int cmd_verify(const RunConfig& cfg) {
  SpreadOutMatrix m(staircase_of(cfg));
  auto psi = cochar_of(cfg);
  if (auto values = assignment_of(cfg)) {
    const PointReport pr = psi ? verify_point(m, cell_restrict(m, *psi), *values) : verify_point(m, *values, mode_of(cfg));
    ojson j;
    j["m"] = m.staircase().m();
    if (psi) j["cochar"] = to_json(*psi);
    j["assignment"] = to_json(*values);
    j["mode"] = psi ? to_string(cell_restrict(m, *psi).mode) : to_string(mode_of(cfg));
    j["colength"] = pr.colength ? ojson(*pr.colength) : ojson("infinite");
    j["expected_colength"] = m.staircase().colength();
    j["colength_ok"] = pr.colength_ok;
    if (psi) j["limit_ok"] = pr.limit_ok;
    j["details"] = pr.details;
    const bool ok = psi ? pr.passed() : pr.colength_ok;
    j["ok"] = ok;
    j["criteria"] = {"cell-point-colength", "cell-point-limit"};
    emit(cfg, j);
    return ok ? kOk : kFailed;
  }
  if (!psi) throw parse_error("verify needs --cochar (to sample a cell) or --assign (to check one point)");
  if (cfg.samples == 0) throw parse_error("--samples must be at least 1");
  auto outcome = verify_report(m, *psi, cfg.samples, cfg.seed, cfg.jobs);
  emit(cfg, outcome.report);
  return outcome.ok ? kOk : kFailed;
}

void add_common_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--m", cfg.m, "staircase exponents m1,...,mt (non-decreasing)");
  sub->add_option("--staircase", cfg.staircase_file, "staircase JSON file {\"m\":[...]}");
  sub->add_flag("--json", cfg.json, "print JSON instead of text");
  sub->add_flag("--pi-minus", cfg.pi_minus, "append y^{t m_t} to the minors (minus family)");
}

void add_cochar_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--cochar", cfg.cochar, "cocharacter alpha,beta");
  sub->add_option("--cochar-file", cfg.cochar_file, "cocharacter JSON file {\"alpha\":a,\"beta\":b}");
}

// "--cochar -7,-8" would otherwise be read as an unknown short option.
std::vector<std::string> normalize_args(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--cochar" && i + 1 < argc) {
      args.push_back("--cochar=" + std::string(argv[++i]));
      continue;
    }
    args.push_back(std::move(a));
  }
  std::reverse(args.begin(), args.end());  // CLI11 consumes a reversed vector
  return args;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spread-out Hilbert-Burch matrices, resultant criteria and torus cells"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* staircase = app.add_subcommand("staircase", "exponents, generators, degree matrices, parameters");
  add_common_options(staircase, cfg);

  auto* matrix = app.add_subcommand("matrix", "spread-out matrix and its maximal minors");
  add_common_options(matrix, cfg);
  matrix->add_option("--assign", cfg.assign_file, "assignment JSON {\"a[i,j,k]\":\"p/q\"}");

  auto* resultant = app.add_subcommand("resultant", "res_E and the flatness / finiteness verdicts");
  add_common_options(resultant, cfg);
  add_cochar_options(resultant, cfg);
  resultant->add_option("--restrict", cfg.restrict_to, "keep only these parameters, e.g. a[1,2,2],a[2,1,2]");

  auto* cell = app.add_subcommand("cell", "cell of a cocharacter: kept parameters, mode, verdicts");
  add_common_options(cell, cfg);
  add_cochar_options(cell, cfg);

  auto* specialize = app.add_subcommand("specialize", "minors ideal at a rational point");
  add_common_options(specialize, cfg);
  specialize->add_option("--assign", cfg.assign_file, "assignment JSON {\"a[i,j,k]\":\"p/q\"}");

  auto* limit = app.add_subcommand("limit", "torus limit of the minors ideal at a rational point");
  add_common_options(limit, cfg);
  add_cochar_options(limit, cfg);
  limit->add_option("--assign", cfg.assign_file, "assignment JSON {\"a[i,j,k]\":\"p/q\"}");

  auto* tangent = app.add_subcommand("tangent", "rank of the first-order map, expected 2d");
  add_common_options(tangent, cfg);

  auto* verify = app.add_subcommand("verify", "check colength and limit on random cell points or one point");
  add_common_options(verify, cfg);
  add_cochar_options(verify, cfg);
  verify->add_option("--assign", cfg.assign_file, "check this point instead of sampling");
  verify->add_option("--samples", cfg.samples, "number of random points")->default_val(25);
  verify->add_option("--seed", cfg.seed, "64-bit seed")->default_val(1);
  verify->add_option("--jobs", cfg.jobs, "worker threads")->default_val(1)->check(CLI::Range(1u, 256u));

  try {
    auto args = normalize_args(argc, argv);
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    auto* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if (name == "staircase") return cmd_staircase(cfg);
    if (name == "matrix") return cmd_matrix(cfg);
    if (name == "resultant") return cmd_resultant(cfg);
    if (name == "cell") return cmd_cell(cfg);
    if (name == "specialize") return cmd_specialize(cfg);
    if (name == "limit") return cmd_limit(cfg);
    if (name == "tangent") return cmd_tangent(cfg);
    if (name == "verify") return cmd_verify(cfg);
  } catch (const hbcells::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
