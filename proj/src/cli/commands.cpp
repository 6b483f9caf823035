#include "nomaec/cli/commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "nomaec/analysis/crossover.hpp"
#include "nomaec/analysis/lemmas.hpp"
#include "nomaec/ec/point.hpp"
#include "nomaec/errors.hpp"
#include "nomaec/sweep/csv.hpp"
#include "nomaec/sweep/figures.hpp"
#include "nomaec/sweep/sweep.hpp"

namespace nomaec::cli {
namespace {

using nlohmann::json;
using sweep::format_number;

double parse_number(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || text.empty() || !std::isfinite(value)) {
    throw std::invalid_argument("not a finite number: '" + std::string(text) + "'");
  }
  return value;
}

// Config files are either JSON objects or CLI11's key = value format.
// JSON arrays become comma lists, so grids can be written as [1, 2, 3].
class JsonOrKeyValueConfig : public CLI::ConfigBase {
 public:
  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
    std::string text((std::istreambuf_iterator<char>(input)), std::istreambuf_iterator<char>());
    const auto start = text.find_first_not_of(" \t\r\n");
    if (start == std::string::npos || text[start] != '{') {
      std::istringstream again(text);
      return CLI::ConfigBase::from_config(again);
    }
    json doc;
    try {
      doc = json::parse(text);
    } catch (const json::parse_error& e) {
      throw CLI::ConversionError(std::string("config file: ") + e.what());
    }
    std::vector<CLI::ConfigItem> items;
    flatten(doc, {}, items);
    return items;
  }

 private:
  static std::string scalar(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    if (v.is_number()) return format_number(v.get<double>());
    throw CLI::ConversionError("config file: unsupported JSON value " + v.dump());
  }

  static void flatten(const json& obj, const std::vector<std::string>& parents,
                      std::vector<CLI::ConfigItem>& items) {
    for (const auto& [key, value] : obj.items()) {
      if (value.is_object()) {
        auto next = parents;
        next.push_back(key);
        flatten(value, next, items);
        continue;
      }
      CLI::ConfigItem item;
      item.parents = parents;
      item.name = key;
      if (value.is_array()) {
        std::string joined;
        for (const auto& element : value) {
          if (!joined.empty()) joined += ',';
          joined += scalar(element);
        }
        item.inputs = {joined};
      } else {
        item.inputs = {scalar(value)};
      }
      items.push_back(std::move(item));
    }
  }
};

CLI::Validator number_check(const std::string& name, bool (*accept)(double),
                            const std::string& requirement) {
  return CLI::Validator(
      [accept, requirement](std::string& input) -> std::string {
        try {
          if (accept(parse_number(input))) return {};
        } catch (const std::invalid_argument& e) {
          return e.what();
        }
        return "value " + input + " " + requirement;
      },
      name);
}

CLI::Validator grid_check(const std::string& name, bool (*accept)(double),
                          const std::string& requirement) {
  return CLI::Validator(
      [accept, requirement](std::string& input) -> std::string {
        try {
          for (double v : parse_grid(input)) {
            if (!accept(v)) return "grid value " + format_number(v) + " " + requirement;
          }
        } catch (const std::invalid_argument& e) {
          return e.what();
        }
        return {};
      },
      name);
}

bool is_negative(double v) { return v < 0.0; }
bool is_open_unit(double v) { return v > 0.0 && v < 1.0; }
bool is_any(double) { return true; }

const CLI::Validator kNegative = number_check("NEGATIVE", is_negative, "must be negative");
const CLI::Validator kOpenUnit = number_check("(0,1)", is_open_unit, "must lie in (0, 1)");
const CLI::Validator kFinite = number_check("NUMBER", is_any, "");
const CLI::Validator kNegativeGrid = grid_check("GRID<0", is_negative, "must be negative");
const CLI::Validator kOpenUnitGrid = grid_check("GRID(0,1)", is_open_unit, "must lie in (0, 1)");
const CLI::Validator kAnyGrid = grid_check("GRID", is_any, "");

const std::vector<std::string> kMethods{"closed_form", "quadrature", "monte_carlo"};

ec::EcMethod method_of(const std::string& name) {
  const auto m = ec::parse_method(name);
  if (!m) throw std::invalid_argument("unknown method '" + name + "'");
  return *m;
}

std::string default_output_dir() {
  const char* env = std::getenv(kOutputDirEnv);
  return env != nullptr && *env != '\0' ? std::string(env) : std::string(".");
}

struct PointArgs {
  std::string rho_db = "10";
  std::string beta1 = "-1";
  std::string beta2 = "-1";
  std::string p1 = "0.2";
  std::string method = "quadrature";
  std::size_t samples = 1'000'000;
  std::uint64_t seed = 1;
  int threads = 0;
};

struct LemmaArgs {
  double p1 = 0.2;
  std::optional<double> beta;
  double beta1 = -1.0;
  double beta2 = -1.0;
  std::vector<int> lemmas{1, 2, 3, 4};
  bool json_output = false;
};

struct CrossoverArgs {
  std::string user = "1";
  double p1 = 0.2;
  std::optional<double> beta;
  double beta1 = -1.0;
  double beta2 = -1.0;
  double low_db = 0.0;
  double high_db = 40.0;
};

struct FigureArgs {
  std::string output_dir;
  std::string method = "quadrature";
  sweep::FigureOptions options;
  int threads = 0;
};

void add_method_options(CLI::App* app, PointArgs& a) {
  app->add_option("--method", a.method, "closed_form | quadrature | monte_carlo")
      ->check(CLI::IsMember(kMethods))
      ->capture_default_str();
  app->add_option("--samples", a.samples, "Monte Carlo samples per point")->capture_default_str();
  app->add_option("--seed", a.seed, "Monte Carlo seed")->capture_default_str();
  app->add_option("--threads", a.threads, "worker threads (0 = OpenMP default)")
      ->capture_default_str();
}

std::string with_error(const ec::EcEstimate& e) {
  std::string s = format_number(e.value);
  if (e.method == ec::EcMethod::monte_carlo) s += " +/- " + format_number(e.std_error);
  return s;
}

int cmd_ec(const PointArgs& a, std::ostream& out) {
  const auto method = method_of(a.method);
  const auto snr = ec::Snr::from_db(parse_number(a.rho_db));
  const auto pa = ec::PowerAllocation::from_weak(parse_number(a.p1));
  const auto q1 = ec::QosExponent::from_beta(parse_number(a.beta1));
  const auto q2 = ec::QosExponent::from_beta(parse_number(a.beta2));
  ec::EvalOptions options;
  options.method = method;
  options.mc.samples = a.samples;
  options.mc.seed = a.seed;
  options.threads = a.threads;
  if (method == ec::EcMethod::monte_carlo && a.samples < sweep::kMinMonteCarloSamples) {
    throw DomainError("Monte Carlo needs at least 1000 samples");
  }
  const auto p = ec::evaluate_point(snr, pa, q1, q2, options);

  out << "method    " << ec::to_string(method) << '\n';
  out << "rho_db    " << format_number(snr.db()) << '\n';
  out << "beta1     " << format_number(q1.beta()) << '\n';
  out << "beta2     " << format_number(q2.beta()) << '\n';
  out << "p1        " << format_number(pa.weak()) << '\n';
  out << "p2        " << format_number(pa.strong()) << '\n';
  if (method == ec::EcMethod::monte_carlo) {
    out << "samples   " << a.samples << '\n' << "seed      " << a.seed << '\n';
  }
  out << "ec1_noma  " << with_error(p.ec1_noma) << '\n';
  out << "ec2_noma  " << with_error(p.ec2_noma) << '\n';
  out << "ec1_oma   " << with_error(p.ec1_oma) << '\n';
  out << "ec2_oma   " << with_error(p.ec2_oma) << '\n';
  const bool mc = method == ec::EcMethod::monte_carlo;
  const auto gap = [&](const ec::EcEstimate& n, const ec::EcEstimate& o) {
    std::string s = format_number(n.value - o.value);
    if (mc) s += " +/- " + format_number(std::hypot(n.std_error, o.std_error));
    return s;
  };
  out << "gap1      " << gap(p.ec1_noma, p.ec1_oma) << '\n';
  out << "gap2      " << gap(p.ec2_noma, p.ec2_oma) << '\n';
  out << "v_n       " << with_error(p.v_n) << '\n';
  out << "v_o       " << with_error(p.v_o) << '\n';
  if (!p.ec2_noma.note.empty()) out << "notice: " << p.ec2_noma.note << '\n';
  return kExitOk;
}

int cmd_sweep(sweep::SweepConfig cfg, const PointArgs& a, const std::string& output, std::ostream& out) {
  cfg.rho_db_grid = parse_grid(a.rho_db);
  cfg.beta1_grid = parse_grid(a.beta1);
  cfg.beta2_grid = parse_grid(a.beta2);
  cfg.p1_grid = parse_grid(a.p1);
  cfg.method = method_of(a.method);
  cfg.mc_samples = a.samples;
  cfg.seed = a.seed;
  cfg.output_path = output.empty() ? (std::filesystem::path(default_output_dir()) / "sweep.csv").string()
                                   : output;
  cfg.validate();
  const auto rows = sweep::run_sweep(cfg, a.threads);
  sweep::write_sweep_csv(cfg.output_path, rows);
  std::size_t failed = 0;
  for (const auto& r : rows) {
    if (r.status == sweep::RowStatus::accuracy_failure || r.status == sweep::RowStatus::domain_error) {
      ++failed;
    }
  }
  out << "wrote " << rows.size() << " rows to " << cfg.output_path << '\n';
  if (failed > 0) out << failed << " rows failed; see the status column\n";
  return kExitOk;
}

json to_json(const analysis::LemmaReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name},
                      {"expected", c.expected},
                      {"observed", c.observed},
                      {"tolerance", c.tolerance},
                      {"comparison", analysis::to_string(c.comparison)},
                      {"passed", c.passed}});
  }
  return {{"lemma_id", r.lemma_id}, {"overall", r.overall()}, {"checks", checks}, {"notes", r.notes}};
}

int cmd_lemmas(const LemmaArgs& a, std::ostream& out) {
  const auto pa = ec::PowerAllocation::from_weak(a.p1);
  const auto q1 = ec::QosExponent::from_beta(a.beta ? *a.beta : a.beta1);
  const auto q2 = ec::QosExponent::from_beta(a.beta ? *a.beta : a.beta2);
  std::vector<analysis::LemmaReport> reports;
  for (int id : a.lemmas) {
    switch (id) {
      case 1: reports.push_back(analysis::check_lemma1(pa, q1, q2)); break;
      case 2: reports.push_back(analysis::check_lemma2(pa, q1)); break;
      case 3: reports.push_back(analysis::check_lemma3(pa, q2)); break;
      case 4: reports.push_back(analysis::check_lemma4(pa, q1, q2)); break;
      default: throw DomainError("lemma id must be 1, 2, 3 or 4");
    }
  }
  bool all = true;
  for (const auto& r : reports) all = all && r.overall();

  if (a.json_output) {
    json doc{{"p1", pa.weak()}, {"beta1", q1.beta()}, {"beta2", q2.beta()}, {"overall", all}};
    doc["reports"] = json::array();
    for (const auto& r : reports) doc["reports"].push_back(to_json(r));
    out << doc.dump(2) << '\n';
  } else {
    out << "p1 " << format_number(pa.weak()) << ", beta1 " << format_number(q1.beta()) << ", beta2 "
        << format_number(q2.beta()) << '\n';
    for (const auto& r : reports) {
      out << "\nLemma " << r.lemma_id << ": " << (r.overall() ? "PASS" : "FAIL") << '\n';
      for (const auto& c : r.checks) {
        out << "  [" << (c.passed ? "pass" : "FAIL") << "] " << c.name << ": observed "
            << format_number(c.observed) << ", expected " << format_number(c.expected) << " ("
            << analysis::to_string(c.comparison) << ", tol " << format_number(c.tolerance) << ")\n";
      }
      for (const auto& n : r.notes) out << "  note: " << n << '\n';
    }
    out << "\noverall: " << (all ? "PASS" : "FAIL") << '\n';
  }
  return all ? kExitOk : kExitCheckFailed;
}

std::string sign_word(double v) { return v < 0.0 ? "negative" : (v > 0.0 ? "positive" : "zero"); }

int cmd_crossover(const CrossoverArgs& a, std::ostream& out) {
  const std::map<std::string, analysis::CrossoverTarget> targets{
      {"1", analysis::CrossoverTarget::weak},
      {"2", analysis::CrossoverTarget::strong},
      {"sum", analysis::CrossoverTarget::sum}};
  const auto target = targets.at(a.user);
  const auto pa = ec::PowerAllocation::from_weak(a.p1);
  const auto q1 = ec::QosExponent::from_beta(a.beta ? *a.beta : a.beta1);
  const auto q2 = ec::QosExponent::from_beta(a.beta ? *a.beta : a.beta2);
  analysis::CrossoverSettings s;
  s.low_db = a.low_db;
  s.high_db = a.high_db;
  const auto r = analysis::find_crossover(target, pa, q1, q2, s);

  out << "user         " << analysis::to_string(target) << '\n';
  out << "bracket_db   [" << format_number(r.low_db) << ", " << format_number(r.high_db) << "]\n";
  out << "gap_at_low   " << format_number(r.gap_at_low) << '\n';
  out << "gap_at_high  " << format_number(r.gap_at_high) << '\n';
  if (!r.found) {
    const char* scheme = r.gap_at_low >= 0.0 ? "NOMA" : "OMA";
    out << "crossover    none (gap " << sign_word(r.gap_at_low) << " at both ends)\n";
    out << "rule         use " << scheme << " across the bracket\n";
    return kExitOk;
  }
  const char* below = r.gap_at_low < 0.0 ? "OMA" : "NOMA";
  const char* above = r.gap_at_low < 0.0 ? "NOMA" : "OMA";
  out << "rho_star_db  " << format_number(r.rho_star_db) << '\n';
  out << "achieved_gap " << format_number(r.achieved_gap) << '\n';
  out << "iterations   " << r.iterations << '\n';
  out << "rule         use " << below << " below " << format_number(r.rho_star_db) << " dB, "
      << above << " above\n";
  return kExitOk;
}

int cmd_figures(FigureArgs a, std::ostream& out) {
  if (a.output_dir.empty()) a.output_dir = default_output_dir();
  a.options.method = method_of(a.method);
  if (a.options.method == ec::EcMethod::monte_carlo &&
      a.options.mc_samples < sweep::kMinMonteCarloSamples) {
    throw DomainError("Monte Carlo needs at least 1000 samples");
  }
  for (const auto& path : sweep::write_figures(a.output_dir, a.options, a.threads)) {
    out << "wrote " << path << '\n';
  }
  return kExitOk;
}

const std::vector<std::string> kSubcommands{"ec", "sweep", "lemmas", "crossover", "figures"};

// Replaces "--config FILE" after the subcommand by one "--key=value" argument
// per entry, placed before the remaining command-line arguments so that
// explicit flags win. Keys may use '_' or '-'; a section named after the
// subcommand is accepted, other sections are ignored.
std::vector<std::string> expand_config(const std::vector<std::string>& args) {
  std::size_t sub = args.size();
  for (std::size_t i = 1; i < args.size(); ++i) {
    if (std::find(kSubcommands.begin(), kSubcommands.end(), args[i]) != kSubcommands.end()) {
      sub = i;
      break;
    }
  }
  if (sub == args.size()) return args;

  std::vector<std::string> rest;
  std::string path;
  bool have_config = false;
  for (std::size_t i = sub + 1; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw CLI::ArgumentMismatch("--config needs a file name");
      path = args[++i];
      have_config = true;
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
      have_config = true;
    } else {
      rest.push_back(args[i]);
    }
  }
  if (!have_config) return args;

  std::ifstream file(path);
  if (!file) throw IoError("cannot read config file " + path);
  std::vector<std::string> out(args.begin(), args.begin() + static_cast<std::ptrdiff_t>(sub) + 1);
  for (const auto& item : JsonOrKeyValueConfig().from_config(file)) {
    if (!item.parents.empty() && !(item.parents.size() == 1 && item.parents[0] == args[sub])) continue;
    std::string name = item.name;
    std::replace(name.begin(), name.end(), '_', '-');
    std::string value;
    for (const auto& input : item.inputs) {
      if (!value.empty()) value += ',';
      value += input;
    }
    out.push_back("--" + name + "=" + value);
  }
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

}  // namespace

std::vector<double> parse_grid(std::string_view text) {
  if (text.find(':') != std::string_view::npos) {
    std::vector<double> parts;
    std::size_t start = 0;
    while (true) {
      const auto end = text.find(':', start);
      parts.push_back(parse_number(text.substr(start, end - start)));
      if (end == std::string_view::npos) break;
      start = end + 1;
    }
    if (parts.size() != 3) throw std::invalid_argument("range must be start:stop:step");
    if (!(parts[2] > 0.0) || parts[1] < parts[0]) {
      throw std::invalid_argument("range needs start <= stop and a positive step");
    }
    return sweep::arithmetic_grid(parts[0], parts[1], parts[2]);
  }
  std::vector<double> values;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find(',', start);
    values.push_back(parse_number(text.substr(start, end - start)));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return values;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Effective capacity of two-user uplink NOMA and OMA under delay-QoS constraints",
               "nomaec"};
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  std::string config_path;  // consumed by expand_config; registered for --help

  PointArgs ec_args;
  auto* ec_cmd = app.add_subcommand("ec", "all ECs, gaps and sums at one operating point");
  ec_cmd->add_option("--rho-db", ec_args.rho_db, "transmit SNR in dB")->check(kFinite)->capture_default_str();
  ec_cmd->add_option("--beta1", ec_args.beta1, "weak-user normalized QoS exponent (< 0)")
      ->check(kNegative)->capture_default_str();
  ec_cmd->add_option("--beta2", ec_args.beta2, "strong-user normalized QoS exponent (< 0)")
      ->check(kNegative)->capture_default_str();
  ec_cmd->add_option("--p1", ec_args.p1, "weak-user power share in (0,1)")->check(kOpenUnit)->capture_default_str();
  add_method_options(ec_cmd, ec_args);
  ec_cmd->add_option("--config", config_path, "read options from a key=value or JSON file");

  PointArgs sweep_args;
  sweep_args.rho_db = "-20:40:2";
  sweep::SweepConfig sweep_cfg;
  std::string sweep_output;
  auto* sweep_cmd = app.add_subcommand("sweep", "evaluate a parameter grid into a CSV file");
  sweep_cmd->add_option("--rho-db", sweep_args.rho_db, "SNR grid in dB: list a,b,c or start:stop:step")
      ->check(kAnyGrid)->capture_default_str();
  sweep_cmd->add_option("--beta1", sweep_args.beta1, "weak-user exponent grid")->check(kNegativeGrid)->capture_default_str();
  sweep_cmd->add_option("--beta2", sweep_args.beta2, "strong-user exponent grid")->check(kNegativeGrid)->capture_default_str();
  sweep_cmd->add_option("--p1", sweep_args.p1, "weak-user power share grid")->check(kOpenUnitGrid)->capture_default_str();
  add_method_options(sweep_cmd, sweep_args);
  sweep_cmd->add_option("--output,-o", sweep_output,
                        std::string("CSV path (default $") + kOutputDirEnv + "/sweep.csv)");
  sweep_cmd->add_option("--config", config_path, "read options from a key=value or JSON file");

  LemmaArgs lemma_args;
  auto* lemma_cmd = app.add_subcommand("lemmas", "check the asymptotic and derivative claims");
  lemma_cmd->add_option("--p1", lemma_args.p1, "weak-user power share")->check(kOpenUnit)->capture_default_str();
  lemma_cmd->add_option("--beta", lemma_args.beta, "sets both exponents")->check(kNegative);
  lemma_cmd->add_option("--beta1", lemma_args.beta1, "weak-user exponent")->check(kNegative)->capture_default_str();
  lemma_cmd->add_option("--beta2", lemma_args.beta2, "strong-user exponent")->check(kNegative)->capture_default_str();
  lemma_cmd->add_option("--lemma", lemma_args.lemmas, "subset to run (1-4)")
      ->check(CLI::Range(1, 4))->delimiter(',')
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  lemma_cmd->add_flag("--json", lemma_args.json_output, "machine-readable output");
  lemma_cmd->add_option("--config", config_path, "read options from a key=value or JSON file");

  CrossoverArgs cross_args;
  auto* cross_cmd = app.add_subcommand("crossover", "SNR where NOMA and OMA ECs are equal");
  cross_cmd->add_option("--user", cross_args.user, "1, 2 or sum")
      ->check(CLI::IsMember({"1", "2", "sum"}))->capture_default_str();
  cross_cmd->add_option("--p1", cross_args.p1, "weak-user power share")->check(kOpenUnit)->capture_default_str();
  cross_cmd->add_option("--beta", cross_args.beta, "sets both exponents")->check(kNegative);
  cross_cmd->add_option("--beta1", cross_args.beta1, "weak-user exponent")->check(kNegative)->capture_default_str();
  cross_cmd->add_option("--beta2", cross_args.beta2, "strong-user exponent")->check(kNegative)->capture_default_str();
  cross_cmd->add_option("--low-db", cross_args.low_db, "bracket start in dB")->capture_default_str();
  cross_cmd->add_option("--high-db", cross_args.high_db, "bracket end in dB")->capture_default_str();
  cross_cmd->add_option("--config", config_path, "read options from a key=value or JSON file");

  FigureArgs fig_args;
  auto* fig_cmd = app.add_subcommand("figures", "write fig2.csv ... fig9.csv");
  fig_cmd->add_option("--output-dir,-o", fig_args.output_dir,
                      std::string("target directory (default $") + kOutputDirEnv + " or .)");
  fig_cmd->add_option("--p1", fig_args.options.p1, "weak-user power share")->check(kOpenUnit)->capture_default_str();
  fig_cmd->add_option("--rho-low-db", fig_args.options.rho_low_db)->capture_default_str();
  fig_cmd->add_option("--rho-high-db", fig_args.options.rho_high_db)->capture_default_str();
  fig_cmd->add_option("--rho-step-db", fig_args.options.rho_step_db)
      ->check(CLI::PositiveNumber)->capture_default_str();
  fig_cmd->add_option("--method", fig_args.method, "closed_form | quadrature | monte_carlo")
      ->check(CLI::IsMember(kMethods))->capture_default_str();
  fig_cmd->add_option("--samples", fig_args.options.mc_samples)->capture_default_str();
  fig_cmd->add_option("--seed", fig_args.options.seed)->capture_default_str();
  fig_cmd->add_option("--threads", fig_args.threads)->capture_default_str();
  fig_cmd->add_option("--config", config_path, "read options from a key=value or JSON file");

  std::vector<std::string> expanded;
  try {
    expanded = expand_config(args);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << '\n';
    return kExitIo;
  }
  std::vector<const char*> argv;
  argv.reserve(expanded.size());
  for (const auto& a : expanded) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << "run with --help for usage\n";
    return kExitUsage;
  }

  try {
    if (*ec_cmd) return cmd_ec(ec_args, out);
    if (*sweep_cmd) return cmd_sweep(sweep_cfg, sweep_args, sweep_output, out);
    if (*lemma_cmd) return cmd_lemmas(lemma_args, out);
    if (*cross_cmd) return cmd_crossover(cross_args, out);
    if (*fig_cmd) return cmd_figures(fig_args, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const AccuracyError& e) {
    err << "accuracy failure: " << e.what() << " (best estimate " << format_number(e.best_estimate())
        << ", error bound " << format_number(e.error_bound()) << ")\n";
    return kExitAccuracy;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitUsage;
}

}  // namespace nomaec::cli
