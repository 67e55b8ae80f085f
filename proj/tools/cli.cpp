#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "skewbrace/brace.hpp"
#include "skewbrace/error.hpp"
#include "skewbrace/io.hpp"
#include "skewbrace/search.hpp"
#include "skewbrace/ybe.hpp"

#ifndef SKEWBRACE_VERSION
#define SKEWBRACE_VERSION "0.0.0"
#endif

namespace skewbrace::cli {

namespace {

struct CliConfig {
  std::string subcommand;
  std::string input;
  std::string format;
  std::string output;
  std::optional<Element> element;
  int order = 0;
  int jobs = 1;
  bool up_to_iso = false;
  bool oracle = false;
  bool all_witnesses = false;
};

std::string tuple_text(const std::vector<Element>& t) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < t.size(); ++i) os << (i ? ", " : "") << t[i];
  os << ")";
  return os.str();
}

std::string image_text(const PermMap& p) {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < p.size(); ++i) os << (i ? ", " : "") << p(i);
  os << "]";
  return os.str();
}

void emit(const std::string& content, const CliConfig& config, std::ostream& out) {
  if (config.output.empty()) {
    out << content;
    return;
  }
  std::ofstream file(config.output, std::ios::binary);
  if (!file) throw Error(ErrorCode::kMalformed, "cannot write " + config.output);
  file << content;
}

int cmd_verify(const CliConfig& config, std::ostream& out) {
  const auto tables = io::parse_table_pair(io::read_file(config.input));
  SuiteOptions options;
  options.jobs = config.jobs;
  if (config.all_witnesses) {
    options.on_failure = [&out](const char* name, const std::vector<Element>& w) {
      out << "  " << name << " fails at " << tuple_text(w) << "\n";
    };
  }
  const auto outcomes = identity_suite(tables.dot, tables.circ, options);
  bool all_hold = true;
  for (const auto& [name, result] : outcomes) {
    out << std::left << std::setw(24) << name;
    if (result) {
      out << "PASS\n";
    } else {
      out << "FAIL  witness " << tuple_text(result.witness) << "\n";
      all_hold = false;
    }
  }
  return all_hold ? kSuccess : kMathFailure;
}

int cmd_maps(const CliConfig& config, std::ostream& out) {
  const SkewBrace brace = io::parse_brace(io::read_file(config.input));
  const int n = brace.order();
  if (config.element && !brace.dot().contains(*config.element)) {
    throw Error(ErrorCode::kOutOfRange,
                "element " + std::to_string(*config.element) + " is outside 0.." +
                    std::to_string(n - 1));
  }
  const BraceMaps maps(brace);
  const Element first = config.element.value_or(0);
  const Element last = config.element ? *config.element + 1 : n;
  const bool json = config.format == "json";
  if (json) out << "[\n";
  for (Element x = first; x < last; ++x) {
    if (json) {
      out << "  {\"element\": " << x << ", \"sigma\": " << image_text(maps.sigma_perm(x))
          << ", \"tau\": " << image_text(maps.tau_perm(x)) << "}" << (x + 1 < last ? "," : "")
          << "\n";
    } else {
      out << "sigma_" << x << ": " << image_text(maps.sigma_perm(x)) << "\n";
      out << "tau_" << x << ": " << image_text(maps.tau_perm(x)) << "\n";
    }
  }
  if (json) out << "]\n";
  return kSuccess;
}

int cmd_rmap(const CliConfig& config, std::ostream& out) {
  const SkewBrace brace = io::parse_brace(io::read_file(config.input));
  const YbeMap r = build_r(brace);
  emit(config.format == "csv" ? io::format_rmap_csv(r) : io::format_rmap_json(r), config, out);
  return kSuccess;
}

int cmd_check_ybe(const CliConfig& config, std::ostream& out) {
  const std::string content = io::read_file(config.input);
  const YbeMap r = [&] {
    if (io::looks_like_rmap(content)) return io::parse_rmap_json(content);
    const auto tables = io::parse_table_pair(content);
    return build_r(BraceMaps(tables.dot, tables.circ));
  }();

  SweepOptions options;
  options.jobs = config.jobs;
  if (config.all_witnesses) {
    options.on_failure = [&out](const std::vector<Element>& w) {
      out << "  braid relation fails at " << tuple_text(w) << "\n";
    };
  }
  const CheckResult ybe = check_ybe(r, options);
  const int n = r.order();
  if (ybe) {
    out << "braid relation: PASS (" << n * n * n << " triples)\n";
  } else {
    const auto& w = ybe.witness;
    const YbeSides sides = evaluate_ybe_sides(r, w[0], w[1], w[2]);
    out << "braid relation: FAIL at (a, b, c) = " << tuple_text(w) << ": left "
        << tuple_text(sides.left) << ", right " << tuple_text(sides.right) << "\n";
  }
  out << "nondegenerate: " << (check_nondegenerate(r) ? "yes" : "no") << "\n";
  out << "bijective: " << (check_bijective(r) ? "yes" : "no") << "\n";
  return ybe ? kSuccess : kMathFailure;
}

int cmd_enumerate(const CliConfig& config, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  BraceCatalog raw;
  BraceCatalog iso;
  if (config.oracle) {
    raw = oracle_enumerate(config.order, false);
    iso = oracle_enumerate(config.order, true);
  } else {
    raw = enumerate_braces(config.order, false, config.jobs);
    iso.order = raw.order;
    iso.up_to_iso = true;
    iso.braces = dedup_up_to_iso(raw.braces);
  }
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

  io::CatalogSummary summary;
  summary.count_raw = raw.braces.size();
  summary.count_up_to_iso = iso.braces.size();
  summary.tool_version = SKEWBRACE_VERSION;
  emit(io::format_catalog_json(config.up_to_iso ? iso : raw, summary), config, out);

  std::ostream& summary_stream = config.output.empty() ? err : out;
  summary_stream << "order=" << config.order << " raw=" << summary.count_raw
                 << " iso=" << summary.count_up_to_iso << " elapsed=" << std::fixed
                 << std::setprecision(3) << elapsed.count() << "s\n";
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Skew left braces and set-theoretic Yang-Baxter solutions", "skewbrace"};
  app.set_version_flag("--version", SKEWBRACE_VERSION);
  app.require_subcommand(1, 1);

  CliConfig config;
  const auto add_jobs = [&](CLI::App* sub) {
    sub->add_option("--jobs,-j", config.jobs, "Worker threads for exhaustive sweeps")
        ->check(CLI::Range(1, 256));
  };
  const auto add_witnesses = [&](CLI::App* sub) {
    sub->add_flag("--all-witnesses", config.all_witnesses,
                  "Print every failing tuple, not just the first");
  };

  auto* verify = app.add_subcommand("verify", "Check every brace identity on a brace file");
  verify->add_option("brace-file", config.input, "Brace file (JSON or text)")->required();
  add_jobs(verify);
  add_witnesses(verify);

  auto* maps = app.add_subcommand("maps", "Print the sigma and tau permutations");
  maps->add_option("brace-file", config.input, "Brace file (JSON or text)")->required();
  maps->add_option("--element,-e", config.element, "Only this element");
  maps->add_option("--format", config.format, "text (default) or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* rmap = app.add_subcommand("r-map", "Write the R-map of a brace");
  rmap->add_option("brace-file", config.input, "Brace file (JSON or text)")->required();
  rmap->add_option("--format", config.format, "json (default) or csv")->check(CLI::IsMember({"json", "csv"}));
  rmap->add_option("--output,-o", config.output, "Output path (default: stdout)");

  auto* check = app.add_subcommand("check-ybe", "Check the braid relation for an R-map");
  check->add_option("file", config.input, "R-map JSON or brace file")->required();
  add_jobs(check);
  add_witnesses(check);

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate skew braces of one order");
  enumerate->add_option("--order,-n", config.order, "Carrier size")
      ->required()
      ->check(CLI::Range(1, kMaxSearchOrder));
  enumerate->add_flag("--up-to-iso", config.up_to_iso, "Keep one brace per isomorphism class");
  enumerate->add_flag("--oracle", config.oracle, "Use the naive enumerator (order <= 5)");
  enumerate->add_option("--output,-o", config.output, "Catalog path (default: stdout)");
  add_jobs(enumerate);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  config.subcommand = app.get_subcommands().front()->get_name();
  try {
    if (config.subcommand == "verify") return cmd_verify(config, out);
    if (config.subcommand == "maps") return cmd_maps(config, out);
    if (config.subcommand == "r-map") return cmd_rmap(config, out);
    if (config.subcommand == "check-ybe") return cmd_check_ybe(config, out);
    if (config.subcommand == "enumerate") {
      if (config.oracle && config.order > kMaxOracleOrder) {
        throw Error(ErrorCode::kOrderTooLarge,
                    "--oracle supports orders up to " + std::to_string(kMaxOracleOrder));
      }
      return cmd_enumerate(config, out, err);
    }
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    if (e.code() == ErrorCode::kNotABrace) return kMathFailure;
    return kInputError;
  }
  return kInputError;
}

}  // namespace skewbrace::cli
