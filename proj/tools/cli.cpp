#include "cli.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <set>

#include <CLI11.hpp>
#include <json.hpp>

#include "hypercheck/catalog.hpp"
#include "hypercheck/errors.hpp"
#include "hypercheck/harness.hpp"
#include "hypercheck/identities.hpp"
#include "hypercheck/rat_poly.hpp"

namespace hypercheck::cli {
namespace {

struct VerifyArgs {
  std::string identity;
  std::map<std::string, std::string> params;
  long order = 30;
  std::string mode = "exact";
  long precision = 192;
  std::string abs_err = "1e-30";
  bool json = false;
  bool show_series = false;
};

struct SweepArgs {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> threads;
  std::string out;
  std::string mutation = "none";
  bool timing = false;
};

struct PolyArgs {
  long m1 = 0;
  long m2 = 0;
  std::string alpha;
  std::string gamma;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Rational parse_flag(const std::string& name, const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const ParseError& e) {
    throw UsageError("--" + name + ": " + e.what());
  }
}

int cmd_list(const Catalog& catalog, const std::string& tag, const std::string& format, std::ostream& out,
             std::ostream& err) {
  if (format == "manifest") {
    out << catalog.manifest_json();
    return kExitPass;
  }
  if (!tag.empty() && catalog.find(tag) == nullptr) {
    err << "unknown identity tag '" << tag << "'\n";
    return kExitUsage;
  }
  out << catalog.manifest_text(tag.empty() ? std::nullopt : std::optional<std::string_view>(tag));
  return kExitPass;
}

int cmd_verify(const Catalog& catalog, const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  const IdentitySchema* schema = catalog.find(args.identity);
  if (schema == nullptr) throw UsageError("unknown identity tag '" + args.identity + "'");
  IdentityInstance instance;
  instance.tag = schema->tag;
  instance.order = args.order;
  const auto mode = eval_mode_from_string(args.mode);
  if (!mode) throw UsageError("--mode must be exact or numeric");
  instance.mode = *mode;
  instance.numeric.precision_bits = args.precision;
  try {
    instance.numeric.target_abs_err = Rational::parse_decimal(args.abs_err);
  } catch (const ParseError& e) {
    throw UsageError(std::string("--abs-err: ") + e.what());
  }
  for (const auto& [name, text] : args.params) {
    const bool known = std::any_of(schema->params.begin(), schema->params.end(),
                                   [&](const ParamSpec& p) { return p.name == name; });
    if (!known) throw UsageError("--" + name + " is not a parameter of " + schema->tag);
    instance.params[name] = parse_flag(name, text);
  }

  const InstanceResult result = check_instance(catalog, instance);
  const Evaluation evaluation = result.outcome == Outcome::pass && args.show_series
                                    ? catalog.evaluate(instance)
                                    : Evaluation{};

  if (args.json) {
    nlohmann::ordered_json doc;
    doc["identity"] = instance.tag;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& p : schema->params) {
      if (auto it = instance.params.find(p.name); it != instance.params.end()) params[p.name] = it->second.str();
    }
    doc["params"] = std::move(params);
    doc["mode"] = std::string(to_string(instance.mode));
    if (schema->shape == SideShape::series) doc["order"] = instance.order;
    doc["result"] = std::string(to_string(result.outcome));
    if (!result.lhs.empty()) doc["lhs"] = result.lhs;
    if (!result.rhs.empty()) doc["rhs"] = result.rhs;
    if (result.first_difference) doc["first_difference"] = *result.first_difference;
    if (!result.category.empty()) doc["category"] = result.category;
    if (!result.reason.empty()) doc["reason"] = result.reason;
    if (!result.note.empty()) doc["note"] = result.note;
    out << doc.dump(2) << '\n';
  } else {
    out << instance.tag << ' ' << render_params(*schema, instance.params) << " [" << to_string(instance.mode) << "]\n";
    if (evaluation.sides) {
      out << "lhs: " << render(evaluation.sides->lhs) << "\nrhs: " << render(evaluation.sides->rhs) << '\n';
    } else if (result.first_difference) {
      out << "first difference at coefficient " << *result.first_difference << "\nlhs: " << result.lhs
          << "\nrhs: " << result.rhs << '\n';
    } else if (!result.lhs.empty()) {
      out << "lhs: " << result.lhs << "\nrhs: " << result.rhs << '\n';
    } else if (result.outcome == Outcome::pass && schema->shape == SideShape::series) {
      out << "coefficients 0.." << instance.order - 1 << " agree\n";
    }
    if (!result.note.empty()) out << "note: " << result.note << '\n';
    out << "result: " << to_string(result.outcome) << '\n';
  }
  switch (result.outcome) {
    case Outcome::pass: return kExitPass;
    case Outcome::fail: return kExitFail;
    case Outcome::skip:
      err << "invalid instance (" << result.category << "): " << result.reason << '\n';
      return kExitUsage;
  }
  return kExitUsage;
}

int cmd_sweep(const SweepArgs& args, std::ostream& out, std::ostream& err) {
  SweepConfig config = load_sweep_config(args.config);
  if (args.seed) config.seed = *args.seed;
  if (args.threads) config.threads = *args.threads;
  const auto mutation = mutation_from_string(args.mutation);
  if (!mutation) throw UsageError("unknown mutation '" + args.mutation + "'");
  const Catalog catalog(*mutation);
  const VerificationReport report = run_sweep(config, catalog, RunOptions{args.timing});
  const std::string json = report.to_json();
  if (args.out.empty() || args.out == "-") {
    out << json;
  } else {
    std::ofstream file(args.out, std::ios::binary);
    if (!file) throw ConfigError("cannot write report to " + args.out);
    file << json;
    out << report.summary() << '\n';
  }
  if (report.nothing_checked()) err << "warning: nothing checked\n";
  return report.ok() ? kExitPass : kExitFail;
}

int cmd_poly(const PolyArgs& args, std::ostream& out) {
  const Rational alpha = parse_flag("alpha", args.alpha);
  const Rational gamma = parse_flag("gamma", args.gamma);
  const RatPoly p = compute_Pr(alpha, gamma, args.m1, args.m2);
  out << "P(t) = " << p.str("t") << '\n';
  for (int which = 1; which <= 6; ++which) {
    const ExampleShift shift = example_shift(which);
    if (shift.m1 != args.m1 || shift.m2 != args.m2) continue;
    const Rational f = example_normalization(which, alpha, gamma);
    out << "EX" << which << " normalization " << f.str() << ": " << (p * f).str("t") << '\n';
  }
  return kExitPass;
}

std::set<std::string> all_param_names(const Catalog& catalog) {
  std::set<std::string> names;
  for (const auto& schema : catalog.schemas()) {
    for (const auto& p : schema.params) names.insert(p.name);
  }
  return names;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  const Catalog catalog;
  CLI::App app{"Exact verification of hypergeometric summation and product identities", "hypercheck"};
  app.require_subcommand(0, 1);
  bool show_version = false;
  app.add_flag("--version", show_version, "Print tool and catalog versions");

  std::string list_tag;
  std::string list_format = "text";
  auto* list = app.add_subcommand("list", "List identities with their parameter schemas");
  list->add_option("--tag", list_tag, "Only this identity");
  list->add_option("--format", list_format, "text or manifest")->check(CLI::IsMember({"text", "manifest"}));

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Check a single instance");
  verify->add_option("--identity", verify_args.identity, "Identity tag")->required();
  std::map<std::string, std::string> raw_params;
  for (const auto& name : all_param_names(catalog)) {
    verify->add_option("--" + name, raw_params[name], "Parameter " + name + " (p/q)");
  }
  verify->add_option("--order", verify_args.order, "Series order")->check(CLI::Range(1L, 100000L));
  verify->add_option("--mode", verify_args.mode, "exact or numeric")->check(CLI::IsMember({"exact", "numeric"}));
  verify->add_option("--precision", verify_args.precision, "Numeric precision in bits")->check(CLI::Range(32L, 100000L));
  verify->add_option("--abs-err", verify_args.abs_err, "Numeric absolute error target");
  verify->add_flag("--json", verify_args.json, "JSON output");
  verify->add_flag("--show-series", verify_args.show_series, "Print both side values in full");

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "Run a sweep from a config file");
  sweep->add_option("--config", sweep_args.config, "Sweep config file")->required();
  sweep->add_option("--seed", sweep_args.seed, "Override the config seed");
  sweep->add_option("--threads", sweep_args.threads, "Worker threads (0: all cores)");
  sweep->add_option("--out", sweep_args.out, "Report file (default: standard output)");
  sweep->add_option("--mutation", sweep_args.mutation, "Corrupt one evaluator (harness self-test)");
  sweep->add_flag("--timing", sweep_args.timing, "Record wall time in the report");

  PolyArgs poly_args;
  auto* poly = app.add_subcommand("poly", "Print the remainder polynomial P(t)");
  poly->add_option("--m1", poly_args.m1, "Shift m1")->required();
  poly->add_option("--m2", poly_args.m2, "Shift m2")->required();
  poly->add_option("--alpha", poly_args.alpha, "alpha (p/q)")->required();
  poly->add_option("--gamma", poly_args.gamma, "gamma (p/q)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (show_version) {
      out << "hypercheck " << tool_version() << " (catalog " << kCatalogVersion << ")\n";
      return kExitPass;
    }
    if (*list) return cmd_list(catalog, list_tag, list_format, out, err);
    if (*verify) {
      for (const auto& [name, text] : raw_params) {
        if (verify->count("--" + name) > 0) verify_args.params[name] = text;
      }
      return cmd_verify(catalog, verify_args, out, err);
    }
    if (*sweep) return cmd_sweep(sweep_args, out, err);
    if (*poly) return cmd_poly(poly_args, out);
    out << app.help();
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"hypercheck"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace hypercheck::cli
