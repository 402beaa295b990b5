#include "hypercheck/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <random>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "hypercheck/errors.hpp"

namespace hypercheck {
namespace {

using nlohmann::ordered_json;

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  /// Uniform integer in [lo, hi] by rejection; mt19937_64 output is fully specified.
  long uniform(long lo, long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t draw = rng_();
    while (draw >= limit) draw = rng_();
    return lo + static_cast<long>(draw % span);
  }

  Rational draw(const SamplerSpec& spec, const std::string& name) {
    const long q = spec.denominators[static_cast<std::size_t>(uniform(0, static_cast<long>(spec.denominators.size()) - 1))];
    const auto b = spec.bound.find(name);
    const long bound = b == spec.bound.end() ? spec.numerator_bound : b->second;
    long k = 0;
    do {
      k = uniform(-bound, bound);
    } while (k % q == 0);
    const auto s = spec.shift.find(name);
    return Rational(k, q) + Rational(s == spec.shift.end() ? 0 : s->second);
  }

 private:
  std::mt19937_64 rng_;
};

std::vector<ParamMap> sample_tuples(const SweepConfig& config) {
  const SamplerSpec& spec = config.sample;
  std::vector<ParamMap> out;
  if (spec.names.empty()) {
    out.emplace_back();
    return out;
  }
  Sampler sampler(config.seed);
  if (!spec.grid) {
    for (long i = 0; i < spec.count; ++i) {
      ParamMap tuple;
      for (const auto& name : spec.names) tuple[name] = sampler.draw(spec, name);
      out.push_back(std::move(tuple));
    }
    return out;
  }
  out.emplace_back();
  for (const auto& name : spec.names) {
    std::vector<Rational> draws;
    for (long i = 0; i < spec.count; ++i) draws.push_back(sampler.draw(spec, name));
    std::vector<ParamMap> next;
    for (const auto& partial : out) {
      for (const auto& v : draws) {
        ParamMap tuple = partial;
        tuple[name] = v;
        next.push_back(std::move(tuple));
      }
    }
    out = std::move(next);
  }
  return out;
}

/// |x - y| rounded up, at the larger of the two precisions.
BigFloat abs_difference_up(const BigFloat& x, const BigFloat& y) {
  BigFloat out(std::max(x.precision(), y.precision()) + 2);
  mpfr_sub(out.get(), x.get(), y.get(), MPFR_RNDA);
  mpfr_abs(out.get(), out.get(), MPFR_RNDU);
  return out;
}

void compare(const Sides& sides, const IdentityInstance& instance, InstanceResult& result) {
  const auto* lr = std::get_if<Rational>(&sides.lhs);
  const auto* rr = std::get_if<Rational>(&sides.rhs);
  if (lr && rr) {
    result.lhs = lr->str();
    result.rhs = rr->str();
    result.outcome = *lr == *rr ? Outcome::pass : Outcome::fail;
    if (result.outcome == Outcome::fail) result.reason = "sides differ";
    return;
  }
  const auto* ls = std::get_if<FormalSeries>(&sides.lhs);
  const auto* rs = std::get_if<FormalSeries>(&sides.rhs);
  if (ls && rs) {
    const auto diff = ls->first_difference(*rs);
    if (!diff) {
      result.outcome = Outcome::pass;
      return;
    }
    result.outcome = Outcome::fail;
    result.first_difference = *diff;
    result.lhs = (*ls)[*diff].str();
    result.rhs = (*rs)[*diff].str();
    result.reason = "coefficient " + std::to_string(*diff) + " differs";
    return;
  }
  const auto* ln = std::get_if<NumericValue>(&sides.lhs);
  const auto* rn = std::get_if<NumericValue>(&sides.rhs);
  if (ln && rn) {
    result.lhs = render(sides.lhs);
    result.rhs = render(sides.rhs);
    const BigFloat target(instance.numeric.target_abs_err, 64, MPFR_RNDD);
    if (ln->error_bound > target || rn->error_bound > target) {
      result.outcome = Outcome::skip;
      result.category = "precision";
      result.reason = "side error bound exceeds abs_err";
      return;
    }
    const BigFloat tolerance(instance.numeric.target_abs_err * Rational(2), 64, MPFR_RNDD);
    const BigFloat delta = abs_difference_up(ln->value, rn->value);
    result.outcome = delta <= tolerance ? Outcome::pass : Outcome::fail;
    if (result.outcome == Outcome::fail) result.reason = "|lhs - rhs| = " + delta.str(6) + " exceeds 2*abs_err";
    return;
  }
  throw std::logic_error("side values of " + instance.tag + " have different shapes");
}

ordered_json params_json(const Catalog& catalog, const IdentityInstance& instance) {
  ordered_json out = ordered_json::object();
  if (const auto* schema = catalog.find(instance.tag)) {
    for (const auto& spec : schema->params) {
      const auto it = instance.params.find(spec.name);
      if (it != instance.params.end()) out[spec.name] = it->second.str();
    }
  } else {
    for (const auto& [name, value] : instance.params) out[name] = value.str();
  }
  return out;
}

ordered_json config_json(const SweepConfig& c) {
  ordered_json out;
  out["name"] = c.name;
  out["identity"] = c.identity;
  out["mode"] = std::string(to_string(c.mode));
  out["order"] = c.order;
  out["seed"] = c.seed;
  out["numeric"] = {{"precision_bits", c.numeric.precision_bits}, {"abs_err", c.numeric.target_abs_err.str()}};
  ordered_json ranges = ordered_json::object();
  for (const auto& [name, r] : c.ranges) ranges[name] = {r.lo, r.hi};
  out["ranges"] = std::move(ranges);
  ordered_json values = ordered_json::object();
  for (const auto& [name, list] : c.values) {
    ordered_json items = ordered_json::array();
    for (const auto& v : list) items.push_back(v.str());
    values[name] = std::move(items);
  }
  out["values"] = std::move(values);
  ordered_json sample;
  sample["names"] = c.sample.names;
  sample["denominators"] = c.sample.denominators;
  sample["numerator_bound"] = c.sample.numerator_bound;
  sample["count"] = c.sample.count;
  sample["combine"] = c.sample.grid ? "grid" : "tuples";
  sample["bound"] = c.sample.bound;
  sample["shift"] = c.sample.shift;
  out["sample"] = std::move(sample);
  return out;
}

}  // namespace

std::string_view to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::pass: return "pass";
    case Outcome::fail: return "fail";
    case Outcome::skip: return "skip";
  }
  return "unknown";
}

InstanceResult check_instance(const Catalog& catalog, const IdentityInstance& instance) {
  InstanceResult result;
  result.instance = instance;
  Evaluation evaluation = catalog.evaluate(instance);
  result.note = evaluation.validity.note;
  if (!evaluation.validity.valid) {
    result.outcome = Outcome::skip;
    result.category = evaluation.validity.category;
    result.reason = evaluation.validity.reason;
    return result;
  }
  compare(*evaluation.sides, instance, result);
  return result;
}

std::vector<IdentityInstance> enumerate_instances(const SweepConfig& config, const Catalog& catalog) {
  const IdentitySchema* schema = catalog.find(config.identity);
  if (schema == nullptr) throw ConfigError("unknown identity tag '" + config.identity + "'");

  std::vector<std::pair<std::string, std::vector<Rational>>> axes;
  for (const auto& [name, range] : config.ranges) {
    std::vector<Rational> points;
    for (long v = range.lo; v <= range.hi; ++v) points.emplace_back(v);
    axes.emplace_back(name, std::move(points));
  }
  for (const auto& entry : config.values) axes.push_back(entry);

  std::vector<std::string> supplied;
  for (const auto& [name, points] : axes) supplied.push_back(name);
  for (const auto& name : config.sample.names) supplied.push_back(name);
  std::vector<std::string> sorted = supplied;
  std::sort(sorted.begin(), sorted.end());
  if (const auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end()) {
    throw ConfigError("parameter " + *dup + " is supplied more than once");
  }
  for (const auto& name : supplied) {
    const bool known = std::any_of(schema->params.begin(), schema->params.end(),
                                   [&](const ParamSpec& p) { return p.name == name; });
    if (!known) throw ConfigError("parameter " + name + " is not part of " + schema->tag);
  }
  for (const auto& p : schema->params) {
    if (std::find(supplied.begin(), supplied.end(), p.name) == supplied.end()) {
      throw ConfigError("parameter " + p.name + " of " + schema->tag + " is not supplied");
    }
  }

  const std::vector<ParamMap> samples = sample_tuples(config);
  std::vector<IdentityInstance> out;
  for (const auto& [name, points] : axes) {
    if (points.empty()) return out;
  }
  std::vector<std::size_t> odometer(axes.size(), 0);
  while (true) {
    for (const auto& tuple : samples) {
      IdentityInstance instance;
      instance.tag = config.identity;
      instance.mode = config.mode;
      instance.order = config.order;
      instance.numeric = config.numeric;
      instance.params = tuple;
      for (std::size_t i = 0; i < axes.size(); ++i) instance.params[axes[i].first] = axes[i].second[odometer[i]];
      out.push_back(std::move(instance));
    }
    std::size_t axis = axes.size();
    while (axis > 0) {
      --axis;
      if (++odometer[axis] < axes[axis].second.size()) break;
      odometer[axis] = 0;
      if (axis == 0) return out;
    }
    if (axes.empty()) return out;
  }
}

VerificationReport run_sweep(const SweepConfig& config, const Catalog& catalog, const RunOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<IdentityInstance> instances = enumerate_instances(config, catalog);

  std::vector<InstanceResult> results(instances.size());
  unsigned threads = config.threads == 0 ? std::max(1U, std::thread::hardware_concurrency()) : config.threads;
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, instances.size())));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < instances.size(); i = next++) results[i] = check_instance(catalog, instances[i]);
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  VerificationReport report;
  report.config = config;
  report.mutation = std::string(to_string(catalog.mutation()));
  report.enumerated = static_cast<long>(instances.size());
  for (auto& result : results) {
    switch (result.outcome) {
      case Outcome::pass:
        ++report.checked;
        ++report.passed;
        break;
      case Outcome::fail:
        ++report.checked;
        ++report.failed;
        report.failures.push_back(std::move(result));
        break;
      case Outcome::skip:
        ++report.skipped;
        ++report.skip_reasons[result.category];
        report.skips.push_back(std::move(result));
        break;
    }
  }
  if (options.timing) {
    report.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  return report;
}

VerificationReport run_sweep(const SweepConfig& config, const RunOptions& options) {
  const Catalog catalog;
  return run_sweep(config, catalog, options);
}

std::string VerificationReport::to_json() const {
  const Catalog catalog;
  ordered_json doc;
  doc["config"] = config_json(config);
  ordered_json totals;
  totals["enumerated"] = enumerated;
  totals["checked"] = checked;
  totals["passed"] = passed;
  totals["failed"] = failed;
  totals["skipped"] = skipped;
  totals["skip_reasons"] = skip_reasons;
  doc["totals"] = std::move(totals);
  ordered_json fails = ordered_json::array();
  for (const auto& f : failures) {
    ordered_json entry;
    entry["params"] = params_json(catalog, f.instance);
    if (f.first_difference) entry["first_difference"] = *f.first_difference;
    entry["lhs"] = f.lhs;
    entry["rhs"] = f.rhs;
    entry["detail"] = f.reason;
    if (!f.note.empty()) entry["note"] = f.note;
    fails.push_back(std::move(entry));
  }
  doc["failures"] = std::move(fails);
  ordered_json skip_list = ordered_json::array();
  for (const auto& s : skips) {
    skip_list.push_back({{"params", params_json(catalog, s.instance)}, {"category", s.category}, {"reason", s.reason}});
  }
  doc["skips"] = std::move(skip_list);
  ordered_json meta;
  meta["tool"] = "hypercheck";
  meta["version"] = std::string(tool_version());
  meta["catalog_version"] = std::string(kCatalogVersion);
  meta["mutation"] = mutation;
  meta["nothing_checked"] = nothing_checked();
  if (wall_time_ms) meta["wall_time_ms"] = *wall_time_ms;
  doc["meta"] = std::move(meta);
  return doc.dump(2) + "\n";
}

std::string VerificationReport::summary() const {
  std::ostringstream out;
  out << (config.name.empty() ? config.identity : config.name) << ": enumerated " << enumerated << ", checked "
      << checked << ", passed " << passed << ", failed " << failed << ", skipped " << skipped;
  if (!skip_reasons.empty()) {
    out << " (";
    bool first = true;
    for (const auto& [category, count] : skip_reasons) {
      out << (first ? "" : ", ") << category << ' ' << count;
      first = false;
    }
    out << ')';
  }
  if (nothing_checked()) out << " [warning: nothing checked]";
  if (wall_time_ms) out << " in " << static_cast<long>(*wall_time_ms) << " ms";
  return out.str();
}

IdentityInstance shrink_counterexample(const Catalog& catalog, const IdentityInstance& instance) {
  if (check_instance(catalog, instance).outcome != Outcome::fail) return instance;
  const IdentitySchema* schema = catalog.find(instance.tag);
  if (schema == nullptr) return instance;

  auto step_toward_zero = [](const Rational& v) -> std::optional<Rational> {
    if (v.is_zero()) return std::nullopt;
    if (v.is_integer()) return v - Rational(v.sign());
    const mpz_class q = v.denominator();
    mpz_class k = v.numerator();
    const long s = v.sign();
    do {
      k -= s;
    } while (k != 0 && mpz_divisible_p(k.get_mpz_t(), q.get_mpz_t()) != 0);
    if (k == 0) return std::nullopt;
    return Rational(mpq_class(k, q));
  };

  IdentityInstance current = instance;
  bool improved = true;
  while (improved) {
    improved = false;
    for (const auto& spec : schema->params) {
      while (true) {
        const auto next = step_toward_zero(current.params.at(spec.name));
        if (!next) break;
        IdentityInstance candidate = current;
        candidate.params[spec.name] = *next;
        if (check_instance(catalog, candidate).outcome != Outcome::fail) break;
        current = std::move(candidate);
        improved = true;
      }
    }
  }
  return current;
}

}  // namespace hypercheck
