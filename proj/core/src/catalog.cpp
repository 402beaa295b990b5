#include "hypercheck/catalog.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "hypercheck/errors.hpp"

#ifndef HYPERCHECK_VERSION
#define HYPERCHECK_VERSION "0.0.0"
#endif

namespace hypercheck {
namespace {

constexpr long kMaxOrder = 100'000;

ParamSpec I(std::string name) { return {std::move(name), ParamKind::integer}; }
ParamSpec Q(std::string name) { return {std::move(name), ParamKind::rational}; }

std::vector<IdentitySchema> build_schemas() {
  std::vector<IdentitySchema> out;
  auto scalar = [&](std::string tag, std::string title, std::vector<ParamSpec> params, std::string hypothesis,
                    bool numeric = false) {
    out.push_back({std::move(tag), std::move(title), std::move(params), std::move(hypothesis), SideShape::scalar,
                   numeric});
  };
  auto series = [&](std::string tag, std::string title, std::vector<ParamSpec> params, std::string hypothesis) {
    out.push_back(
        {std::move(tag), std::move(title), std::move(params), std::move(hypothesis), SideShape::series, false});
  };

  scalar("THM1", "3F2(1) with two integral parameter differences", {Q("a"), Q("b"), Q("c"), I("l"), I("r")},
         "l >= 0; c <= r-l if -c is a non-negative integer, else c < r-l (numeric mode, needs 1+r-l-c >= 3); "
         "both sides vanish for r < 0",
         true);
  scalar("KM", "Karlsson-Minton summation", {Q("beta"), Q("alpha"), Q("gamma"), I("l")},
         "l >= 0; gamma = -n a non-positive integer with gamma < 1-l");
  scalar("K74", "Karlsson reduction to a finite j-sum", {Q("beta"), Q("delta"), Q("gamma"), Q("eta"), I("r")},
         "r >= 0; gamma a non-positive integer");
  scalar("PBM", "Karlsson-Minton and Karlsson combined", {Q("beta"), Q("alpha"), Q("gamma"), I("l"), I("r")},
         "l >= 0; r >= 0; gamma = -n a non-positive integer with gamma < 1-l");
  scalar("RJRJR", "terminating 3F2(1) transformation", {I("r"), Q("A"), Q("B"), Q("D"), Q("E")}, "r >= 0");
  scalar("COR1", "terminating 3F2(1) transformation with shifts m1, m2",
         {Q("alpha"), Q("gamma"), I("m1"), I("m2"), I("n")},
         "n >= 0; n >= max(m1, m2-m1); both sides vanish if n < m2");
  series("THM2", "product of two shifted Kummer functions reduces to a polynomial",
         {Q("alpha"), Q("gamma"), I("m1"), I("m2")}, "m1^2+m2^2 > 0; deg P <= max(|m1|, |m2-m1|) - 1");
  const char* example_titles[] = {"shifts (1, 1), right side 1", "shifts (0, -1), right side 1",
                                  "shifts (1, 2), right side 1", "shifts (1, 0), right side 1",
                                  "shifts (-1, 1), right side alpha+t",
                                  "shifts (2, 4), right side (gamma-4)_3+(2alpha-gamma)(gamma-3)t"};
  for (int which = 1; which <= 6; ++which) {
    series("EX" + std::to_string(which), std::string("Kummer product example, ") + example_titles[which - 1],
           {Q("alpha"), Q("gamma")}, "no poles");
  }
  scalar("LEM3", "reciprocal-gamma convolution sum, Pochhammer-normalized", {Q("mu"), Q("beta"), I("m")},
         "m >= 0; no poles");
  series("THM4", "linearization of products of 1F1(1; mu; x)", {Q("mu"), Q("beta")}, "no poles");
  series("EULER", "Euler product of 2F1 pairs", {Q("a"), Q("b"), Q("c")}, "no poles");
  series("GAUSS", "Gauss relation between 2F1 products", {Q("a"), Q("b"), Q("c")}, "c not in {-1, 0, 1}; no poles");
  series("KUMMER", "Kummer transformation of 1F1", {Q("a"), Q("b")}, "no poles");
  return out;
}

const std::vector<IdentitySchema>& all_schemas() {
  static const std::vector<IdentitySchema> schemas = build_schemas();
  return schemas;
}

const Rational& param(const IdentityInstance& instance, const std::string& name) {
  const auto it = instance.params.find(name);
  if (it == instance.params.end()) throw InvalidHypothesis("missing parameter " + name);
  return it->second;
}

long int_param(const IdentityInstance& instance, const std::string& name) {
  const auto value = param(instance, name).to_long();
  if (!value) throw InvalidHypothesis("parameter " + name + " must be an integer");
  return *value;
}

Validity invalid(std::string category, std::string reason) { return {false, std::move(category), std::move(reason), {}}; }

Sides scalar_sides(ScalarValue lhs, ScalarValue rhs) {
  auto lift = [](ScalarValue v) -> SideValue {
    if (auto* r = std::get_if<Rational>(&v)) return *r;
    return std::get<NumericValue>(std::move(v));
  };
  return {lift(std::move(lhs)), lift(std::move(rhs))};
}

Sides exact_sides(ExactPair pair) { return {std::move(pair.lhs), std::move(pair.rhs)}; }
Sides series_sides(SeriesPair pair) { return {std::move(pair.lhs), std::move(pair.rhs)}; }

}  // namespace

std::string_view tool_version() { return HYPERCHECK_VERSION; }

std::string_view to_string(ParamKind kind) { return kind == ParamKind::integer ? "integer" : "rational"; }

std::string_view to_string(EvalMode mode) { return mode == EvalMode::exact ? "exact" : "numeric"; }

std::optional<EvalMode> eval_mode_from_string(std::string_view name) {
  if (name == "exact") return EvalMode::exact;
  if (name == "numeric") return EvalMode::numeric;
  return std::nullopt;
}

std::string render(const SideValue& value) {
  if (const auto* r = std::get_if<Rational>(&value)) return r->str();
  if (const auto* s = std::get_if<FormalSeries>(&value)) return s->str();
  const auto& n = std::get<NumericValue>(value);
  return n.value.str(40) + " +/- " + n.error_bound.str(3);
}

std::string render_params(const IdentitySchema& schema, const ParamMap& params) {
  std::string out;
  for (const auto& spec : schema.params) {
    const auto it = params.find(spec.name);
    if (!out.empty()) out += ' ';
    out += spec.name + "=" + (it == params.end() ? std::string("?") : it->second.str());
  }
  return out;
}

Catalog::Catalog(Mutation mutation) : mutation_(mutation) {}

const std::vector<IdentitySchema>& Catalog::schemas() const { return all_schemas(); }

const IdentitySchema* Catalog::find(std::string_view tag) const {
  for (const auto& schema : schemas()) {
    if (schema.tag == tag) return &schema;
  }
  return nullptr;
}

std::optional<Validity> Catalog::check_schema(const IdentitySchema& schema, const IdentityInstance& instance) const {
  for (const auto& spec : schema.params) {
    const auto it = instance.params.find(spec.name);
    if (it == instance.params.end()) return invalid("schema", "missing parameter " + spec.name);
    if (spec.kind == ParamKind::integer && !it->second.to_long()) {
      return invalid("schema", "parameter " + spec.name + " = " + it->second.str() + " must be an integer");
    }
  }
  for (const auto& [name, value] : instance.params) {
    const bool known = std::any_of(schema.params.begin(), schema.params.end(),
                                   [&](const ParamSpec& spec) { return spec.name == name; });
    if (!known) return invalid("schema", "unknown parameter " + name + " for " + schema.tag);
  }
  if (schema.shape == SideShape::series && (instance.order < 1 || instance.order > kMaxOrder)) {
    return invalid("schema", "order " + std::to_string(instance.order) + " outside 1.." + std::to_string(kMaxOrder));
  }
  if (instance.mode == EvalMode::numeric) {
    if (!schema.numeric_mode) return invalid("mode", "numeric mode is only available for THM1");
    if (param(instance, "c").is_integer()) return invalid("mode", "numeric mode needs a non-integer c");
    if (instance.numeric.target_abs_err.sign() <= 0) return invalid("mode", "abs_err must be positive");
    if (instance.numeric.precision_bits < 32) return invalid("mode", "precision must be at least 32 bits");
  }
  return std::nullopt;
}

Validity Catalog::check_hypothesis(const IdentityInstance& instance) const {
  const std::string& tag = instance.tag;
  Validity ok{true, {}, {}, {}};
  if (tag == "THM1") {
    const long l = int_param(instance, "l");
    const long r = int_param(instance, "r");
    const Rational& c = param(instance, "c");
    if (l < 0) return invalid("hypothesis", "l >= 0 violated (l = " + std::to_string(l) + ")");
    const Rational bound(r - l);
    if (c.is_integer()) {
      if (c.sign() > 0) return invalid("hypothesis", "c = " + c.str() + " is a positive integer (Gamma(1-c) pole)");
      if (c > bound) return invalid("hypothesis", "c <= r-l violated (c = " + c.str() + ", r-l = " + bound.str() + ")");
    } else {
      if (instance.mode == EvalMode::exact) {
        return invalid("mode", "exact mode needs c to be a non-positive integer (c = " + c.str() + ")");
      }
      if (!(c < bound)) return invalid("hypothesis", "c < r-l violated (c = " + c.str() + ", r-l = " + bound.str() + ")");
      const Rational excess = Rational(1) + bound - c;
      if (excess < Rational(kMinimumNumericExcess)) {
        return invalid("convergence", "series excess " + excess.str() + " below " +
                                          std::to_string(kMinimumNumericExcess) + " for numeric summation");
      }
    }
    if (r < 0) ok.note = "both sides vanish (r < 0)";
    return ok;
  }
  if (tag == "KM" || tag == "PBM") {
    const long l = int_param(instance, "l");
    const Rational& gamma = param(instance, "gamma");
    if (l < 0) return invalid("hypothesis", "l >= 0 violated (l = " + std::to_string(l) + ")");
    if (tag == "PBM" && int_param(instance, "r") < 0) return invalid("hypothesis", "r >= 0 violated");
    if (!gamma.is_nonpositive_integer()) {
      return invalid("hypothesis", "gamma = " + gamma.str() + " must be a non-positive integer");
    }
    if (!(gamma < Rational(1 - l))) return invalid("hypothesis", "gamma < 1-l violated (gamma = " + gamma.str() + ")");
    return ok;
  }
  if (tag == "K74") {
    if (int_param(instance, "r") < 0) return invalid("hypothesis", "r >= 0 violated");
    const Rational& gamma = param(instance, "gamma");
    if (!gamma.is_nonpositive_integer()) {
      return invalid("hypothesis", "gamma = " + gamma.str() + " must be a non-positive integer");
    }
    return ok;
  }
  if (tag == "RJRJR") {
    if (int_param(instance, "r") < 0) return invalid("hypothesis", "r >= 0 violated");
    return ok;
  }
  if (tag == "COR1") {
    const long m1 = int_param(instance, "m1");
    const long m2 = int_param(instance, "m2");
    const long n = int_param(instance, "n");
    if (n < 0) return invalid("hypothesis", "n >= 0 violated (n = " + std::to_string(n) + ")");
    if (n < std::max(m1, m2 - m1)) {
      return invalid("hypothesis", "n >= max(m1, m2-m1) violated (n = " + std::to_string(n) +
                                       ", max = " + std::to_string(std::max(m1, m2 - m1)) + ")");
    }
    if (n < m2) ok.note = "both sides vanish (n < m2)";
    return ok;
  }
  if (tag == "THM2") {
    if (int_param(instance, "m1") == 0 && int_param(instance, "m2") == 0) {
      return invalid("hypothesis", "m1^2+m2^2>0 violated");
    }
    return ok;
  }
  if (tag == "LEM3") {
    if (int_param(instance, "m") < 0) return invalid("hypothesis", "m >= 0 violated");
    return ok;
  }
  return ok;
}

Sides Catalog::sides(const IdentityInstance& instance) const {
  const std::string& tag = instance.tag;
  const long order = instance.order;
  auto q = [&](const char* name) -> const Rational& { return param(instance, name); };
  auto z = [&](const char* name) { return int_param(instance, name); };

  if (tag == "THM1") {
    return scalar_sides(lhs_thm1(q("a"), q("b"), q("c"), z("l"), z("r"), instance.mode, instance.numeric),
                        rhs_thm1(q("a"), q("b"), q("c"), z("l"), z("r"), instance.mode, instance.numeric, mutation_));
  }
  if (tag == "KM") return exact_sides(sides_km(q("beta"), q("alpha"), q("gamma"), z("l"), mutation_));
  if (tag == "K74") return exact_sides(sides_k74(q("beta"), q("delta"), q("gamma"), q("eta"), z("r")));
  if (tag == "PBM") return exact_sides(sides_pbm(q("beta"), q("alpha"), q("gamma"), z("l"), z("r")));
  if (tag == "RJRJR") return exact_sides(sides_rjrjr(z("r"), q("A"), q("B"), q("D"), q("E")));
  if (tag == "COR1") {
    const Rational& alpha = q("alpha");
    const Rational& gamma = q("gamma");
    const long m1 = z("m1");
    const long m2 = z("m2");
    const long n = z("n");
    return {lhs_cor1(alpha, gamma, m1, m2, n), rhs_cor1(alpha, gamma, m1, m2, n, mutation_)};
  }
  if (tag == "THM2") return series_sides(sides_thm2(q("alpha"), q("gamma"), z("m1"), z("m2"), order, mutation_));
  if (tag.size() == 3 && tag.starts_with("EX") && tag[2] >= '1' && tag[2] <= '6') {
    return series_sides(sides_example(tag[2] - '0', q("alpha"), q("gamma"), order));
  }
  if (tag == "LEM3") return exact_sides(sides_lem3(q("mu"), q("beta"), z("m")));
  if (tag == "THM4") return series_sides(sides_thm4(q("mu"), q("beta"), order, mutation_));
  if (tag == "EULER") return series_sides(sides_euler(q("a"), q("b"), q("c"), order));
  if (tag == "GAUSS") return series_sides(sides_gauss(q("a"), q("b"), q("c"), order));
  if (tag == "KUMMER") return series_sides(sides_kummer(q("a"), q("b"), order));
  throw InvalidHypothesis("unknown identity " + tag);
}

Evaluation Catalog::evaluate(const IdentityInstance& instance) const {
  const IdentitySchema* schema = find(instance.tag);
  if (schema == nullptr) return {invalid("schema", "unknown identity " + instance.tag), std::nullopt};
  if (auto bad = check_schema(*schema, instance)) return {std::move(*bad), std::nullopt};
  Validity validity = check_hypothesis(instance);
  if (!validity.valid) return {std::move(validity), std::nullopt};
  try {
    Sides values = sides(instance);
    return {std::move(validity), std::move(values)};
  } catch (const PoleError& e) {
    return {invalid("pole", e.what()), std::nullopt};
  } catch (const std::domain_error& e) {
    return {invalid("pole", e.what()), std::nullopt};
  } catch (const InvalidHypothesis& e) {
    return {invalid("hypothesis", e.what()), std::nullopt};
  } catch (const ConvergenceTooSlow& e) {
    return {invalid("convergence", e.what()), std::nullopt};
  } catch (const PrecisionInsufficient& e) {
    return {invalid("precision", e.what()), std::nullopt};
  } catch (const Error& e) {
    return {invalid("evaluation", e.what()), std::nullopt};
  }
}

Validity Catalog::validity(const IdentityInstance& instance) const { return evaluate(instance).validity; }

std::string Catalog::manifest_text(std::optional<std::string_view> tag) const {
  std::ostringstream out;
  for (const auto& schema : schemas()) {
    if (tag && schema.tag != *tag) continue;
    out << schema.tag << "  " << schema.title << "  params:";
    for (const auto& p : schema.params) out << ' ' << p.name << ':' << to_string(p.kind);
    out << "  sides: " << (schema.shape == SideShape::series ? "series" : "scalar")
        << (schema.numeric_mode ? " (exact, numeric)" : " (exact)") << "  hypothesis: " << schema.hypothesis
        << '\n';
  }
  return out.str();
}

std::string Catalog::manifest_json() const {
  nlohmann::ordered_json doc;
  doc["tool"] = "hypercheck";
  doc["version"] = std::string(tool_version());
  doc["catalog_version"] = std::string(kCatalogVersion);
  auto& list = doc["identities"] = nlohmann::ordered_json::array();
  for (const auto& schema : schemas()) {
    nlohmann::ordered_json entry;
    entry["tag"] = schema.tag;
    entry["title"] = schema.title;
    auto& params = entry["params"] = nlohmann::ordered_json::array();
    for (const auto& p : schema.params) params.push_back({{"name", p.name}, {"kind", std::string(to_string(p.kind))}});
    entry["sides"] = schema.shape == SideShape::series ? "series" : "scalar";
    entry["modes"] = schema.numeric_mode ? nlohmann::ordered_json{"exact", "numeric"} : nlohmann::ordered_json{"exact"};
    entry["hypothesis"] = schema.hypothesis;
    list.push_back(std::move(entry));
  }
  return doc.dump(2) + "\n";
}

}  // namespace hypercheck
