#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hypercheck/formal_series.hpp"
#include "hypercheck/hyp_eval.hpp"
#include "hypercheck/identities.hpp"
#include "hypercheck/rational.hpp"

namespace hypercheck {

inline constexpr std::string_view kCatalogVersion = "1.0";

/// Version of the library and tools.
[[nodiscard]] std::string_view tool_version();

enum class ParamKind { integer, rational };

struct ParamSpec {
  std::string name;
  ParamKind kind;
};

enum class SideShape { scalar, series };

struct IdentitySchema {
  std::string tag;
  std::string title;
  std::vector<ParamSpec> params;
  std::string hypothesis;
  SideShape shape = SideShape::scalar;
  bool numeric_mode = false;  ///< numeric evaluation admitted (THM1 only)
};

using ParamMap = std::map<std::string, Rational>;

struct IdentityInstance {
  std::string tag;
  ParamMap params;
  EvalMode mode = EvalMode::exact;
  long order = 30;
  NumericSettings numeric;
};

/// Outcome of the validity predicate. `category` groups reasons for reporting
/// ("schema", "mode", "hypothesis", "pole", "convergence", "precision").
struct Validity {
  bool valid = false;
  std::string category;
  std::string reason;
  std::string note;
};

using SideValue = std::variant<Rational, FormalSeries, NumericValue>;

struct Sides {
  SideValue lhs;
  SideValue rhs;
};

/// Validity together with the side values computed while probing for poles.
struct Evaluation {
  Validity validity;
  std::optional<Sides> sides;
};

[[nodiscard]] std::string_view to_string(ParamKind kind);
[[nodiscard]] std::string_view to_string(EvalMode mode);
[[nodiscard]] std::optional<EvalMode> eval_mode_from_string(std::string_view name);

/// Text rendering of a side value (series as coefficient lists, numerics with their error bound).
[[nodiscard]] std::string render(const SideValue& value);

/// "a=1/2 b=1/3 ..." in schema order.
[[nodiscard]] std::string render_params(const IdentitySchema& schema, const ParamMap& params);

/// The identity catalog: schemas, validity predicates and side evaluators.
///
/// Immutable after construction; every member function is safe to call
/// concurrently. A non-default Mutation corrupts one side evaluator.
class Catalog {
 public:
  explicit Catalog(Mutation mutation = Mutation::none);

  [[nodiscard]] const std::vector<IdentitySchema>& schemas() const;
  [[nodiscard]] const IdentitySchema* find(std::string_view tag) const;
  [[nodiscard]] Mutation mutation() const { return mutation_; }

  /// Hypothesis checks followed by a pole probe. Never throws for library errors.
  [[nodiscard]] Validity validity(const IdentityInstance& instance) const;

  /// Validity and, when valid, both side values.
  [[nodiscard]] Evaluation evaluate(const IdentityInstance& instance) const;

  /// Both side values; throws the evaluator's error or InvalidHypothesis.
  [[nodiscard]] Sides sides(const IdentityInstance& instance) const;

  /// One row per identity (or only `tag`): tag, title, parameters, hypothesis.
  [[nodiscard]] std::string manifest_text(std::optional<std::string_view> tag = std::nullopt) const;
  /// Machine-readable schema dump.
  [[nodiscard]] std::string manifest_json() const;

 private:
  [[nodiscard]] std::optional<Validity> check_schema(const IdentitySchema& schema,
                                                     const IdentityInstance& instance) const;
  [[nodiscard]] Validity check_hypothesis(const IdentityInstance& instance) const;

  Mutation mutation_;
};

}  // namespace hypercheck
