#include <gtest/gtest.h>

#include <filesystem>

#include <json.hpp>

#include "hypercheck/errors.hpp"
#include "hypercheck/harness.hpp"

using namespace hypercheck;

namespace {

const std::filesystem::path kSweepDir(HYPERCHECK_SWEEP_DIR);

constexpr const char* kSmallCor1 = R"(
# small grid
[sweep]
identity = COR1
seed = 9

[ranges]
m1 = -2..2
m2 = -2..2
n = 0..5

[sample]
names = alpha, gamma
count = 3
)";

IdentityInstance cor1(long m1, long m2, long n) {
  IdentityInstance inst;
  inst.tag = "COR1";
  inst.params = {{"alpha", Rational(1, 3)}, {"gamma", Rational(2, 7)}, {"m1", Rational(m1)}, {"m2", Rational(m2)}, {"n", Rational(n)}};
  return inst;
}

}  // namespace

TEST(SweepConfig, ParsesAllSections) {
  const SweepConfig c = parse_sweep_config(R"(
[sweep]
name = demo   ; trailing comment
identity = THM1
mode = numeric
order = 12
seed = 77
threads = 2
[ranges]
l = 0..1
r = 2
[values]
c = -1/2, -3/2
[sample]
names = a, b
denominators = 5, 9
numerator_bound = 12
count = 4
combine = grid
bound.a = 3
shift.b = -2
[numeric]
precision_bits = 256
abs_err = 1e-40
)");
  EXPECT_EQ(c.name, "demo");
  EXPECT_EQ(c.identity, "THM1");
  EXPECT_EQ(c.mode, EvalMode::numeric);
  EXPECT_EQ(c.order, 12);
  EXPECT_EQ(c.seed, 77U);
  EXPECT_EQ(c.threads, 2U);
  ASSERT_EQ(c.ranges.size(), 2U);
  EXPECT_EQ(c.ranges[0].first, "l");
  EXPECT_EQ(c.ranges[0].second.hi, 1);
  EXPECT_EQ(c.ranges[1].second.lo, 2);
  EXPECT_EQ(c.ranges[1].second.hi, 2);
  ASSERT_EQ(c.values.size(), 1U);
  EXPECT_EQ(c.values[0].second[1], Rational(-3, 2));
  EXPECT_EQ(c.sample.names, (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(c.sample.denominators, (std::vector<long>{5, 9}));
  EXPECT_EQ(c.sample.numerator_bound, 12);
  EXPECT_EQ(c.sample.count, 4);
  EXPECT_TRUE(c.sample.grid);
  EXPECT_EQ(c.sample.bound.at("a"), 3);
  EXPECT_EQ(c.sample.shift.at("b"), -2);
  EXPECT_EQ(c.numeric.precision_bits, 256);
  EXPECT_EQ(c.numeric.target_abs_err, Rational(mpq_class(1, mpz_class("10000000000000000000000000000000000000000"))));
}

TEST(SweepConfig, ErrorsCarryLineNumbers) {
  try {
    (void)parse_sweep_config("[sweep]\nidentity = KM\n[ranges]\nl = 0..x\n");
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("line 4"), std::string::npos) << e.what();
  }
  EXPECT_THROW((void)parse_sweep_config("[sweep]\nidentity = KM\nbogus = 1\n"), ConfigError);
  EXPECT_THROW((void)parse_sweep_config("[weird]\n"), ConfigError);
  EXPECT_THROW((void)parse_sweep_config("identity = KM\n"), ConfigError);
  EXPECT_THROW((void)parse_sweep_config("[sweep]\nmode = exact\n"), ConfigError);
  EXPECT_THROW((void)parse_sweep_config("[sweep]\nidentity = KM\n[sample]\ndenominators = 1\n"), ConfigError);
  EXPECT_THROW((void)parse_sweep_config("[sweep]\nidentity = KM\n[numeric]\nabs_err = -1\n"), ConfigError);
  EXPECT_THROW((void)load_sweep_config(kSweepDir / "does_not_exist.cfg"), ConfigError);
}

TEST(Enumerate, RejectsSchemaMismatch) {
  const Catalog catalog;
  SweepConfig c = parse_sweep_config(kSmallCor1);
  c.identity = "NOPE";
  EXPECT_THROW((void)enumerate_instances(c, catalog), ConfigError);
  c = parse_sweep_config(kSmallCor1);
  c.ranges.pop_back();
  EXPECT_THROW((void)enumerate_instances(c, catalog), ConfigError);
  c = parse_sweep_config(kSmallCor1);
  c.ranges.emplace_back("zz", IntRange{0, 1});
  EXPECT_THROW((void)enumerate_instances(c, catalog), ConfigError);
}

TEST(Enumerate, CountsAndSampledValues) {
  const Catalog catalog;
  const SweepConfig c = parse_sweep_config(kSmallCor1);
  const auto instances = enumerate_instances(c, catalog);
  EXPECT_EQ(instances.size(), 5U * 5U * 6U * 3U);
  for (const auto& inst : instances) {
    for (const char* name : {"alpha", "gamma"}) {
      const Rational& v = inst.params.at(name);
      EXPECT_FALSE(v.is_integer());
      EXPECT_LE(abs(v.numerator()), mpz_class(40 * 13));
    }
  }
  EXPECT_EQ(enumerate_instances(c, catalog).size(), instances.size());
}

TEST(RunSweep, TotalsAddUp) {
  const SweepConfig c = parse_sweep_config(kSmallCor1);
  const VerificationReport r = run_sweep(c);
  EXPECT_EQ(r.enumerated, 450);
  EXPECT_EQ(r.checked, r.passed + r.failed);
  EXPECT_EQ(r.enumerated, r.checked + r.skipped);
  long by_category = 0;
  for (const auto& [category, count] : r.skip_reasons) by_category += count;
  EXPECT_EQ(by_category, r.skipped);
  EXPECT_EQ(static_cast<long>(r.skips.size()), r.skipped);
  EXPECT_GT(r.checked, 0);
  EXPECT_TRUE(r.ok());
}

TEST(RunSweep, DeterministicAcrossRunsAndThreadCounts) {
  SweepConfig c = parse_sweep_config(kSmallCor1);
  c.threads = 1;
  const std::string one = run_sweep(c).to_json();
  EXPECT_EQ(run_sweep(c).to_json(), one);
  c.threads = 4;
  EXPECT_EQ(run_sweep(c).to_json(), one);
  c.seed = 10;
  EXPECT_NE(run_sweep(c).to_json(), one);
}

TEST(RunSweep, TimingIsOptIn) {
  const SweepConfig c = parse_sweep_config(kSmallCor1);
  const auto plain = nlohmann::json::parse(run_sweep(c).to_json());
  EXPECT_FALSE(plain["meta"].contains("wall_time_ms"));
  const auto timed = nlohmann::json::parse(run_sweep(c, RunOptions{true}).to_json());
  EXPECT_TRUE(timed["meta"].contains("wall_time_ms"));
}

TEST(RunSweep, EmptyRangeChecksNothing) {
  SweepConfig c = parse_sweep_config(kSmallCor1);
  c.ranges[2].second = IntRange{3, 2};
  const VerificationReport r = run_sweep(c);
  EXPECT_EQ(r.enumerated, 0);
  EXPECT_TRUE(r.nothing_checked());
  EXPECT_TRUE(r.ok());
  const auto doc = nlohmann::json::parse(r.to_json());
  EXPECT_TRUE(doc["meta"]["nothing_checked"].get<bool>());
  EXPECT_NE(r.summary().find("nothing checked"), std::string::npos);
}

TEST(RunSweep, AllInvalidChecksNothing) {
  const SweepConfig c = parse_sweep_config(R"(
[sweep]
identity = THM2
[ranges]
m1 = 0
m2 = 0
[sample]
names = alpha, gamma
count = 5
)");
  const VerificationReport r = run_sweep(c);
  EXPECT_EQ(r.checked, 0);
  EXPECT_EQ(r.skipped, 5);
  EXPECT_EQ(r.skip_reasons.at("hypothesis"), 5);
  EXPECT_TRUE(r.nothing_checked());
}

TEST(RunSweep, MutantIsCaught) {
  const SweepConfig c = parse_sweep_config(kSmallCor1);
  const Catalog mutant(Mutation::cor1_rhs_sign);
  VerificationReport r = run_sweep(c, mutant);
  r.mutation = "cor1-rhs-sign";
  EXPECT_GT(r.failed, 0);
  EXPECT_FALSE(r.ok());
  const auto doc = nlohmann::json::parse(r.to_json());
  ASSERT_FALSE(doc["failures"].empty());
  const auto& first = doc["failures"][0];
  EXPECT_TRUE(first["params"].contains("alpha"));
  EXPECT_NE(first["lhs"], first["rhs"]);
  EXPECT_EQ(doc["meta"]["mutation"], "cor1-rhs-sign");
}

TEST(RunSweep, SeriesFailuresRecordFirstDifference) {
  const SweepConfig c = parse_sweep_config(R"(
[sweep]
identity = THM2
order = 20
[ranges]
m1 = 1..2
m2 = 1
[sample]
names = alpha, gamma
count = 2
)");
  const VerificationReport r = run_sweep(c, Catalog(Mutation::thm2_second_index));
  ASSERT_GT(r.failed, 0);
  for (const auto& f : r.failures) EXPECT_TRUE(f.first_difference.has_value());
}

TEST(CheckInstance, Outcomes) {
  const Catalog catalog;
  EXPECT_EQ(check_instance(catalog, cor1(1, 1, 4)).outcome, Outcome::pass);
  const InstanceResult skipped = check_instance(catalog, cor1(3, 1, 1));
  EXPECT_EQ(skipped.outcome, Outcome::skip);
  EXPECT_EQ(skipped.category, "hypothesis");
  const InstanceResult failed = check_instance(Catalog(Mutation::cor1_rhs_sign), cor1(1, 1, 4));
  EXPECT_EQ(failed.outcome, Outcome::fail);
  EXPECT_NE(failed.lhs, failed.rhs);
  EXPECT_EQ(to_string(Outcome::pass), "pass");
}

TEST(Shrink, MovesTowardBoundary) {
  const Catalog mutant(Mutation::cor1_rhs_sign);
  const IdentityInstance start = cor1(3, 2, 7);
  ASSERT_EQ(check_instance(mutant, start).outcome, Outcome::fail);
  const IdentityInstance small = shrink_counterexample(mutant, start);
  EXPECT_EQ(check_instance(mutant, small).outcome, Outcome::fail);
  EXPECT_LE(small.params.at("n"), start.params.at("n"));
  EXPECT_LT(small.params.at("n"), Rational(7));
  EXPECT_LE(abs(small.params.at("alpha").numerator()), abs(start.params.at("alpha").numerator()));
  EXPECT_EQ(shrink_counterexample(mutant, small).params, small.params);
}

TEST(Shrink, PassingInstanceUnchanged) {
  const Catalog catalog;
  const IdentityInstance inst = cor1(3, 2, 7);
  EXPECT_EQ(shrink_counterexample(catalog, inst).params, inst.params);
}

TEST(ShippedConfigs, Thm2DefaultPasses) {
  const SweepConfig c = load_sweep_config(kSweepDir / "thm2_default.cfg");
  EXPECT_EQ(c.name, "thm2_default");
  const VerificationReport r = run_sweep(c);
  EXPECT_TRUE(r.ok()) << r.summary();
  EXPECT_GT(r.checked, 1000);
}

TEST(ShippedConfigs, AllParse) {
  const Catalog catalog;
  long count = 0;
  for (const auto& entry : std::filesystem::directory_iterator(kSweepDir)) {
    if (entry.path().extension() != ".cfg") continue;
    const SweepConfig c = load_sweep_config(entry.path());
    EXPECT_NE(catalog.find(c.identity), nullptr) << entry.path();
    EXPECT_FALSE(enumerate_instances(c, catalog).empty()) << entry.path();
    ++count;
  }
  EXPECT_EQ(count, 19);
}
