#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <regex>

#include "exmc/catalog.hpp"
#include "exmc/config.hpp"
#include "exmc/errors.hpp"
#include "exmc/experiment.hpp"

using namespace exmc;

namespace {

const char* kSmall = R"(name small
algorithm both
steps 2000
replications 200
clt_steps 1000
seed 42
data 1
checks "spectrum peskun variance-sandwich clt rejection-prob"
model
{
  type bernoulli
  thetas "0.25 0.75"
}
prior
{
  type discrete
  points "0.25 0.75"
  masses "0.75 0.25"
}
proposal
{
  type discrete-uniform
}
)";

std::string config_error_path(const std::string& text) {
  try {
    auto c = parse_config(text);
    build_experiment(c);
  } catch (const ConfigError& e) {
    return e.path();
  }
  return "<none>";
}

std::string replace(std::string s, const std::string& from, const std::string& to) {
  const auto at = s.find(from);
  if (at != std::string::npos) s.replace(at, from.size(), to);
  return s;
}

std::string strip_timestamp(const std::string& json) {
  return std::regex_replace(json, std::regex("\"generated_at\": \"[^\"]*\""), "");
}

}  // namespace

TEST(Catalog, Entries) {
  const auto& c = catalog();
  EXPECT_GE(c.size(), 8u);
  for (const char* name : {"two-point", "beta-binomial", "exponential-gamma", "poisson-gamma",
                           "gaussian-location", "ising-n2", "ising-grid", "ergm-n4"}) {
    const auto* e = find_experiment(name);
    ASSERT_NE(e, nullptr) << name;
    EXPECT_EQ(parse_config(e->config_text).name, name);
    EXPECT_NO_THROW(build_experiment(parse_config(e->config_text))) << name;
  }
  EXPECT_EQ(find_experiment("nope"), nullptr);
  EXPECT_NE(find_experiment("ising-n2")->claim.find("Pinsker"), std::string::npos);
  EXPECT_NE(find_experiment("poisson-gamma")->claim.find("tail"), std::string::npos);
}

TEST(Config, RoundTrip) {
  for (const auto& e : catalog()) {
    const auto a = parse_config(e.config_text);
    const auto text = serialize_config(a);
    const auto b = parse_config(text);
    EXPECT_EQ(a, b) << e.name;
    EXPECT_EQ(text, serialize_config(b)) << e.name;
  }
  auto c = parse_config(replace(kSmall, "prior\n{\n  type discrete\n  points \"0.25 0.75\"\n  masses \"0.75 0.25\"\n}",
                                R"(prior
{
  type mixture
  weights "0.3 0.7"
  component
  {
    type discrete
    points "0.25 0.75"
    masses "1 1"
  }
  component
  {
    type discrete
    points "0.25 0.75"
    masses "3 1"
  }
})"));
  ASSERT_EQ(c.prior.components.size(), 2u);
  c.laziness = 0.37;
  c.theta0 = 0.1 + 0.2;
  c.grid = GridConfig{-1.5, std::nullopt, 33};
  EXPECT_EQ(parse_config(serialize_config(c)), c);
  EXPECT_EQ(format_double(0.1 + 0.2), "0.30000000000000004");
}

TEST(Config, ErrorsNameTheField) {
  EXPECT_EQ(config_error_path(replace(kSmall, "steps 2000", "steps 2000\nbogus 1")), "bogus");
  EXPECT_EQ(config_error_path(replace(kSmall, "\"spectrum ", "\"spectra ")), "checks[0]");
  EXPECT_EQ(config_error_path(std::string(kSmall) + "grid\n{\n  size 5\n}\n"), "grid.size");
  EXPECT_EQ(config_error_path(std::string(kSmall) + "grid\n{\n  K 1\n}\n"), "grid.K");
  EXPECT_EQ(config_error_path(replace(kSmall, "type bernoulli", "type bernouli")), "model.type");
  EXPECT_EQ(config_error_path(replace(kSmall, "masses \"0.75 0.25\"", "masses \"0.75 0.25\"\n  rate 2")),
            "prior.rate");
  EXPECT_EQ(config_error_path(replace(kSmall, "algorithm both", "algorithm gibbs")), "algorithm");
  EXPECT_EQ(config_error_path(replace(kSmall, "steps 2000", "steps many")), "steps");
  EXPECT_EQ(config_error_path(replace(kSmall, "data 1", "data 1\ndata 0")), "data");
}

TEST(Experiment, DeterministicReport) {
  const auto c = parse_config(kSmall);
  RunOptions o;
  o.write_files = false;
  const auto a = run_experiment(c, o);
  const auto b = run_experiment(c, o);
  EXPECT_EQ(strip_timestamp(a.report_json), strip_timestamp(b.report_json));
  EXPECT_NE(a.report_json.find("\"generated_at\""), std::string::npos);
  EXPECT_TRUE(a.all_passed());
  EXPECT_EQ(a.checks.size(), 5u);
  EXPECT_NE(a.report_json.find("\"P\""), std::string::npos);
  EXPECT_NE(a.report_json.find("\"off_diagonal_margin\""), std::string::npos);
  o.seed = 43;
  EXPECT_NE(strip_timestamp(run_experiment(c, o).report_json), strip_timestamp(a.report_json));
}

TEST(Experiment, WritesOutputFiles) {
  const auto dir = std::filesystem::temp_directory_path() / "exmc_cli_test";
  std::filesystem::remove_all(dir);
  RunOptions o;
  o.out_dir = dir;
  run_experiment(parse_config(kSmall), o);
  for (const char* f : {"trace.csv", "trace_mh.csv", "trace.json", "report.json", "summary.txt",
                        "matrix_mh.csv", "matrix_exchange.csv"}) {
    EXPECT_TRUE(std::filesystem::exists(dir / f)) << f;
  }
  std::ifstream in(dir / "trace.csv");
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "step,theta,accepted,held");
  std::filesystem::remove_all(dir);
}

TEST(Experiment, InapplicableCheckFails) {
  // No TV modulus applies to the exponential model; the check is recorded as failed.
  const std::string text = R"(name exp
algorithm exchange
steps 1000
seed 1
data 1
checks "tv-modulus tail"
model
{
  type exponential
}
prior
{
  type exponential
  rate 1
}
proposal
{
  type random-walk-gaussian
  scale 1
}
)";
  RunOptions o;
  o.write_files = false;
  const auto r = run_experiment(parse_config(text), o);
  ASSERT_EQ(r.checks.size(), 2u);
  EXPECT_FALSE(r.checks[0].satisfied);
  EXPECT_TRUE(r.checks[1].satisfied);
  EXPECT_FALSE(r.all_passed());
  EXPECT_NE(r.summary.find("FAIL"), std::string::npos);
}
