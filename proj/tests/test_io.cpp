#include "infodyn/io.hpp"

#include <gtest/gtest.h>

#include <json.hpp>
#include <random>

#include "test_support.hpp"

namespace infodyn {
namespace {

using testing::kExampleBits;

TEST(ParseInput, Ascii01IgnoresWhitespace) {
  const auto s = io::parse_input("0000 1000\n1010 0001\n", io::InputFormat::ascii01);
  EXPECT_EQ(io::to_ascii01(s), "0000100010100001\n");
  EXPECT_THROW(io::parse_input("0102", io::InputFormat::ascii01), std::invalid_argument);
  EXPECT_THROW(io::parse_input(" \n", io::InputFormat::ascii01), std::invalid_argument);
}

TEST(ParseInput, Ascii01RoundTripIsCanonical) {
  std::mt19937_64 gen(61);
  for (int trial = 0; trial < 100; ++trial) {
    const std::string bits = testing::random_bits(gen, 1 + gen() % 300);
    std::string noisy;
    for (char c : bits) {
      noisy += c;
      if (gen() % 5 == 0) noisy += " \t\n"[gen() % 3];
    }
    const std::string canonical = io::to_ascii01(io::parse_input(noisy, io::InputFormat::ascii01));
    EXPECT_EQ(canonical, bits + "\n");
    EXPECT_EQ(io::to_ascii01(io::parse_input(canonical, io::InputFormat::ascii01)), canonical);
  }
}

TEST(ParseInput, RawBytesMostSignificantFirst) {
  const std::string data{'\x08', '\xA1', '\xC8', '\xC8'};
  EXPECT_EQ(io::to_ascii01(io::parse_input(data, io::InputFormat::bytes)),
            std::string(kExampleBits) + "\n");
  EXPECT_THROW(io::parse_input("", io::InputFormat::bytes), std::invalid_argument);
}

TEST(ParseInput, SymbolList) {
  const auto s = io::parse_input("8, 161\n200,200", io::InputFormat::symbols, 8);
  EXPECT_EQ(io::to_ascii01(s), std::string(kExampleBits) + "\n");
  // Narrowest width holding 3 is 2 bits.
  EXPECT_EQ(io::to_ascii01(io::parse_input("3,0,2", io::InputFormat::symbols)), "110010\n");
  EXPECT_THROW(io::parse_input("1,x", io::InputFormat::symbols), std::invalid_argument);
  EXPECT_THROW(io::parse_input("-1", io::InputFormat::symbols), std::invalid_argument);
  EXPECT_THROW(io::parse_input("4", io::InputFormat::symbols, 2), std::invalid_argument);
  EXPECT_THROW(io::parse_input(",", io::InputFormat::symbols), std::invalid_argument);
}

TEST(FormatNumber, NineSignificantDigits) {
  EXPECT_EQ(io::format_number(0.8960382325), "0.896038233");
  EXPECT_EQ(io::format_number(0.1875), "0.1875");
  EXPECT_EQ(io::format_number(1.0), "1");
  EXPECT_EQ(io::format_number(0.0), "0");
}

TEST(MeasureReport, CsvWithNullScale) {
  const std::vector<int> scales{1, 64};
  const auto entries = multiscale_profile(SymbolSequence::from_bits(kExampleBits), scales);
  EXPECT_EQ(io::measure_report(entries, io::OutputFormat::csv),
            "scale,I_b,E,S,C\n"
            "1,0.896038233,0.896038233,0.103961767,0.372614873\n"
            "64,,,,\n");
  const auto j = nlohmann::json::parse(io::measure_report(entries, io::OutputFormat::json));
  ASSERT_EQ(j.size(), 2u);
  EXPECT_NEAR(j[0]["I_b"].get<double>(), 0.89603821, 1e-6);
  EXPECT_TRUE(j[1]["E"].is_null());
}

TEST(MeasureSetReport, Schema) {
  MeasureSet m;
  m.emergence = 0.25;
  m.self_organization = 0.75;
  m.complexity = 0.75;
  m.homeostasis = 0.5;
  m.scale = 2;
  const std::vector<MeasureSet> rows{m};
  EXPECT_EQ(io::measure_set_report(rows, io::OutputFormat::csv),
            "scale,E,S,C,H\n2,0.25,0.75,0.75,0.5\n");
  const auto j = nlohmann::json::parse(io::measure_set_report(rows, io::OutputFormat::json));
  EXPECT_EQ(j[0]["H"].get<double>(), 0.5);
}

std::vector<SweepResult> tiny_results() {
  SweepResult r;
  r.experiment = "rbn";
  r.parameter = 2.2;
  r.scale = 1;
  MeasureSet a;
  a.emergence = 0.2;
  a.self_organization = 0.8;
  a.complexity = 0.64;
  a.homeostasis = 0.9;
  MeasureSet b = a;
  b.emergence = 0.4;
  b.self_organization = 0.6;
  b.complexity = 0.96;
  b.homeostasis = 0.7;
  r.instances = {{0, 11, a}, {1, 12, b}};
  const std::vector<MeasureSet> values{a, b};
  r.aggregate = aggregate(values);
  return {r};
}

TEST(SweepFiles, InstanceSchema) {
  const auto rs = tiny_results();
  EXPECT_EQ(io::instances_csv(rs),
            "experiment,rule_or_k,scale,instance,seed,E,S,C,H\n"
            "rbn,2.2,1,0,11,0.2,0.8,0.64,0.9\n"
            "rbn,2.2,1,1,12,0.4,0.6,0.96,0.7\n");
  const auto j = nlohmann::json::parse(io::instances_json(rs));
  ASSERT_EQ(j.size(), 2u);
  EXPECT_EQ(j[1]["seed"].get<std::uint64_t>(), 12u);
  EXPECT_EQ(j[1]["experiment"], "rbn");
}

TEST(SweepFiles, AggregateSchema) {
  const auto rs = tiny_results();
  const std::string csv = io::aggregate_csv(rs);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "experiment,rule_or_k,scale,stat,E,S,C,H");
  EXPECT_NE(csv.find("rbn,2.2,1,mean,0.3,0.7,0.8,0.8\n"), std::string::npos);
  EXPECT_NE(csv.find("rbn,2.2,1,q1,0.25,"), std::string::npos);
  const auto j = nlohmann::json::parse(io::aggregate_json(rs));
  EXPECT_EQ(j.size(), 8u);
  EXPECT_EQ(j[0]["stat"], "mean");
}

TEST(ProfileFiles, Schema) {
  const std::vector<ProfileRow> rows{{110, 4, 0.5, 0.5, 1.0, 0.25, 0.0625}};
  EXPECT_EQ(io::profile_csv(rows), "rule,scale,E,S,C,H,H_reference\n110,4,0.5,0.5,1,0.25,0.0625\n");
  EXPECT_EQ(nlohmann::json::parse(io::profile_json(rows))[0]["rule"], 110);
}

TEST(PlotScript, ReferencesDataFile) {
  for (const char* exp : {"rbn", "eca", "profile"}) {
    const std::string script = io::plot_script(exp, "data.csv");
    EXPECT_EQ(script.rfind("#!/usr/bin/env python3", 0), 0u);
    EXPECT_NE(script.find("data.csv"), std::string::npos);
    EXPECT_NE(script.find("savefig"), std::string::npos);
  }
}

TEST(Formats, Parse) {
  EXPECT_EQ(io::parse_input_format("bytes"), io::InputFormat::bytes);
  EXPECT_EQ(io::parse_output_format("json"), io::OutputFormat::json);
  EXPECT_THROW(io::parse_output_format("xml"), std::invalid_argument);
  EXPECT_THROW(io::parse_input_format("hex"), std::invalid_argument);
}

}  // namespace
}  // namespace infodyn
