#include <gtest/gtest.h>

#include "tinygraph/error.hpp"
#include "tinygraph/experiment.hpp"

using namespace tinygraph;

TEST(Sha256, KnownVectors) {
  EXPECT_EQ(sha256_hex("abc"),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  EXPECT_EQ(sha256_hex(""),
            "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST(Log2Json, InfinityAsString) {
  EXPECT_EQ(log2_json(-std::numeric_limits<double>::infinity()), "-inf");
  EXPECT_EQ(log2_json(3.5), 3.5);
}

TEST(Experiment, MalformedConfigReportsOffset) {
  try {
    run_experiment("{\"kind\": \"diversity\", \"n\": }");
    FAIL() << "no error";
  } catch (const ParseError& e) {
    EXPECT_GT(e.offset(), 0U);
  }
  EXPECT_THROW(run_experiment("[1, 2]"), ParseError);
}

TEST(Experiment, UnknownKindAndMissingField) {
  EXPECT_THROW(run_experiment(R"({"kind": "nope"})"), std::invalid_argument);
  EXPECT_THROW(run_experiment(R"({"kind": "diversity", "n": 10})"), std::invalid_argument);
  EXPECT_THROW(run_experiment(R"({"kind": "diversity", "n": "ten", "k": 3, "samples": 1,
                                  "graph_seed": 1, "sample_seed": 1, "p": 0.5})"),
               std::invalid_argument);
}

TEST(Experiment, HeaderFields) {
  const std::string text =
      R"({"kind": "diversity", "n": 20, "p": 0.3, "k": 6, "samples": 50, "graph_seed": 1, "sample_seed": 2})";
  const auto r = run_experiment(text);
  EXPECT_EQ(r.report.at("tool"), kToolName);
  EXPECT_EQ(r.report.at("version"), kToolVersion);
  EXPECT_EQ(r.report.at("kind"), "diversity");
  EXPECT_EQ(r.report.at("config_sha256"), sha256_hex(text));
  EXPECT_TRUE(r.report.contains("claim"));
  EXPECT_TRUE(r.report.contains("seeds"));
}

TEST(Experiment, DiversityDegenerateGraphs) {
  const auto complete = run_experiment(
      R"({"kind": "diversity", "graph": "complete", "n": 30, "p": 1, "k": 10, "samples": 100, "graph_seed": 1, "sample_seed": 2})");
  EXPECT_EQ(complete.report.at("distinct"), 1);
  const auto empty = run_experiment(
      R"({"kind": "diversity", "graph": "empty", "n": 30, "p": 0, "k": 10, "samples": 100, "graph_seed": 1, "sample_seed": 2})");
  EXPECT_EQ(empty.report.at("distinct"), 1);
}

TEST(Experiment, DeterministicAcrossThreads) {
  const std::vector<std::string> configs = {
      R"({"kind": "tinyness-profile", "n": 40, "d": 1, "c": 100, "desk_k0": 5, "replicates": 6, "seed": 3})",
      R"({"kind": "threshold", "n": 300, "seed": 4, "pn_grid": [0.5, 2, 8], "diversity": {"k": 30, "samples": 40, "min_pn": 1.5}})",
      R"({"kind": "crossover", "s": [1, 2], "step": 50000, "n_max": 1000000})",
      R"({"kind": "ladder-class", "levels": [6, 12], "graphs_per_level": 2, "d": 1, "c": 100, "desk_k0": 5, "seed": 9, "n_max": 4})",
      R"({"kind": "diversity", "n": 100, "d": 5, "k": 20, "samples": 60, "graph_seed": 1, "sample_seed": 2})"};
  for (const auto& text : configs) {
    const auto a = run_experiment(text, 1);
    const auto b = run_experiment(text, 4);
    EXPECT_EQ(report_text(a.report), report_text(b.report)) << text;
    EXPECT_EQ(a.csv, b.csv) << text;
  }
}

TEST(Experiment, ThresholdCsvShape) {
  const auto r = run_experiment(
      R"({"kind": "threshold", "n": 200, "seed": 4, "pn_grid": [0.5, 3], "diversity": {"k": 20, "samples": 10, "min_pn": 1.5}})");
  EXPECT_EQ(r.report.at("csv_schema"), "threshold/1");
  std::size_t lines = 0;
  for (char ch : r.csv) lines += ch == '\n';
  EXPECT_EQ(lines, 3U);
  EXPECT_EQ(r.csv.rfind("pn,p,graph_seed", 0), 0U);
}

TEST(Experiment, LadderImaxExcludesLevelOne) {
  const auto r = run_experiment(
      R"({"kind": "ladder-class", "ladder_imax": 3, "d": 1, "c": 100, "desk_k0": 5, "seed": 1, "n_max": 3})");
  EXPECT_EQ(r.report.at("parameters").at("levels"), Json::parse("[3, 6, 12]"));
  EXPECT_TRUE(r.report.at("alpha_reverified").get<bool>());
  EXPECT_TRUE(r.report.at("finite_truncation").get<bool>());
}
