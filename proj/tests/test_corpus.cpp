/*
 * Copyright 2026 The headline-scorer Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "headline/corpus.hpp"
#include "support/test_support.hpp"

namespace headline {
namespace {

TEST(LoadInstances, ExampleLine) {
  const auto instances =
      parse_instances(R"({"id":"1","postText":["Here's What Real Vegans Actually Eat"],"targetTitle":"x"})");
  ASSERT_EQ(instances.size(), 1u);
  EXPECT_EQ(instances[0].id, "1");
  EXPECT_EQ(instances[0].post_text, "Here's What Real Vegans Actually Eat");
}

TEST(LoadInstances, JoinsListAndAcceptsStringAndNumericIds) {
  const auto instances = parse_instances(
      "{\"id\":\"2\",\"postText\":[\"a\",\"b\"]}\n"
      "\n"
      "{\"id\":608310377143799810,\"postText\":\"plain\"}\n"
      "{\"id\":\"4\",\"postText\":[]}\r\n");
  ASSERT_EQ(instances.size(), 3u);
  EXPECT_EQ(instances[0].post_text, "a b");
  EXPECT_EQ(instances[1].id, "608310377143799810");
  EXPECT_EQ(instances[1].post_text, "plain");
  EXPECT_EQ(instances[2].post_text, "");
  EXPECT_EQ(instances[2].raw, "{\"id\":\"4\",\"postText\":[]}");
}

TEST(LoadInstances, EmptyFile) {
  testing::TempDir dir;
  EXPECT_TRUE(load_instances(dir.write("empty.jsonl", "")).empty());
}

TEST(LoadInstances, Errors) {
  testing::TempDir dir;
  EXPECT_THROW(load_instances(dir.path() / "nope.jsonl"), IoError);
  try {
    parse_instances("{\"id\":\"1\",\"postText\":\"ok\"}\n{not json}\n", "f.jsonl");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_NE(std::string(e.what()).find("f.jsonl:2"), std::string::npos);
  }
  EXPECT_THROW(parse_instances(R"({"postText":"no id"})"), ParseError);
  EXPECT_THROW(parse_instances(R"({"id":"","postText":"x"})"), ParseError);
  EXPECT_THROW(parse_instances(R"({"id":"1"})"), ParseError);
  EXPECT_THROW(parse_instances(R"([1,2])"), ParseError);
}

TEST(LoadTruth, UnanimousExamples) {
  Warnings warnings;
  const auto labels = parse_truth(
      "{\"id\":\"1\",\"truthJudgments\":[1,1,1,1,1],\"truthMean\":1.0,\"truthClass\":\"clickbait\"}\n"
      "{\"id\":\"2\",\"truthJudgments\":[0,0,0,0,0],\"truthMean\":0.0,\"truthClass\":\"no-clickbait\"}\n",
      "t", &warnings);
  ASSERT_EQ(labels.size(), 2u);
  EXPECT_EQ(labels[0].mean, 1.0);
  EXPECT_EQ(labels[0].class_label, ClickbaitClass::clickbait);
  EXPECT_EQ(labels[0].judgments, std::vector<double>(5, 1.0));
  EXPECT_EQ(labels[1].class_label, ClickbaitClass::no_clickbait);
  EXPECT_TRUE(warnings.empty());
}

TEST(LoadTruth, MeanConsistencyWithinTolerance) {
  Warnings warnings;
  const auto labels = parse_truth(
      R"({"id":"3","truthJudgments":[1,0.6667,0.3333,0,0],"truthMean":0.4,"truthClass":"no-clickbait"})", "t",
      &warnings);
  ASSERT_EQ(labels.size(), 1u);
  EXPECT_NEAR(labels[0].mean, 0.4, 1e-12);
  EXPECT_TRUE(warnings.empty());
}

TEST(LoadTruth, InconsistenciesWarn) {
  Warnings warnings;
  const auto labels = parse_truth(
      "{\"id\":\"1\",\"truthJudgments\":[1,1,1,1,1],\"truthMean\":0.8,\"truthClass\":\"clickbait\"}\n"
      "{\"id\":\"2\",\"truthJudgments\":[0,0,0,0,1],\"truthMean\":0.2,\"truthClass\":\"clickbait\"}\n",
      "t", &warnings);
  ASSERT_EQ(labels.size(), 2u);
  EXPECT_EQ(warnings.size(), 2u);
  // Stored class wins over the mean.
  EXPECT_EQ(labels[1].class_label, ClickbaitClass::clickbait);
}

TEST(LoadTruth, MissingClassFollowsMean) {
  const auto labels = parse_truth(R"({"id":"1","truthMean":0.6})");
  EXPECT_EQ(labels[0].class_label, ClickbaitClass::clickbait);
  EXPECT_TRUE(labels[0].judgments.empty());
}

TEST(LoadTruth, Errors) {
  EXPECT_THROW(parse_truth(R"({"id":"1","truthMean":1.5,"truthClass":"clickbait"})"), ValidationError);
  EXPECT_THROW(parse_truth(R"({"id":"1","truthMean":-0.1})"), ValidationError);
  EXPECT_THROW(parse_truth(R"({"id":"1","truthJudgments":[2],"truthMean":0.5})"), ValidationError);
  EXPECT_THROW(parse_truth(R"({"id":"1","truthClass":"clickbait"})"), ParseError);
  EXPECT_THROW(parse_truth(R"({"id":"1","truthMean":0.5,"truthClass":"maybe"})"), ParseError);
  EXPECT_THROW(parse_truth(R"({"truthMean":0.5})"), ParseError);
}

std::vector<Instance> make_instances(std::initializer_list<const char*> ids) {
  std::vector<Instance> out;
  for (const char* id : ids) out.push_back({id, std::string("post ") + id, ""});
  return out;
}

std::vector<TruthLabel> make_truths(std::initializer_list<const char*> ids, double mean = 0.0) {
  std::vector<TruthLabel> out;
  for (const char* id : ids)
    out.push_back({id, {}, mean, mean > 0.5 ? ClickbaitClass::clickbait : ClickbaitClass::no_clickbait, ""});
  return out;
}

TEST(Join, AllMatched) {
  JoinReport report;
  const auto ds = join(make_instances({"a", "b", "c"}), make_truths({"c", "a", "b"}), &report);
  ASSERT_EQ(ds.size(), 3u);
  EXPECT_EQ(report.matched, 3u);
  for (const auto& r : ds.records) EXPECT_EQ(r.instance.id, r.truth.id);
  EXPECT_EQ(ds.records[0].instance.id, "a");
}

TEST(Join, ReportsUnmatched) {
  JoinReport report;
  Warnings warnings;
  const auto ds = join(make_instances({"a", "b", "c"}), make_truths({"a", "b", "z"}), &report, &warnings);
  EXPECT_EQ(ds.size(), 2u);
  EXPECT_EQ(report.instances_without_truth, 1u);
  EXPECT_EQ(report.truths_without_instance, 1u);
  EXPECT_EQ(warnings.size(), 2u);
}

TEST(Join, DuplicateIdsAreErrors) {
  EXPECT_THROW(join(make_instances({"a", "a"}), make_truths({"a"})), CorpusError);
  EXPECT_THROW(join(make_instances({"a"}), make_truths({"a", "a"})), CorpusError);
}

TEST(Join, FromFiles) {
  const auto ds = join(load_instances(testing::fixture_dir() / "toy" / "instances.jsonl"),
                       load_truth(testing::fixture_dir() / "toy" / "truth.jsonl"));
  EXPECT_EQ(ds.size(), 10u);
}

LabeledDataset synthetic(std::size_t clickbait, std::size_t no_clickbait, const std::string& prefix) {
  LabeledDataset ds;
  for (std::size_t i = 0; i < clickbait + no_clickbait; ++i) {
    const bool cb = i < clickbait;
    const std::string id = prefix + std::to_string(i);
    ds.records.push_back(
        {{id, "text", ""}, {id, {}, cb ? 0.8 : 0.2, cb ? ClickbaitClass::clickbait : ClickbaitClass::no_clickbait, ""}});
  }
  ds.provenance = {prefix};
  return ds;
}

std::vector<std::string> ids(const LabeledDataset& ds) {
  std::vector<std::string> out;
  for (const auto& r : ds.records) out.push_back(r.instance.id);
  return out;
}

TEST(TrainSize, RoundsHalfUp) {
  EXPECT_EQ(train_size(11046, 0.8), 8837u);
  EXPECT_EQ(train_size(5, 0.5), 3u);  // 2.5 -> 3
  EXPECT_EQ(train_size(10, 0.8), 8u);
}

TEST(MergeBalanceSplit, PaperCorpusSizes) {
  // Class counts of the two public corpora.
  const auto a = synthetic(762, 1697, "a");
  const auto b = synthetic(4761, 14777, "b");
  const Split split = merge_balance_split(a, b, 0.8, 42);
  EXPECT_EQ(split.train.size() + split.validation.size(), 11046u);
  EXPECT_EQ(split.train.size(), 8837u);
  EXPECT_EQ(split.validation.size(), 2209u);
  const ClassCounts tc = split.train.class_counts();
  const ClassCounts vc = split.validation.class_counts();
  EXPECT_EQ(tc.clickbait + vc.clickbait, 5523u);
  EXPECT_EQ(tc.no_clickbait + vc.no_clickbait, 5523u);
}

TEST(MergeBalanceSplit, Properties) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto a = synthetic(3 + seed % 5, 20, "a");
    const auto b = synthetic(7, 2 + seed, "b");
    const Split split = merge_balance_split(a, b, 0.7, seed);
    const ClassCounts tc = split.train.class_counts();
    const ClassCounts vc = split.validation.class_counts();
    EXPECT_EQ(tc.clickbait + vc.clickbait, tc.no_clickbait + vc.no_clickbait);
    const std::size_t m = std::min(a.class_counts().clickbait + b.class_counts().clickbait,
                                   a.class_counts().no_clickbait + b.class_counts().no_clickbait);
    EXPECT_EQ(split.train.size(), train_size(2 * m, 0.7));

    std::set<std::string> train_ids, all;
    for (const auto& id : ids(split.train)) train_ids.insert(id);
    for (const auto& id : ids(split.validation)) EXPECT_EQ(train_ids.count(id), 0u) << id;
    for (const auto& id : ids(split.train)) all.insert(id);
    for (const auto& id : ids(split.validation)) all.insert(id);
    EXPECT_EQ(all.size(), 2 * m);
    for (const auto& r : split.train.records) EXPECT_EQ(r.instance.id, r.truth.id);
  }
}

TEST(MergeBalanceSplit, MinorityKeptWhole) {
  const auto a = synthetic(4, 30, "a");
  const auto b = synthetic(2, 10, "b");
  const Split split = merge_balance_split(a, b, 0.5, 1);
  std::set<std::string> kept;
  for (const auto& ds : {split.train, split.validation})
    for (const auto& r : ds.records)
      if (r.truth.class_label == ClickbaitClass::clickbait) kept.insert(r.instance.id);
  EXPECT_EQ(kept, (std::set<std::string>{"a0", "a1", "a2", "a3", "b0", "b1"}));
}

TEST(MergeBalanceSplit, Deterministic) {
  const auto a = synthetic(30, 50, "a");
  const auto b = synthetic(40, 10, "b");
  const Split s1 = merge_balance_split(a, b, 0.8, 42);
  const Split s2 = merge_balance_split(a, b, 0.8, 42);
  EXPECT_EQ(ids(s1.train), ids(s2.train));
  EXPECT_EQ(ids(s1.validation), ids(s2.validation));
  const Split s3 = merge_balance_split(a, b, 0.8, 43);
  EXPECT_NE(ids(s1.train), ids(s3.train));
}

TEST(MergeBalanceSplit, Errors) {
  EXPECT_THROW(merge_balance_split(synthetic(3, 0, "a"), synthetic(2, 0, "b"), 0.8, 1), CorpusError);
  EXPECT_THROW(merge_balance_split(synthetic(3, 3, "a"), {}, 0.0, 1), ValidationError);
  EXPECT_THROW(merge_balance_split(synthetic(3, 3, "a"), {}, 1.0, 1), ValidationError);
}

}  // namespace
}  // namespace headline
