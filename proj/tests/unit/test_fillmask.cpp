#include <gtest/gtest.h>

#include <random>

#include "pronounflow/fillmask.hpp"
#include "support.hpp"

using namespace pronounflow;

namespace {

const std::string kCatDog = "The cat looked at the big dog, and <MASK> was terrified.";

FixtureBackend catdog_fixture() {
  return FixtureBackend("catdog", {"it", "he", "she", "they"}, {{kCatDog, {{"it", 0.71}, {"he", 0.18}}}});
}

const std::set<std::string> kEightPronouns{"he", "she", "it", "they", "his", "her", "its", "their"};

void expect_well_formed(const std::vector<Prediction>& preds, const FillMaskBackend& b, int k) {
  EXPECT_LE(preds.size(), static_cast<std::size_t>(k));
  for (std::size_t i = 0; i < preds.size(); ++i) {
    EXPECT_GE(preds[i].score, 0.0);
    EXPECT_LE(preds[i].score, 1.0);
    EXPECT_TRUE(b.supports(preds[i].pronoun)) << preds[i].pronoun;
    if (i > 0) {
      EXPECT_TRUE(preds[i - 1].score > preds[i].score ||
                  (preds[i - 1].score == preds[i].score && preds[i - 1].pronoun < preds[i].pronoun));
    }
  }
}

}  // namespace

TEST(FillMask, FixtureCatDog) {
  auto b = catdog_fixture();
  auto p = b.predict(kCatDog, 2);
  ASSERT_EQ(p.size(), 2u);
  EXPECT_EQ(p[0].pronoun, "it");
  EXPECT_EQ(p[1].pronoun, "he");
  EXPECT_EQ(b.predict(kCatDog, 1), std::vector<Prediction>{p[0]});
}

TEST(FillMask, FixtureReproducesTable) {
  auto b = catdog_fixture();
  EXPECT_EQ(b.predict(kCatDog, 5), (std::vector<Prediction>{{"it", 0.71}, {"he", 0.18}}));
}

TEST(FillMask, FixtureMissingEntry) {
  auto b = catdog_fixture();
  EXPECT_THROW(b.predict("Nobody saw <MASK>.", 2), TransportError);
  FixtureBackend with_default("d", {}, {}, {{"they", 0.4}});
  EXPECT_EQ(with_default.predict("Nobody saw <MASK>.", 2), (std::vector<Prediction>{{"they", 0.4}}));
}

TEST(FillMask, FixtureConfigChecks) {
  EXPECT_THROW(FixtureBackend("x", {"he"}, {{kCatDog, {{"she", 0.5}}}}), ConfigError);
  EXPECT_THROW(FixtureBackend("x", {"he"}, {{kCatDog, {{"he", 1.5}}}}), ConfigError);
  EXPECT_THROW(FixtureBackend("x", {"he"}, {{"no marker", {{"he", 0.5}}}}), ConfigError);
  EXPECT_THROW(FixtureBackend("x", {}, {}), ConfigError);
  EXPECT_THROW(FixtureBackend::from_json(nlohmann::json::parse(R"({"entries": [{"text": 3}]})")), ConfigError);
}

TEST(FillMask, FixtureJsonRoundTrip) {
  auto b = catdog_fixture();
  auto j = b.to_json();
  auto again = FixtureBackend::from_json(nlohmann::json::parse(j.dump()));
  EXPECT_EQ(again.descriptor().supported_pronouns, b.descriptor().supported_pronouns);
  EXPECT_EQ(again.predict(kCatDog, 2), b.predict(kCatDog, 2));
  EXPECT_EQ(again.to_json(), j);
}

TEST(FillMask, ShippedTable3FixtureLoads) {
  auto b = FixtureBackend::from_json(nlohmann::json::parse(read_file(pftest::data_path("data/table3/t3.json"))));
  EXPECT_EQ(b.table().size(), 6u);
  EXPECT_EQ(b.predict("I spoke with <MASK>.", 2).at(0).pronoun, "her");
}

TEST(FillMask, Supports) {
  FixtureBackend b("eight", kEightPronouns, {});
  EXPECT_FALSE(b.supports("him"));
  EXPECT_TRUE(b.supports("his"));
  EXPECT_TRUE(b.supports("HIS"));
  EXPECT_FALSE(b.supports("xyr"));
  EXPECT_FALSE(BaselineBackend().supports("xyr"));
  EXPECT_TRUE(BaselineBackend().supports("him"));
}

TEST(FillMask, PredictContract) {
  auto b = catdog_fixture();
  BaselineBackend base;
  for (const FillMaskBackend* be : {static_cast<const FillMaskBackend*>(&b), static_cast<const FillMaskBackend*>(&base)}) {
    EXPECT_THROW(be->predict("no marker here", 2), ContractViolation);
    EXPECT_THROW(be->predict("<MASK> and <MASK>", 2), ContractViolation);
    EXPECT_THROW(be->predict(kCatDog, 0), ContractViolation);
  }
}

TEST(FillMask, FinalizeNormalizes) {
  std::set<std::string> sup{"he", "she", "it"};
  auto out = finalize_predictions({{"She", 0.2}, {"he", 1.7}, {"xe", 0.9}, {"she", 0.4}, {"it", -1.0}, {"it", 0.4}},
                                  sup, 10);
  EXPECT_EQ(out, (std::vector<Prediction>{{"he", 1.0}, {"it", 0.4}, {"she", 0.4}}));
  EXPECT_EQ(finalize_predictions({{"he", std::nan("")}}, sup, 1), (std::vector<Prediction>{{"he", 0.0}}));
}

TEST(FillMask, BaselineDeterministic) {
  BaselineBackend b;
  EXPECT_EQ(b.predict("I spoke with <MASK> .", 2), b.predict("I spoke with <MASK> .", 2));
  EXPECT_EQ(b.descriptor().kind, BackendKind::baseline);
}

TEST(FillMask, BaselineReturnsMinOfKAndSupported) {
  BaselineBackend b;
  const auto n = b.descriptor().supported_pronouns.size();
  EXPECT_EQ(n, 16u);
  for (int k : {1, 2, 3, 16, 40}) {
    EXPECT_EQ(b.predict(kCatDog, k).size(), std::min<std::size_t>(static_cast<std::size_t>(k), n));
  }
}

TEST(FillMask, BaselineSlotClasses) {
  EXPECT_EQ(BaselineBackend::slot_class("<MASK> eyes grew wide."), PronounCase::possessive_determiner);
  EXPECT_EQ(BaselineBackend::slot_class("I spoke with <MASK>."), PronounCase::object);
  EXPECT_EQ(BaselineBackend::slot_class("<MASK> is fun."), PronounCase::subject);
  EXPECT_EQ(BaselineBackend::slot_class(kCatDog), PronounCase::subject);
  EXPECT_EQ(BaselineBackend::slot_class("to have <MASK> picture taken."), PronounCase::possessive_determiner);
}

// Oracle: within the preferred case class, order by raw frequency; the class
// as a whole precedes every other pronoun.
TEST(FillMask, BaselineOrderMatchesClassThenFrequency) {
  BaselineBackend b;
  const auto freq = BaselineBackend::default_frequencies();
  const auto table = PronounTable::standard();
  for (const std::string& text : std::vector<std::string>{"I spoke with <MASK> .", "<MASK> eyes grew wide.", "<MASK> is fun.", kCatDog}) {
    const auto cls = BaselineBackend::slot_class(text);
    std::vector<std::pair<std::string, double>> expected(freq.begin(), freq.end());
    auto in_class = [&](const std::string& p) {
      for (const auto& e : table.lookup(p)) {
        if (e.pronoun_case == cls) return true;
      }
      return false;
    };
    std::sort(expected.begin(), expected.end(), [&](const auto& x, const auto& y) {
      if (in_class(x.first) != in_class(y.first)) return in_class(x.first);
      if (x.second != y.second) return x.second > y.second;
      return x.first < y.first;
    });
    auto got = b.predict(text, 16);
    ASSERT_EQ(got.size(), expected.size());
    for (std::size_t i = 0; i < got.size(); ++i) EXPECT_EQ(got[i].pronoun, expected[i].first) << text << " @" << i;
    expect_well_formed(got, b, 16);
  }
}

TEST(FillMask, PropertyOutputsWellFormed) {
  std::mt19937 rng(7);
  const std::vector<std::string> words{"the", "dog", "saw", "and", "with", ",", ".", "eyes", "was", "to"};
  BaselineBackend b;
  for (int trial = 0; trial < 500; ++trial) {
    std::uniform_int_distribution<int> len(0, 8), pick(0, static_cast<int>(words.size()) - 1), kd(1, 5);
    std::string text;
    const int before = len(rng), after = len(rng);
    for (int i = 0; i < before; ++i) text += words[static_cast<std::size_t>(pick(rng))] + " ";
    text += "<MASK>";
    for (int i = 0; i < after; ++i) text += " " + words[static_cast<std::size_t>(pick(rng))];
    const int k = kd(rng);
    auto p = b.predict(text, k);
    EXPECT_EQ(p.size(), static_cast<std::size_t>(k));
    expect_well_formed(p, b, k);
  }
}

TEST(FillMask, BaselineConfigChecks) {
  EXPECT_THROW(BaselineBackend({{"he", 0.0}}), ConfigError);
  EXPECT_THROW(BaselineBackend({{"xe", 1.0}}), ConfigError);
  EXPECT_THROW(BaselineBackend(BaselineBackend::FrequencyTable{}), ConfigError);
}
