#include "msqkit/features.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace msqkit;

namespace {

const Lexicon& lex() {
  static const Lexicon lexicon = Lexicon::defaults();
  return lexicon;
}

// Expected-true set; everything else must be false.
void expect_features(const FeatureVector& fv, const std::set<FeatureId>& expected_true) {
  for (std::size_t i = 0; i < kFeatureCount; ++i) {
    FeatureId id = static_cast<FeatureId>(i);
    EXPECT_EQ(fv.get(id), expected_true.contains(id)) << feature_name(id);
  }
}

}  // namespace

TEST(StripConnectives, SingleLeadingTokenOnly) {
  EXPECT_EQ(strip_leading_connectives({"or", "should", "i", "go"}),
            (std::vector<std::string>{"should", "i", "go"}));
  EXPECT_EQ(strip_leading_connectives({"should", "i", "go"}),
            (std::vector<std::string>{"should", "i", "go"}));
  EXPECT_EQ(strip_leading_connectives({"or", "or", "what"}),
            (std::vector<std::string>{"or", "what"}));
  EXPECT_TRUE(strip_leading_connectives({}).empty());
}

TEST(IsPolar, AuxiliaryFirstToken) {
  EXPECT_TRUE(is_polar("Is it normal for my puppy to eat so quickly?", lex()));
  EXPECT_FALSE(is_polar("What's the recommended kitten food?", lex()));
  EXPECT_TRUE(is_polar("Or should I take him to the vet?", lex()));
  EXPECT_FALSE(is_polar("", lex()));
  // "was" is not in the auxiliary inventory
  EXPECT_FALSE(is_polar("Was the flight delayed?", lex()));
}

TEST(IsWh, TwoTokenWindow) {
  EXPECT_TRUE(is_wh("How can I transport my cats if I am moving a long distance?", lex()));
  EXPECT_FALSE(is_wh("Is Himalayan pink salt okay to use in fish tanks?", lex()));
  EXPECT_TRUE(is_wh("In which case should I act?", lex()));
  EXPECT_FALSE(is_wh("Tell me more about which one?", lex()));
  // window applies after connective stripping
  EXPECT_TRUE(is_wh("But why bother?", lex()));
}

TEST(IsStatement, TerminalQuestionMark) {
  EXPECT_TRUE(is_statement("For example, to London."));
  EXPECT_FALSE(is_statement("If so, what changed?"));
  EXPECT_TRUE(is_statement(""));
  EXPECT_FALSE(is_statement("Really?  "));
}

TEST(ExtractFeatures, ConditionalPair) {
  FeatureVector fv = extract_features("Has something changed that is making cats harder to buy?",
                                      "If so, what changed?", lex());
  // "what" sits third in "If so, what changed?", outside the two-token
  // wh window, so WH_Q2 stays false.
  expect_features(fv, {FeatureId::PolarQ1, FeatureId::CondMarker});
}

TEST(ExtractFeatures, DisjunctivePair) {
  FeatureVector fv = extract_features("Is it normal for my puppy to eat so quickly?",
                                      "Or should I take him to the vet?", lex());
  expect_features(fv, {FeatureId::PolarQ1, FeatureId::PolarQ2, FeatureId::OrMarker});
}

TEST(ExtractFeatures, SeparablePair) {
  FeatureVector fv = extract_features("What's the recommended kitten food?",
                                      "How often should I feed it?", lex());
  expect_features(fv, {FeatureId::PronQ2, FeatureId::WhQ2});
}

TEST(ExtractFeatures, ElaborativePair) {
  FeatureVector fv =
      extract_features("How can I transport my cats if I am moving a long distance?",
                       "For example, flying them from NYC to London?", lex());
  expect_features(fv, {FeatureId::WhQ1, FeatureId::PronQ2, FeatureId::ElabMarker});
}

TEST(ExtractFeatures, StatementCase) {
  FeatureVector fv =
      extract_features("How can I transport my cats if I am moving a long distance?",
                       "For example, to London.", lex());
  expect_features(fv, {FeatureId::WhQ1, FeatureId::StmtQ2, FeatureId::ElabMarker});
}

TEST(ExtractFeatures, EllipsisAnywhereInQ2) {
  FeatureVector fv = extract_features("Could you restart the server?",
                                      "Should I do so every week?", lex());
  EXPECT_TRUE(fv.get(FeatureId::EllipsisQ2));
}

TEST(ExtractFeatures, SepMarkerInitial) {
  FeatureVector fv = extract_features("What's the fee?", "Secondly, who collects money?", lex());
  EXPECT_TRUE(fv.get(FeatureId::SepMarker));
  FeatureVector mid = extract_features("What's the fee?", "And who, secondly, collects?", lex());
  EXPECT_FALSE(mid.get(FeatureId::SepMarker));
}

TEST(ExtractFeatures, SemSimThreshold) {
  EmbeddingTable t;
  t.insert("why", {1, 0});
  FeatureOptions opts;
  opts.table = &t;
  FeatureVector fv = extract_features("Why?", "Why?", lex(), opts);
  EXPECT_TRUE(fv.get(FeatureId::SemSim));  // similarity 1.0 at threshold 0.8

  EmbeddingTable t2;
  t2.insert("salt", {1, 0});
  t2.insert("sugar", {0, 1});
  opts.table = &t2;
  // mean(q1) = salt, mean(q2) = (salt+sugar)/2 -> cos = 1/sqrt(2) ~ 0.707
  FeatureVector below = extract_features("is salt fine", "salt or sugar", lex(), opts);
  EXPECT_FALSE(below.get(FeatureId::SemSim));
  opts.sim_threshold = 0.7;
  FeatureVector above = extract_features("is salt fine", "salt or sugar", lex(), opts);
  EXPECT_TRUE(above.get(FeatureId::SemSim));
}

TEST(ExtractFeatures, SemSimMonotoneInThreshold) {
  EmbeddingTable t;
  t.insert("salt", {1, 0});
  t.insert("sugar", {0, 1});
  FeatureOptions opts;
  opts.table = &t;
  bool prev = true;
  for (double th : {0.0, 0.3, 0.5, 0.7071, 0.8, 0.9, 1.0}) {
    opts.sim_threshold = th;
    bool cur =
        extract_features("is salt fine", "salt or sugar", lex(), opts).get(FeatureId::SemSim);
    EXPECT_TRUE(prev || !cur);  // raising the threshold never turns it on
    prev = cur;
  }
}

TEST(ExtractFeatures, NoTableMeansNoSemSim) {
  FeatureVector fv = extract_features("Why?", "Why?", lex());
  EXPECT_FALSE(fv.get(FeatureId::SemSim));
}

TEST(ExtractFeatures, SemSimOverrideHook) {
  FeatureOptions opts;
  opts.sem_sim_override = true;
  FeatureVector fv = extract_features("a?", "b?", lex(), opts);
  EXPECT_TRUE(fv.get(FeatureId::SemSim));
  opts.sem_sim_override = false;
  EmbeddingTable t;
  t.insert("why", {1, 0});
  opts.table = &t;
  FeatureVector forced_off = extract_features("Why?", "Why?", lex(), opts);
  EXPECT_FALSE(forced_off.get(FeatureId::SemSim));
}

TEST(ExtractFeatures, Locality) {
  // *_Q1 features never depend on q2 and vice versa
  const char* q1 = "Should we leave?";
  FeatureVector a = extract_features(q1, "If so, when?", lex());
  FeatureVector b = extract_features(q1, "For example, by train.", lex());
  EXPECT_EQ(a.get(FeatureId::PolarQ1), b.get(FeatureId::PolarQ1));
  EXPECT_EQ(a.get(FeatureId::WhQ1), b.get(FeatureId::WhQ1));

  const char* q2 = "Or should they wait?";
  FeatureVector c = extract_features("Who decides?", q2, lex());
  FeatureVector d = extract_features("Is this done?", q2, lex());
  for (FeatureId id : {FeatureId::PronQ2, FeatureId::EllipsisQ2, FeatureId::PolarQ2,
                       FeatureId::WhQ2, FeatureId::StmtQ2, FeatureId::CondMarker,
                       FeatureId::OrMarker, FeatureId::ElabMarker, FeatureId::SepMarker}) {
    EXPECT_EQ(c.get(id), d.get(id)) << feature_name(id);
  }
}

TEST(ExtractFeatures, TraceEvidence) {
  FeatureTrace trace;
  extract_features("Has something changed?", "If so, what changed?", lex(), {}, &trace);
  ASSERT_TRUE(trace.evidence[static_cast<std::size_t>(FeatureId::CondMarker)].has_value());
  EXPECT_EQ(*trace.evidence[static_cast<std::size_t>(FeatureId::CondMarker)], "if so");
  ASSERT_TRUE(trace.evidence[static_cast<std::size_t>(FeatureId::PolarQ1)].has_value());
  EXPECT_EQ(*trace.evidence[static_cast<std::size_t>(FeatureId::PolarQ1)], "has");
  EXPECT_FALSE(trace.evidence[static_cast<std::size_t>(FeatureId::OrMarker)].has_value());
}

TEST(ExtractFeatures, EmptyQ2FlaggedInTrace) {
  FeatureTrace trace;
  FeatureVector fv = extract_features("Why is this?", "", lex(), {}, &trace);
  EXPECT_TRUE(fv.get(FeatureId::StmtQ2));
  ASSERT_TRUE(trace.evidence[static_cast<std::size_t>(FeatureId::StmtQ2)].has_value());
  EXPECT_EQ(*trace.evidence[static_cast<std::size_t>(FeatureId::StmtQ2)], "empty q2");
}

TEST(FeatureVectorBits, RoundTrip) {
  for (std::uint16_t bits = 0; bits < (1u << kFeatureCount); ++bits) {
    EXPECT_EQ(FeatureVector::from_bits(bits).bits(), bits);
  }
}

TEST(FeatureNames, RoundTrip) {
  for (std::size_t i = 0; i < kFeatureCount; ++i) {
    FeatureId id = static_cast<FeatureId>(i);
    auto back = feature_from_name(feature_name(id));
    ASSERT_TRUE(back.has_value());
    EXPECT_EQ(*back, id);
  }
  EXPECT_FALSE(feature_from_name("NOT_A_FEATURE").has_value());
}
