#include "msqkit/eval.hpp"

#include <gtest/gtest.h>

#include <random>

#include "msqkit/errors.hpp"

using namespace msqkit;

namespace {

using LabelMap = std::map<std::string, MsqLabel>;

LabelMap make_map(std::initializer_list<std::pair<const char*, MsqLabel>> items) {
  LabelMap m;
  for (const auto& [id, label] : items) m.emplace(id, label);
  return m;
}

}  // namespace

TEST(Score, PerfectPredictor) {
  LabelMap gold = make_map({{"a", MsqLabel::Separable},
                            {"b", MsqLabel::Conditional},
                            {"c", MsqLabel::Disjunctive}});
  auto [matrix, metrics] = score(gold, gold);
  EXPECT_DOUBLE_EQ(metrics.precision, 1.0);
  EXPECT_DOUBLE_EQ(metrics.recall, 1.0);
  EXPECT_FALSE(metrics.undefined_precision);
  EXPECT_EQ(matrix.total(), 3u);
  EXPECT_EQ(matrix.at(MsqLabel::Separable, MsqLabel::Separable), 1u);
}

TEST(Score, AllUnknownPredictions) {
  LabelMap gold = make_map({{"a", MsqLabel::Separable}, {"b", MsqLabel::Conditional}});
  LabelMap preds = make_map({{"a", MsqLabel::Unknown}, {"b", MsqLabel::Unknown}});
  auto [matrix, metrics] = score(preds, gold);
  EXPECT_DOUBLE_EQ(metrics.precision, 0.0);
  EXPECT_TRUE(metrics.undefined_precision);
  EXPECT_DOUBLE_EQ(metrics.recall, 0.0);
  EXPECT_EQ(metrics.unknown_predictions, 2u);
}

// 10 gold items, 4 predicted non-unknown, 3 of them right: the
// high-precision low-recall shape, counted by hand.
TEST(Score, HandComputedMixedCase) {
  LabelMap gold;
  for (int i = 0; i < 10; ++i) {
    gold.emplace("id" + std::to_string(i),
                 i % 2 ? MsqLabel::Conditional : MsqLabel::Separable);
  }
  LabelMap preds;
  for (int i = 0; i < 10; ++i) preds.emplace("id" + std::to_string(i), MsqLabel::Unknown);
  preds["id0"] = MsqLabel::Separable;    // correct
  preds["id2"] = MsqLabel::Separable;    // correct
  preds["id1"] = MsqLabel::Conditional;  // correct
  preds["id3"] = MsqLabel::Disjunctive;  // wrong
  auto [matrix, metrics] = score(preds, gold);
  EXPECT_NEAR(metrics.precision, 0.75, 1e-9);
  EXPECT_NEAR(metrics.recall, 0.30, 1e-9);
  EXPECT_EQ(metrics.unknown_predictions, 6u);

  // per-class spot checks, counted from the same table
  const ClassMetrics& sep = metrics.per_class[static_cast<std::size_t>(MsqLabel::Separable)];
  EXPECT_EQ(sep.gold_count, 5u);
  EXPECT_EQ(sep.predicted_count, 2u);
  EXPECT_NEAR(sep.precision, 1.0, 1e-9);
  EXPECT_NEAR(sep.recall, 0.4, 1e-9);
  const ClassMetrics& dis = metrics.per_class[static_cast<std::size_t>(MsqLabel::Disjunctive)];
  EXPECT_TRUE(dis.precision == 0.0 && dis.predicted_count == 1u);
}

// The metrics must be recomputable from the confusion matrix alone; this
// recomputes them with independent arithmetic over the returned matrix.
TEST(Score, MetricsConsistentWithMatrix) {
  LabelMap gold = make_map({{"a", MsqLabel::Separable},
                            {"b", MsqLabel::Separable},
                            {"c", MsqLabel::Elaborative},
                            {"d", MsqLabel::Disjunctive}});
  LabelMap preds = make_map({{"a", MsqLabel::Separable},
                             {"b", MsqLabel::Elaborative},
                             {"c", MsqLabel::Unknown},
                             {"d", MsqLabel::Disjunctive}});
  auto [matrix, metrics] = score(preds, gold);

  std::uint64_t correct = 0, predicted = 0, total = 0;
  for (std::size_t g = 0; g < kLabelCount; ++g) {
    for (std::size_t p = 0; p < kLabelCount; ++p) {
      total += matrix.counts[g][p];
      if (p != static_cast<std::size_t>(MsqLabel::Unknown)) {
        predicted += matrix.counts[g][p];
        if (g == p) correct += matrix.counts[g][p];
      }
    }
  }
  EXPECT_EQ(total, 4u);
  EXPECT_DOUBLE_EQ(metrics.precision, static_cast<double>(correct) / predicted);
  EXPECT_DOUBLE_EQ(metrics.recall, static_cast<double>(correct) / total);
}

TEST(Score, MissingIdsListed) {
  LabelMap gold = make_map({{"a", MsqLabel::Separable}, {"b", MsqLabel::Conditional}});
  LabelMap preds = make_map({{"a", MsqLabel::Separable}});
  try {
    score(preds, gold);
    FAIL() << "expected DataError";
  } catch (const DataError& e) {
    EXPECT_NE(std::string(e.what()).find("b"), std::string::npos);
  }
}

TEST(Score, EmptyGoldRejected) {
  EXPECT_THROW(score({}, {}), DataError);
}

TEST(Score, ExtraPredictionsIgnored) {
  LabelMap gold = make_map({{"a", MsqLabel::Separable}});
  LabelMap preds = make_map({{"a", MsqLabel::Separable}, {"zzz", MsqLabel::Conditional}});
  auto [matrix, metrics] = score(preds, gold);
  EXPECT_EQ(matrix.total(), 1u);
  EXPECT_DOUBLE_EQ(metrics.precision, 1.0);
}

TEST(Agreement, IdenticalAnnotationsGiveKappaOne) {
  LabelMap ann = make_map({{"a", MsqLabel::Separable},
                           {"b", MsqLabel::Conditional},
                           {"c", MsqLabel::Separable}});
  AgreementReport r = agreement(ann, ann);
  EXPECT_DOUBLE_EQ(r.kappa, 1.0);
  EXPECT_DOUBLE_EQ(r.observed, 1.0);
  EXPECT_LT(r.expected, 1.0);
  EXPECT_EQ(r.agreed_ids.size(), 3u);
}

TEST(Agreement, ConstantAnnotatorGivesKappaZero) {
  LabelMap ann1 = make_map({{"a", MsqLabel::Separable},
                            {"b", MsqLabel::Conditional},
                            {"c", MsqLabel::Separable},
                            {"d", MsqLabel::Elaborative}});
  LabelMap ann2;
  for (const auto& [id, label] : ann1) ann2.emplace(id, MsqLabel::Separable);
  AgreementReport r = agreement(ann1, ann2);
  EXPECT_NEAR(r.kappa, 0.0, 1e-12);
  EXPECT_DOUBLE_EQ(r.observed, r.expected);
}

TEST(Agreement, BothConstantSameLabel) {
  LabelMap ann = make_map({{"a", MsqLabel::Disjunctive}, {"b", MsqLabel::Disjunctive}});
  AgreementReport r = agreement(ann, ann);
  EXPECT_DOUBLE_EQ(r.expected, 1.0);
  EXPECT_DOUBLE_EQ(r.kappa, 1.0);
}

// 4 items, agreement on 2, both marginals uniform over two labels:
// kappa = (0.5 - 0.5) / (1 - 0.5) = 0, from the formula by hand.
TEST(Agreement, HandComputedUniformCase) {
  LabelMap ann1 = make_map({{"1", MsqLabel::Separable},
                            {"2", MsqLabel::Separable},
                            {"3", MsqLabel::Conditional},
                            {"4", MsqLabel::Conditional}});
  LabelMap ann2 = make_map({{"1", MsqLabel::Separable},
                            {"2", MsqLabel::Conditional},
                            {"3", MsqLabel::Separable},
                            {"4", MsqLabel::Conditional}});
  AgreementReport r = agreement(ann1, ann2);
  EXPECT_NEAR(r.observed, 0.5, 1e-12);
  EXPECT_NEAR(r.expected, 0.5, 1e-12);
  EXPECT_NEAR(r.kappa, 0.0, 1e-12);
  EXPECT_EQ(r.agreed_ids, (std::vector<std::string>{"1", "4"}));
}

TEST(Agreement, MismatchedIdSetsRejected) {
  LabelMap ann1 = make_map({{"a", MsqLabel::Separable}});
  LabelMap ann2 = make_map({{"b", MsqLabel::Separable}});
  try {
    agreement(ann1, ann2);
    FAIL() << "expected DataError";
  } catch (const DataError& e) {
    std::string msg = e.what();
    EXPECT_NE(msg.find("a"), std::string::npos);
    EXPECT_NE(msg.find("b"), std::string::npos);
  }
}

TEST(AgreementProperty, SymmetricAndBounded) {
  std::mt19937 rng(41);
  std::uniform_int_distribution<int> label(0, 6);
  std::uniform_int_distribution<int> size(1, 40);
  for (int iter = 0; iter < 200; ++iter) {
    LabelMap ann1, ann2;
    int n = size(rng);
    for (int i = 0; i < n; ++i) {
      std::string id = "id" + std::to_string(i);
      ann1.emplace(id, static_cast<MsqLabel>(label(rng)));
      ann2.emplace(id, static_cast<MsqLabel>(label(rng)));
    }
    AgreementReport ab = agreement(ann1, ann2);
    AgreementReport ba = agreement(ann2, ann1);
    EXPECT_NEAR(ab.kappa, ba.kappa, 1e-12);
    EXPECT_GE(ab.kappa, -1.0 - 1e-12);
    EXPECT_LE(ab.kappa, 1.0 + 1e-12);
    EXPECT_EQ(ab.agreed_ids, ba.agreed_ids);
  }
}

TEST(TypeCounts, ZeroFilledAndCounted) {
  EXPECT_EQ(type_counts({}).size(), kLabelCount);
  for (const auto& [label, count] : type_counts({})) EXPECT_EQ(count, 0u);

  std::vector<MsqLabel> labels{MsqLabel::Separable, MsqLabel::Separable, MsqLabel::Unknown};
  auto counts = type_counts(labels);
  EXPECT_EQ(counts[MsqLabel::Separable], 2u);
  EXPECT_EQ(counts[MsqLabel::Unknown], 1u);
  EXPECT_EQ(counts[MsqLabel::Disjunctive], 0u);
}
