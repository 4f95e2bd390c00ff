#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "msqkit/classifier.hpp"

namespace msqkit {

// Rows are gold, columns are predictions, both in MsqLabel order with
// Unknown last. Gold rows for Unknown stay zero because gold files may not
// contain it.
struct ConfusionMatrix {
  std::array<std::array<std::uint64_t, kLabelCount>, kLabelCount> counts{};

  std::uint64_t& at(MsqLabel gold, MsqLabel pred) {
    return counts[static_cast<std::size_t>(gold)][static_cast<std::size_t>(pred)];
  }
  std::uint64_t at(MsqLabel gold, MsqLabel pred) const {
    return counts[static_cast<std::size_t>(gold)][static_cast<std::size_t>(pred)];
  }
  std::uint64_t total() const;
};

struct ClassMetrics {
  std::uint64_t gold_count = 0;
  std::uint64_t predicted_count = 0;
  std::uint64_t correct = 0;
  double precision = 0.0;  // 0.0 with the flag set when nothing was predicted
  double recall = 0.0;
  bool undefined_precision = false;
};

// Precision is over non-Unknown predictions (the classifier may abstain);
// recall is over all gold items. An all-Unknown prediction set reports
// precision 0.0 with undefined_precision set rather than NaN.
struct Metrics {
  double precision = 0.0;
  double recall = 0.0;
  bool undefined_precision = false;
  std::uint64_t scored = 0;
  std::uint64_t unknown_predictions = 0;
  // The six non-Unknown labels, in MsqLabel order.
  std::array<ClassMetrics, kLabelCount - 1> per_class{};
};

// Everything in Metrics is a function of the matrix alone.
Metrics metrics_from_matrix(const ConfusionMatrix& matrix);

// Throws DataError when gold is empty or an id in gold has no prediction
// (the message lists the offending ids). Predictions for ids outside gold
// are ignored.
std::pair<ConfusionMatrix, Metrics> score(const std::map<std::string, MsqLabel>& preds,
                                          const std::map<std::string, MsqLabel>& gold);

struct AgreementReport {
  double kappa = 0.0;
  double observed = 0.0;  // p_o
  double expected = 0.0;  // p_e from the marginal label distributions
  ConfusionMatrix matrix; // rows annotator 1, columns annotator 2
  std::vector<std::string> agreed_ids;  // subset where both annotators agree
};

// Cohen's kappa over the 7-label space. Throws DataError when the id sets
// differ (the message lists the offending ids) or the input is empty.
AgreementReport agreement(const std::map<std::string, MsqLabel>& ann1,
                          const std::map<std::string, MsqLabel>& ann2);

// Zero-filled counts over all seven labels.
std::map<MsqLabel, std::uint64_t> type_counts(std::span<const MsqLabel> labels);

}  // namespace msqkit
