#include "msqkit/eval.hpp"

#include <cmath>
#include <sstream>

#include "msqkit/errors.hpp"

namespace msqkit {

namespace {

std::string list_ids(const std::vector<std::string>& ids, std::size_t limit = 10) {
  std::ostringstream os;
  for (std::size_t i = 0; i < ids.size() && i < limit; ++i) {
    if (i) os << ", ";
    os << ids[i];
  }
  if (ids.size() > limit) os << ", ... (" << ids.size() << " total)";
  return os.str();
}

constexpr std::size_t kUnknownIdx = static_cast<std::size_t>(MsqLabel::Unknown);

}  // namespace

std::uint64_t ConfusionMatrix::total() const {
  std::uint64_t n = 0;
  for (const auto& row : counts) {
    for (std::uint64_t c : row) n += c;
  }
  return n;
}

Metrics metrics_from_matrix(const ConfusionMatrix& matrix) {
  Metrics m;
  m.scored = matrix.total();

  std::uint64_t correct_non_unknown = 0;
  std::uint64_t predicted_non_unknown = 0;
  for (std::size_t g = 0; g < kLabelCount; ++g) {
    for (std::size_t p = 0; p < kLabelCount; ++p) {
      if (p == kUnknownIdx) {
        m.unknown_predictions += matrix.counts[g][p];
        continue;
      }
      predicted_non_unknown += matrix.counts[g][p];
      if (g == p) correct_non_unknown += matrix.counts[g][p];
    }
  }
  if (predicted_non_unknown == 0) {
    m.precision = 0.0;
    m.undefined_precision = true;
  } else {
    m.precision = static_cast<double>(correct_non_unknown) /
                  static_cast<double>(predicted_non_unknown);
  }
  m.recall = m.scored == 0 ? 0.0
                           : static_cast<double>(correct_non_unknown) /
                                 static_cast<double>(m.scored);

  for (std::size_t c = 0; c < kLabelCount - 1; ++c) {
    ClassMetrics& cm = m.per_class[c];
    for (std::size_t p = 0; p < kLabelCount; ++p) cm.gold_count += matrix.counts[c][p];
    for (std::size_t g = 0; g < kLabelCount; ++g) cm.predicted_count += matrix.counts[g][c];
    cm.correct = matrix.counts[c][c];
    if (cm.predicted_count == 0) {
      cm.precision = 0.0;
      cm.undefined_precision = true;
    } else {
      cm.precision = static_cast<double>(cm.correct) / static_cast<double>(cm.predicted_count);
    }
    cm.recall = cm.gold_count == 0
                    ? 0.0
                    : static_cast<double>(cm.correct) / static_cast<double>(cm.gold_count);
  }
  return m;
}

std::pair<ConfusionMatrix, Metrics> score(const std::map<std::string, MsqLabel>& preds,
                                          const std::map<std::string, MsqLabel>& gold) {
  if (gold.empty()) throw DataError("score: empty gold set");
  std::vector<std::string> missing;
  for (const auto& [id, label] : gold) {
    if (!preds.contains(id)) missing.push_back(id);
  }
  if (!missing.empty()) {
    throw DataError("score: gold ids without predictions: " + list_ids(missing));
  }
  ConfusionMatrix matrix;
  for (const auto& [id, gold_label] : gold) {
    ++matrix.at(gold_label, preds.at(id));
  }
  return {matrix, metrics_from_matrix(matrix)};
}

AgreementReport agreement(const std::map<std::string, MsqLabel>& ann1,
                          const std::map<std::string, MsqLabel>& ann2) {
  if (ann1.empty() || ann2.empty()) throw DataError("agreement: empty annotation set");
  std::vector<std::string> off;
  for (const auto& [id, label] : ann1) {
    if (!ann2.contains(id)) off.push_back(id);
  }
  for (const auto& [id, label] : ann2) {
    if (!ann1.contains(id)) off.push_back(id);
  }
  if (!off.empty()) {
    throw DataError("agreement: id sets differ: " + list_ids(off));
  }

  AgreementReport report;
  std::array<std::uint64_t, kLabelCount> marg1{};
  std::array<std::uint64_t, kLabelCount> marg2{};
  std::uint64_t agree = 0;
  const double n = static_cast<double>(ann1.size());
  for (const auto& [id, l1] : ann1) {
    MsqLabel l2 = ann2.at(id);
    ++report.matrix.at(l1, l2);
    ++marg1[static_cast<std::size_t>(l1)];
    ++marg2[static_cast<std::size_t>(l2)];
    if (l1 == l2) {
      ++agree;
      report.agreed_ids.push_back(id);  // std::map iteration keeps ids sorted
    }
  }
  report.observed = static_cast<double>(agree) / n;
  for (std::size_t i = 0; i < kLabelCount; ++i) {
    report.expected += (static_cast<double>(marg1[i]) / n) * (static_cast<double>(marg2[i]) / n);
  }
  // p_e = 1 only when both annotators are constant with the same label, in
  // which case they agree everywhere.
  if (report.expected >= 1.0 - 1e-12) {
    report.kappa = 1.0;
  } else {
    report.kappa = (report.observed - report.expected) / (1.0 - report.expected);
  }
  return report;
}

std::map<MsqLabel, std::uint64_t> type_counts(std::span<const MsqLabel> labels) {
  std::map<MsqLabel, std::uint64_t> counts;
  for (std::size_t i = 0; i < kLabelCount; ++i) {
    counts[static_cast<MsqLabel>(i)] = 0;
  }
  for (MsqLabel l : labels) ++counts[l];
  return counts;
}

}  // namespace msqkit
