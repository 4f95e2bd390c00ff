#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "msqkit/classifier.hpp"
#include "msqkit/corpus.hpp"
#include "msqkit/eval.hpp"

namespace msqkit {

// One post per line: {"id": str, "topic": str, "body": str}. Lines that do
// not parse, lack id/body or have an empty id are counted as malformed and
// skipped.
class JsonlPostReader : public PostSource {
 public:
  explicit JsonlPostReader(std::istream& in) : in_(in) {}
  std::optional<RawPost> next() override;
  std::uint64_t malformed() const override { return malformed_; }

 private:
  std::istream& in_;
  std::uint64_t malformed_ = 0;
};

// Stack Exchange dump rows: one `<row Id=".." Body=".." .../>` element per
// line. Attribute values are XML-unescaped; the topic comes from the
// caller (dumps do not carry it). Non-row lines are ignored; rows missing
// Id or Body count as malformed.
class PostsXmlReader : public PostSource {
 public:
  PostsXmlReader(std::istream& in, std::string topic)
      : in_(in), topic_(std::move(topic)) {}
  std::optional<RawPost> next() override;
  std::uint64_t malformed() const override { return malformed_; }

 private:
  std::istream& in_;
  std::string topic_;
  std::uint64_t malformed_ = 0;
};

// A pair plus an optional caller-assigned id, carried through classify
// output so predictions can be scored against gold files.
struct PairRecord {
  QuestionPair pair;
  std::optional<std::string> id;
};

class JsonlPairReader {
 public:
  explicit JsonlPairReader(std::istream& in) : in_(in) {}
  std::optional<PairRecord> next();
  std::uint64_t malformed() const { return malformed_; }

 private:
  std::istream& in_;
  std::uint64_t malformed_ = 0;
};

void write_pair_jsonl(std::ostream& out, const PairRecord& record);

struct LabeledRecord {
  PairRecord record;
  MsqLabel label = MsqLabel::Unknown;
  FeatureVector features;
  std::optional<FeatureTrace> trace;
};

void write_labeled_jsonl(std::ostream& out, const LabeledRecord& record);

// One record per pair for the feature inspection view: every feature with
// its value and evidence.
void write_features_jsonl(std::ostream& out, const PairRecord& record,
                          const FeatureVector& fv, const FeatureTrace& trace);
void write_features_text(std::ostream& out, const PairRecord& record,
                         const FeatureVector& fv, const FeatureTrace& trace);

enum class LabelFileKind {
  Gold,        // labels must not be unknown
  Annotation,  // "other" and "phatic" map to unknown
  Prediction,  // unknown allowed
};

// TSV with header line `id<TAB>label`. Throws DataError on duplicate ids,
// unknown labels or a missing header.
std::map<std::string, MsqLabel> load_label_tsv(std::istream& in, LabelFileKind kind);

// JSONL with "id" and "label" fields per line (classify output qualifies
// when the input pairs carried ids). Strict: malformed lines throw.
std::map<std::string, MsqLabel> load_label_jsonl(std::istream& in);

void write_stats_json(std::ostream& out, const ExtractionStats& stats);
void write_metrics_json(std::ostream& out, const Metrics& metrics,
                        const ConfusionMatrix& matrix);
void write_confusion_csv(std::ostream& out, const ConfusionMatrix& matrix);
void write_agreement_json(std::ostream& out, const AgreementReport& report);

}  // namespace msqkit
