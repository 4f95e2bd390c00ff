#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace msqkit {

struct RawPost {
  std::string id;     // non-empty
  std::string topic;
  std::string body;   // raw, may contain markup
};

// Two adjacent question sentences from one post.
struct QuestionPair {
  std::string source_id;
  std::string topic;
  std::string q1;
  std::string q2;

  bool operator==(const QuestionPair&) const = default;
};

enum class CleanDrop { Tex, Markup };

struct CleanOutcome {
  std::optional<CleanDrop> dropped;
  std::string text;  // valid when not dropped

  bool is_dropped() const { return dropped.has_value(); }
};

enum class MarkupPolicy {
  Drop,   // a post containing a tag is discarded
  Strip,  // tags are removed and extraction continues
};

struct ExtractionConfig {
  int min_len = 5;    // inclusive, in code points
  int max_len = 300;  // inclusive
  bool language_filter = true;
  // Minimum confidence of a non-English verdict needed to drop; 0 trusts
  // the top-ranked label outright.
  double language_threshold = 0.0;
  bool require_two_qmarks = true;
  MarkupPolicy markup_policy = MarkupPolicy::Drop;
  bool overlapping_pairs = true;  // a ?-triple yields two pairs
};

struct ExtractionStats {
  std::uint64_t posts_seen = 0;
  std::uint64_t posts_dropped_markup = 0;
  std::uint64_t posts_dropped_tex = 0;
  std::uint64_t pairs_candidate = 0;
  std::uint64_t pairs_dropped_length = 0;
  std::uint64_t pairs_dropped_language = 0;
  std::uint64_t pairs_kept = 0;
  std::uint64_t records_malformed = 0;

  ExtractionStats& operator+=(const ExtractionStats& other);
  bool operator==(const ExtractionStats&) const = default;
};

// Drops TeX-bearing bodies ($...$, \(, \[, \word{), then markup-bearing
// ones (<tag>) or strips the tags under MarkupPolicy::Strip, then replaces
// URLs with the literal token [website] and collapses whitespace. Total:
// never fails.
CleanOutcome clean_body(std::string_view body,
                        MarkupPolicy markup_policy = MarkupPolicy::Drop);

// Rule-based splitter. A boundary is {., !, ?} optionally followed by
// closing quotes/brackets, then whitespace; the terminator stays on the
// left sentence. A fixed abbreviation stoplist (e.g., i.e., etc., vs.,
// Mr., Mrs., Dr., St., No.) never splits.
std::vector<std::string> split_sentences(std::string_view text);

// One pair per adjacent sentence index (i, i+1) where both end in '?'.
// With overlapping=false a matched sentence is not reused as q1.
std::vector<QuestionPair> extract_pairs(std::span<const std::string> sentences,
                                        std::string_view source_id,
                                        std::string_view topic,
                                        bool overlapping = true);

enum class PairDrop { Length, Language };

// nullopt keeps the pair. Length bounds are inclusive on both ends.
std::optional<PairDrop> filter_pair(const QuestionPair& pair,
                                    const ExtractionConfig& config);

// Pure per-post step: clean, split, pair, filter. Stats cover everything
// but posts_seen/records_malformed, which belong to the stream driver.
struct PostOutcome {
  std::vector<QuestionPair> pairs;
  ExtractionStats stats;
};
PostOutcome process_post(const RawPost& post, const ExtractionConfig& config);

// Record-at-a-time source so inputs larger than memory stream through.
class PostSource {
 public:
  virtual ~PostSource() = default;
  virtual std::optional<RawPost> next() = 0;
  // Records that could not be parsed; counted, never fatal.
  virtual std::uint64_t malformed() const { return 0; }
};

class VectorPostSource : public PostSource {
 public:
  explicit VectorPostSource(std::vector<RawPost> posts) : posts_(std::move(posts)) {}
  std::optional<RawPost> next() override {
    if (pos_ >= posts_.size()) return std::nullopt;
    return posts_[pos_++];
  }

 private:
  std::vector<RawPost> posts_;
  std::size_t pos_ = 0;
};

using PairSink = std::function<void(const QuestionPair&)>;

// Streams posts through process_post in input order. Deterministic for a
// given (posts, config). `workers` > 1 processes batches in parallel while
// re-serializing output in input order.
ExtractionStats run_pipeline(PostSource& posts, const ExtractionConfig& config,
                             const PairSink& sink, int workers = 1);

}  // namespace msqkit
