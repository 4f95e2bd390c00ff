#include "msqkit/corpus.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <regex>
#include <thread>

#include "msqkit/langid.hpp"
#include "msqkit/text.hpp"

namespace msqkit {

namespace {

const std::regex& tag_pattern() {
  static const std::regex re(R"(<[A-Za-z/!][^>]*>)");
  return re;
}

bool has_tex(const std::string& body) {
  static const std::array<std::regex, 4> patterns = {
      std::regex(R"(\$[^$]+\$)"),
      std::regex(R"(\\\()"),
      std::regex(R"(\\\[)"),
      std::regex(R"(\\[A-Za-z]+\{)"),
  };
  for (const auto& re : patterns) {
    if (std::regex_search(body, re)) return true;
  }
  return false;
}

std::string mask_urls(const std::string& text) {
  static const std::regex re(R"((https?://[^\s]+)|(\bwww\.[^\s]+))");
  return std::regex_replace(text, re, "[website]");
}

const std::array<std::string_view, 9>& abbreviations() {
  static const std::array<std::string_view, 9> abbrevs = {
      "e.g.", "i.e.", "etc.", "vs.", "mr.", "mrs.", "dr.", "st.", "no."};
  return abbrevs;
}

bool is_abbreviation(std::string_view text, std::size_t period_pos) {
  std::size_t start = period_pos;
  while (start > 0 && !std::isspace(static_cast<unsigned char>(text[start - 1]))) --start;
  std::string word = to_lower(text.substr(start, period_pos - start + 1));
  for (std::string_view a : abbreviations()) {
    if (word == a) return true;
  }
  return false;
}

// Closing quotes/brackets allowed between the terminator and the boundary
// whitespace. The curly forms are matched as UTF-8 byte sequences.
std::size_t skip_closers(std::string_view text, std::size_t i) {
  while (i < text.size()) {
    char c = text[i];
    if (c == '"' || c == '\'' || c == ')' || c == ']') {
      ++i;
      continue;
    }
    if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xE2 &&
        static_cast<unsigned char>(text[i + 1]) == 0x80) {
      unsigned char b3 = static_cast<unsigned char>(text[i + 2]);
      if (b3 == 0x99 || b3 == 0x9D) {  // closing curly quote
        i += 3;
        continue;
      }
    }
    break;
  }
  return i;
}

bool question_in_bounds(std::string_view q, const ExtractionConfig& config) {
  std::size_t len = codepoint_count(q);
  return len >= static_cast<std::size_t>(config.min_len) &&
         len <= static_cast<std::size_t>(config.max_len);
}

}  // namespace

ExtractionStats& ExtractionStats::operator+=(const ExtractionStats& other) {
  posts_seen += other.posts_seen;
  posts_dropped_markup += other.posts_dropped_markup;
  posts_dropped_tex += other.posts_dropped_tex;
  pairs_candidate += other.pairs_candidate;
  pairs_dropped_length += other.pairs_dropped_length;
  pairs_dropped_language += other.pairs_dropped_language;
  pairs_kept += other.pairs_kept;
  records_malformed += other.records_malformed;
  return *this;
}

CleanOutcome clean_body(std::string_view body, MarkupPolicy markup_policy) {
  std::string text(body);
  if (has_tex(text)) return {CleanDrop::Tex, {}};
  if (std::regex_search(text, tag_pattern())) {
    if (markup_policy == MarkupPolicy::Drop) return {CleanDrop::Markup, {}};
    text = std::regex_replace(text, tag_pattern(), "");
  }
  text = mask_urls(text);
  return {std::nullopt, collapse_whitespace(text)};
}

std::vector<std::string> split_sentences(std::string_view text) {
  std::vector<std::string> sentences;
  std::size_t sentence_start = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c != '.' && c != '!' && c != '?') {
      ++i;
      continue;
    }
    std::size_t after = skip_closers(text, i + 1);
    bool at_end = after >= text.size();
    bool before_space = !at_end && std::isspace(static_cast<unsigned char>(text[after]));
    if (!at_end && !before_space) {
      ++i;
      continue;
    }
    if (c == '.' && is_abbreviation(text, i)) {
      i = after;
      continue;
    }
    std::string_view sentence = trim(text.substr(sentence_start, after - sentence_start));
    if (!sentence.empty()) sentences.emplace_back(sentence);
    sentence_start = after;
    i = after;
  }
  std::string_view tail = trim(text.substr(sentence_start));
  if (!tail.empty()) sentences.emplace_back(tail);
  return sentences;
}

std::vector<QuestionPair> extract_pairs(std::span<const std::string> sentences,
                                        std::string_view source_id,
                                        std::string_view topic, bool overlapping) {
  std::vector<QuestionPair> pairs;
  std::size_t i = 0;
  while (i + 1 < sentences.size()) {
    if (ends_with_question_mark(sentences[i]) &&
        ends_with_question_mark(sentences[i + 1])) {
      pairs.push_back({std::string(source_id), std::string(topic), sentences[i],
                       sentences[i + 1]});
      i += overlapping ? 1 : 2;
    } else {
      ++i;
    }
  }
  return pairs;
}

std::optional<PairDrop> filter_pair(const QuestionPair& pair,
                                    const ExtractionConfig& config) {
  if (!question_in_bounds(pair.q1, config) || !question_in_bounds(pair.q2, config)) {
    return PairDrop::Length;
  }
  if (config.language_filter) {
    LangGuess guess = detect_language(pair.q1 + " " + pair.q2);
    if (guess.lang != "en" && guess.confidence >= config.language_threshold) {
      return PairDrop::Language;
    }
  }
  return std::nullopt;
}

PostOutcome process_post(const RawPost& post, const ExtractionConfig& config) {
  PostOutcome out;
  CleanOutcome cleaned = clean_body(post.body, config.markup_policy);
  if (cleaned.is_dropped()) {
    if (*cleaned.dropped == CleanDrop::Tex) {
      ++out.stats.posts_dropped_tex;
    } else {
      ++out.stats.posts_dropped_markup;
    }
    return out;
  }
  if (config.require_two_qmarks) {
    auto qmarks = std::count(cleaned.text.begin(), cleaned.text.end(), '?');
    if (qmarks < 2) return out;
  }
  std::vector<std::string> sentences = split_sentences(cleaned.text);
  std::vector<QuestionPair> candidates =
      extract_pairs(sentences, post.id, post.topic, config.overlapping_pairs);
  out.stats.pairs_candidate += candidates.size();
  for (auto& pair : candidates) {
    if (auto drop = filter_pair(pair, config)) {
      if (*drop == PairDrop::Length) {
        ++out.stats.pairs_dropped_length;
      } else {
        ++out.stats.pairs_dropped_language;
      }
      continue;
    }
    ++out.stats.pairs_kept;
    out.pairs.push_back(std::move(pair));
  }
  return out;
}

ExtractionStats run_pipeline(PostSource& posts, const ExtractionConfig& config,
                             const PairSink& sink, int workers) {
  ExtractionStats stats;
  if (workers <= 1) {
    while (auto post = posts.next()) {
      ++stats.posts_seen;
      PostOutcome out = process_post(*post, config);
      stats += out.stats;
      for (const auto& pair : out.pairs) sink(pair);
    }
  } else {
    constexpr std::size_t kBatch = 256;
    std::vector<RawPost> batch;
    batch.reserve(kBatch);
    for (;;) {
      batch.clear();
      while (batch.size() < kBatch) {
        auto post = posts.next();
        if (!post) break;
        batch.push_back(std::move(*post));
      }
      if (batch.empty()) break;
      stats.posts_seen += batch.size();
      std::vector<PostOutcome> outcomes(batch.size());
      std::vector<std::thread> threads;
      const int n = std::min<int>(workers, static_cast<int>(batch.size()));
      threads.reserve(static_cast<std::size_t>(n));
      for (int t = 0; t < n; ++t) {
        threads.emplace_back([&, t] {
          for (std::size_t i = static_cast<std::size_t>(t); i < batch.size();
               i += static_cast<std::size_t>(n)) {
            outcomes[i] = process_post(batch[i], config);
          }
        });
      }
      for (auto& th : threads) th.join();
      for (const auto& out : outcomes) {
        stats += out.stats;
        for (const auto& pair : out.pairs) sink(pair);
      }
    }
  }
  stats.records_malformed = posts.malformed();
  return stats;
}

}  // namespace msqkit
