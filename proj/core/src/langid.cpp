#include "msqkit/langid.hpp"

#include <algorithm>
#include <cstdlib>
#include <unordered_map>

#include "langid_seeds.hpp"

namespace msqkit {

namespace {

constexpr std::size_t kMaxN = 5;
constexpr std::size_t kProfileSize = 300;

// Lowercase letters and non-ASCII bytes carry signal; every other run
// collapses to a single '_' word boundary.
std::string canonical_chars(std::string_view text) {
  std::string out;
  out.reserve(text.size() + 2);
  out.push_back('_');
  for (char ch : text) {
    unsigned char c = static_cast<unsigned char>(ch);
    char mapped;
    if (c >= 'A' && c <= 'Z') {
      mapped = static_cast<char>(c - 'A' + 'a');
    } else if ((c >= 'a' && c <= 'z') || c >= 0x80) {
      mapped = static_cast<char>(c);
    } else {
      mapped = '_';
    }
    if (mapped == '_' && out.back() == '_') continue;
    out.push_back(mapped);
  }
  if (out.back() != '_') out.push_back('_');
  return out;
}

// Grams of length 1..5 that contain at least one non-boundary byte,
// ranked by descending count with lexicographic tie-break.
std::vector<std::string> rank_profile(std::string_view text, std::size_t limit) {
  std::string canon = canonical_chars(text);
  std::unordered_map<std::string, std::size_t> counts;
  for (std::size_t n = 1; n <= kMaxN; ++n) {
    if (canon.size() < n) break;
    for (std::size_t i = 0; i + n <= canon.size(); ++i) {
      std::string_view gram(canon.data() + i, n);
      if (gram.find_first_not_of('_') == std::string_view::npos) continue;
      ++counts[std::string(gram)];
    }
  }
  std::vector<std::pair<std::string, std::size_t>> sorted(counts.begin(), counts.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  if (sorted.size() > limit) sorted.resize(limit);
  std::vector<std::string> out;
  out.reserve(sorted.size());
  for (auto& [gram, count] : sorted) out.push_back(std::move(gram));
  return out;
}

struct Profile {
  std::string lang;
  std::unordered_map<std::string, std::size_t> rank_of;
};

const std::vector<Profile>& profiles() {
  static const std::vector<Profile> table = [] {
    std::vector<Profile> out;
    for (std::size_t i = 0; i < detail::kLangSeedCount; ++i) {
      Profile p;
      p.lang = detail::kLangSeeds[i].lang;
      auto ranked = rank_profile(detail::kLangSeeds[i].text, kProfileSize);
      for (std::size_t r = 0; r < ranked.size(); ++r) p.rank_of.emplace(ranked[r], r);
      out.push_back(std::move(p));
    }
    return out;
  }();
  return table;
}

const std::vector<std::string_view>& language_codes() {
  static const std::vector<std::string_view> codes = [] {
    std::vector<std::string_view> out;
    for (const auto& p : profiles()) out.push_back(p.lang);
    return out;
  }();
  return codes;
}

// Out-of-place distance, normalized to [0,1] by the worst case where every
// doc gram misses the profile.
double rank_distance(const std::vector<std::string>& doc, const Profile& profile) {
  std::size_t sum = 0;
  for (std::size_t r = 0; r < doc.size(); ++r) {
    auto it = profile.rank_of.find(doc[r]);
    if (it == profile.rank_of.end()) {
      sum += kProfileSize;
    } else {
      sum += static_cast<std::size_t>(
          std::abs(static_cast<long>(r) - static_cast<long>(it->second)));
    }
  }
  return static_cast<double>(sum) / (static_cast<double>(doc.size()) * kProfileSize);
}

}  // namespace

std::vector<LangScore> rank_languages(std::string_view text) {
  std::vector<LangScore> scores;
  auto doc = rank_profile(text, kProfileSize);
  if (doc.empty()) return scores;
  for (const auto& p : profiles()) {
    scores.push_back({p.lang, rank_distance(doc, p)});
  }
  std::sort(scores.begin(), scores.end(), [](const LangScore& a, const LangScore& b) {
    if (a.distance != b.distance) return a.distance < b.distance;
    return a.lang < b.lang;
  });
  return scores;
}

LangGuess detect_language(std::string_view text) {
  auto scores = rank_languages(text);
  if (scores.empty()) return {"und", 0.0};
  if (scores.size() == 1) return {scores[0].lang, 1.0};
  // Margin between best and second best, normalized by the spread of
  // distances across all profiles.
  const double d1 = scores[0].distance;
  const double d2 = scores[1].distance;
  const double spread = scores.back().distance - d1;
  double confidence = spread > 0.0 ? (d2 - d1) / spread : 0.0;
  confidence = std::clamp(confidence, 0.0, 1.0);
  return {scores[0].lang, confidence};
}

std::span<const std::string_view> supported_languages() {
  return {language_codes().data(), language_codes().size()};
}

}  // namespace msqkit
