#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace msqkit {

struct LangGuess {
  std::string lang;        // ISO-ish code, "und" for undecidable input
  double confidence = 0.0; // normalized margin between best and second best
};

struct LangScore {
  std::string lang;
  double distance = 0.0;  // normalized rank-order distance, lower is closer
};

// Deterministic character n-gram identifier over the bundled profiles
// (en, fr, de, es, it, nl, pt and transliterated ru). The text's 1..5-gram
// rank profile is compared to each language profile by out-of-place
// distance; confidence is (d2 - d1) / d2 over the two best distances.
// Empty or letterless text yields ("und", 0.0).
LangGuess detect_language(std::string_view text);

// All bundled languages with their normalized distances, ascending.
std::vector<LangScore> rank_languages(std::string_view text);

std::span<const std::string_view> supported_languages();

}  // namespace msqkit
