#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "msqkit/embeddings.hpp"
#include "msqkit/lexicon.hpp"

namespace msqkit {

// The twelve binary contrastive features, in the fixed order used for the
// 12-bit vector encoding.
enum class FeatureId : unsigned {
  PronQ2 = 0,   // pronoun anywhere in Q2
  EllipsisQ2,   // VP-ellipsis pro-form anywhere in Q2
  PolarQ1,      // Q1 opens with a polar auxiliary
  PolarQ2,
  WhQ1,         // wh-word within the first two tokens of Q1
  WhQ2,
  StmtQ2,       // Q2 does not end in '?'
  CondMarker,   // conditional marker at the start of Q2
  OrMarker,     // literal "or" as the first token of Q2
  ElabMarker,   // elaborative marker at the start of Q2
  SepMarker,    // separable marker at the start of Q2
  SemSim,       // mean-vector cosine similarity meets the threshold
};

inline constexpr std::size_t kFeatureCount = 12;

// Stable wire names: PRON_Q2, ELLIPSIS_Q2, POLAR_Q1, POLAR_Q2, WH_Q1,
// WH_Q2, STMT_Q2, COND_MARKER, OR_MARKER, ELAB_MARKER, SEP_MARKER, SEM_SIM.
std::string_view feature_name(FeatureId id);
std::optional<FeatureId> feature_from_name(std::string_view name);

struct FeatureVector {
  std::array<bool, kFeatureCount> values{};

  bool get(FeatureId id) const { return values[static_cast<std::size_t>(id)]; }
  void set(FeatureId id, bool v) { values[static_cast<std::size_t>(id)] = v; }

  // 12-bit encoding, bit i = feature i in declaration order.
  std::uint16_t bits() const;
  static FeatureVector from_bits(std::uint16_t bits);

  bool operator==(const FeatureVector&) const = default;
};

// Per-feature evidence for the debug/trace view: the matched marker, the
// similarity value, or nullopt when the feature is false with no evidence.
struct FeatureTrace {
  std::array<std::optional<std::string>, kFeatureCount> evidence;
};

struct FeatureOptions {
  const EmbeddingTable* table = nullptr;  // no table: SemSim is false
  double sim_threshold = 0.8;
  // Test hook: forces SemSim regardless of the table.
  std::optional<bool> sem_sim_override;
};

// Drops one leading token from {or, and, but, so}, so that "Or should I
// go?" tests polar on "should".
std::vector<std::string> strip_leading_connectives(std::vector<std::string> tokens);

// First token after strip_leading_connectives is a polar auxiliary.
bool is_polar(std::string_view question, const Lexicon& lexicon);

// A wh-word appears within the first two tokens after
// strip_leading_connectives (admits fronted prepositions: "In which ...").
bool is_wh(std::string_view question, const Lexicon& lexicon);

// Trimmed text does not end in '?'. Empty text counts as a statement.
bool is_statement(std::string_view q2);

// Total: always assigns all twelve features. `trace`, when given, receives
// the per-feature evidence.
FeatureVector extract_features(std::string_view q1, std::string_view q2,
                               const Lexicon& lexicon,
                               const FeatureOptions& opts = {},
                               FeatureTrace* trace = nullptr);

}  // namespace msqkit
