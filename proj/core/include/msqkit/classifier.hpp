#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "msqkit/features.hpp"

namespace msqkit {

enum class MsqLabel {
  Separable = 0,
  Reformulated,
  Disjunctive,
  Conditional,
  Elaborative,
  ElaborativeStatement,
  Unknown,
};

inline constexpr std::size_t kLabelCount = 7;

// Wire names: separable, reformulated, disjunctive, conditional,
// elaborative, elab_statement, unknown.
std::string_view label_name(MsqLabel label);
std::optional<MsqLabel> label_from_name(std::string_view name);

// Required/disallowed feature sets for one MSQ type, as 12-bit masks over
// the FeatureId encoding. Features in neither set are ignored.
struct TypeMask {
  MsqLabel label = MsqLabel::Unknown;
  std::uint16_t required = 0;
  std::uint16_t disallowed = 0;

  bool matches(const FeatureVector& fv) const {
    const std::uint16_t bits = fv.bits();
    return (bits & required) == required && (bits & disallowed) == 0;
  }
};

// A vector satisfying two masks at once; empty conflict list means the
// table is mutually exclusive.
struct MaskConflict {
  std::uint16_t bits = 0;
  MsqLabel first = MsqLabel::Unknown;
  MsqLabel second = MsqLabel::Unknown;
};

class MaskTable {
 public:
  // The six bundled masks. verify_exclusivity(defaults()) is empty; the
  // acceptance suite enumerates all 4096 vectors to prove it.
  static MaskTable defaults();

  // Override file: one [label] section per type, with `required:` and
  // `disallowed:` lines listing feature names. Throws DataError on parse
  // problems. Callers decide what to do with a non-exclusive table.
  static MaskTable load(std::istream& in);

  explicit MaskTable(std::vector<TypeMask> masks);
  MaskTable() = default;

  std::span<const TypeMask> masks() const { return masks_; }

 private:
  std::vector<TypeMask> masks_;
};

// Exhaustive check over all 2^12 feature vectors. Every violating
// (vector, label pair) is reported.
std::vector<MaskConflict> verify_exclusivity(const MaskTable& table);

// All masks the vector satisfies, in table order.
std::vector<MsqLabel> matching_labels(const FeatureVector& fv, const MaskTable& table);

// The unique matching label, else Unknown. For a table that passed
// verify_exclusivity a double match cannot happen; if it does anyway the
// result is Unknown and `diagnostic` receives the contenders.
MsqLabel classify(const FeatureVector& fv, const MaskTable& table,
                  std::vector<MsqLabel>* diagnostic = nullptr);

// First-match fallback used with tables accepted under --allow-overlap.
MsqLabel classify_first_match(const FeatureVector& fv, const MaskTable& table);

struct LabeledResult {
  MsqLabel label = MsqLabel::Unknown;
  FeatureVector features;
  FeatureTrace trace;
};

// extract_features followed by classify, with the trace retained for the
// explanation view. `first_match` selects the --allow-overlap behaviour.
LabeledResult classify_pair(std::string_view q1, std::string_view q2,
                            const Lexicon& lexicon, const MaskTable& table,
                            const FeatureOptions& opts = {}, bool first_match = false);

}  // namespace msqkit
