#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace msqkit {

// The seven marker inventories used by the feature extractor.
enum class MarkerCategory {
  AnaphoraPronoun,
  VpEllipsis,
  PolarAux,
  WhWord,
  Conditional,
  Elaborative,
  Separable,
};

inline constexpr std::size_t kMarkerCategoryCount = 7;

std::string_view marker_category_name(MarkerCategory cat);
std::optional<MarkerCategory> marker_category_from_name(std::string_view name);

// One inventory: entries are canonical strings (lowercase, ASCII
// apostrophes), each 1..6 tokens long.
struct MarkerSet {
  MarkerCategory category = MarkerCategory::AnaphoraPronoun;
  std::vector<std::string> entries;
  // entries[i] tokenized, parallel to `entries`.
  std::vector<std::vector<std::string>> token_seqs;

  void add(std::string_view entry);  // normalizes; throws DataError on dup/empty
};

enum class MatchPolicy { Anywhere, InitialOnly };

struct TokenMatch {
  std::size_t start = 0;
  std::size_t length = 0;
  std::size_t entry_index = 0;  // into MarkerSet::entries
};

// Earliest match of any entry as a contiguous token subsequence; longest
// entry wins at equal start. InitialOnly restricts the start to index 0.
// Matching is token-boundary exact: "its" never fires inside "itself".
std::optional<TokenMatch> match(std::span<const std::string> tokens,
                                const MarkerSet& set, MatchPolicy policy);

// Immutable after construction; safe for shared concurrent reads.
class Lexicon {
 public:
  // The bundled inventories (verbatim lists, apostrophes normalized).
  static Lexicon defaults();

  // Override file: INI-like sections [anaphora], [ellipsis], [polar],
  // [wh], [conditional], [elaborative], [separable], one entry per line,
  // '#' comments. Sections present replace the bundled list; absent
  // sections keep it. Throws DataError on unknown sections or bad entries.
  static Lexicon load(std::istream& in);

  const MarkerSet& set(MarkerCategory cat) const;

  const MarkerSet& pronouns() const { return set(MarkerCategory::AnaphoraPronoun); }
  const MarkerSet& ellipsis() const { return set(MarkerCategory::VpEllipsis); }
  const MarkerSet& polar() const { return set(MarkerCategory::PolarAux); }
  const MarkerSet& wh() const { return set(MarkerCategory::WhWord); }
  const MarkerSet& conditional() const { return set(MarkerCategory::Conditional); }
  const MarkerSet& elaborative() const { return set(MarkerCategory::Elaborative); }
  const MarkerSet& separable() const { return set(MarkerCategory::Separable); }

 private:
  std::array<MarkerSet, kMarkerCategoryCount> sets_;
};

}  // namespace msqkit
