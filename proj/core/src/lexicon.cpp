#include "msqkit/lexicon.hpp"

#include <algorithm>
#include <istream>

#include "msqkit/errors.hpp"
#include "msqkit/text.hpp"

namespace msqkit {

namespace {

constexpr std::string_view kCategoryNames[kMarkerCategoryCount] = {
    "anaphora", "ellipsis", "polar", "wh", "conditional", "elaborative", "separable"};

const char* const kPronouns[] = {"she", "he",  "it",    "they", "her",
                                 "his", "its", "their", "them", "it's"};

const char* const kEllipsis[] = {"do so",      "did so",     "does so",
                                 "do it",      "do too",     "does too",
                                 "did too",    "did it too", "do it too",
                                 "does it too"};

const char* const kPolar[] = {
    "do",      "does",    "did",    "didn't",  "will",   "won't",
    "would",   "is",      "are",    "were",    "weren't", "wasn't",
    "can",     "can't",   "could",  "must",    "have",   "has",
    "had",     "hasn't",  "haven't", "should", "shouldn't", "may",
    "might",   "shall",   "ought"};

const char* const kWh[] = {"who", "what", "where", "when", "why", "how", "which"};

const char* const kConditional[] = {
    "if so",        "accordingly",  "then",
    "as a result",  "it follows",   "subsequently",
    "consequently", "if yes",       "if not",
    "if the answer is yes", "if the answer is no"};

const char* const kElaborative[] = {
    "for instance", "for example",     "e.g.",
    "specifically", "particularly",    "in particular",
    "more specifically", "more precisely", "therefore"};

const char* const kSeparable[] = {"also",      "secondly",  "next",       "related",
                                  "relatedly", "similarly", "furthermore"};

template <std::size_t N>
MarkerSet make_set(MarkerCategory cat, const char* const (&items)[N]) {
  MarkerSet s;
  s.category = cat;
  for (const char* item : items) s.add(item);
  return s;
}

}  // namespace

std::string_view marker_category_name(MarkerCategory cat) {
  return kCategoryNames[static_cast<std::size_t>(cat)];
}

std::optional<MarkerCategory> marker_category_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kMarkerCategoryCount; ++i) {
    if (kCategoryNames[i] == name) return static_cast<MarkerCategory>(i);
  }
  return std::nullopt;
}

void MarkerSet::add(std::string_view entry) {
  std::string canon = collapse_whitespace(to_lower(normalize_apostrophes(entry)));
  if (canon.empty()) throw DataError("empty marker entry");
  std::vector<std::string> toks = tokenize(canon);
  if (toks.empty() || toks.size() > 6) {
    throw DataError("marker entry must be 1..6 tokens: '" + canon + "'");
  }
  if (std::find(token_seqs.begin(), token_seqs.end(), toks) != token_seqs.end()) {
    throw DataError("duplicate marker entry: '" + canon + "'");
  }
  entries.push_back(std::move(canon));
  token_seqs.push_back(std::move(toks));
}

std::optional<TokenMatch> match(std::span<const std::string> tokens,
                                const MarkerSet& set, MatchPolicy policy) {
  const std::size_t n = tokens.size();
  const std::size_t last_start = (policy == MatchPolicy::InitialOnly) ? 0 : n;
  for (std::size_t start = 0; start < n && start <= last_start; ++start) {
    std::optional<TokenMatch> best;
    for (std::size_t e = 0; e < set.token_seqs.size(); ++e) {
      const auto& seq = set.token_seqs[e];
      if (start + seq.size() > n) continue;
      bool ok = true;
      for (std::size_t k = 0; k < seq.size(); ++k) {
        if (tokens[start + k] != seq[k]) {
          ok = false;
          break;
        }
      }
      if (ok && (!best || seq.size() > best->length)) {
        best = TokenMatch{start, seq.size(), e};
      }
    }
    if (best) return best;
  }
  return std::nullopt;
}

Lexicon Lexicon::defaults() {
  Lexicon lex;
  lex.sets_[0] = make_set(MarkerCategory::AnaphoraPronoun, kPronouns);
  lex.sets_[1] = make_set(MarkerCategory::VpEllipsis, kEllipsis);
  lex.sets_[2] = make_set(MarkerCategory::PolarAux, kPolar);
  lex.sets_[3] = make_set(MarkerCategory::WhWord, kWh);
  lex.sets_[4] = make_set(MarkerCategory::Conditional, kConditional);
  lex.sets_[5] = make_set(MarkerCategory::Elaborative, kElaborative);
  lex.sets_[6] = make_set(MarkerCategory::Separable, kSeparable);
  return lex;
}

Lexicon Lexicon::load(std::istream& in) {
  Lexicon lex = defaults();
  std::optional<MarkerCategory> current;
  std::array<bool, kMarkerCategoryCount> replaced{};

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    if (t.front() == '[') {
      if (t.back() != ']') {
        throw DataError("lexicon line " + std::to_string(lineno) + ": unterminated section");
      }
      auto cat = marker_category_from_name(t.substr(1, t.size() - 2));
      if (!cat) {
        throw DataError("lexicon line " + std::to_string(lineno) + ": unknown section " +
                        std::string(t));
      }
      current = *cat;
      continue;
    }
    if (!current) {
      throw DataError("lexicon line " + std::to_string(lineno) + ": entry before any section");
    }
    std::size_t idx = static_cast<std::size_t>(*current);
    if (!replaced[idx]) {
      lex.sets_[idx] = MarkerSet{};
      lex.sets_[idx].category = *current;
      replaced[idx] = true;
    }
    try {
      lex.sets_[idx].add(t);
    } catch (const DataError& e) {
      throw DataError("lexicon line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  for (std::size_t i = 0; i < kMarkerCategoryCount; ++i) {
    if (lex.sets_[i].entries.empty()) {
      throw DataError(std::string("lexicon section [") +
                      std::string(kCategoryNames[i]) + "] is empty");
    }
  }
  return lex;
}

const MarkerSet& Lexicon::set(MarkerCategory cat) const {
  return sets_[static_cast<std::size_t>(cat)];
}

}  // namespace msqkit
