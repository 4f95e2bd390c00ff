#include "msqkit/lexicon.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "msqkit/errors.hpp"
#include "msqkit/text.hpp"

using namespace msqkit;

namespace {

bool contains_entry(const MarkerSet& set, std::string_view entry) {
  return std::find(set.entries.begin(), set.entries.end(), entry) != set.entries.end();
}

}  // namespace

TEST(LexiconDefaults, InventorySizes) {
  Lexicon lex = Lexicon::defaults();
  EXPECT_EQ(lex.pronouns().entries.size(), 10u);
  EXPECT_EQ(lex.ellipsis().entries.size(), 10u);
  EXPECT_EQ(lex.polar().entries.size(), 27u);
  EXPECT_EQ(lex.wh().entries.size(), 7u);
  EXPECT_EQ(lex.conditional().entries.size(), 11u);
  EXPECT_EQ(lex.elaborative().entries.size(), 9u);
  EXPECT_EQ(lex.separable().entries.size(), 7u);
}

TEST(LexiconDefaults, KnownMembership) {
  Lexicon lex = Lexicon::defaults();
  EXPECT_TRUE(contains_entry(lex.pronouns(), "it's"));
  EXPECT_FALSE(contains_entry(lex.pronouns(), "him"));  // list is kept verbatim
  EXPECT_FALSE(contains_entry(lex.wh(), "whom"));
  EXPECT_TRUE(contains_entry(lex.conditional(), "if the answer is no"));
  EXPECT_TRUE(contains_entry(lex.elaborative(), "therefore"));
  EXPECT_TRUE(contains_entry(lex.elaborative(), "e.g."));
  EXPECT_FALSE(contains_entry(lex.polar(), "was"));
  EXPECT_TRUE(contains_entry(lex.polar(), "wasn't"));
  EXPECT_TRUE(contains_entry(lex.separable(), "furthermore"));
}

TEST(LexiconDefaults, NormalizationFixpoint) {
  Lexicon lex = Lexicon::defaults();
  for (std::size_t c = 0; c < kMarkerCategoryCount; ++c) {
    const MarkerSet& set = lex.set(static_cast<MarkerCategory>(c));
    for (const auto& entry : set.entries) {
      EXPECT_EQ(entry, collapse_whitespace(to_lower(normalize_apostrophes(entry))));
    }
  }
}

TEST(Match, InitialToken) {
  MarkerSet set;
  set.category = MarkerCategory::Separable;
  set.add("or");
  auto tokens = tokenize("Or should I go?");
  auto m = match(tokens, set, MatchPolicy::InitialOnly);
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(m->start, 0u);
  EXPECT_EQ(m->length, 1u);
}

TEST(Match, TokenBoundaryExact) {
  Lexicon lex = Lexicon::defaults();
  auto tokens = tokenize("I like iterators");
  // a substring search would wrongly hit "it" inside "iterators"
  EXPECT_FALSE(match(tokens, lex.pronouns(), MatchPolicy::Anywhere).has_value());
}

TEST(Match, MultiwordInitial) {
  Lexicon lex = Lexicon::defaults();
  auto tokens = tokenize("If so, what changed?");
  auto m = match(tokens, lex.conditional(), MatchPolicy::InitialOnly);
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(m->start, 0u);
  EXPECT_EQ(m->length, 2u);
  EXPECT_EQ(lex.conditional().entries[m->entry_index], "if so");
}

TEST(Match, LongestEntryWinsAtEqualStart) {
  MarkerSet set;
  set.category = MarkerCategory::Conditional;
  set.add("if");
  set.add("if so");
  auto tokens = tokenize("if so then");
  auto m = match(tokens, set, MatchPolicy::InitialOnly);
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(m->length, 2u);
}

TEST(Match, AnywhereFindsEarliest) {
  Lexicon lex = Lexicon::defaults();
  auto tokens = tokenize("you could do so or do it");
  auto m = match(tokens, lex.ellipsis(), MatchPolicy::Anywhere);
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(m->start, 2u);
  EXPECT_EQ(m->length, 2u);
}

TEST(Match, InitialOnlyRequiresStartZero) {
  Lexicon lex = Lexicon::defaults();
  auto tokens = tokenize("well if so what");
  EXPECT_FALSE(match(tokens, lex.conditional(), MatchPolicy::InitialOnly).has_value());
  EXPECT_TRUE(match(tokens, lex.conditional(), MatchPolicy::Anywhere).has_value());
}

// Random texts over a small vocabulary: every reported match, joined with
// single spaces, must equal the joined token form of some entry, and every
// InitialOnly match must also be found by Anywhere at index 0.
TEST(MatchProperty, SoundnessAndInitialSubset) {
  Lexicon lex = Lexicon::defaults();
  std::vector<std::string> vocab{"if", "so",  "then", "do",   "it",  "salt",
                                 "or", "and", "what", "cats", "them", "iterators"};
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, vocab.size() - 1);
  std::uniform_int_distribution<int> len(0, 8);
  for (int iter = 0; iter < 500; ++iter) {
    std::vector<std::string> tokens;
    int n = len(rng);
    for (int i = 0; i < n; ++i) tokens.push_back(vocab[pick(rng)]);
    for (std::size_t c = 0; c < kMarkerCategoryCount; ++c) {
      const MarkerSet& set = Lexicon::defaults().set(static_cast<MarkerCategory>(c));
      auto any = match(tokens, set, MatchPolicy::Anywhere);
      if (any) {
        std::string joined = join_tokens(tokens, any->start, any->length);
        bool found = false;
        for (const auto& seq : set.token_seqs) {
          if (join_tokens(seq, 0, seq.size()) == joined) found = true;
        }
        EXPECT_TRUE(found) << "matched slice '" << joined << "' is not an entry";
      }
      auto initial = match(tokens, set, MatchPolicy::InitialOnly);
      if (initial) {
        ASSERT_TRUE(any.has_value());
        EXPECT_EQ(any->start, 0u);
        EXPECT_EQ(any->length, initial->length);
      }
    }
  }
}

TEST(LexiconLoad, SectionReplacesDefaults) {
  std::istringstream in(
      "# custom inventory\n"
      "[separable]\n"
      "moreover\n"
      "in addition\n");
  Lexicon lex = Lexicon::load(in);
  EXPECT_EQ(lex.separable().entries.size(), 2u);
  EXPECT_TRUE(contains_entry(lex.separable(), "moreover"));
  // untouched sections keep the bundled lists
  EXPECT_EQ(lex.pronouns().entries.size(), 10u);
}

TEST(LexiconLoad, NormalizesEntries) {
  std::istringstream in("[polar]\nDidn’t\n");
  Lexicon lex = Lexicon::load(in);
  EXPECT_TRUE(contains_entry(lex.polar(), "didn't"));
}

TEST(LexiconLoad, UnknownSectionFails) {
  std::istringstream in("[verbs]\nrun\n");
  EXPECT_THROW(Lexicon::load(in), DataError);
}

TEST(LexiconLoad, DuplicateEntryFails) {
  std::istringstream in("[wh]\nwhat\nwhat\n");
  EXPECT_THROW(Lexicon::load(in), DataError);
}

TEST(LexiconLoad, EntryBeforeSectionFails) {
  std::istringstream in("what\n");
  EXPECT_THROW(Lexicon::load(in), DataError);
}

TEST(LexiconLoad, OverlongEntryFails) {
  std::istringstream in("[conditional]\none two three four five six seven\n");
  EXPECT_THROW(Lexicon::load(in), DataError);
}
