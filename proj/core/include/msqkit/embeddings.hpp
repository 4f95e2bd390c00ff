#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace msqkit {

// Word vectors in plain text format: one `word v1 ... vd` row per line,
// optional `count dim` header. Immutable once loaded; shared concurrent
// reads are fine.
class EmbeddingTable {
 public:
  EmbeddingTable() = default;

  // Rows with a value count different from the established dimension are a
  // hard error naming the line; rows whose values fail to parse as numbers
  // are counted and skipped. Duplicate words keep the first occurrence.
  static EmbeddingTable load_text(std::istream& in);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return vocab_.size(); }
  std::size_t skipped_lines() const { return skipped_; }

  // nullptr when the word is unknown; otherwise dim() doubles.
  const std::vector<double>* find(std::string_view word) const;

  // For building small tables in tests; first insert wins, like the loader.
  void insert(std::string word, std::vector<double> vec);

 private:
  struct StringHash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const {
      return std::hash<std::string_view>{}(s);
    }
  };
  std::size_t dim_ = 0;
  std::size_t skipped_ = 0;
  std::unordered_map<std::string, std::vector<double>, StringHash, std::equal_to<>> vocab_;
};

// Mean of the vectors of in-vocabulary tokens; out-of-vocabulary tokens are
// skipped, not zero-filled. nullopt when no token is in vocabulary.
std::optional<std::vector<double>> mean_vector(std::span<const std::string> tokens,
                                               const EmbeddingTable& table);

// u.v / (|u||v|), clamped to [-1,1]. Zero vector on either side gives 0.0.
// Throws DataError on dimension mismatch.
double cosine(std::span<const double> u, std::span<const double> v);

// Cosine of the mean vectors of the two tokenized questions; nullopt when
// either side has no in-vocabulary token. Callers treat nullopt as below
// any threshold.
std::optional<double> semantic_similarity(std::string_view q1, std::string_view q2,
                                          const EmbeddingTable& table);

}  // namespace msqkit
