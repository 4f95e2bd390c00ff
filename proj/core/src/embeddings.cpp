#include "msqkit/embeddings.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <sstream>

#include "msqkit/errors.hpp"
#include "msqkit/text.hpp"

namespace msqkit {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

bool parse_double(std::string_view s, double& out) {
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

bool is_uint(std::string_view s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

EmbeddingTable EmbeddingTable::load_text(std::istream& in) {
  EmbeddingTable table;
  std::string line;
  std::size_t lineno = 0;
  bool first_content_line = true;
  while (std::getline(in, line)) {
    ++lineno;
    auto fields = split_ws(line);
    if (fields.empty()) continue;
    if (first_content_line && fields.size() == 2 && is_uint(fields[0]) && is_uint(fields[1])) {
      first_content_line = false;  // `count dim` header
      continue;
    }
    first_content_line = false;
    if (fields.size() < 2) {
      ++table.skipped_;
      continue;
    }
    if (table.dim_ != 0 && fields.size() - 1 != table.dim_) {
      throw DataError("embedding line " + std::to_string(lineno) + ": expected " +
                      std::to_string(table.dim_) + " values, got " +
                      std::to_string(fields.size() - 1));
    }
    std::vector<double> vec;
    vec.reserve(fields.size() - 1);
    bool ok = true;
    for (std::size_t i = 1; i < fields.size(); ++i) {
      double v = 0.0;
      if (!parse_double(fields[i], v)) {
        ok = false;
        break;
      }
      vec.push_back(v);
    }
    if (!ok) {
      ++table.skipped_;
      continue;
    }
    if (table.dim_ == 0) table.dim_ = vec.size();
    table.vocab_.emplace(std::string(fields[0]), std::move(vec));  // first wins
  }
  return table;
}

const std::vector<double>* EmbeddingTable::find(std::string_view word) const {
  auto it = vocab_.find(word);
  return it == vocab_.end() ? nullptr : &it->second;
}

void EmbeddingTable::insert(std::string word, std::vector<double> vec) {
  if (dim_ == 0) dim_ = vec.size();
  vocab_.emplace(std::move(word), std::move(vec));
}

std::optional<std::vector<double>> mean_vector(std::span<const std::string> tokens,
                                               const EmbeddingTable& table) {
  std::vector<double> sum(table.dim(), 0.0);
  std::size_t n = 0;
  for (const auto& tok : tokens) {
    if (const auto* vec = table.find(tok)) {
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += (*vec)[i];
      ++n;
    }
  }
  if (n == 0) return std::nullopt;
  for (double& v : sum) v /= static_cast<double>(n);
  return sum;
}

double cosine(std::span<const double> u, std::span<const double> v) {
  if (u.size() != v.size()) {
    throw DataError("cosine: dimension mismatch (" + std::to_string(u.size()) + " vs " +
                    std::to_string(v.size()) + ")");
  }
  double dot = 0.0, nu = 0.0, nv = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    dot += u[i] * v[i];
    nu += u[i] * u[i];
    nv += v[i] * v[i];
  }
  if (nu == 0.0 || nv == 0.0) return 0.0;
  double c = dot / (std::sqrt(nu) * std::sqrt(nv));
  return std::clamp(c, -1.0, 1.0);
}

std::optional<double> semantic_similarity(std::string_view q1, std::string_view q2,
                                          const EmbeddingTable& table) {
  auto m1 = mean_vector(tokenize(q1), table);
  if (!m1) return std::nullopt;
  auto m2 = mean_vector(tokenize(q2), table);
  if (!m2) return std::nullopt;
  return cosine(*m1, *m2);
}

}  // namespace msqkit
