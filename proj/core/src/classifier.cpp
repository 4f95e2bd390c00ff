#include "msqkit/classifier.hpp"

#include <istream>

#include "msqkit/errors.hpp"
#include "msqkit/text.hpp"

namespace msqkit {

namespace {

constexpr std::string_view kLabelNames[kLabelCount] = {
    "separable",   "reformulated", "disjunctive", "conditional",
    "elaborative", "elab_statement", "unknown"};

constexpr std::uint16_t bit(FeatureId id) {
  return static_cast<std::uint16_t>(1u << static_cast<unsigned>(id));
}

constexpr std::uint16_t bits() { return 0; }

template <typename... Rest>
constexpr std::uint16_t bits(FeatureId first, Rest... rest) {
  return static_cast<std::uint16_t>(bit(first) | bits(rest...));
}

}  // namespace

std::string_view label_name(MsqLabel label) {
  return kLabelNames[static_cast<std::size_t>(label)];
}

std::optional<MsqLabel> label_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kLabelCount; ++i) {
    if (kLabelNames[i] == name) return static_cast<MsqLabel>(i);
  }
  return std::nullopt;
}

MaskTable::MaskTable(std::vector<TypeMask> masks) : masks_(std::move(masks)) {
  for (std::size_t i = 0; i < masks_.size(); ++i) {
    if (masks_[i].label == MsqLabel::Unknown) {
      throw DataError("mask table: unknown is a fallback, not a mask");
    }
    if (masks_[i].required & masks_[i].disallowed) {
      throw DataError(std::string("mask for ") + std::string(label_name(masks_[i].label)) +
                      ": a feature is both required and disallowed");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (masks_[j].label == masks_[i].label) {
        throw DataError(std::string("duplicate mask for ") +
                        std::string(label_name(masks_[i].label)));
      }
    }
  }
}

MaskTable MaskTable::defaults() {
  using F = FeatureId;
  std::vector<TypeMask> masks;
  masks.push_back({MsqLabel::Separable,
                   bits(F::PronQ2),
                   bits(F::EllipsisQ2, F::PolarQ1, F::StmtQ2, F::CondMarker, F::OrMarker,
                        F::ElabMarker)});
  masks.push_back({MsqLabel::Reformulated,
                   bits(F::SemSim),
                   bits(F::PronQ2, F::StmtQ2, F::CondMarker, F::OrMarker, F::ElabMarker,
                        F::SepMarker)});
  masks.push_back({MsqLabel::Disjunctive,
                   bits(F::PolarQ1, F::PolarQ2, F::OrMarker),
                   bits(F::WhQ1, F::WhQ2, F::StmtQ2, F::CondMarker, F::ElabMarker,
                        F::SepMarker)});
  masks.push_back({MsqLabel::Conditional,
                   bits(F::PolarQ1, F::CondMarker),
                   bits(F::WhQ1, F::OrMarker, F::ElabMarker, F::SepMarker)});
  masks.push_back({MsqLabel::Elaborative,
                   bits(F::PronQ2, F::ElabMarker),
                   bits(F::WhQ2, F::StmtQ2, F::CondMarker, F::OrMarker, F::SepMarker)});
  masks.push_back({MsqLabel::ElaborativeStatement,
                   bits(F::StmtQ2, F::SemSim),
                   bits(F::PolarQ2, F::WhQ2, F::CondMarker, F::OrMarker, F::SepMarker)});
  return MaskTable(std::move(masks));
}

MaskTable MaskTable::load(std::istream& in) {
  std::vector<TypeMask> masks;
  TypeMask* current = nullptr;

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    const std::string where = "mask line " + std::to_string(lineno) + ": ";
    if (t.front() == '[') {
      if (t.back() != ']') throw DataError(where + "unterminated section");
      auto label = label_from_name(t.substr(1, t.size() - 2));
      if (!label || *label == MsqLabel::Unknown) {
        throw DataError(where + "unknown label section " + std::string(t));
      }
      masks.push_back(TypeMask{*label, 0, 0});
      current = &masks.back();
      continue;
    }
    if (!current) throw DataError(where + "directive before any [label] section");
    auto colon = t.find(':');
    if (colon == std::string_view::npos) throw DataError(where + "expected 'key: values'");
    std::string_view key = trim(t.substr(0, colon));
    std::string_view rest = t.substr(colon + 1);
    std::uint16_t* target = nullptr;
    if (key == "required") target = &current->required;
    else if (key == "disallowed") target = &current->disallowed;
    else throw DataError(where + "unknown key '" + std::string(key) + "'");

    std::size_t pos = 0;
    while (pos <= rest.size()) {
      auto comma = rest.find(',', pos);
      std::string_view item = trim(rest.substr(pos, comma == std::string_view::npos
                                                        ? std::string_view::npos
                                                        : comma - pos));
      if (!item.empty()) {
        auto f = feature_from_name(item);
        if (!f) throw DataError(where + "unknown feature '" + std::string(item) + "'");
        *target = static_cast<std::uint16_t>(*target | bit(*f));
      }
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
  }
  return MaskTable(std::move(masks));  // constructor re-checks invariants
}

std::vector<MaskConflict> verify_exclusivity(const MaskTable& table) {
  std::vector<MaskConflict> conflicts;
  const auto masks = table.masks();
  for (std::uint32_t v = 0; v < (1u << kFeatureCount); ++v) {
    const FeatureVector fv = FeatureVector::from_bits(static_cast<std::uint16_t>(v));
    for (std::size_t i = 0; i < masks.size(); ++i) {
      if (!masks[i].matches(fv)) continue;
      for (std::size_t j = i + 1; j < masks.size(); ++j) {
        if (masks[j].matches(fv)) {
          conflicts.push_back({static_cast<std::uint16_t>(v), masks[i].label, masks[j].label});
        }
      }
    }
  }
  return conflicts;
}

std::vector<MsqLabel> matching_labels(const FeatureVector& fv, const MaskTable& table) {
  std::vector<MsqLabel> out;
  for (const auto& mask : table.masks()) {
    if (mask.matches(fv)) out.push_back(mask.label);
  }
  return out;
}

MsqLabel classify(const FeatureVector& fv, const MaskTable& table,
                  std::vector<MsqLabel>* diagnostic) {
  auto matched = matching_labels(fv, table);
  if (matched.size() == 1) return matched.front();
  if (matched.size() > 1 && diagnostic) *diagnostic = matched;
  return MsqLabel::Unknown;
}

MsqLabel classify_first_match(const FeatureVector& fv, const MaskTable& table) {
  auto matched = matching_labels(fv, table);
  return matched.empty() ? MsqLabel::Unknown : matched.front();
}

LabeledResult classify_pair(std::string_view q1, std::string_view q2,
                            const Lexicon& lexicon, const MaskTable& table,
                            const FeatureOptions& opts, bool first_match) {
  LabeledResult result;
  result.features = extract_features(q1, q2, lexicon, opts, &result.trace);
  result.label = first_match ? classify_first_match(result.features, table)
                             : classify(result.features, table);
  return result;
}

}  // namespace msqkit
