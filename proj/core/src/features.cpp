#include "msqkit/features.hpp"

#include <sstream>

#include "msqkit/text.hpp"

namespace msqkit {

namespace {

constexpr std::string_view kFeatureNames[kFeatureCount] = {
    "PRON_Q2",  "ELLIPSIS_Q2", "POLAR_Q1",   "POLAR_Q2",  "WH_Q1",      "WH_Q2",
    "STMT_Q2",  "COND_MARKER", "OR_MARKER",  "ELAB_MARKER", "SEP_MARKER", "SEM_SIM"};

bool polar_tokens(const std::vector<std::string>& stripped, const Lexicon& lexicon) {
  if (stripped.empty()) return false;
  for (const auto& seq : lexicon.polar().token_seqs) {
    if (seq.size() == 1 && seq[0] == stripped[0]) return true;
  }
  return false;
}

const std::string* wh_tokens(const std::vector<std::string>& stripped,
                             const Lexicon& lexicon) {
  for (std::size_t i = 0; i < stripped.size() && i < 2; ++i) {
    for (const auto& seq : lexicon.wh().token_seqs) {
      if (seq.size() == 1 && seq[0] == stripped[i]) return &stripped[i];
    }
  }
  return nullptr;
}

void set_with_evidence(FeatureVector& fv, FeatureTrace* trace, FeatureId id, bool value,
                       std::optional<std::string> evidence) {
  fv.set(id, value);
  if (trace) trace->evidence[static_cast<std::size_t>(id)] = std::move(evidence);
}

void set_marker_feature(FeatureVector& fv, FeatureTrace* trace, FeatureId id,
                        const std::vector<std::string>& tokens, const MarkerSet& set,
                        MatchPolicy policy) {
  auto m = match(tokens, set, policy);
  std::optional<std::string> evidence;
  if (m) evidence = join_tokens(tokens, m->start, m->length);
  set_with_evidence(fv, trace, id, m.has_value(), std::move(evidence));
}

std::string format_similarity(double value) {
  std::ostringstream os;
  os << "similarity=" << value;
  return os.str();
}

}  // namespace

std::string_view feature_name(FeatureId id) {
  return kFeatureNames[static_cast<std::size_t>(id)];
}

std::optional<FeatureId> feature_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kFeatureCount; ++i) {
    if (kFeatureNames[i] == name) return static_cast<FeatureId>(i);
  }
  return std::nullopt;
}

std::uint16_t FeatureVector::bits() const {
  std::uint16_t b = 0;
  for (std::size_t i = 0; i < kFeatureCount; ++i) {
    if (values[i]) b = static_cast<std::uint16_t>(b | (1u << i));
  }
  return b;
}

FeatureVector FeatureVector::from_bits(std::uint16_t bits) {
  FeatureVector fv;
  for (std::size_t i = 0; i < kFeatureCount; ++i) {
    fv.values[i] = (bits >> i) & 1u;
  }
  return fv;
}

std::vector<std::string> strip_leading_connectives(std::vector<std::string> tokens) {
  if (!tokens.empty() && (tokens[0] == "or" || tokens[0] == "and" || tokens[0] == "but" ||
                          tokens[0] == "so")) {
    tokens.erase(tokens.begin());
  }
  return tokens;
}

bool is_polar(std::string_view question, const Lexicon& lexicon) {
  return polar_tokens(strip_leading_connectives(tokenize(question)), lexicon);
}

bool is_wh(std::string_view question, const Lexicon& lexicon) {
  return wh_tokens(strip_leading_connectives(tokenize(question)), lexicon) != nullptr;
}

bool is_statement(std::string_view q2) { return !ends_with_question_mark(q2); }

FeatureVector extract_features(std::string_view q1, std::string_view q2,
                               const Lexicon& lexicon, const FeatureOptions& opts,
                               FeatureTrace* trace) {
  FeatureVector fv;

  const std::vector<std::string> q1_tokens = tokenize(q1);
  const std::vector<std::string> q2_tokens = tokenize(q2);
  const std::vector<std::string> q1_stripped = strip_leading_connectives(q1_tokens);
  const std::vector<std::string> q2_stripped = strip_leading_connectives(q2_tokens);

  set_marker_feature(fv, trace, FeatureId::PronQ2, q2_tokens, lexicon.pronouns(),
                     MatchPolicy::Anywhere);
  set_marker_feature(fv, trace, FeatureId::EllipsisQ2, q2_tokens, lexicon.ellipsis(),
                     MatchPolicy::Anywhere);

  bool polar1 = polar_tokens(q1_stripped, lexicon);
  set_with_evidence(fv, trace, FeatureId::PolarQ1, polar1,
                    polar1 ? std::optional<std::string>(q1_stripped[0]) : std::nullopt);
  bool polar2 = polar_tokens(q2_stripped, lexicon);
  set_with_evidence(fv, trace, FeatureId::PolarQ2, polar2,
                    polar2 ? std::optional<std::string>(q2_stripped[0]) : std::nullopt);

  const std::string* wh1 = wh_tokens(q1_stripped, lexicon);
  set_with_evidence(fv, trace, FeatureId::WhQ1, wh1 != nullptr,
                    wh1 ? std::optional<std::string>(*wh1) : std::nullopt);
  const std::string* wh2 = wh_tokens(q2_stripped, lexicon);
  set_with_evidence(fv, trace, FeatureId::WhQ2, wh2 != nullptr,
                    wh2 ? std::optional<std::string>(*wh2) : std::nullopt);

  bool stmt = is_statement(q2);
  std::optional<std::string> stmt_ev;
  if (stmt) stmt_ev = trim(q2).empty() ? "empty q2" : "no terminal '?'";
  set_with_evidence(fv, trace, FeatureId::StmtQ2, stmt, std::move(stmt_ev));

  set_marker_feature(fv, trace, FeatureId::CondMarker, q2_tokens, lexicon.conditional(),
                     MatchPolicy::InitialOnly);
  bool or_marker = !q2_tokens.empty() && q2_tokens[0] == "or";
  set_with_evidence(fv, trace, FeatureId::OrMarker, or_marker,
                    or_marker ? std::optional<std::string>("or") : std::nullopt);
  set_marker_feature(fv, trace, FeatureId::ElabMarker, q2_tokens, lexicon.elaborative(),
                     MatchPolicy::InitialOnly);
  set_marker_feature(fv, trace, FeatureId::SepMarker, q2_tokens, lexicon.separable(),
                     MatchPolicy::InitialOnly);

  bool sem = false;
  std::optional<std::string> sem_ev;
  if (opts.sem_sim_override) {
    sem = *opts.sem_sim_override;
    sem_ev = "forced";
  } else if (opts.table) {
    auto sim = semantic_similarity(q1, q2, *opts.table);
    if (sim) {
      sem = *sim >= opts.sim_threshold;
      sem_ev = format_similarity(*sim);
    }
  }
  set_with_evidence(fv, trace, FeatureId::SemSim, sem, std::move(sem_ev));

  return fv;
}

}  // namespace msqkit
