#include "msqkit/io.hpp"

#include <cctype>
#include <istream>
#include <ostream>

#include <json.hpp>

#include "msqkit/errors.hpp"
#include "msqkit/text.hpp"

namespace msqkit {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string dump(const ordered_json& j) {
  return j.dump(-1, ' ', false, nlohmann::detail::error_handler_t::replace);
}

bool get_string(const ordered_json& j, const char* key, std::string& out) {
  auto it = j.find(key);
  if (it == j.end() || !it->is_string()) return false;
  out = it->get<std::string>();
  return true;
}

std::string xml_unescape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] != '&') {
      out.push_back(s[i++]);
      continue;
    }
    std::size_t semi = s.find(';', i);
    if (semi == std::string_view::npos || semi - i > 12) {
      out.push_back(s[i++]);
      continue;
    }
    std::string_view ent = s.substr(i + 1, semi - i - 1);
    if (ent == "lt") out.push_back('<');
    else if (ent == "gt") out.push_back('>');
    else if (ent == "amp") out.push_back('&');
    else if (ent == "quot") out.push_back('"');
    else if (ent == "apos") out.push_back('\'');
    else if (!ent.empty() && ent[0] == '#') {
      unsigned long cp = 0;
      bool ok = false;
      try {
        if (ent.size() > 1 && (ent[1] == 'x' || ent[1] == 'X')) {
          cp = std::stoul(std::string(ent.substr(2)), nullptr, 16);
        } else {
          cp = std::stoul(std::string(ent.substr(1)), nullptr, 10);
        }
        ok = cp > 0 && cp <= 0x10FFFF;
      } catch (...) {
        ok = false;
      }
      if (!ok) {
        out.append(s.substr(i, semi - i + 1));
      } else if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
      } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
      } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
      } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
      }
    } else {
      out.append(s.substr(i, semi - i + 1));
    }
    i = semi + 1;
  }
  return out;
}

// Attribute scan over one <row .../> element.
std::optional<std::string> xml_attribute(std::string_view line, std::string_view name) {
  std::size_t pos = 0;
  while ((pos = line.find(name, pos)) != std::string_view::npos) {
    // must be preceded by whitespace and followed by ="
    bool starts_ok = pos > 0 && std::isspace(static_cast<unsigned char>(line[pos - 1]));
    std::size_t after = pos + name.size();
    if (starts_ok && after + 1 < line.size() && line[after] == '=' && line[after + 1] == '"') {
      std::size_t end = line.find('"', after + 2);
      if (end == std::string_view::npos) return std::nullopt;
      return xml_unescape(line.substr(after + 2, end - after - 2));
    }
    pos = after;
  }
  return std::nullopt;
}

ordered_json labels_array() {
  ordered_json arr = ordered_json::array();
  for (std::size_t i = 0; i < kLabelCount; ++i) {
    arr.push_back(std::string(label_name(static_cast<MsqLabel>(i))));
  }
  return arr;
}

ordered_json matrix_json(const ConfusionMatrix& matrix) {
  ordered_json rows = ordered_json::array();
  for (const auto& row : matrix.counts) {
    ordered_json r = ordered_json::array();
    for (std::uint64_t c : row) r.push_back(c);
    rows.push_back(std::move(r));
  }
  return rows;
}

MsqLabel parse_label(std::string_view raw, LabelFileKind kind, const std::string& where) {
  std::string name = to_lower(std::string(trim(raw)));
  if (kind == LabelFileKind::Annotation && (name == "other" || name == "phatic")) {
    return MsqLabel::Unknown;
  }
  auto label = label_from_name(name);
  if (!label) throw DataError(where + ": unknown label '" + name + "'");
  if (kind == LabelFileKind::Gold && *label == MsqLabel::Unknown) {
    throw DataError(where + ": gold files may not contain 'unknown'");
  }
  return *label;
}

}  // namespace

std::optional<RawPost> JsonlPostReader::next() {
  std::string line;
  while (std::getline(in_, line)) {
    if (trim(line).empty()) continue;
    ordered_json j = ordered_json::parse(line, nullptr, false);
    RawPost post;
    if (j.is_discarded() || !j.is_object() || !get_string(j, "id", post.id) ||
        !get_string(j, "body", post.body) || post.id.empty()) {
      ++malformed_;
      continue;
    }
    get_string(j, "topic", post.topic);
    return post;
  }
  return std::nullopt;
}

std::optional<RawPost> PostsXmlReader::next() {
  std::string line;
  while (std::getline(in_, line)) {
    std::size_t row = line.find("<row");
    if (row == std::string::npos) continue;  // header/footer lines
    std::string_view element = std::string_view(line).substr(row);
    auto id = xml_attribute(element, "Id");
    auto body = xml_attribute(element, "Body");
    if (!id || id->empty() || !body) {
      ++malformed_;
      continue;
    }
    return RawPost{*id, topic_, *body};
  }
  return std::nullopt;
}

std::optional<PairRecord> JsonlPairReader::next() {
  std::string line;
  while (std::getline(in_, line)) {
    if (trim(line).empty()) continue;
    ordered_json j = ordered_json::parse(line, nullptr, false);
    PairRecord rec;
    if (j.is_discarded() || !j.is_object() || !get_string(j, "q1", rec.pair.q1) ||
        !get_string(j, "q2", rec.pair.q2)) {
      ++malformed_;
      continue;
    }
    get_string(j, "source_id", rec.pair.source_id);
    get_string(j, "topic", rec.pair.topic);
    std::string id;
    if (get_string(j, "id", id)) rec.id = std::move(id);
    return rec;
  }
  return std::nullopt;
}

namespace {

ordered_json pair_json(const PairRecord& record) {
  ordered_json j = ordered_json::object();
  if (record.id) j["id"] = *record.id;
  j["source_id"] = record.pair.source_id;
  j["topic"] = record.pair.topic;
  j["q1"] = record.pair.q1;
  j["q2"] = record.pair.q2;
  return j;
}

}  // namespace

void write_pair_jsonl(std::ostream& out, const PairRecord& record) {
  out << dump(pair_json(record)) << '\n';
}

void write_labeled_jsonl(std::ostream& out, const LabeledRecord& record) {
  ordered_json j = pair_json(record.record);
  j["label"] = std::string(label_name(record.label));
  ordered_json features = ordered_json::object();
  for (std::size_t i = 0; i < kFeatureCount; ++i) {
    features[std::string(feature_name(static_cast<FeatureId>(i)))] =
        record.features.values[i];
  }
  j["features"] = std::move(features);
  if (record.trace) {
    ordered_json trace = ordered_json::object();
    for (std::size_t i = 0; i < kFeatureCount; ++i) {
      const auto& ev = record.trace->evidence[i];
      trace[std::string(feature_name(static_cast<FeatureId>(i)))] =
          ev ? ordered_json(*ev) : ordered_json(nullptr);
    }
    j["trace"] = std::move(trace);
  }
  out << dump(j) << '\n';
}

void write_features_jsonl(std::ostream& out, const PairRecord& record,
                          const FeatureVector& fv, const FeatureTrace& trace) {
  ordered_json j = pair_json(record);
  ordered_json arr = ordered_json::array();
  for (std::size_t i = 0; i < kFeatureCount; ++i) {
    ordered_json f = ordered_json::object();
    f["feature"] = std::string(feature_name(static_cast<FeatureId>(i)));
    f["value"] = fv.values[i];
    f["evidence"] = trace.evidence[i] ? ordered_json(*trace.evidence[i]) : ordered_json(nullptr);
    arr.push_back(std::move(f));
  }
  j["features"] = std::move(arr);
  out << dump(j) << '\n';
}

void write_features_text(std::ostream& out, const PairRecord& record,
                         const FeatureVector& fv, const FeatureTrace& trace) {
  if (record.id) out << "# " << *record.id << '\n';
  out << "q1: " << record.pair.q1 << '\n';
  out << "q2: " << record.pair.q2 << '\n';
  for (std::size_t i = 0; i < kFeatureCount; ++i) {
    std::string_view name = feature_name(static_cast<FeatureId>(i));
    out << "  " << name;
    for (std::size_t pad = name.size(); pad < 12; ++pad) out << ' ';
    out << (fv.values[i] ? " = true " : " = false");
    if (trace.evidence[i]) out << "  [" << *trace.evidence[i] << ']';
    out << '\n';
  }
  out << '\n';
}

std::map<std::string, MsqLabel> load_label_tsv(std::istream& in, LabelFileKind kind) {
  std::map<std::string, MsqLabel> out;
  std::string line;
  std::size_t lineno = 0;
  bool saw_header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    const std::string where = "label file line " + std::to_string(lineno);
    if (!saw_header) {
      if (line != "id\tlabel") {
        throw DataError(where + ": expected header 'id<TAB>label'");
      }
      saw_header = true;
      continue;
    }
    auto tab = line.find('\t');
    if (tab == std::string::npos) throw DataError(where + ": expected 'id<TAB>label'");
    std::string id(trim(line.substr(0, tab)));
    if (id.empty()) throw DataError(where + ": empty id");
    if (out.contains(id)) throw DataError(where + ": duplicate id '" + id + "'");
    out.emplace(std::move(id), parse_label(line.substr(tab + 1), kind, where));
  }
  if (!saw_header) throw DataError("label file: missing 'id<TAB>label' header");
  return out;
}

std::map<std::string, MsqLabel> load_label_jsonl(std::istream& in) {
  std::map<std::string, MsqLabel> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    const std::string where = "prediction line " + std::to_string(lineno);
    ordered_json j = ordered_json::parse(line, nullptr, false);
    std::string id, label;
    if (j.is_discarded() || !j.is_object() || !get_string(j, "id", id) ||
        !get_string(j, "label", label)) {
      throw DataError(where + ": expected an object with 'id' and 'label'");
    }
    if (out.contains(id)) throw DataError(where + ": duplicate id '" + id + "'");
    out.emplace(std::move(id), parse_label(label, LabelFileKind::Prediction, where));
  }
  return out;
}

void write_stats_json(std::ostream& out, const ExtractionStats& stats) {
  ordered_json j = ordered_json::object();
  j["posts_seen"] = stats.posts_seen;
  j["posts_dropped_markup"] = stats.posts_dropped_markup;
  j["posts_dropped_tex"] = stats.posts_dropped_tex;
  j["pairs_candidate"] = stats.pairs_candidate;
  j["pairs_dropped_length"] = stats.pairs_dropped_length;
  j["pairs_dropped_language"] = stats.pairs_dropped_language;
  j["pairs_kept"] = stats.pairs_kept;
  j["records_malformed"] = stats.records_malformed;
  out << dump(j) << '\n';
}

void write_metrics_json(std::ostream& out, const Metrics& metrics,
                        const ConfusionMatrix& matrix) {
  ordered_json j = ordered_json::object();
  j["precision"] = metrics.precision;
  j["recall"] = metrics.recall;
  j["undefined_precision"] = metrics.undefined_precision;
  j["scored"] = metrics.scored;
  j["unknown_predictions"] = metrics.unknown_predictions;
  ordered_json per_class = ordered_json::object();
  for (std::size_t c = 0; c < kLabelCount - 1; ++c) {
    const ClassMetrics& cm = metrics.per_class[c];
    ordered_json cj = ordered_json::object();
    cj["precision"] = cm.precision;
    cj["recall"] = cm.recall;
    cj["undefined_precision"] = cm.undefined_precision;
    cj["gold"] = cm.gold_count;
    cj["predicted"] = cm.predicted_count;
    cj["correct"] = cm.correct;
    per_class[std::string(label_name(static_cast<MsqLabel>(c)))] = std::move(cj);
  }
  j["per_class"] = std::move(per_class);
  j["labels"] = labels_array();
  j["matrix"] = matrix_json(matrix);
  out << dump(j) << '\n';
}

void write_confusion_csv(std::ostream& out, const ConfusionMatrix& matrix) {
  out << "gold\\pred";
  for (std::size_t i = 0; i < kLabelCount; ++i) {
    out << ',' << label_name(static_cast<MsqLabel>(i));
  }
  out << '\n';
  for (std::size_t g = 0; g < kLabelCount; ++g) {
    out << label_name(static_cast<MsqLabel>(g));
    for (std::size_t p = 0; p < kLabelCount; ++p) out << ',' << matrix.counts[g][p];
    out << '\n';
  }
}

void write_agreement_json(std::ostream& out, const AgreementReport& report) {
  ordered_json j = ordered_json::object();
  j["kappa"] = report.kappa;
  j["observed_agreement"] = report.observed;
  j["expected_agreement"] = report.expected;
  j["total"] = report.matrix.total();
  j["agreed_count"] = report.agreed_ids.size();
  j["agreed_ids"] = report.agreed_ids;
  j["labels"] = labels_array();
  j["matrix"] = matrix_json(report.matrix);
  out << dump(j) << '\n';
}

}  // namespace msqkit
