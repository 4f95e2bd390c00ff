// Command-line front end: extract | classify | features | evaluate | agreement.
// Exit codes: 0 success, 1 usage error, 2 data error, 3 invariant violation.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "msqkit/classifier.hpp"
#include "msqkit/corpus.hpp"
#include "msqkit/embeddings.hpp"
#include "msqkit/errors.hpp"
#include "msqkit/eval.hpp"
#include "msqkit/io.hpp"
#include "msqkit/lexicon.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitInvariant = 3;

struct Options {
  std::string input = "-";
  std::string output = "-";
  std::string vectors;
  double threshold = 0.8;
  std::string lexicon_path;
  std::string masks_path;
  bool no_langfilter = false;
  double lang_threshold = 0.0;
  bool no_overlap = false;
  bool allow_overlap = false;
  bool trace = false;
  bool json = false;
  int workers = 1;
  bool xml = false;
  std::string topic;
  bool strip_markup = false;
  int min_len = 5;
  int max_len = 300;
  std::string pred_path;
  std::string gold_path;
  std::string ann1_path;
  std::string ann2_path;
  std::string matrix_csv;
};

std::ifstream open_input_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw msqkit::DataError("cannot open input file: " + path);
  return in;
}

std::istream& input_stream(const std::string& path, std::optional<std::ifstream>& holder) {
  if (path == "-") return std::cin;
  holder.emplace(open_input_file(path));
  return *holder;
}

std::ostream& output_stream(const std::string& path, std::optional<std::ofstream>& holder) {
  if (path == "-") return std::cout;
  holder.emplace(path, std::ios::binary);
  if (!*holder) throw msqkit::DataError("cannot open output file: " + path);
  return *holder;
}

msqkit::Lexicon load_lexicon(const Options& opt) {
  if (opt.lexicon_path.empty()) return msqkit::Lexicon::defaults();
  std::ifstream in = open_input_file(opt.lexicon_path);
  return msqkit::Lexicon::load(in);
}

msqkit::MaskTable load_masks(const Options& opt) {
  msqkit::MaskTable table = msqkit::MaskTable::defaults();
  if (!opt.masks_path.empty()) {
    std::ifstream in = open_input_file(opt.masks_path);
    table = msqkit::MaskTable::load(in);
  }
  auto conflicts = msqkit::verify_exclusivity(table);
  if (!conflicts.empty()) {
    if (!opt.allow_overlap) {
      throw msqkit::InvariantError(
          "mask table is not mutually exclusive (" + std::to_string(conflicts.size()) +
          " conflicting vectors, first: " +
          std::string(msqkit::label_name(conflicts.front().first)) + "/" +
          std::string(msqkit::label_name(conflicts.front().second)) +
          "); pass --allow-overlap to accept first-match semantics");
    }
    std::cerr << "warning: mask table not mutually exclusive; using first match\n";
  }
  return table;
}

std::optional<msqkit::EmbeddingTable> load_vectors(const Options& opt) {
  if (opt.vectors.empty()) {
    std::cerr << "warning: no --vectors supplied; SEM_SIM will always be false\n";
    return std::nullopt;
  }
  std::ifstream in = open_input_file(opt.vectors);
  msqkit::EmbeddingTable table = msqkit::EmbeddingTable::load_text(in);
  if (table.skipped_lines() > 0) {
    std::cerr << "warning: skipped " << table.skipped_lines() << " malformed vector lines\n";
  }
  return table;
}

// Reads records one batch at a time, maps them with `workers` threads and
// writes results in input order.
template <typename Record, typename Result, typename NextFn, typename MapFn, typename WriteFn>
void run_ordered(NextFn next, MapFn map, WriteFn write, int workers) {
  const std::size_t batch_size = workers <= 1 ? 1 : 512;
  std::vector<Record> batch;
  for (;;) {
    batch.clear();
    while (batch.size() < batch_size) {
      auto rec = next();
      if (!rec) break;
      batch.push_back(std::move(*rec));
    }
    if (batch.empty()) return;
    if (workers <= 1) {
      for (auto& rec : batch) write(map(rec));
    } else {
      std::vector<Result> results(batch.size());
      const int n = std::min<int>(workers, static_cast<int>(batch.size()));
      std::vector<std::thread> threads;
      threads.reserve(static_cast<std::size_t>(n));
      for (int t = 0; t < n; ++t) {
        threads.emplace_back([&, t] {
          for (std::size_t i = static_cast<std::size_t>(t); i < batch.size();
               i += static_cast<std::size_t>(n)) {
            results[i] = map(batch[i]);
          }
        });
      }
      for (auto& th : threads) th.join();
      for (auto& res : results) write(std::move(res));
    }
  }
}

int cmd_extract(const Options& opt) {
  std::optional<std::ifstream> in_file;
  std::istream& in = input_stream(opt.input, in_file);
  std::optional<std::ofstream> out_file;
  std::ostream& out = output_stream(opt.output, out_file);

  std::unique_ptr<msqkit::PostSource> source;
  if (opt.xml || (opt.input != "-" && opt.input.size() > 4 &&
                  opt.input.substr(opt.input.size() - 4) == ".xml")) {
    source = std::make_unique<msqkit::PostsXmlReader>(in, opt.topic);
  } else {
    source = std::make_unique<msqkit::JsonlPostReader>(in);
  }

  msqkit::ExtractionConfig config;
  config.min_len = opt.min_len;
  config.max_len = opt.max_len;
  config.language_filter = !opt.no_langfilter;
  config.language_threshold = opt.lang_threshold;
  config.markup_policy =
      opt.strip_markup ? msqkit::MarkupPolicy::Strip : msqkit::MarkupPolicy::Drop;
  config.overlapping_pairs = !opt.no_overlap;

  msqkit::ExtractionStats stats = msqkit::run_pipeline(
      *source, config,
      [&](const msqkit::QuestionPair& pair) {
        msqkit::write_pair_jsonl(out, {pair, std::nullopt});
      },
      opt.workers);
  msqkit::write_stats_json(std::cerr, stats);
  out.flush();
  if (!out) throw msqkit::DataError("failed writing output");
  return kExitOk;
}

int cmd_classify(const Options& opt) {
  std::optional<std::ifstream> in_file;
  std::istream& in = input_stream(opt.input, in_file);
  std::optional<std::ofstream> out_file;
  std::ostream& out = output_stream(opt.output, out_file);

  const msqkit::Lexicon lexicon = load_lexicon(opt);
  const msqkit::MaskTable masks = load_masks(opt);
  const std::optional<msqkit::EmbeddingTable> table = load_vectors(opt);

  msqkit::FeatureOptions fopts;
  fopts.table = table ? &*table : nullptr;
  fopts.sim_threshold = opt.threshold;

  msqkit::JsonlPairReader reader(in);
  run_ordered<msqkit::PairRecord, msqkit::LabeledRecord>(
      [&] { return reader.next(); },
      [&](const msqkit::PairRecord& rec) {
        msqkit::LabeledResult res = msqkit::classify_pair(
            rec.pair.q1, rec.pair.q2, lexicon, masks, fopts, opt.allow_overlap);
        msqkit::LabeledRecord labeled;
        labeled.record = rec;
        labeled.label = res.label;
        labeled.features = res.features;
        if (opt.trace) labeled.trace = res.trace;
        return labeled;
      },
      [&](msqkit::LabeledRecord&& rec) { msqkit::write_labeled_jsonl(out, rec); },
      opt.workers);

  if (reader.malformed() > 0) {
    std::cerr << "skipped " << reader.malformed() << " malformed records\n";
  }
  out.flush();
  if (!out) throw msqkit::DataError("failed writing output");
  return kExitOk;
}

int cmd_features(const Options& opt) {
  std::optional<std::ifstream> in_file;
  std::istream& in = input_stream(opt.input, in_file);
  std::optional<std::ofstream> out_file;
  std::ostream& out = output_stream(opt.output, out_file);

  const msqkit::Lexicon lexicon = load_lexicon(opt);
  const std::optional<msqkit::EmbeddingTable> table = load_vectors(opt);

  msqkit::FeatureOptions fopts;
  fopts.table = table ? &*table : nullptr;
  fopts.sim_threshold = opt.threshold;

  struct Shown {
    msqkit::PairRecord rec;
    msqkit::FeatureVector fv;
    msqkit::FeatureTrace trace;
  };
  msqkit::JsonlPairReader reader(in);
  run_ordered<msqkit::PairRecord, Shown>(
      [&] { return reader.next(); },
      [&](const msqkit::PairRecord& rec) {
        Shown shown;
        shown.rec = rec;
        shown.fv = msqkit::extract_features(rec.pair.q1, rec.pair.q2, lexicon, fopts,
                                            &shown.trace);
        return shown;
      },
      [&](Shown&& s) {
        if (opt.json) {
          msqkit::write_features_jsonl(out, s.rec, s.fv, s.trace);
        } else {
          msqkit::write_features_text(out, s.rec, s.fv, s.trace);
        }
      },
      opt.workers);

  if (reader.malformed() > 0) {
    std::cerr << "skipped " << reader.malformed() << " malformed records\n";
  }
  out.flush();
  if (!out) throw msqkit::DataError("failed writing output");
  return kExitOk;
}

std::map<std::string, msqkit::MsqLabel> load_predictions(const std::string& path) {
  std::ifstream in = open_input_file(path);
  if (path.size() > 6 && path.substr(path.size() - 6) == ".jsonl") {
    return msqkit::load_label_jsonl(in);
  }
  return msqkit::load_label_tsv(in, msqkit::LabelFileKind::Prediction);
}

int cmd_evaluate(const Options& opt) {
  auto preds = load_predictions(opt.pred_path);
  std::ifstream gold_in = open_input_file(opt.gold_path);
  auto gold = msqkit::load_label_tsv(gold_in, msqkit::LabelFileKind::Gold);

  auto [matrix, metrics] = msqkit::score(preds, gold);

  std::optional<std::ofstream> out_file;
  std::ostream& out = output_stream(opt.output, out_file);
  msqkit::write_metrics_json(out, metrics, matrix);
  if (!opt.matrix_csv.empty()) {
    std::ofstream csv(opt.matrix_csv, std::ios::binary);
    if (!csv) throw msqkit::DataError("cannot open output file: " + opt.matrix_csv);
    msqkit::write_confusion_csv(csv, matrix);
  }
  return kExitOk;
}

int cmd_agreement(const Options& opt) {
  std::ifstream in1 = open_input_file(opt.ann1_path);
  std::ifstream in2 = open_input_file(opt.ann2_path);
  auto ann1 = msqkit::load_label_tsv(in1, msqkit::LabelFileKind::Annotation);
  auto ann2 = msqkit::load_label_tsv(in2, msqkit::LabelFileKind::Annotation);

  msqkit::AgreementReport report = msqkit::agreement(ann1, ann2);

  std::optional<std::ofstream> out_file;
  std::ostream& out = output_stream(opt.output, out_file);
  msqkit::write_agreement_json(out, report);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Question-pair extraction and discourse-relation classification toolkit"};
  app.require_subcommand(1);
  Options opt;

  auto add_io = [&](CLI::App* cmd) {
    cmd->add_option("--input", opt.input, "Input path, '-' for stdin");
    cmd->add_option("--output", opt.output, "Output path, '-' for stdout");
  };
  auto add_vectors = [&](CLI::App* cmd) {
    cmd->add_option("--vectors", opt.vectors, "Word vector file (text word2vec/GloVe)")
        ->envname("MSQKIT_VECTORS");
    cmd->add_option("--threshold", opt.threshold, "Similarity threshold for SEM_SIM")
        ->check(CLI::Range(0.0, 1.0));
  };
  auto add_workers = [&](CLI::App* cmd) {
    cmd->add_option("--workers", opt.workers, "Worker threads (order-preserving)")
        ->check(CLI::PositiveNumber);
  };

  CLI::App* extract = app.add_subcommand("extract", "Extract question pairs from posts");
  add_io(extract);
  add_workers(extract);
  extract->add_flag("--xml", opt.xml, "Input is a Stack Exchange Posts.xml dump");
  extract->add_option("--topic", opt.topic, "Topic tag for XML input records");
  extract->add_option("--min-len", opt.min_len, "Minimum question length (code points)");
  extract->add_option("--max-len", opt.max_len, "Maximum question length (code points)");
  extract->add_flag("--no-langfilter", opt.no_langfilter, "Disable the language filter");
  extract->add_option("--lang-threshold", opt.lang_threshold,
                      "Confidence needed for a non-English drop")
      ->check(CLI::Range(0.0, 1.0));
  extract->add_flag("--strip-markup", opt.strip_markup,
                    "Strip markup tags instead of dropping the post");
  extract->add_flag("--no-overlap", opt.no_overlap,
                    "Do not reuse a question in two pairs");

  CLI::App* classify = app.add_subcommand("classify", "Label question pairs");
  add_io(classify);
  add_vectors(classify);
  add_workers(classify);
  classify->add_option("--lexicon", opt.lexicon_path, "Marker lexicon override file");
  classify->add_option("--masks", opt.masks_path, "Mask table override file");
  classify->add_flag("--allow-overlap", opt.allow_overlap,
                     "Accept a non-exclusive mask table (first match wins)");
  classify->add_flag("--trace", opt.trace, "Include per-feature evidence in output");

  CLI::App* features = app.add_subcommand("features", "Show feature values with evidence");
  add_io(features);
  add_vectors(features);
  add_workers(features);
  features->add_option("--lexicon", opt.lexicon_path, "Marker lexicon override file");
  features->add_flag("--json", opt.json, "JSONL output instead of text");

  CLI::App* evaluate = app.add_subcommand("evaluate", "Score predictions against gold");
  evaluate->add_option("--pred", opt.pred_path, "Predictions (.tsv or .jsonl)")->required();
  evaluate->add_option("--gold", opt.gold_path, "Gold labels (.tsv)")->required();
  evaluate->add_option("--output", opt.output, "Metrics JSON path, '-' for stdout");
  evaluate->add_option("--matrix-csv", opt.matrix_csv, "Also write the confusion matrix CSV");

  CLI::App* agreement = app.add_subcommand("agreement", "Inter-annotator agreement");
  agreement->add_option("--ann1", opt.ann1_path, "First annotator (.tsv)")->required();
  agreement->add_option("--ann2", opt.ann2_path, "Second annotator (.tsv)")->required();
  agreement->add_option("--output", opt.output, "Report JSON path, '-' for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (extract->parsed()) return cmd_extract(opt);
    if (classify->parsed()) return cmd_classify(opt);
    if (features->parsed()) return cmd_features(opt);
    if (evaluate->parsed()) return cmd_evaluate(opt);
    if (agreement->parsed()) return cmd_agreement(opt);
  } catch (const msqkit::InvariantError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const msqkit::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitUsage;
}
