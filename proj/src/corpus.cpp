#include "corpus.hpp"

#include <fstream>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "error.hpp"
#include "utf8.hpp"

namespace stump {

using nlohmann::json;

bool is_valid_class_code(int code) { return code >= 1 && code <= kNumClasses; }

SentimentClass class_from_code(int code) {
  if (!is_valid_class_code(code)) {
    throw std::invalid_argument("sentiment class code out of range 1..8: " +
                                std::to_string(code));
  }
  return static_cast<SentimentClass>(code);
}

const char* class_name(SentimentClass c) {
  switch (c) {
    case SentimentClass::SupportP1: return "Support P1";
    case SentimentClass::OpposeP1: return "Oppose P1";
    case SentimentClass::SupportP2: return "Support P2";
    case SentimentClass::OpposeP2: return "Oppose P2";
    case SentimentClass::SupportP3: return "Support P3";
    case SentimentClass::OpposeP3: return "Oppose P3";
    case SentimentClass::NonRelevant: return "Non Relevant";
    case SentimentClass::None: return "None";
  }
  return "?";
}

CorpusFormat corpus_format_from_string(const std::string& s) {
  if (s == "csv") return CorpusFormat::kCsv;
  if (s == "jsonl") return CorpusFormat::kJsonl;
  throw std::invalid_argument("unknown corpus format \"" + s +
                              "\" (expected csv or jsonl)");
}

Corpus::Corpus(std::vector<LabeledTweet> items) : items_(std::move(items)) {}

void Corpus::add(LabeledTweet tweet) { items_.push_back(std::move(tweet)); }

namespace {

[[noreturn]] void record_error(const std::string& path, std::size_t line,
                               const std::string& what) {
  throw ParseError(path + ":" + std::to_string(line) + ": " + what);
}

SentimentClass parse_label_field(const std::string& path, std::size_t line,
                                 long long code) {
  if (!is_valid_class_code(static_cast<int>(code))) {
    record_error(path, line,
                 "label " + std::to_string(code) + " outside 1..8");
  }
  return static_cast<SentimentClass>(code);
}

Corpus load_jsonl(const std::string& path, std::istream& in) {
  Corpus corpus;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::exception& e) {
      record_error(path, lineno, std::string("bad JSON: ") + e.what());
    }
    if (!obj.is_object() || !obj.contains("id") || !obj.contains("text") ||
        !obj.contains("label")) {
      record_error(path, lineno, "record needs id, text and label fields");
    }
    if (!obj["id"].is_string() || !obj["text"].is_string() ||
        !obj["label"].is_number_integer()) {
      record_error(path, lineno, "wrong field type (id/text: string, label: int)");
    }
    LabeledTweet t;
    t.id = obj["id"].get<std::string>();
    t.text = obj["text"].get<std::string>();
    t.label = parse_label_field(path, lineno, obj["label"].get<long long>());
    corpus.add(std::move(t));
  }
  return corpus;
}

// RFC-4180: fields separated by commas, quoted fields may contain commas,
// doubled quotes and line breaks. Returns false at end of input.
bool read_csv_record(std::istream& in, std::vector<std::string>& fields,
                     std::size_t& lineno) {
  fields.clear();
  int c = in.get();
  if (c == EOF) return false;
  std::string field;
  bool quoted = false;
  bool any = false;
  while (true) {
    if (quoted) {
      if (c == EOF) {
        throw ParseError("unterminated quoted field at line " +
                         std::to_string(lineno));
      }
      if (c == '"') {
        const int next = in.get();
        if (next == '"') {
          field.push_back('"');
        } else {
          quoted = false;
          c = next;
          continue;
        }
      } else {
        if (c == '\n') ++lineno;
        field.push_back(static_cast<char>(c));
      }
    } else {
      if (c == EOF || c == '\n') {
        if (c == '\n') ++lineno;
        if (!field.empty() && field.back() == '\r') field.pop_back();
        fields.push_back(std::move(field));
        any = true;
        break;
      }
      if (c == ',') {
        fields.push_back(std::move(field));
        field.clear();
      } else if (c == '"' && field.empty()) {
        quoted = true;
      } else {
        field.push_back(static_cast<char>(c));
      }
    }
    c = in.get();
  }
  return any;
}

Corpus load_csv(const std::string& path, std::istream& in) {
  std::vector<std::string> fields;
  std::size_t lineno = 1;
  if (!read_csv_record(in, fields, lineno)) return Corpus{};
  if (fields.size() != 3 || fields[0] != "id" || fields[1] != "text" ||
      fields[2] != "label") {
    record_error(path, 1, "expected header id,text,label");
  }
  Corpus corpus;
  while (true) {
    const std::size_t record_line = lineno;
    if (!read_csv_record(in, fields, lineno)) break;
    if (fields.size() == 1 && fields[0].empty()) continue;  // blank line
    if (fields.size() != 3) {
      record_error(path, record_line,
                   "expected 3 fields, got " + std::to_string(fields.size()));
    }
    if (!utf8::is_valid(fields[0]) || !utf8::is_valid(fields[1])) {
      record_error(path, record_line, "invalid UTF-8");
    }
    long long code = 0;
    try {
      std::size_t pos = 0;
      code = std::stoll(fields[2], &pos);
      if (pos != fields[2].size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      record_error(path, record_line, "label is not an integer: " + fields[2]);
    }
    LabeledTweet t;
    t.id = fields[0];
    t.text = fields[1];
    t.label = parse_label_field(path, record_line, code);
    corpus.add(std::move(t));
  }
  return corpus;
}

std::string csv_escape(const std::string& field) {
  const bool needs_quotes =
      field.find_first_of(",\"\r\n") != std::string::npos;
  if (!needs_quotes) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += "\"\"";
    else out.push_back(ch);
  }
  out += "\"";
  return out;
}

void check_ids_unique(const std::string& path, const Corpus& corpus) {
  std::unordered_set<std::string> seen;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (!seen.insert(corpus[i].id).second) {
      throw ParseError(path + ": duplicate tweet id \"" + corpus[i].id + "\"");
    }
  }
}

}  // namespace

Corpus load_corpus(const std::string& path, CorpusFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  Corpus corpus = format == CorpusFormat::kJsonl ? load_jsonl(path, in)
                                                 : load_csv(path, in);
  check_ids_unique(path, corpus);
  return corpus;
}

void save_corpus(const Corpus& corpus, const std::string& path,
                 CorpusFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  if (format == CorpusFormat::kJsonl) {
    for (const auto& t : corpus.items()) {
      json obj;
      obj["id"] = t.id;
      obj["text"] = t.text;
      obj["label"] = class_code(t.label);
      out << obj.dump() << '\n';
    }
  } else {
    out << "id,text,label\n";
    for (const auto& t : corpus.items()) {
      out << csv_escape(t.id) << ',' << csv_escape(t.text) << ','
          << class_code(t.label) << '\n';
    }
  }
  if (!out) throw IoError("write failed for " + path);
}

SentimentClass resolve_label(std::span<const StanceAssertion> assertions,
                             bool relevant) {
  if (!relevant) return SentimentClass::NonRelevant;
  int best_support = 0;
  int best_oppose = 0;
  for (const auto& a : assertions) {
    const int p = static_cast<int>(a.party);
    if (a.stance == Stance::Support) {
      if (best_support == 0 || p < best_support) best_support = p;
    } else {
      if (best_oppose == 0 || p < best_oppose) best_oppose = p;
    }
  }
  if (best_support != 0) {
    return static_cast<SentimentClass>(2 * best_support - 1);
  }
  if (best_oppose != 0) {
    return static_cast<SentimentClass>(2 * best_oppose);
  }
  return SentimentClass::None;
}

ClassDistribution class_distribution(const Corpus& corpus) {
  ClassDistribution dist;
  for (const auto& t : corpus.items()) {
    ++dist.counts[class_code(t.label) - 1];
    ++dist.total;
  }
  if (dist.total > 0) {
    for (int i = 0; i < kNumClasses; ++i) {
      // Round half-up in exact integer arithmetic:
      // hundredths = floor(10000 * count / total + 1/2).
      dist.percent_hundredths[i] =
          (20000 * dist.counts[i] + dist.total) / (2 * dist.total);
    }
  }
  return dist;
}

namespace {

std::string format_hundredths(std::int64_t h) {
  std::ostringstream os;
  os << h / 100 << '.' << static_cast<char>('0' + (h / 10) % 10)
     << static_cast<char>('0' + h % 10);
  return os.str();
}

}  // namespace

std::string format_distribution(const ClassDistribution& dist) {
  std::ostringstream os;
  os << "Sentiment class        Tweets   Percent\n";
  std::int64_t sum_hundredths = 0;
  for (SentimentClass c : kAllClasses) {
    const int i = class_code(c) - 1;
    std::string label = std::to_string(class_code(c)) + " (" + class_name(c) + ")";
    label.resize(20, ' ');
    std::string count = std::to_string(dist.counts[i]);
    std::string pct = format_hundredths(dist.percent_hundredths[i]);
    os << label << std::string(9 - std::min<std::size_t>(9, count.size()), ' ')
       << count << std::string(10 - std::min<std::size_t>(10, pct.size()), ' ')
       << pct << '\n';
    sum_hundredths += dist.percent_hundredths[i];
  }
  std::string total = std::to_string(dist.total);
  std::string pct = format_hundredths(sum_hundredths);
  os << "Total               "
     << std::string(9 - std::min<std::size_t>(9, total.size()), ' ') << total
     << std::string(10 - std::min<std::size_t>(10, pct.size()), ' ') << pct
     << '\n';
  return os.str();
}

double agreement_rate(std::span<const SentimentClass> labels_a,
                      std::span<const SentimentClass> labels_b) {
  if (labels_a.empty()) {
    throw std::invalid_argument("agreement_rate: empty label sequences");
  }
  if (labels_a.size() != labels_b.size()) {
    throw std::invalid_argument("agreement_rate: length mismatch (" +
                                std::to_string(labels_a.size()) + " vs " +
                                std::to_string(labels_b.size()) + ")");
  }
  std::size_t agree = 0;
  for (std::size_t i = 0; i < labels_a.size(); ++i) {
    if (labels_a[i] == labels_b[i]) ++agree;
  }
  return static_cast<double>(agree) / static_cast<double>(labels_a.size());
}

}  // namespace stump
