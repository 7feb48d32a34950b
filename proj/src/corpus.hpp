#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace stump {

// The eight annotation classes. Codes are the on-disk representation and are
// stable: 1/3/5 support parties P1/P2/P3, 2/4/6 oppose them, 7 marks tweets
// unrelated to the election, 8 election-related tweets with no stance.
enum class SentimentClass : std::uint8_t {
  SupportP1 = 1,
  OpposeP1 = 2,
  SupportP2 = 3,
  OpposeP2 = 4,
  SupportP3 = 5,
  OpposeP3 = 6,
  NonRelevant = 7,
  None = 8,
};

inline constexpr int kNumClasses = 8;

inline constexpr std::array<SentimentClass, kNumClasses> kAllClasses = {
    SentimentClass::SupportP1, SentimentClass::OpposeP1,
    SentimentClass::SupportP2, SentimentClass::OpposeP2,
    SentimentClass::SupportP3, SentimentClass::OpposeP3,
    SentimentClass::NonRelevant, SentimentClass::None,
};

inline int class_code(SentimentClass c) { return static_cast<int>(c); }

bool is_valid_class_code(int code);

// Throws std::invalid_argument for codes outside 1..8.
SentimentClass class_from_code(int code);

// Human-readable name, e.g. "Support P1", "Non Relevant".
const char* class_name(SentimentClass c);

struct LabeledTweet {
  std::string id;
  std::string text;
  SentimentClass label = SentimentClass::None;
};

enum class CorpusFormat { kCsv, kJsonl };

// Throws std::invalid_argument for anything but "csv"/"jsonl".
CorpusFormat corpus_format_from_string(const std::string& s);

// An ordered collection of labeled tweets. Iteration order equals file order.
class Corpus {
public:
  Corpus() = default;
  explicit Corpus(std::vector<LabeledTweet> items);

  const std::vector<LabeledTweet>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  const LabeledTweet& operator[](std::size_t i) const { return items_[i]; }

  void add(LabeledTweet tweet);

private:
  std::vector<LabeledTweet> items_;
};

// Reads a corpus file. CSV uses an `id,text,label` header with RFC-4180
// quoting; JSONL has one {"id","text","label"} object per line. Malformed
// records raise ParseError naming the line, unreadable paths raise IoError.
Corpus load_corpus(const std::string& path, CorpusFormat format);

void save_corpus(const Corpus& corpus, const std::string& path,
                 CorpusFormat format);

enum class Party : std::uint8_t { P1 = 1, P2 = 2, P3 = 3 };
enum class Stance : std::uint8_t { Support, Oppose };

// One per-party judgement made while annotating a tweet.
struct StanceAssertion {
  Party party;
  Stance stance;

  friend bool operator==(const StanceAssertion&,
                         const StanceAssertion&) = default;
};

// Collapses a set of per-party stance judgements into the single class code.
// Non-relevant tweets are class 7 regardless of assertions; with no
// assertions the tweet is class 8; otherwise supporting beats opposing and
// the lowest-numbered party wins among equals.
SentimentClass resolve_label(std::span<const StanceAssertion> assertions,
                             bool relevant);

struct ClassDistribution {
  std::array<std::int64_t, kNumClasses> counts{};  // indexed by code - 1
  std::int64_t total = 0;
  // 100 * count / total in hundredths of a percent, rounded half-up.
  // All zero when the corpus is empty (flagged by total == 0).
  std::array<std::int64_t, kNumClasses> percent_hundredths{};

  double percent(SentimentClass c) const {
    return static_cast<double>(percent_hundredths[class_code(c) - 1]) / 100.0;
  }
};

ClassDistribution class_distribution(const Corpus& corpus);

// Plain-text class/count/percent table (two-decimal percentages, plus a
// total row).
std::string format_distribution(const ClassDistribution& dist);

// Fraction of positions at which the two annotators assigned the same class.
// Throws std::invalid_argument on empty or unequal-length input.
double agreement_rate(std::span<const SentimentClass> labels_a,
                      std::span<const SentimentClass> labels_b);

}  // namespace stump
