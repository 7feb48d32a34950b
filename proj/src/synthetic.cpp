#include "synthetic.hpp"

#include <cstdio>
#include <utility>

#include "rng.hpp"

namespace stump {

namespace {

KeywordProfile make_default_profile() {
  KeywordProfile profile;
  profile.class_keywords = {{
      // class 1: support P1
      {"alphawave", "alphasurge", "alphazeal", "alphapride", "alphaboost",
       "alphacheer", "alphatrust", "alphagain", "alphavow", "alphaglow",
       "alphamarch", "alphahope"},
      // class 2: oppose P1
      {"alphafail", "alphascam", "alphaslump", "alphagloom", "alphablame",
       "alphaflaw", "alphadrain", "alphasham", "alphastall", "alphariot",
       "alphaleak", "alphadebt"},
      // class 3: support P2
      {"betawave", "betasurge", "betazeal", "betapride", "betaboost",
       "betacheer", "betatrust", "betagain", "betavow", "betaglow",
       "betamarch", "betahope"},
      // class 4: oppose P2
      {"betafail", "betascam", "betaslump", "betagloom", "betablame",
       "betaflaw", "betadrain", "betasham", "betastall", "betariot",
       "betaleak", "betadebt"},
      // class 5: support P3
      {"gammawave", "gammasurge", "gammazeal", "gammapride", "gammaboost",
       "gammacheer", "gammatrust", "gammagain", "gammavow", "gammaglow",
       "gammamarch", "gammahope"},
      // class 6: oppose P3
      {"gammafail", "gammascam", "gammaslump", "gammagloom", "gammablame",
       "gammaflaw", "gammadrain", "gammasham", "gammastall", "gammariot",
       "gammaleak", "gammadebt"},
      // class 7: not about the election at all
      {"cricket", "bollywood", "recipe", "selfie", "weather", "traffic",
       "holiday", "gadget", "music", "cinema", "fitness", "gossip"},
      // class 8: election-related but neutral
      {"pollday", "turnout", "booth", "queue", "ballot", "roster", "evm",
       "manifesto", "debate", "rally", "campaign", "voterlist"},
  }};
  profile.shared = {"delhi",    "election", "vote",    "today",   "news",
                    "people",   "city",     "leader",  "speech",  "crowd",
                    "morning",  "evening",  "street",  "media",   "report",
                    "question", "answer",   "water",   "power",   "road",
                    "school",   "hospital", "tax",     "job",     "market",
                    "promise",  "change",   "future",  "plan",    "issue"};
  return profile;
}

// Per-class tweet composition.  A tweet is either "pure" (the class anchor
// keyword repeated, sometimes with its hashtag) or "mixed" (`anchor` copies of
// the anchor plus extra class keywords, shared noise tokens, and raw-tweet
// decorations scaled by `decor`).  Rare classes lean almost entirely on pure
// tweets: the full-batch logistic learner sees a class only through its share
// of the mean gradient, so a class with under 5% of the corpus must spend its
// whole feature budget on a single token to build a winning margin within the
// default epoch count.  Frequent classes get the same treatment in milder
// form so their scores rest on keyword weights rather than bias terms, which
// would otherwise swamp the rare classes.
struct ClassMix {
  int anchor;                 // anchor repetitions in a mixed tweet
  int pool_lo, pool_hi;       // extra class keywords drawn from the pool
  int shared_lo, shared_hi;   // shared noise tokens
  double decor;               // scale on decoration probabilities
  double p_pure;              // probability of a pure anchor-only tweet
};

constexpr ClassMix kClassMix[kNumClasses] = {
    {5, 1, 2, 0, 1, 0.5, 0.7},  // 1: support P1
    {5, 1, 2, 0, 1, 0.5, 0.7},  // 2: oppose P1
    {6, 0, 1, 0, 0, 0.2, 1.0},  // 3: support P2 (rare)
    {5, 1, 2, 0, 1, 0.5, 0.7},  // 4: oppose P2
    {6, 0, 1, 0, 0, 0.2, 1.0},  // 5: support P3 (very rare)
    {6, 0, 1, 0, 0, 0.2, 1.0},  // 6: oppose P3 (very rare)
    {6, 0, 1, 0, 0, 0.3, 0.5},  // 7: not about the election
    {5, 1, 2, 0, 1, 0.5, 0.9},  // 8: election-related but neutral
};

const char kHandleAlphabet[] = "abcdefghijklmnopqrstuvwxyz0123456789_";
const char kSlugAlphabet[] = "abcdefghijklmnopqrstuvwxyz0123456789";

std::string random_handle(Rng& rng) {
  const std::size_t len = 4 + rng.next_below(5);  // 4..8
  std::string out = "@";
  for (std::size_t i = 0; i < len; ++i) {
    out.push_back(kHandleAlphabet[rng.next_below(sizeof(kHandleAlphabet) - 1)]);
  }
  return out;
}

std::string random_url(Rng& rng) {
  std::string out = "https://t.co/";
  for (int i = 0; i < 6; ++i) {
    out.push_back(kSlugAlphabet[rng.next_below(sizeof(kSlugAlphabet) - 1)]);
  }
  return out;
}

void insert_at_random(Rng& rng, std::vector<std::string>& tokens,
                      std::string token) {
  const std::size_t pos = rng.next_below(tokens.size() + 1);
  tokens.insert(tokens.begin() + static_cast<std::ptrdiff_t>(pos),
                std::move(token));
}

std::string build_tweet(Rng& rng, std::size_t class_index,
                        const KeywordProfile& profile) {
  const ClassMix& mix = kClassMix[class_index];
  const std::vector<std::string>& pool = profile.class_keywords[class_index];

  if (rng.next_bernoulli(mix.p_pure)) {
    const std::size_t reps = 5 + rng.next_below(3);  // 5..7
    std::string text;
    for (std::size_t i = 0; i < reps; ++i) {
      if (i > 0) text += ' ';
      text += pool[0];
    }
    if (rng.next_bernoulli(0.5)) text += " #" + pool[0];
    return text;
  }

  std::vector<std::string> tokens;
  for (int i = 0; i < mix.anchor; ++i) tokens.push_back(pool[0]);
  const std::size_t n_pool = static_cast<std::size_t>(mix.pool_lo) +
                             rng.next_below(mix.pool_hi - mix.pool_lo + 1);
  for (std::size_t i = 0; i < n_pool; ++i) {
    tokens.push_back(pool[1 + rng.next_below(pool.size() - 1)]);
  }
  const std::size_t n_shared = static_cast<std::size_t>(mix.shared_lo) +
                               rng.next_below(mix.shared_hi - mix.shared_lo + 1);
  for (std::size_t i = 0; i < n_shared; ++i) {
    tokens.push_back(profile.shared[rng.next_below(profile.shared.size())]);
  }
  rng.shuffle(tokens);

  if (rng.next_bernoulli(mix.decor * 0.4)) {
    insert_at_random(rng, tokens, random_handle(rng));
  }
  if (rng.next_bernoulli(mix.decor * 0.3)) {
    insert_at_random(rng, tokens, std::to_string(100 + rng.next_below(9900)));
  }
  if (rng.next_bernoulli(mix.decor * 0.2)) {
    insert_at_random(rng, tokens,
                     "₹" + std::to_string(50 + rng.next_below(9950)));
  }
  if (rng.next_bernoulli(mix.decor * 0.25)) tokens.push_back(random_url(rng));
  // Hashtags are common across every class, so their rate is not scaled.
  if (rng.next_bernoulli(0.5)) {
    tokens.push_back("#" + pool[rng.next_below(pool.size())]);
  }

  std::string text;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) text += ' ';
    text += tokens[i];
  }

  // Stray punctuation and casing the cleaning pipeline must undo.
  if (rng.next_bernoulli(mix.decor * 0.2)) text += '!';
  if (rng.next_bernoulli(mix.decor * 0.15)) text += ',';
  if (rng.next_bernoulli(mix.decor * 0.15) && !text.empty() &&
      text[0] >= 'a' && text[0] <= 'z') {
    text[0] = static_cast<char>(text[0] - 0x20);
  }
  if (rng.next_bernoulli(mix.decor * 0.3)) text = "RT " + text;
  return text;
}

}  // namespace

const KeywordProfile& default_keyword_profile() {
  static const KeywordProfile kProfile = make_default_profile();
  return kProfile;
}

Corpus generate_synthetic_corpus(
    std::uint64_t seed, const std::array<std::uint32_t, kNumClasses>& counts,
    const KeywordProfile& profile) {
  Rng rng(seed);
  std::vector<std::pair<int, std::string>> items;
  for (std::size_t c = 0; c < kNumClasses; ++c) {
    for (std::uint32_t i = 0; i < counts[c]; ++i) {
      items.emplace_back(static_cast<int>(c) + 1, build_tweet(rng, c, profile));
    }
  }
  rng.shuffle(items);

  Corpus corpus;
  char id[32];
  for (std::size_t i = 0; i < items.size(); ++i) {
    std::snprintf(id, sizeof(id), "t%06zu", i + 1);
    corpus.add(
        {id, std::move(items[i].second), class_from_code(items[i].first)});
  }
  return corpus;
}

}  // namespace stump
