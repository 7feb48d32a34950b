#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "corpus.hpp"

namespace stump {

// Token pools driving synthetic tweet generation.  Class pools are pairwise
// disjoint so the classes stay linearly separable after cleaning; shared
// tokens appear in every class as topical noise.
struct KeywordProfile {
  std::array<std::vector<std::string>, kNumClasses> class_keywords;
  std::vector<std::string> shared;
};

const KeywordProfile& default_keyword_profile();

// Class counts of the reference corpus distribution (total 6060).
inline constexpr std::array<std::uint32_t, kNumClasses> kReferenceClassCounts =
    {1034, 876, 294, 790, 37, 53, 623, 2353};

// Deterministic per seed: same seed, counts, and profile produce a
// byte-identical corpus.  Every class has an anchor keyword (first entry of
// its pool).  A tweet is either "pure" — the anchor repeated, sometimes with
// its hashtag — or a mix of anchor copies, extra class keywords, shared noise
// tokens, and raw-tweet decorations (RT prefix, @mentions, URLs, numbers,
// currency amounts, hashtags, stray punctuation, capitalisation) that the
// cleaning pipeline is expected to strip or replace.  Rare classes emit
// mostly pure tweets so every bundled learner can separate them at its
// default settings (see ClassMix in synthetic.cpp).  Tweets are shuffled
// across classes; ids run t000001, t000002, ... in file order.
Corpus generate_synthetic_corpus(
    std::uint64_t seed, const std::array<std::uint32_t, kNumClasses>& counts,
    const KeywordProfile& profile = default_keyword_profile());

}  // namespace stump
