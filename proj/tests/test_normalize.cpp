#include <doctest.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "golden_normalize.hpp"
#include "normalize.hpp"
#include "rng.hpp"

using namespace stump;

namespace {

bool output_alphabet_ok(std::string_view text) {
  // ASCII portion of the output contract: lowercase letters and single
  // spaces only (digits are consumed by the pipeline); non-ASCII bytes are
  // script text which is checked separately via idempotence.
  bool prev_space = true;  // also rejects a leading space
  for (unsigned char c : std::string(text)) {
    if (c >= 0x80) {
      prev_space = false;
      continue;
    }
    if (c == ' ') {
      if (prev_space) return false;  // double space
      prev_space = true;
    } else if (c >= 'a' && c <= 'z') {
      prev_space = false;
    } else {
      return false;  // digits, uppercase, punctuation are all forbidden
    }
  }
  return !(prev_space && !text.empty());  // no trailing space
}

}  // namespace

TEST_CASE("cleaning pipeline matches the hand-worked golden pairs") {
  REQUIRE(testdata::golden_pairs().size() >= 40);
  for (const auto& pair : testdata::golden_pairs()) {
    CAPTURE(pair.raw);
    CHECK(normalize(pair.raw) == pair.clean);
  }
}

TEST_CASE("cleaning pipeline equals the fold of its individual rules") {
  for (const auto& pair : testdata::golden_pairs()) {
    std::string text{pair.raw};
    for (Rule rule : kRulePipeline) text = apply_rule(rule, text);
    CAPTURE(pair.raw);
    CHECK(text == normalize(pair.raw));
  }
}

TEST_CASE("single-rule behaviour on targeted fragments") {
  CHECK(apply_rule(Rule::kStripUsername, "@abc hi @d_e") == " hi ");
  CHECK(apply_rule(Rule::kReplaceNumber, "12 cats") == "numbr cats");
  CHECK(apply_rule(Rule::kLowercase, "numbr") == "numbr");
  CHECK(apply_rule(Rule::kStripRetweet, "RT x Rt") == " x Rt");
  CHECK(apply_rule(Rule::kReplaceCurrency, "₹500") == "moneysymb 500");
  CHECK(apply_rule(Rule::kStripPhone, "9876543210") == "");
  CHECK(apply_rule(Rule::kCollapseWhitespace, "  a \t b ") == "a b");
}

TEST_CASE("rule names cover the pipeline in order") {
  std::vector<std::string> names;
  for (Rule rule : kRulePipeline) names.push_back(rule_name(rule));
  const std::vector<std::string> expected = {
      "strip_retweet",     "strip_username",      "replace_email",
      "replace_url",       "replace_currency",    "strip_phone",
      "replace_number",    "strip_punctuation",   "collapse_whitespace",
      "lowercase"};
  CHECK(names == expected);
}

TEST_CASE("cleaning is idempotent on golden outputs and random byte soup") {
  for (const auto& pair : testdata::golden_pairs()) {
    const std::string once = normalize(pair.raw);
    CHECK(normalize(once) == once);
  }
  Rng rng(20240521);
  for (int i = 0; i < 2000; ++i) {
    const std::string raw = testdata::random_raw_string(rng);
    const std::string once = normalize(raw);
    CAPTURE(raw);
    CHECK(normalize(once) == once);
  }
}

TEST_CASE("cleaned output stays within the output alphabet") {
  for (const auto& pair : testdata::golden_pairs()) {
    CAPTURE(pair.raw);
    CHECK(output_alphabet_ok(normalize(pair.raw)));
  }
  Rng rng(99);
  for (int i = 0; i < 2000; ++i) {
    const std::string raw = testdata::random_raw_string(rng);
    CAPTURE(raw);
    CHECK(output_alphabet_ok(normalize(raw)));
  }
}
