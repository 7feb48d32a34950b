#pragma once

#include <array>
#include <string>
#include <string_view>

namespace stump {

// The cleaning rules, in pipeline order. The order is load-bearing:
// "RT" is matched case-sensitively before lowercasing, emails are consumed
// before the URL rule can eat their domain half, and phone-shaped digit runs
// are deleted before the generic number placeholder runs.
enum class Rule {
  kStripRetweet,
  kStripUsername,
  kReplaceEmail,
  kReplaceUrl,
  kReplaceCurrency,
  kStripPhone,
  kReplaceNumber,
  kStripPunctuation,
  kCollapseWhitespace,
  kLowercase,
};

inline constexpr std::array<Rule, 10> kRulePipeline = {
    Rule::kStripRetweet,     Rule::kStripUsername,  Rule::kReplaceEmail,
    Rule::kReplaceUrl,       Rule::kReplaceCurrency, Rule::kStripPhone,
    Rule::kReplaceNumber,    Rule::kStripPunctuation,
    Rule::kCollapseWhitespace, Rule::kLowercase,
};

const char* rule_name(Rule r);

namespace placeholder {
inline constexpr std::string_view kEmail = "emailaddr";
inline constexpr std::string_view kUrl = "urladdr";
inline constexpr std::string_view kCurrency = "moneysymb";
inline constexpr std::string_view kNumber = "numbr";
}  // namespace placeholder

// Applies a single rule. Folding apply_rule over kRulePipeline equals
// normalize().
std::string apply_rule(Rule rule, std::string_view text);

// Runs the full cleaning pipeline. Total and idempotent; malformed UTF-8
// bytes are treated as U+FFFD (strict validation happens at corpus load).
// Output is lowercase words and placeholders separated by single spaces,
// with no digits, punctuation or surrounding whitespace.
std::string normalize(std::string_view text);

}  // namespace stump
