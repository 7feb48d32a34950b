#include "normalize.hpp"

#include <vector>

#include "utf8.hpp"

namespace stump {

namespace {

using utf8::is_ascii_digit;
using utf8::is_letter;
using utf8::is_space;

bool is_ascii_word(char32_t cp) {
  return (cp >= 'A' && cp <= 'Z') || (cp >= 'a' && cp <= 'z') ||
         is_ascii_digit(cp) || cp == '_';
}

bool is_word_like(char32_t cp) {
  return is_letter(cp) || is_ascii_digit(cp) || cp == '_';
}

bool is_email_local(char32_t cp) {
  return is_ascii_word(cp) || cp == '.' || cp == '%' || cp == '+' || cp == '-';
}

bool is_email_domain(char32_t cp) {
  return (cp >= 'A' && cp <= 'Z') || (cp >= 'a' && cp <= 'z') ||
         is_ascii_digit(cp) || cp == '.' || cp == '-';
}

bool is_phone_separator(char32_t cp) {
  return cp == ' ' || cp == '-' || cp == '.' || cp == '(' || cp == ')';
}

bool is_currency_symbol(char32_t cp) {
  return cp == U'$' || cp == 0x20AC /* € */ || cp == 0xA3 /* £ */ ||
         cp == 0x20B9 /* ₹ */ || cp == 0xA5 /* ¥ */;
}

void append_placeholder(std::u32string& out, std::string_view ascii,
                        const std::u32string& in, std::size_t next_pos) {
  if (!out.empty() && !is_space(out.back())) out.push_back(U' ');
  for (char c : ascii) out.push_back(static_cast<char32_t>(c));
  if (next_pos < in.size() && !is_space(in[next_pos])) out.push_back(U' ');
}

// Deleting a span must not glue its neighbours into one token.
void append_deletion_gap(std::u32string& out, const std::u32string& in,
                         std::size_t next_pos) {
  if (!out.empty() && !is_space(out.back()) && next_pos < in.size() &&
      !is_space(in[next_pos])) {
    out.push_back(U' ');
  }
}

std::u32string strip_retweet(const std::u32string& s) {
  std::u32string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    if (is_space(s[i])) {
      out.push_back(s[i++]);
      continue;
    }
    std::size_t j = i;
    while (j < s.size() && !is_space(s[j])) ++j;
    const bool is_rt = (j - i == 2 && s[i] == U'R' && s[i + 1] == U'T');
    if (!is_rt) out.append(s, i, j - i);
    i = j;
  }
  return out;
}

std::u32string strip_username(const std::u32string& s) {
  std::u32string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] == U'@' && (i == 0 || !is_word_like(s[i - 1]))) {
      std::size_t j = i + 1;
      while (j < s.size() && is_ascii_word(s[j])) ++j;
      if (j > i + 1) {
        i = j;  // drop the handle, keep surrounding whitespace as-is
        continue;
      }
    }
    out.push_back(s[i++]);
  }
  return out;
}

bool valid_email_domain(const std::u32string& s, std::size_t begin,
                        std::size_t end) {
  if (begin >= end) return false;
  std::size_t label_start = begin;
  std::size_t last_label_start = begin;
  bool has_dot = false;
  for (std::size_t i = begin; i <= end; ++i) {
    if (i == end || s[i] == U'.') {
      if (i == label_start) return false;  // empty label
      if (i < end) {
        has_dot = true;
        label_start = i + 1;
        last_label_start = label_start;
      }
    }
  }
  if (!has_dot || end - last_label_start < 2) return false;
  for (std::size_t i = last_label_start; i < end; ++i) {
    const char32_t cp = s[i];
    if (!((cp >= 'A' && cp <= 'Z') || (cp >= 'a' && cp <= 'z'))) return false;
  }
  return true;
}

std::u32string replace_email(const std::u32string& s) {
  std::u32string out;
  out.reserve(s.size());
  std::size_t pos = 0;   // everything before pos has been handled
  std::size_t copy_from = 0;
  while (true) {
    std::size_t at = std::u32string::npos;
    for (std::size_t k = pos; k < s.size(); ++k) {
      if (s[k] == U'@') {
        at = k;
        break;
      }
    }
    if (at == std::u32string::npos) break;
    std::size_t local = at;
    while (local > pos && is_email_local(s[local - 1])) --local;
    std::size_t domain_end = at + 1;
    while (domain_end < s.size() && is_email_domain(s[domain_end])) ++domain_end;
    // A sentence-final period is not part of the domain.
    while (domain_end > at + 1 && s[domain_end - 1] == U'.') --domain_end;
    if (local < at && valid_email_domain(s, at + 1, domain_end)) {
      out.append(s, copy_from, local - copy_from);
      append_placeholder(out, placeholder::kEmail, s, domain_end);
      copy_from = domain_end;
      pos = domain_end;
    } else {
      pos = at + 1;
    }
  }
  out.append(s, copy_from, s.size() - copy_from);
  return out;
}

bool ascii_iequals_at(const std::u32string& s, std::size_t i,
                      std::string_view pat) {
  if (i + pat.size() > s.size()) return false;
  for (std::size_t k = 0; k < pat.size(); ++k) {
    char32_t cp = s[i + k];
    if (cp >= 'A' && cp <= 'Z') cp += 0x20;
    if (cp != static_cast<char32_t>(pat[k])) return false;
  }
  return true;
}

std::u32string replace_url(const std::u32string& s) {
  std::u32string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    const bool hit = ascii_iequals_at(s, i, "http://") ||
                     ascii_iequals_at(s, i, "https://") ||
                     ascii_iequals_at(s, i, "www.");
    if (hit) {
      std::size_t j = i;
      while (j < s.size() && !is_space(s[j])) ++j;
      append_placeholder(out, placeholder::kUrl, s, j);
      i = j;
    } else {
      out.push_back(s[i++]);
    }
  }
  return out;
}

std::u32string replace_currency(const std::u32string& s) {
  std::u32string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (is_currency_symbol(s[i])) {
      append_placeholder(out, placeholder::kCurrency, s, i + 1);
    } else {
      out.push_back(s[i]);
    }
  }
  return out;
}

std::u32string strip_phone(const std::u32string& s) {
  std::u32string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    const bool starts = s[i] == U'+' || is_ascii_digit(s[i]);
    if (!starts) {
      out.push_back(s[i++]);
      continue;
    }
    std::size_t j = i;
    if (s[j] == U'+') ++j;
    if (j >= s.size() || !is_ascii_digit(s[j])) {
      out.push_back(s[i++]);
      continue;
    }
    std::size_t digits = 0;
    std::size_t last_digit_end = j;
    bool pending_separator = false;
    while (j < s.size()) {
      if (is_ascii_digit(s[j])) {
        ++digits;
        ++j;
        last_digit_end = j;
        pending_separator = false;
      } else if (is_phone_separator(s[j]) && !pending_separator) {
        pending_separator = true;
        ++j;
      } else {
        break;
      }
    }
    if (digits >= 10 && digits <= 13) {
      append_deletion_gap(out, s, last_digit_end);
      i = last_digit_end;
    } else {
      // Not phone-shaped: keep the whole run for the number rule.
      out.append(s, i, last_digit_end - i);
      i = last_digit_end;
    }
  }
  return out;
}

std::u32string replace_number(const std::u32string& s) {
  std::u32string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    if (is_ascii_digit(s[i])) {
      std::size_t j = i;
      while (j < s.size() && is_ascii_digit(s[j])) ++j;
      append_placeholder(out, placeholder::kNumber, s, j);
      i = j;
    } else {
      out.push_back(s[i++]);
    }
  }
  return out;
}

std::u32string strip_punctuation(const std::u32string& s) {
  std::u32string out;
  out.reserve(s.size());
  for (char32_t cp : s) {
    if (is_letter(cp) || is_ascii_digit(cp) || is_space(cp)) out.push_back(cp);
  }
  return out;
}

std::u32string collapse_whitespace(const std::u32string& s) {
  std::u32string out;
  out.reserve(s.size());
  for (char32_t cp : s) {
    if (is_space(cp)) {
      if (!out.empty() && out.back() != U' ') out.push_back(U' ');
    } else {
      out.push_back(cp);
    }
  }
  if (!out.empty() && out.back() == U' ') out.pop_back();
  return out;
}

std::u32string lowercase(const std::u32string& s) {
  std::u32string out;
  out.reserve(s.size());
  for (char32_t cp : s) out.push_back(utf8::to_lower(cp));
  return out;
}

std::u32string apply_rule_u32(Rule rule, const std::u32string& s) {
  switch (rule) {
    case Rule::kStripRetweet: return strip_retweet(s);
    case Rule::kStripUsername: return strip_username(s);
    case Rule::kReplaceEmail: return replace_email(s);
    case Rule::kReplaceUrl: return replace_url(s);
    case Rule::kReplaceCurrency: return replace_currency(s);
    case Rule::kStripPhone: return strip_phone(s);
    case Rule::kReplaceNumber: return replace_number(s);
    case Rule::kStripPunctuation: return strip_punctuation(s);
    case Rule::kCollapseWhitespace: return collapse_whitespace(s);
    case Rule::kLowercase: return lowercase(s);
  }
  return s;
}

}  // namespace

const char* rule_name(Rule r) {
  switch (r) {
    case Rule::kStripRetweet: return "strip_retweet";
    case Rule::kStripUsername: return "strip_username";
    case Rule::kReplaceEmail: return "replace_email";
    case Rule::kReplaceUrl: return "replace_url";
    case Rule::kReplaceCurrency: return "replace_currency";
    case Rule::kStripPhone: return "strip_phone";
    case Rule::kReplaceNumber: return "replace_number";
    case Rule::kStripPunctuation: return "strip_punctuation";
    case Rule::kCollapseWhitespace: return "collapse_whitespace";
    case Rule::kLowercase: return "lowercase";
  }
  return "?";
}

std::string apply_rule(Rule rule, std::string_view text) {
  return utf8::encode(apply_rule_u32(rule, utf8::decode(text, false)));
}

std::string normalize(std::string_view text) {
  std::u32string s = utf8::decode(text, false);
  for (Rule r : kRulePipeline) s = apply_rule_u32(r, s);
  return utf8::encode(s);
}

}  // namespace stump
