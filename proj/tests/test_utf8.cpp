#include <doctest.h>

#include <string>

#include "error.hpp"
#include "utf8.hpp"

using namespace stump;

TEST_CASE("utf8 decode/encode round-trips ASCII and multi-byte text") {
  const std::string samples[] = {
      "",
      "plain ascii",
      "caf\xC3\xA9",                       // café
      "\xE0\xA4\xA8\xE0\xA4\xAE",          // नम
      "\xF0\x9F\x8E\x89",                  // 🎉
      "mix \xC2\xA3 \xE2\x82\xB9 end",     // £ ₹
  };
  for (const auto& s : samples) {
    CHECK(utf8::is_valid(s));
    CHECK(utf8::encode(utf8::decode(s, true)) == s);
  }
}

TEST_CASE("utf8 strict decode rejects malformed sequences") {
  CHECK_THROWS_AS(utf8::decode("\x80", true), ParseError);
  CHECK_THROWS_AS(utf8::decode("\xC3", true), ParseError);          // truncated
  CHECK_THROWS_AS(utf8::decode("\xC0\xAF", true), ParseError);      // overlong
  CHECK_THROWS_AS(utf8::decode("\xED\xA0\x80", true), ParseError);  // surrogate
  CHECK_FALSE(utf8::is_valid("\xFF"));
}

TEST_CASE("utf8 lenient decode maps bad bytes to U+FFFD") {
  const std::u32string out = utf8::decode("a\x80z", false);
  REQUIRE(out.size() == 3);
  CHECK(out[0] == U'a');
  CHECK(out[1] == char32_t{0xFFFD});
  CHECK(out[2] == U'z');
}

TEST_CASE("utf8 character classes") {
  CHECK(utf8::is_letter(U'a'));
  CHECK(utf8::is_letter(U'Z'));
  CHECK(utf8::is_letter(char32_t{0x0928}));  // न
  CHECK(utf8::is_letter(char32_t{0x0966}));  // Devanagari zero kept as script
  CHECK_FALSE(utf8::is_letter(char32_t{0x0964}));  // danda is punctuation
  CHECK_FALSE(utf8::is_letter(U'3'));
  CHECK_FALSE(utf8::is_letter(U'#'));
  CHECK_FALSE(utf8::is_letter(char32_t{0x1F389}));  // 🎉

  CHECK(utf8::is_space(U' '));
  CHECK(utf8::is_space(U'\t'));
  CHECK(utf8::is_space(char32_t{0x00A0}));  // no-break space
  CHECK_FALSE(utf8::is_space(U'x'));

  CHECK(utf8::is_ascii_digit(U'0'));
  CHECK(utf8::is_ascii_digit(U'9'));
  CHECK_FALSE(utf8::is_ascii_digit(char32_t{0x0966}));  // ० is not ASCII
}

TEST_CASE("utf8 lowercase mapping") {
  CHECK(utf8::to_lower(U'A') == U'a');
  CHECK(utf8::to_lower(U'z') == U'z');
  CHECK(utf8::to_lower(char32_t{0x00C9}) == char32_t{0x00E9});  // É -> é
  CHECK(utf8::to_lower(char32_t{0x0414}) == char32_t{0x0434});  // Д -> д
  CHECK(utf8::to_lower(char32_t{0x0928}) == char32_t{0x0928});  // न unchanged
}
