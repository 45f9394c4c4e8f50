#include "paracomp/unicode.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <fstream>
#include <string>
#include <vector>

#include "support.hpp"

using namespace paracomp;

namespace {

// Unescapes the \uXXXX / \UXXXXXXXX forms used by the fixture file.
std::u32string unescape(const std::string& field) {
  std::u32string out;
  std::size_t i = 0;
  while (i < field.size()) {
    if (field[i] == '\\' && i + 1 < field.size() &&
        (field[i + 1] == 'u' || field[i + 1] == 'U')) {
      const std::size_t digits = field[i + 1] == 'u' ? 4 : 8;
      REQUIRE(i + 2 + digits <= field.size());
      out.push_back(static_cast<char32_t>(
          std::stoul(field.substr(i + 2, digits), nullptr, 16)));
      i += 2 + digits;
    } else {
      out.push_back(static_cast<char32_t>(static_cast<unsigned char>(field[i])));
      ++i;
    }
  }
  return out;
}

struct FixtureRow {
  std::u32string input, nfc, folded;
};

// Rows are (input, NFC(input), NFC(casefold(NFC(input)))) computed by an
// independent implementation and frozen into tests/data/unicode_cases.tsv.
std::vector<FixtureRow> load_fixture() {
  std::ifstream in(std::string(test_support::test_data_dir()) + "/unicode_cases.tsv");
  REQUIRE(in.good());
  std::vector<FixtureRow> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const std::size_t t1 = line.find('\t');
    const std::size_t t2 = line.find('\t', t1 + 1);
    REQUIRE(t1 != std::string::npos);
    REQUIRE(t2 != std::string::npos);
    rows.push_back({unescape(line.substr(0, t1)),
                    unescape(line.substr(t1 + 1, t2 - t1 - 1)),
                    unescape(line.substr(t2 + 1))});
  }
  REQUIRE(rows.size() > 400);
  return rows;
}

}  // namespace

TEST_CASE("nfc and case folding match the frozen oracle") {
  for (const FixtureRow& row : load_fixture()) {
    CHECK(nfc(row.input) == row.nfc);
    CHECK(normalize_word(row.input) == row.folded);
  }
}

TEST_CASE("nfc and case folding are idempotent") {
  for (const FixtureRow& row : load_fixture()) {
    const std::u32string once = nfc(row.input);
    CHECK(nfc(once) == once);
    const std::u32string folded = case_fold(row.input);
    CHECK(case_fold(folded) == folded);
    const std::u32string word = normalize_word(row.input);
    CHECK(normalize_word(word) == word);
  }
}

TEST_CASE("utf8 roundtrip") {
  auto rng = test_support::make_rng(42);
  for (int i = 0; i < 2000; ++i) {
    const std::u32string s = test_support::random_u32string(rng, 24);
    CHECK(decode_utf8(encode_utf8(s)) == s);
  }
  CHECK(decode_utf8("").empty());
  CHECK(encode_utf8(U"").empty());
}

TEST_CASE("invalid utf8 reports the byte offset") {
  const auto offset_of = [](std::string_view bytes) -> std::string {
    try {
      decode_utf8(bytes);
    } catch (const InputError& e) {
      return e.what();
    }
    return "";
  };
  using Catch::Matchers::ContainsSubstring;
  CHECK_THAT(offset_of("ab\xFF"), ContainsSubstring("byte offset 2"));
  CHECK_THAT(offset_of("\xC3"), ContainsSubstring("byte offset 0"));          // truncated
  CHECK_THAT(offset_of("abc\xC0\xAF"), ContainsSubstring("byte offset 3"));   // overlong
  CHECK_THAT(offset_of("x\xED\xA0\x80"), ContainsSubstring("byte offset 1")); // surrogate
  CHECK_THAT(offset_of("\xF4\x90\x80\x80"), ContainsSubstring("byte offset 0"));
  CHECK_THAT(offset_of("ok\xE2\x82"), ContainsSubstring("byte offset 2"));    // cut short
  CHECK(offset_of("plain ascii").empty());
}

TEST_CASE("character classes") {
  CHECK(is_punctuation(U'.'));
  CHECK(is_punctuation(U','));
  CHECK(is_punctuation(U'—'));  // em dash (Pd)
  CHECK(is_punctuation(U'«'));  // guillemet (Pi)
  CHECK(is_punctuation(U'’'));  // right single quote (Pf)
  CHECK(is_punctuation(U'-'));
  CHECK(is_punctuation(U'\''));
  CHECK_FALSE(is_punctuation(U'a'));
  CHECK_FALSE(is_punctuation(U'7'));
  CHECK_FALSE(is_punctuation(U'+'));       // Sm, not P
  CHECK_FALSE(is_punctuation(U'$'));       // Sc, not P
  CHECK_FALSE(is_punctuation(U' '));

  CHECK(is_whitespace(U' '));
  CHECK(is_whitespace(U'\t'));
  CHECK(is_whitespace(U'\n'));
  CHECK(is_whitespace(U'\r'));
  CHECK(is_whitespace(U' '));   // NBSP
  CHECK(is_whitespace(U'　'));   // ideographic space
  CHECK_FALSE(is_whitespace(U'a'));
  CHECK_FALSE(is_whitespace(U'​'));  // ZWSP has no White_Space property
}

TEST_CASE("full case folding expands") {
  CHECK(case_fold(U"Straße") == U"strasse");
  CHECK(case_fold(U"ﬁnal") == U"final");
  CHECK(encode_utf8(normalize_word(U"WALK")) == "walk");
}
