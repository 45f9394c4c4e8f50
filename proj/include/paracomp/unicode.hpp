// paracomp/unicode.hpp
//
// Unicode plumbing used by the rest of the library: strict UTF-8
// decoding/encoding, NFC normalization, full case folding, and the two
// character classes the tokenizer needs (punctuation, whitespace).
// Normalization, folding and character classes are backed by ICU; decoding
// is done by hand because ICU substitutes U+FFFD instead of reporting the
// byte offset of the offending sequence.
//
// All strings at this layer are sequences of Unicode scalar values
// (char32_t); the rest of the library indexes characters in those units.

#ifndef PARACOMP_UNICODE_HPP_
#define PARACOMP_UNICODE_HPP_

#include <string>
#include <string_view>

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

#include "paracomp/errors.hpp"

namespace paracomp {

// Decodes UTF-8, rejecting overlong encodings, surrogates, values past
// U+10FFFF and truncated sequences. Throws InputError naming the byte
// offset of the first bad byte.
inline std::u32string decode_utf8(std::string_view bytes) {
  std::u32string out;
  out.reserve(bytes.size());
  std::size_t i = 0;
  const auto fail = [&](std::size_t at) {
    throw InputError("invalid UTF-8 at byte offset " + std::to_string(at));
  };
  while (i < bytes.size()) {
    const unsigned char b0 = static_cast<unsigned char>(bytes[i]);
    std::size_t len;
    char32_t cp;
    if (b0 < 0x80) {
      len = 1;
      cp = b0;
    } else if ((b0 & 0xE0) == 0xC0) {
      len = 2;
      cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
      len = 3;
      cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
      len = 4;
      cp = b0 & 0x07;
    } else {
      fail(i);
      return out;  // unreachable
    }
    if (i + len > bytes.size()) fail(i);
    for (std::size_t k = 1; k < len; ++k) {
      const unsigned char bk = static_cast<unsigned char>(bytes[i + k]);
      if ((bk & 0xC0) != 0x80) fail(i);
      cp = (cp << 6) | (bk & 0x3F);
    }
    static constexpr char32_t kMinByLen[5] = {0, 0, 0x80, 0x800, 0x10000};
    if (cp < kMinByLen[len]) fail(i);                  // overlong
    if (cp >= 0xD800 && cp <= 0xDFFF) fail(i);         // surrogate
    if (cp > 0x10FFFF) fail(i);
    out.push_back(cp);
    i += len;
  }
  return out;
}

inline std::string encode_utf8(std::u32string_view cps) {
  std::string out;
  out.reserve(cps.size());
  for (char32_t cp : cps) {
    if (cp < 0x80) {
      out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
      out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
      out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
  }
  return out;
}

namespace detail {

inline icu::UnicodeString to_icu(std::u32string_view cps) {
  return icu::UnicodeString::fromUTF32(
      reinterpret_cast<const UChar32*>(cps.data()),
      static_cast<int32_t>(cps.size()));
}

inline std::u32string from_icu(const icu::UnicodeString& us) {
  std::u32string out(static_cast<std::size_t>(us.countChar32()), U'\0');
  UErrorCode ec = U_ZERO_ERROR;
  us.toUTF32(reinterpret_cast<UChar32*>(out.data()),
             static_cast<int32_t>(out.size()), ec);
  if (U_FAILURE(ec)) throw InternalError("ICU UTF-32 conversion failed");
  return out;
}

inline const icu::Normalizer2& nfc_instance() {
  UErrorCode ec = U_ZERO_ERROR;
  const icu::Normalizer2* n = icu::Normalizer2::getNFCInstance(ec);
  if (U_FAILURE(ec) || n == nullptr)
    throw InternalError("ICU NFC normalizer unavailable");
  return *n;
}

}  // namespace detail

inline std::u32string nfc(std::u32string_view text) {
  if (text.empty()) return {};
  UErrorCode ec = U_ZERO_ERROR;
  icu::UnicodeString out =
      detail::nfc_instance().normalize(detail::to_icu(text), ec);
  if (U_FAILURE(ec)) throw InternalError("ICU NFC normalization failed");
  return detail::from_icu(out);
}

// Full (multi-character) Unicode case folding, e.g. ß -> ss.
inline std::u32string case_fold(std::u32string_view text) {
  if (text.empty()) return {};
  icu::UnicodeString us = detail::to_icu(text);
  us.foldCase(U_FOLD_CASE_DEFAULT);
  return detail::from_icu(us);
}

// General category P (all punctuation subcategories).
inline bool is_punctuation(char32_t cp) {
  return u_ispunct(static_cast<UChar32>(cp)) != 0;
}

// Unicode White_Space property.
inline bool is_whitespace(char32_t cp) {
  return u_isUWhiteSpace(static_cast<UChar32>(cp)) != 0;
}

// Canonical word form used throughout the pipeline: NFC, then case folded,
// then re-normalized (folding can denormalize, e.g. İ -> i + U+0307).
inline std::u32string normalize_word(std::u32string_view word) {
  return nfc(case_fold(nfc(word)));
}

// UTF-8 convenience wrapper around normalize_word.
inline std::string normalize_word_utf8(std::string_view word) {
  return encode_utf8(normalize_word(decode_utf8(word)));
}

}  // namespace paracomp

#endif  // PARACOMP_UNICODE_HPP_
