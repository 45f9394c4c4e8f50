// paracomp/corpus.hpp
//
// Raw-text ingestion: tokenization, type-frequency vocabularies, lemma
// lists, and the eight dataset statistics (token/type/lemma/inflection
// counts and paradigm sizes).
//
// Tokens are NFC-normalized, case-folded, split on Unicode whitespace, with
// leading and trailing punctuation (category P) stripped; word-internal
// apostrophes and hyphens survive. All structures are immutable after
// construction and safe to share across threads.

#ifndef PARACOMP_CORPUS_HPP_
#define PARACOMP_CORPUS_HPP_

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "paracomp/bmacc.hpp"
#include "paracomp/errors.hpp"
#include "paracomp/unicode.hpp"

namespace paracomp {

inline std::vector<std::string> tokenize(std::string_view text) {
  const std::u32string cps = decode_utf8(text);
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < cps.size()) {
    while (i < cps.size() && is_whitespace(cps[i])) ++i;
    std::size_t j = i;
    while (j < cps.size() && !is_whitespace(cps[j])) ++j;
    if (j > i) {
      std::size_t lo = i, hi = j;
      while (lo < hi && is_punctuation(cps[lo])) ++lo;
      while (hi > lo && is_punctuation(cps[hi - 1])) --hi;
      if (hi > lo) {
        std::u32string word =
            normalize_word(std::u32string_view(cps).substr(lo, hi - lo));
        if (!word.empty()) tokens.push_back(encode_utf8(word));
      }
    }
    i = j;
  }
  return tokens;
}

struct Corpus {
  std::vector<std::string> tokens;                  // in reading order
  std::map<std::string, std::uint64_t, std::less<>> vocab;  // type -> count

  std::size_t token_count() const { return tokens.size(); }
  std::size_t type_count() const { return vocab.size(); }

  bool contains(std::string_view type) const {
    return vocab.find(type) != vocab.end();
  }

  std::uint64_t frequency(std::string_view type) const {
    auto it = vocab.find(type);
    return it == vocab.end() ? 0 : it->second;
  }
};

inline Corpus build_corpus(std::vector<std::string> tokens) {
  Corpus corpus;
  for (const std::string& t : tokens) {
    if (t.empty()) throw InputError("corpus tokens must be non-empty");
    ++corpus.vocab[t];
  }
  corpus.tokens = std::move(tokens);
  return corpus;
}

// Ordered, duplicate-free list of normalized lemmas (one part of speech).
class LemmaList {
 public:
  LemmaList() = default;

  // Normalizes each word (NFC + case fold); later duplicates of the same
  // normalized lemma are dropped. Empty or whitespace-bearing words are
  // rejected.
  static LemmaList from_words(const std::vector<std::string>& words) {
    LemmaList list;
    for (const std::string& w : words) {
      const std::u32string cps = decode_utf8(w);
      for (char32_t c : cps)
        if (is_whitespace(c))
          throw InputError("lemma contains whitespace: '" + w + "'");
      std::string lemma = encode_utf8(normalize_word(cps));
      if (lemma.empty())
        throw InputError("lemma normalizes to the empty string: '" + w + "'");
      if (list.set_.insert(lemma).second) list.lemmas_.push_back(std::move(lemma));
    }
    return list;
  }

  const std::vector<std::string>& lemmas() const { return lemmas_; }
  std::size_t size() const { return lemmas_.size(); }
  bool empty() const { return lemmas_.empty(); }

  bool contains(std::string_view lemma) const {
    return set_.find(lemma) != set_.end();
  }

 private:
  std::vector<std::string> lemmas_;
  std::set<std::string, std::less<>> set_;
};

struct DatasetStats {
  std::uint64_t token_count = 0;
  std::uint64_t type_count = 0;
  std::uint64_t lemma_count = 0;
  std::uint64_t lemmas_in_corpus = 0;
  std::uint64_t inflection_count = 0;
  std::uint64_t inflections_in_corpus = 0;
  std::uint64_t paradigm_size = 0;
  std::uint64_t paradigm_size_merged = 0;
};

// Inflections are counted token-based over the gold cells: a form listed
// under two slots counts twice. (Byte-identical duplicate rows of one cell
// collapse when the gold file is loaded into a SlotTable.)
inline DatasetStats dataset_stats(const Corpus& corpus, const LemmaList& lemmas,
                                  const SlotTable& gold) {
  DatasetStats s;
  s.token_count = corpus.token_count();
  s.type_count = corpus.type_count();
  s.lemma_count = lemmas.size();
  for (const std::string& lemma : lemmas.lemmas())
    if (corpus.contains(lemma)) ++s.lemmas_in_corpus;
  for (const auto& [slot, lemma_forms] : gold.entries) {
    for (const auto& [lemma, forms] : lemma_forms) {
      s.inflection_count += forms.size();
      for (const std::string& form : forms)
        if (corpus.contains(form)) ++s.inflections_in_corpus;
    }
  }
  s.paradigm_size = gold.slot_count();
  s.paradigm_size_merged = merge_identical_slots(gold).slot_count();
  return s;
}

}  // namespace paracomp

#endif  // PARACOMP_CORPUS_HPP_
