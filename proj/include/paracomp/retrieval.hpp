// paracomp/retrieval.hpp
//
// Retrieval: extract the most common edit trees from (lemma, corpus type)
// pairs, bootstrap additional lemmas from the corpus, and emit attested
// (lemma, form, tree) candidates.
//
// Pair filter: a (lemma, type) pair is considered only when
//   |type| <= |lemma| + max_affix_len  and
//   LCS(lemma, type) >= max(3, ceil(min_lcs_ratio * |lemma|)).
// The LCS threshold means lemmas shorter than 3 characters never produce
// pairs; their paradigms are still generated later from rules learned on
// longer lemmas.
//
// The (lemma x type) scan may run on several threads; aggregation is
// order-independent, so results are identical for any job count.

#ifndef PARACOMP_RETRIEVAL_HPP_
#define PARACOMP_RETRIEVAL_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <thread>
#include <unordered_map>
#include <vector>

#include "paracomp/config.hpp"
#include "paracomp/corpus.hpp"
#include "paracomp/edit_tree.hpp"
#include "paracomp/errors.hpp"

namespace paracomp {

struct TreeStats {
  EditTree tree;
  std::uint64_t frequency = 0;            // distinct (lemma, type) pairs
  std::set<std::string> lemma_coverage;   // lemmas the tree fired for
};

enum class CandidateSource { kGivenLemma, kRetrievedLemma };

struct CandidateForm {
  std::string lemma;
  std::string form;
  EditTree tree;
  CandidateSource source = CandidateSource::kGivenLemma;
};

struct RetrievedLemma {
  std::string lemma;
  std::uint32_t score = 0;  // distinct trees whose application is attested
};

namespace detail {

struct DecodedType {
  const std::string* utf8 = nullptr;
  std::u32string cps;
  std::uint64_t frequency = 0;
};

inline std::vector<DecodedType> decode_vocab(const Corpus& corpus) {
  std::vector<DecodedType> types;
  types.reserve(corpus.vocab.size());
  for (const auto& [word, freq] : corpus.vocab)
    types.push_back({&word, decode_utf8(word), freq});
  return types;
}

inline std::size_t lcs_threshold(std::size_t lemma_len, double ratio) {
  const double raw = ratio * static_cast<double>(lemma_len);
  const auto ceiled = static_cast<std::size_t>(std::ceil(raw - 1e-9));
  return std::max<std::size_t>(3, ceiled);
}

// Character-trigram posting lists over the vocabulary. Any pair passing the
// LCS >= 3 filter shares at least one trigram, so scanning a lemma's
// trigram postings finds every candidate type.
class TrigramIndex {
 public:
  explicit TrigramIndex(const std::vector<DecodedType>& types) {
    for (std::size_t idx = 0; idx < types.size(); ++idx) {
      const std::u32string& w = types[idx].cps;
      if (w.size() < 3) continue;
      for (std::size_t i = 0; i + 3 <= w.size(); ++i) {
        auto& posting = index_[w.substr(i, 3)];
        if (posting.empty() || posting.back() != idx) posting.push_back(idx);
      }
    }
  }

  // Ascending, duplicate-free type indices sharing a trigram with `word`.
  std::vector<std::size_t> candidates(const std::u32string& word) const {
    std::vector<std::size_t> out;
    if (word.size() < 3) return out;
    for (std::size_t i = 0; i + 3 <= word.size(); ++i) {
      auto it = index_.find(word.substr(i, 3));
      if (it != index_.end())
        out.insert(out.end(), it->second.begin(), it->second.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

 private:
  struct U32Hash {
    std::size_t operator()(const std::u32string& s) const noexcept {
      std::size_t h = 1469598103934665603ull;
      for (char32_t c : s) {
        h ^= static_cast<std::size_t>(c);
        h *= 1099511628211ull;
      }
      return h;
    }
  };
  std::unordered_map<std::u32string, std::vector<std::size_t>, U32Hash> index_;
};

struct TreeAgg {
  std::uint64_t frequency = 0;
  std::set<std::string> coverage;
};

using TreeAggMap = std::unordered_map<EditTree, TreeAgg, EditTreeHash>;

// Runs fn(begin, end) over [0, n) split into roughly equal chunks, one
// thread each. fn must only touch its own chunk's state.
template <typename Fn>
void parallel_chunks(std::size_t n, std::size_t jobs, Fn&& fn) {
  jobs = std::max<std::size_t>(1, std::min(jobs, n == 0 ? 1 : n));
  if (jobs == 1) {
    fn(0, n, 0);
    return;
  }
  std::vector<std::thread> threads;
  const std::size_t chunk = (n + jobs - 1) / jobs;
  for (std::size_t t = 0; t < jobs; ++t) {
    const std::size_t lo = t * chunk;
    const std::size_t hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    threads.emplace_back([&fn, lo, hi, t] { fn(lo, hi, t); });
  }
  for (auto& th : threads) th.join();
}

inline std::vector<TreeStats> extract_trees_decoded(
    const std::vector<std::pair<std::string, std::u32string>>& lemmas,
    const std::vector<DecodedType>& types, const TrigramIndex& index,
    const Config& cfg) {
  std::size_t jobs = std::max<std::size_t>(1, cfg.jobs);
  std::vector<TreeAggMap> partial(jobs);
  parallel_chunks(lemmas.size(), jobs, [&](std::size_t lo, std::size_t hi,
                                           std::size_t slot) {
    TreeAggMap& agg = partial[slot];
    for (std::size_t li = lo; li < hi; ++li) {
      const auto& [lemma_utf8, lemma] = lemmas[li];
      const std::size_t threshold = lcs_threshold(lemma.size(), cfg.min_lcs_ratio);
      if (threshold > lemma.size()) continue;  // unreachable LCS
      for (std::size_t ti : index.candidates(lemma)) {
        const DecodedType& type = types[ti];
        if (type.cps.size() > lemma.size() + cfg.max_affix_len) continue;
        const CommonSubstring m = longest_common_substring(lemma, type.cps);
        if (m.length < threshold) continue;
        EditTree tree = EditTree::build(lemma, type.cps);
        TreeAgg& entry = agg[std::move(tree)];
        entry.frequency += 1;
        entry.coverage.insert(lemma_utf8);
      }
    }
  });

  TreeAggMap merged = std::move(partial[0]);
  for (std::size_t t = 1; t < partial.size(); ++t) {
    for (auto& [tree, agg] : partial[t]) {
      TreeAgg& entry = merged[tree];
      entry.frequency += agg.frequency;
      entry.coverage.merge(agg.coverage);
    }
  }

  std::vector<TreeStats> out;
  out.reserve(merged.size());
  for (auto& [tree, agg] : merged) {
    if (agg.frequency < cfg.min_tree_freq) continue;
    out.push_back({tree, agg.frequency, std::move(agg.coverage)});
  }
  std::sort(out.begin(), out.end(), [](const TreeStats& a, const TreeStats& b) {
    if (a.frequency != b.frequency) return a.frequency > b.frequency;
    return EditTree::compare(a.tree, b.tree) < 0;
  });
  if (out.size() > cfg.max_trees)
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(cfg.max_trees), out.end());
  return out;
}

inline std::vector<std::pair<std::string, std::u32string>> decode_lemmas(
    const std::vector<std::string>& lemmas) {
  std::vector<std::pair<std::string, std::u32string>> out;
  out.reserve(lemmas.size());
  for (const std::string& l : lemmas) out.emplace_back(l, decode_utf8(l));
  return out;
}

}  // namespace detail

// Stage 1: count the edit tree of every (lemma, type) pair passing the
// filter; keep trees with frequency >= min_tree_freq, sorted by frequency
// (desc) then canonical tree order, truncated to max_trees.
inline std::vector<TreeStats> extract_trees(const LemmaList& lemmas,
                                            const Corpus& corpus,
                                            const Config& cfg) {
  if (lemmas.empty()) throw InputError("lemma list is empty");
  const auto types = detail::decode_vocab(corpus);
  const detail::TrigramIndex index(types);
  return detail::extract_trees_decoded(detail::decode_lemmas(lemmas.lemmas()),
                                       types, index, cfg);
}

// Stage 2: score every corpus type that is not a known lemma by the number
// of distinct kept trees whose application to it lands in the vocabulary.
// Types scoring >= min_lemma_score are returned sorted by score (desc),
// corpus frequency (desc), then lexicographically, capped at max_new_lemmas.
inline std::vector<RetrievedLemma> retrieve_lemmas(const Corpus& corpus,
                                                   const std::vector<TreeStats>& trees,
                                                   const LemmaList& known,
                                                   const Config& cfg) {
  if (trees.empty() || cfg.max_new_lemmas == 0) return {};
  const auto types = detail::decode_vocab(corpus);
  std::vector<std::uint32_t> scores(types.size(), 0);
  detail::parallel_chunks(
      types.size(), std::max<std::size_t>(1, cfg.jobs),
      [&](std::size_t lo, std::size_t hi, std::size_t) {
        for (std::size_t ti = lo; ti < hi; ++ti) {
          const auto& type = types[ti];
          if (known.contains(*type.utf8)) continue;
          std::uint32_t score = 0;
          for (const TreeStats& ts : trees) {
            auto applied = ts.tree.apply(type.cps);
            if (applied && corpus.contains(encode_utf8(*applied))) ++score;
          }
          scores[ti] = score;
        }
      });

  std::vector<RetrievedLemma> out;
  for (std::size_t ti = 0; ti < types.size(); ++ti)
    if (scores[ti] >= cfg.min_lemma_score && !known.contains(*types[ti].utf8))
      out.push_back({*types[ti].utf8, scores[ti]});
  std::sort(out.begin(), out.end(),
            [&corpus](const RetrievedLemma& a, const RetrievedLemma& b) {
              if (a.score != b.score) return a.score > b.score;
              const auto fa = corpus.frequency(a.lemma);
              const auto fb = corpus.frequency(b.lemma);
              if (fa != fb) return fa > fb;
              return a.lemma < b.lemma;
            });
  if (out.size() > cfg.max_new_lemmas) out.resize(cfg.max_new_lemmas);
  return out;
}

// Stage 3: one CandidateForm per (lemma, tree) whose application is an
// attested corpus type. Sorted by (lemma, form, tree) so the result does
// not depend on lemma-list order.
inline std::vector<CandidateForm> discover_forms(
    const LemmaList& given, const std::vector<std::string>& retrieved,
    const Corpus& corpus, const std::vector<TreeStats>& trees) {
  std::vector<CandidateForm> out;
  const auto emit = [&](const std::string& lemma_utf8, CandidateSource source) {
    const std::u32string lemma = decode_utf8(lemma_utf8);
    for (const TreeStats& ts : trees) {
      auto applied = ts.tree.apply(lemma);
      if (!applied) continue;
      std::string form = encode_utf8(*applied);
      if (!corpus.contains(form)) continue;
      out.push_back({lemma_utf8, std::move(form), ts.tree, source});
    }
  };
  for (const std::string& lemma : given.lemmas())
    emit(lemma, CandidateSource::kGivenLemma);
  for (const std::string& lemma : retrieved)
    emit(lemma, CandidateSource::kRetrievedLemma);
  std::sort(out.begin(), out.end(), [](const CandidateForm& a, const CandidateForm& b) {
    if (a.lemma != b.lemma) return a.lemma < b.lemma;
    if (a.form != b.form) return a.form < b.form;
    return EditTree::compare(a.tree, b.tree) < 0;
  });
  return out;
}

struct RetrievalResult {
  std::vector<CandidateForm> candidates;
  std::vector<TreeStats> trees;            // kept trees after expansion
  std::vector<RetrievedLemma> retrieved;   // bootstrap lemmas, scored
};

// Full retrieval component: extract trees, bootstrap new lemmas, re-extract
// over the expanded lemma list (bootstrap_rounds times), then collect
// attested candidates.
inline RetrievalResult run_retrieval(const LemmaList& lemmas, const Corpus& corpus,
                                     const Config& cfg) {
  RetrievalResult result;
  std::vector<TreeStats> trees = extract_trees(lemmas, corpus, cfg);
  std::vector<std::string> expanded = lemmas.lemmas();
  for (std::uint32_t round = 0; round < cfg.bootstrap_rounds; ++round) {
    const LemmaList known = LemmaList::from_words(expanded);
    std::vector<RetrievedLemma> found = retrieve_lemmas(corpus, trees, known, cfg);
    if (found.empty()) break;
    for (const RetrievedLemma& r : found) expanded.push_back(r.lemma);
    result.retrieved.insert(result.retrieved.end(), found.begin(), found.end());
    trees = extract_trees(LemmaList::from_words(expanded), corpus, cfg);
  }
  std::vector<std::string> retrieved_only(expanded.begin() + lemmas.size(),
                                          expanded.end());
  result.candidates =
      discover_forms(lemmas, retrieved_only, corpus, trees);
  result.trees = std::move(trees);
  return result;
}

}  // namespace paracomp

#endif  // PARACOMP_RETRIEVAL_HPP_
