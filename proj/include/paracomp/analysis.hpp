// paracomp/analysis.hpp
//
// Seen/unseen breakdown: BMAcc evaluated separately for lemmas attested as
// corpus types and for the rest. Tables are restricted to the lemma subset
// and re-merged, i.e. each subset is scored as its own sub-problem.

#ifndef PARACOMP_ANALYSIS_HPP_
#define PARACOMP_ANALYSIS_HPP_

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "paracomp/bmacc.hpp"
#include "paracomp/corpus.hpp"

namespace paracomp {

struct SeenSplit {
  LemmaList seen;
  LemmaList unseen;
};

// A lemma is seen iff its normalized form occurs as a corpus type.
inline SeenSplit split_seen(const LemmaList& lemmas, const Corpus& corpus) {
  std::vector<std::string> seen, unseen;
  for (const std::string& lemma : lemmas.lemmas())
    (corpus.contains(lemma) ? seen : unseen).push_back(lemma);
  return {LemmaList::from_words(seen), LemmaList::from_words(unseen)};
}

// Keeps only the given lemmas; slots left without lemmas disappear.
inline SlotTable restrict_to_lemmas(const SlotTable& table,
                                    const LemmaList& lemmas) {
  SlotTable out;
  for (const auto& [slot, lemma_forms] : table.entries) {
    for (const auto& [lemma, forms] : lemma_forms) {
      if (!lemmas.contains(lemma)) continue;
      out.entries[slot][lemma] = forms;
    }
  }
  return out;
}

struct SplitReports {
  // Empty when the corresponding lemma subset is empty (not applicable).
  std::optional<BmaccReport> seen;
  std::optional<BmaccReport> unseen;
};

inline SplitReports bmacc_by_split(const SlotTable& pred, const SlotTable& gold,
                                   const SeenSplit& split,
                                   MatchPolicy policy = MatchPolicy::kAny) {
  SplitReports reports;
  if (!split.seen.empty())
    reports.seen = bmacc(restrict_to_lemmas(pred, split.seen),
                         restrict_to_lemmas(gold, split.seen), policy);
  if (!split.unseen.empty())
    reports.unseen = bmacc(restrict_to_lemmas(pred, split.unseen),
                           restrict_to_lemmas(gold, split.unseen), policy);
  return reports;
}

}  // namespace paracomp

#endif  // PARACOMP_ANALYSIS_HPP_
