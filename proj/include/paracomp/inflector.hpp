// paracomp/inflector.hpp
//
// Generation component: split retrieved triples into train/dev, learn
// per-slot affix substitution rules, and fill every missing (lemma, slot)
// cell. The learner strips the longest common prefix of (lemma, form) and
// records the changed suffix pair at every conditioning length up to
// max_context characters; pairs whose longest common substring sits at the
// end of both words (prefixing morphology) additionally get mirrored prefix
// rules. Generation picks the applicable rule with the longest matched
// affix and falls back to the lemma itself, so every cell gets a form.

#ifndef PARACOMP_INFLECTOR_HPP_
#define PARACOMP_INFLECTOR_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "paracomp/corpus.hpp"
#include "paracomp/edit_tree.hpp"
#include "paracomp/errors.hpp"
#include "paracomp/unicode.hpp"

namespace paracomp {

struct InflectionTriple {
  std::string lemma;
  std::string form;
  std::uint32_t slot_id = 0;

  friend bool operator==(const InflectionTriple&, const InflectionTriple&) = default;
  friend auto operator<=>(const InflectionTriple&, const InflectionTriple&) = default;
};

struct AffixRule {
  std::u32string form_affix;
  std::uint32_t support = 0;
};

struct SlotRules {
  // lemma affix (the rule key) -> replacement; one rule per key. A
  // replacement observed from a pair whose whole lemma equals the key wins
  // outright (this is what lets generate() reproduce its training pairs),
  // then higher support, then the smaller form affix.
  std::map<std::u32string, AffixRule> suffix;
  std::map<std::u32string, AffixRule> prefix;
  std::size_t longest_suffix_key = 0;
  std::size_t longest_prefix_key = 0;
};

struct RuleSet {
  std::map<std::uint32_t, SlotRules> slots;
};

struct Paradigm {
  std::string lemma;
  std::map<std::uint32_t, std::string> cells;  // slot -> form
};

namespace detail {

inline std::uint64_t fnv1a64(std::string_view bytes,
                             std::uint64_t h = 14695981039346656037ull) {
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::uint64_t triple_hash(const InflectionTriple& t, std::uint64_t seed) {
  std::uint64_t h = fnv1a64(t.lemma);
  h = fnv1a64("\x1f", h);
  h = fnv1a64(std::to_string(t.slot_id), h);
  char seed_bytes[8];
  for (int i = 0; i < 8; ++i)
    seed_bytes[i] = static_cast<char>((seed >> (8 * i)) & 0xFF);
  return fnv1a64(std::string_view(seed_bytes, 8), h);
}

inline std::size_t common_prefix_len(std::u32string_view a, std::u32string_view b) {
  std::size_t n = 0;
  while (n < a.size() && n < b.size() && a[n] == b[n]) ++n;
  return n;
}

inline std::size_t common_suffix_len(std::u32string_view a, std::u32string_view b) {
  std::size_t n = 0;
  while (n < a.size() && n < b.size() && a[a.size() - 1 - n] == b[b.size() - 1 - n])
    ++n;
  return n;
}

}  // namespace detail

struct TrainDevSplit {
  std::vector<InflectionTriple> train;
  std::vector<InflectionTriple> dev;
};

// Deterministic split keyed by a stable hash of (lemma, slot) and the seed:
// the round(n * dev_fraction) smallest-hashed triples form the dev set,
// except that any slot with >= 2 triples keeps at least one in train.
// (The dev set exists for pipeline parity; the rule learner has nothing to
// tune and never reads it.)
inline TrainDevSplit split_train_dev(const std::vector<InflectionTriple>& triples,
                                     double dev_fraction, std::uint64_t seed) {
  if (dev_fraction < 0.0 || dev_fraction > 0.5)
    throw InputError("dev_fraction must be in [0, 0.5]");
  std::vector<std::size_t> order(triples.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::vector<std::uint64_t> hashes(triples.size());
  for (std::size_t i = 0; i < triples.size(); ++i)
    hashes[i] = detail::triple_hash(triples[i], seed);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (hashes[a] != hashes[b]) return hashes[a] < hashes[b];
    return std::tie(triples[a].lemma, triples[a].slot_id, triples[a].form) <
           std::tie(triples[b].lemma, triples[b].slot_id, triples[b].form);
  });
  const auto dev_size = static_cast<std::size_t>(
      std::llround(dev_fraction * static_cast<double>(triples.size())));

  std::vector<char> in_dev(triples.size(), 0);
  for (std::size_t k = 0; k < dev_size; ++k) in_dev[order[k]] = 1;

  // Per-slot counts to enforce train retention.
  std::map<std::uint32_t, std::pair<std::size_t, std::size_t>> slot_counts;
  for (std::size_t i = 0; i < triples.size(); ++i) {
    auto& [total, train] = slot_counts[triples[i].slot_id];
    ++total;
    if (!in_dev[i]) ++train;
  }
  for (const auto& [slot, counts] : slot_counts) {
    if (counts.first < 2 || counts.second > 0) continue;
    std::size_t pick = triples.size();
    for (std::size_t i = 0; i < triples.size(); ++i) {
      if (!in_dev[i] || triples[i].slot_id != slot) continue;
      if (pick == triples.size() ||
          std::tie(triples[i].lemma, triples[i].form) <
              std::tie(triples[pick].lemma, triples[pick].form))
        pick = i;
    }
    if (pick < triples.size()) in_dev[pick] = 0;
  }

  TrainDevSplit split;
  for (std::size_t i = 0; i < triples.size(); ++i)
    (in_dev[i] ? split.dev : split.train).push_back(triples[i]);
  return split;
}

// Learns suffix (and, for prefixing pairs, prefix) substitution rules from
// training triples, one rule per (slot, affix) key.
inline RuleSet learn_rules(const std::vector<InflectionTriple>& train,
                           std::size_t max_context = 6) {
  struct ValStats {
    std::uint32_t support = 0;
    bool whole_lemma = false;  // observed from a pair whose lemma is the key
  };
  // slot -> is_prefix -> key -> form_affix -> stats
  std::map<std::uint32_t,
           std::array<std::map<std::u32string, std::map<std::u32string, ValStats>>, 2>>
      counts;
  for (const InflectionTriple& t : train) {
    const std::u32string lemma = decode_utf8(t.lemma);
    const std::u32string form = decode_utf8(t.form);

    const std::size_t lcp = detail::common_prefix_len(lemma, form);
    const std::size_t changed = lemma.size() - lcp;
    const std::size_t hi =
        std::max(changed, std::min(lemma.size(), max_context));
    auto& suffix_counts = counts[t.slot_id][0];
    for (std::size_t len = changed; len <= hi; ++len) {
      const std::size_t extra = len - changed;
      const std::u32string key = lemma.substr(lemma.size() - len);
      ValStats& stats = suffix_counts[key][form.substr(lcp - extra)];
      ++stats.support;
      stats.whole_lemma = stats.whole_lemma || len == lemma.size();
    }

    // Prefixing pair: the longest common substring ends both words.
    const CommonSubstring m = longest_common_substring(lemma, form);
    const bool anchored_at_end = m.length > 0 &&
                                 m.start_a + m.length == lemma.size() &&
                                 m.start_b + m.length == form.size();
    if (anchored_at_end) {
      const std::size_t lcs = detail::common_suffix_len(lemma, form);
      const std::size_t changed_p = lemma.size() - lcs;
      const std::size_t hi_p =
          std::max(changed_p, std::min(lemma.size(), max_context));
      auto& prefix_counts = counts[t.slot_id][1];
      for (std::size_t len = changed_p; len <= hi_p; ++len) {
        const std::size_t extra = len - changed_p;
        const std::u32string key = lemma.substr(0, len);
        ValStats& stats = prefix_counts[key][form.substr(0, form.size() - lcs + extra)];
        ++stats.support;
        stats.whole_lemma = stats.whole_lemma || len == lemma.size();
      }
    }
  }

  RuleSet rules;
  for (const auto& [slot, by_kind] : counts) {
    SlotRules& sr = rules.slots[slot];
    for (int kind = 0; kind < 2; ++kind) {
      auto& out = kind == 0 ? sr.suffix : sr.prefix;
      auto& longest = kind == 0 ? sr.longest_suffix_key : sr.longest_prefix_key;
      for (const auto& [key, vals] : by_kind[kind]) {
        AffixRule best;
        bool best_whole = false;
        for (const auto& [val, stats] : vals) {
          const auto rank = std::make_tuple(stats.whole_lemma, stats.support);
          const auto best_rank = std::make_tuple(best_whole, best.support);
          if (rank > best_rank ||
              (rank == best_rank && val < best.form_affix)) {
            best = {val, stats.support};
            best_whole = stats.whole_lemma;
          }
        }
        out.emplace(key, std::move(best));
        longest = std::max(longest, key.size());
      }
    }
  }
  return rules;
}

// Applies the longest-context applicable rule; prefix rules win only when
// their matched context is strictly longer than the best suffix match.
// Unknown slots, rule-less lemmas, and rules that would produce an empty
// form all fall back to the lemma itself.
inline std::string generate(const RuleSet& rules, std::string_view lemma_utf8,
                            std::uint32_t slot_id) {
  const auto slot_it = rules.slots.find(slot_id);
  if (slot_it == rules.slots.end()) return std::string(lemma_utf8);
  const SlotRules& sr = slot_it->second;
  const std::u32string lemma = decode_utf8(lemma_utf8);

  // npos marks "no applicable rule"; the empty key applies with length 0.
  constexpr auto kNone = std::numeric_limits<std::size_t>::max();
  std::size_t suffix_len = kNone, prefix_len = kNone;
  const AffixRule* suffix_rule = nullptr;
  const AffixRule* prefix_rule = nullptr;
  for (std::size_t len = std::min(lemma.size(), sr.longest_suffix_key);; --len) {
    auto it = sr.suffix.find(lemma.substr(lemma.size() - len));
    if (it != sr.suffix.end()) {
      suffix_len = len;
      suffix_rule = &it->second;
      break;
    }
    if (len == 0) break;
  }
  for (std::size_t len = std::min(lemma.size(), sr.longest_prefix_key);; --len) {
    auto it = sr.prefix.find(lemma.substr(0, len));
    if (it != sr.prefix.end()) {
      prefix_len = len;
      prefix_rule = &it->second;
      break;
    }
    if (len == 0) break;
  }

  std::u32string out;
  if (prefix_rule && (suffix_len == kNone || prefix_len > suffix_len)) {
    out = prefix_rule->form_affix + lemma.substr(prefix_len);
  } else if (suffix_rule) {
    out = lemma.substr(0, lemma.size() - suffix_len) + suffix_rule->form_affix;
  } else {
    return std::string(lemma_utf8);
  }
  if (out.empty()) return std::string(lemma_utf8);
  return encode_utf8(out);
}

// Fills |lemmas| x |slot_ids| cells: a retrieved triple's form wins over
// generation. Total by construction — every cell of every paradigm is
// filled.
inline std::vector<Paradigm> complete_paradigms(
    const LemmaList& lemmas, const std::vector<InflectionTriple>& triples,
    const RuleSet& rules, const std::vector<std::uint32_t>& slot_ids) {
  std::map<std::pair<std::string, std::uint32_t>, std::string> retrieved;
  for (const InflectionTriple& t : triples)
    retrieved.emplace(std::make_pair(t.lemma, t.slot_id), t.form);

  std::vector<Paradigm> out;
  out.reserve(lemmas.size());
  for (const std::string& lemma : lemmas.lemmas()) {
    Paradigm p;
    p.lemma = lemma;
    for (std::uint32_t slot : slot_ids) {
      auto it = retrieved.find(std::make_pair(lemma, slot));
      p.cells[slot] = it != retrieved.end() ? it->second : generate(rules, lemma, slot);
    }
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace paracomp

#endif  // PARACOMP_INFLECTOR_HPP_
