// paracomp/slot_discovery.hpp
//
// Paradigm size discovery: trees realizing the same inflection fire on
// near-disjoint lemma sets (allomorphs are in complementary distribution),
// so greedy agglomeration by coverage overlap groups them into slots.
// The grouping strategy sits behind group_trees() so it can be swapped out.

#ifndef PARACOMP_SLOT_DISCOVERY_HPP_
#define PARACOMP_SLOT_DISCOVERY_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "paracomp/config.hpp"
#include "paracomp/errors.hpp"
#include "paracomp/inflector.hpp"
#include "paracomp/retrieval.hpp"

namespace paracomp {

struct SlotGroup {
  std::uint32_t slot_id = 0;  // contiguous from 1
  std::vector<EditTree> trees;
  std::set<std::string> lemma_coverage;  // union of member coverages
};

namespace detail {

inline std::size_t intersection_size(const std::set<std::string>& a,
                                     const std::set<std::string>& b) {
  const std::set<std::string>& small = a.size() <= b.size() ? a : b;
  const std::set<std::string>& large = a.size() <= b.size() ? b : a;
  std::size_t n = 0;
  for (const std::string& x : small) n += large.count(x);
  return n;
}

inline double overlap_ratio(const std::set<std::string>& a,
                            const std::set<std::string>& b) {
  const std::size_t lo = std::min(a.size(), b.size());
  if (lo == 0) return 0.0;
  return static_cast<double>(intersection_size(a, b)) / static_cast<double>(lo);
}

}  // namespace detail

// Greedy agglomeration in the input order (frequency desc, canonical tree
// order — as produced by extract_trees). A tree joins the qualifying group
// with the lowest overlap ratio (ties: earliest-seeded group), seeds a new
// group when none qualifies, and once max_slots groups exist it joins the
// group with the lowest overlap outright so no tree is ever dropped.
inline std::vector<SlotGroup> group_trees(const std::vector<TreeStats>& trees,
                                          const Config& cfg) {
  std::vector<SlotGroup> groups;
  for (const TreeStats& ts : trees) {
    std::size_t best = groups.size();
    double best_ratio = 2.0;
    for (std::size_t g = 0; g < groups.size(); ++g) {
      const double ratio =
          detail::overlap_ratio(ts.lemma_coverage, groups[g].lemma_coverage);
      if (ratio < best_ratio) {
        best_ratio = ratio;
        best = g;
      }
    }
    const bool joins = best < groups.size() &&
                       (best_ratio <= cfg.max_overlap || groups.size() >= cfg.max_slots);
    if (joins) {
      groups[best].trees.push_back(ts.tree);
      groups[best].lemma_coverage.insert(ts.lemma_coverage.begin(),
                                         ts.lemma_coverage.end());
    } else {
      SlotGroup group;
      group.slot_id = static_cast<std::uint32_t>(groups.size() + 1);
      group.trees.push_back(ts.tree);
      group.lemma_coverage = ts.lemma_coverage;
      groups.push_back(std::move(group));
    }
  }
  return groups;
}

// Copies each candidate's slot id from the group containing its tree. When
// one (lemma, slot) cell collects several distinct forms, the corpus-most-
// frequent form wins (ties: lexicographically smallest). Output is sorted
// by (lemma, slot).
inline std::vector<InflectionTriple> assign_slots(
    const std::vector<CandidateForm>& candidates,
    const std::vector<SlotGroup>& groups, const Corpus& corpus) {
  std::map<EditTree, std::uint32_t> tree_slot;
  for (const SlotGroup& g : groups)
    for (const EditTree& t : g.trees) tree_slot.emplace(t, g.slot_id);

  // (lemma, slot) -> best form so far
  std::map<std::pair<std::string, std::uint32_t>, std::string> cells;
  for (const CandidateForm& c : candidates) {
    auto it = tree_slot.find(c.tree);
    if (it == tree_slot.end())
      throw InternalError("candidate tree missing from slot groups: " +
                          c.tree.to_string());
    const auto key = std::make_pair(c.lemma, it->second);
    auto [cell, inserted] = cells.emplace(key, c.form);
    if (inserted) continue;
    const std::uint64_t have = corpus.frequency(cell->second);
    const std::uint64_t want = corpus.frequency(c.form);
    if (want > have || (want == have && c.form < cell->second))
      cell->second = c.form;
  }

  std::vector<InflectionTriple> out;
  out.reserve(cells.size());
  for (const auto& [key, form] : cells) out.push_back({key.first, form, key.second});
  return out;
}

}  // namespace paracomp

#endif  // PARACOMP_SLOT_DISCOVERY_HPP_
