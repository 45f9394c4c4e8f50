// paracomp/pipeline.hpp
//
// End-to-end paradigm completion: retrieval -> slot discovery -> rule
// learning -> generation. Deterministic for a given (corpus, lemmas,
// config), independent of the job count.

#ifndef PARACOMP_PIPELINE_HPP_
#define PARACOMP_PIPELINE_HPP_

#include <cstdint>
#include <vector>

#include "paracomp/config.hpp"
#include "paracomp/corpus.hpp"
#include "paracomp/inflector.hpp"
#include "paracomp/retrieval.hpp"
#include "paracomp/slot_discovery.hpp"

namespace paracomp {

struct PipelineResult {
  RetrievalResult retrieval;
  std::vector<SlotGroup> groups;
  std::vector<InflectionTriple> triples;  // attested cells (train + dev)
  TrainDevSplit split;
  RuleSet rules;
  std::vector<Paradigm> paradigms;
};

inline PipelineResult run_pipeline(const Corpus& corpus, const LemmaList& lemmas,
                                   const Config& cfg) {
  cfg.validate();
  PipelineResult result;
  result.retrieval = run_retrieval(lemmas, corpus, cfg);
  result.groups = group_trees(result.retrieval.trees, cfg);
  result.triples = assign_slots(result.retrieval.candidates, result.groups, corpus);
  result.split = split_train_dev(result.triples, cfg.dev_fraction, cfg.seed);
  result.rules = learn_rules(result.split.train, cfg.max_context);
  std::vector<std::uint32_t> slot_ids;
  slot_ids.reserve(result.groups.size());
  for (const SlotGroup& g : result.groups) slot_ids.push_back(g.slot_id);
  result.paradigms = complete_paradigms(lemmas, result.triples, result.rules, slot_ids);
  return result;
}

}  // namespace paracomp

#endif  // PARACOMP_PIPELINE_HPP_
