// paracomp/bmacc.hpp
//
// Macro-averaged best-match accuracy. Predicted and gold paradigm tables are
// first reduced by merging slots whose lemma->forms mappings are identical,
// then a per-slot accuracy matrix is built and the optimal assignment of
// predicted to gold slots is computed; the score is the matched accuracy sum
// divided by the larger merged slot count.
//
// Slot labels are opaque strings so feature bundles can serve directly as
// gold labels; purely numeric labels order numerically, everything else
// bytewise (numeric before non-numeric).

#ifndef PARACOMP_BMACC_HPP_
#define PARACOMP_BMACC_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "paracomp/errors.hpp"

namespace paracomp {

namespace detail {

inline bool is_numeric_label(std::string_view s) {
  if (s.empty() || s.size() > 18) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace detail

// Total order on slot labels: numeric labels by value (then raw bytes so
// "07" and "7" stay distinct), numeric before non-numeric, otherwise
// bytewise.
struct SlotLabelLess {
  using is_transparent = void;
  bool operator()(std::string_view a, std::string_view b) const {
    const bool na = detail::is_numeric_label(a);
    const bool nb = detail::is_numeric_label(b);
    if (na != nb) return na;
    if (na) {
      const std::uint64_t va = std::stoull(std::string(a));
      const std::uint64_t vb = std::stoull(std::string(b));
      if (va != vb) return va < vb;
    }
    return a < b;
  }
};

// lemma -> non-empty set of surface forms
using LemmaForms = std::map<std::string, std::set<std::string>>;

struct SlotTable {
  std::map<std::string, LemmaForms, SlotLabelLess> entries;

  void add(std::string_view slot, std::string_view lemma, std::string_view form) {
    if (slot.empty() || lemma.empty() || form.empty())
      throw InputError("slot table entries must be non-empty");
    entries[std::string(slot)][std::string(lemma)].insert(std::string(form));
  }

  std::size_t slot_count() const { return entries.size(); }
  bool empty() const { return entries.empty(); }

  std::set<std::string> lemmas() const {
    std::set<std::string> out;
    for (const auto& [slot, lf] : entries)
      for (const auto& [lemma, forms] : lf) out.insert(lemma);
    return out;
  }
};

// Merges slots whose lemma->forms maps are identical (same lemma set, same
// form sets). The surviving label is the smallest under SlotLabelLess.
// Idempotent and independent of insertion order.
inline SlotTable merge_identical_slots(const SlotTable& table) {
  std::map<LemmaForms, std::string> survivors;
  SlotLabelLess less;
  for (const auto& [label, forms] : table.entries) {
    auto [it, inserted] = survivors.emplace(forms, label);
    if (!inserted && less(label, it->second)) it->second = label;
  }
  SlotTable out;
  for (const auto& [forms, label] : survivors) out.entries[label] = forms;
  return out;
}

enum class MatchPolicy {
  kAny,  // a lemma is correct if any predicted form is in the gold form set
  kAll,  // a lemma is correct only if the gold form set is fully predicted
};

struct AccuracyMatrix {
  std::vector<std::string> pred_labels;
  std::vector<std::string> gold_labels;
  std::vector<std::vector<double>> cell;  // [pred][gold], values in [0,1]
};

// cell(i,j) = fraction of gold slot j's lemmas for which predicted slot i
// has a correct form; lemmas absent from the predicted slot count as wrong.
// Both tables are expected to be merged already.
inline AccuracyMatrix accuracy_matrix(const SlotTable& pred, const SlotTable& gold,
                                      MatchPolicy policy = MatchPolicy::kAny) {
  AccuracyMatrix m;
  for (const auto& [label, forms] : pred.entries) m.pred_labels.push_back(label);
  for (const auto& [label, forms] : gold.entries) {
    if (forms.empty())
      throw InputError("gold slot '" + label + "' has no lemmas");
    m.gold_labels.push_back(label);
  }
  m.cell.assign(m.pred_labels.size(),
                std::vector<double>(m.gold_labels.size(), 0.0));
  std::size_t i = 0;
  for (const auto& [plabel, pforms] : pred.entries) {
    std::size_t j = 0;
    for (const auto& [glabel, gforms] : gold.entries) {
      std::size_t correct = 0;
      for (const auto& [lemma, gold_set] : gforms) {
        auto it = pforms.find(lemma);
        if (it == pforms.end()) continue;
        const auto& pred_set = it->second;
        bool ok;
        if (policy == MatchPolicy::kAny) {
          ok = std::any_of(pred_set.begin(), pred_set.end(),
                           [&](const std::string& f) { return gold_set.count(f) > 0; });
        } else {
          ok = std::all_of(gold_set.begin(), gold_set.end(),
                           [&](const std::string& f) { return pred_set.count(f) > 0; });
        }
        if (ok) ++correct;
      }
      m.cell[i][j] = static_cast<double>(correct) / static_cast<double>(gforms.size());
      ++j;
    }
    ++i;
  }
  return m;
}

struct MatchingResult {
  // (pred index, gold index) pairs saturating the smaller side, sorted by
  // pred index.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  double total = 0.0;
};

namespace detail {

// Assignment on an n x m weight matrix, n <= m: potentials-based Hungarian
// algorithm (shortest augmenting paths), minimizing cost = -weight.
// Deterministic for a given matrix.
inline std::vector<std::size_t> assign_rows(
    const std::vector<std::vector<double>>& w, std::size_t n, std::size_t m) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  // 1-indexed potentials; way[j] = previous column on the shortest path.
  std::vector<double> u(n + 1, 0.0), v(m + 1, 0.0);
  std::vector<std::size_t> match(m + 1, 0);  // column -> row (1-indexed, 0 = free)
  std::vector<std::size_t> way(m + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    match[0] = i;
    std::size_t j0 = 0;
    std::vector<double> minv(m + 1, kInf);
    std::vector<char> used(m + 1, 0);
    do {
      used[j0] = 1;
      const std::size_t i0 = match[j0];
      double delta = kInf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= m; ++j) {
        if (used[j]) continue;
        const double cur = -w[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= m; ++j) {
        if (used[j]) {
          u[match[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<std::size_t> row_to_col(n, 0);
  for (std::size_t j = 1; j <= m; ++j)
    if (match[j] != 0) row_to_col[match[j] - 1] = j - 1;
  return row_to_col;
}

}  // namespace detail

// Maximum-weight full matching of the matrix's bipartite graph: saturates
// the smaller side and maximizes total weight. Among equal-weight choices
// the result is deterministic, and a pairwise polish prefers
// lexicographically earlier (pred, gold) index pairs.
inline MatchingResult max_weight_full_matching(const AccuracyMatrix& matrix) {
  const std::size_t np = matrix.pred_labels.size();
  const std::size_t ng = matrix.gold_labels.size();
  MatchingResult out;
  if (np == 0 || ng == 0) return out;

  const bool transposed = np > ng;
  const std::size_t n = transposed ? ng : np;
  const std::size_t m = transposed ? np : ng;
  std::vector<std::vector<double>> w(n, std::vector<double>(m, 0.0));
  bool constant = true;
  for (std::size_t i = 0; i < np; ++i)
    for (std::size_t j = 0; j < ng; ++j) {
      (transposed ? w[j][i] : w[i][j]) = matrix.cell[i][j];
      constant = constant && matrix.cell[i][j] == matrix.cell[0][0];
    }

  std::vector<std::size_t> row_to_col;
  if (constant) {
    // Every full matching is optimal; take the diagonal.
    for (std::size_t i = 0; i < n; ++i) row_to_col.push_back(i);
  } else {
    row_to_col = detail::assign_rows(w, n, m);
  }

  // Equal-weight 2-opt polish toward lexicographically smaller pairs. Each
  // pass is a bubble step, so n passes reach the fixpoint; for large
  // matrices the pass count is capped (every matrix still maps to one
  // deterministic matching).
  const std::size_t max_passes = n <= 64 ? n + 1 : 8;
  bool changed = true;
  for (std::size_t pass = 0; changed && pass < max_passes; ++pass) {
    changed = false;
    std::vector<char> col_used(m, 0);
    for (std::size_t c : row_to_col) col_used[c] = 1;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t c = 0; c < row_to_col[i]; ++c) {
        if (col_used[c]) continue;
        if (w[i][c] == w[i][row_to_col[i]]) {
          col_used[row_to_col[i]] = 0;
          col_used[c] = 1;
          row_to_col[i] = c;
          changed = true;
        }
      }
      for (std::size_t k = i + 1; k < n; ++k) {
        const std::size_t ci = row_to_col[i], ck = row_to_col[k];
        if (ck < ci && w[i][ci] + w[k][ck] == w[i][ck] + w[k][ci]) {
          std::swap(row_to_col[i], row_to_col[k]);
          changed = true;
        }
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t p = transposed ? row_to_col[i] : i;
    const std::size_t g = transposed ? i : row_to_col[i];
    out.pairs.emplace_back(p, g);
    out.total += matrix.cell[p][g];
  }
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

struct MatchedPair {
  std::string pred_label;
  std::string gold_label;
  double accuracy = 0.0;
};

struct BmaccReport {
  double score = 0.0;
  std::vector<MatchedPair> matching;
  std::size_t merged_pred_count = 0;
  std::size_t merged_gold_count = 0;
};

inline BmaccReport bmacc(const SlotTable& pred, const SlotTable& gold,
                         MatchPolicy policy = MatchPolicy::kAny) {
  BmaccReport report;
  const SlotTable mpred = merge_identical_slots(pred);
  const SlotTable mgold = merge_identical_slots(gold);
  report.merged_pred_count = mpred.slot_count();
  report.merged_gold_count = mgold.slot_count();
  if (mpred.empty() || mgold.empty()) return report;

  const AccuracyMatrix matrix = accuracy_matrix(mpred, mgold, policy);
  const MatchingResult match = max_weight_full_matching(matrix);
  for (const auto& [p, g] : match.pairs)
    report.matching.push_back({matrix.pred_labels[p], matrix.gold_labels[g],
                               matrix.cell[p][g]});
  report.score = match.total /
                 static_cast<double>(std::max(report.merged_pred_count,
                                              report.merged_gold_count));
  return report;
}

}  // namespace paracomp

#endif  // PARACOMP_BMACC_HPP_
