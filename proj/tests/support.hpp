// Shared test helpers: random string generators, a synthetic suffixing
// language whose generator doubles as the oracle for pipeline tests, and a
// small subprocess runner for CLI checks.

#ifndef PARACOMP_TESTS_SUPPORT_HPP_
#define PARACOMP_TESTS_SUPPORT_HPP_

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "paracomp/bmacc.hpp"
#include "paracomp/corpus.hpp"
#include "paracomp/edit_tree.hpp"
#include "paracomp/unicode.hpp"

namespace test_support {

inline std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline std::string random_ascii_word(std::mt19937_64& rng, std::size_t min_len,
                                     std::size_t max_len,
                                     std::string_view alphabet = "abc") {
  std::uniform_int_distribution<std::size_t> len_dist(min_len, max_len);
  std::uniform_int_distribution<std::size_t> ch_dist(0, alphabet.size() - 1);
  std::string out;
  const std::size_t n = len_dist(rng);
  for (std::size_t i = 0; i < n; ++i) out.push_back(alphabet[ch_dist(rng)]);
  return out;
}

// Mixed-script scalar values: ASCII, Latin-1, Greek, Cyrillic, combining
// marks, CJK, Hangul and astral-plane letters.
inline char32_t random_codepoint(std::mt19937_64& rng) {
  static const std::array<std::pair<char32_t, char32_t>, 8> kRanges = {{
      {U'a', U'z'},
      {0x00E0, 0x00FF},
      {0x0391, 0x03C9},
      {0x0410, 0x044F},
      {0x0300, 0x0314},
      {0x4E00, 0x4E80},
      {0xAC00, 0xAC60},
      {0x10330, 0x1034A},  // Gothic
  }};
  std::uniform_int_distribution<std::size_t> pick(0, kRanges.size() - 1);
  const auto [lo, hi] = kRanges[pick(rng)];
  std::uniform_int_distribution<char32_t> dist(lo, hi);
  return dist(rng);
}

inline std::u32string random_u32string(std::mt19937_64& rng, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
  std::u32string out;
  const std::size_t n = len_dist(rng);
  for (std::size_t i = 0; i < n; ++i) out.push_back(random_codepoint(rng));
  return out;
}

// A toy suffixing language. Slot 1 is the bare stem; slots 2 and 3 append
// fixed suffixes; slot 4 has two allomorphs in complementary distribution,
// conditioned on the stem-final character ('a' vs 't'). Stems are sampled
// so that no two distinct stems share a 3-character substring, which keeps
// retrieval free of accidental trees; the inflect() method is the oracle.
struct SyntheticLanguage {
  std::vector<std::string> train_stems;    // attested in the corpus
  std::vector<std::string> holdout_stems;  // unseen lemmas
  std::vector<std::string> corpus_tokens;

  static constexpr std::array<const char*, 3> kPlainSuffixes = {"", "ri", "wos"};
  static constexpr const char* kSuffixAfterA = "sa";
  static constexpr const char* kSuffixAfterT = "zo";
  static constexpr std::size_t kSlotCount = 4;

  std::string inflect(const std::string& stem, std::uint32_t slot) const {
    switch (slot) {
      case 1: return stem;
      case 2: return stem + "ri";
      case 3: return stem + "wos";
      case 4: return stem + (stem.back() == 'a' ? kSuffixAfterA : kSuffixAfterT);
      default: throw std::out_of_range("slot");
    }
  }

  std::vector<std::string> all_stems() const {
    std::vector<std::string> out = train_stems;
    out.insert(out.end(), holdout_stems.begin(), holdout_stems.end());
    return out;
  }

  paracomp::SlotTable gold() const {
    paracomp::SlotTable table;
    for (const std::string& stem : all_stems())
      for (std::uint32_t slot = 1; slot <= kSlotCount; ++slot)
        table.add(std::to_string(slot), stem, inflect(stem, slot));
    return table;
  }

  // `form_coverage` = probability each train-stem form appears in the
  // corpus; holdout-stem forms appear only if `attest_holdout`.
  static SyntheticLanguage make(std::uint64_t seed, std::size_t train_count = 20,
                                std::size_t holdout_count = 10,
                                double form_coverage = 1.0,
                                bool attest_holdout = false) {
    SyntheticLanguage lang;
    std::mt19937_64 rng(seed);
    // No letter of the suffix onsets {r, s, w, z} appears in stems, so a
    // common substring of length 3 between a stem and another stem's form
    // can only sit inside the other stem; trigram-disjoint stems therefore
    // never produce accidental edit trees.
    const std::string letters = "abcdefgiklmnopu";
    std::set<std::string> used_trigrams;
    std::set<std::string> stems;

    const auto sample_stem = [&](char final_char) {
      while (true) {
        std::string stem;
        for (int i = 0; i < 4; ++i) stem.push_back(letters[rng() % letters.size()]);
        stem.push_back(final_char);
        if (stems.count(stem)) continue;
        std::vector<std::string> trigrams;
        bool fresh = true;
        for (std::size_t i = 0; i + 3 <= stem.size(); ++i) {
          trigrams.push_back(stem.substr(i, 3));
          fresh = fresh && !used_trigrams.count(trigrams.back());
        }
        if (!fresh) continue;
        used_trigrams.insert(trigrams.begin(), trigrams.end());
        stems.insert(stem);
        return stem;
      }
    };

    for (std::size_t i = 0; i < train_count; ++i)
      lang.train_stems.push_back(sample_stem(i % 2 == 0 ? 'a' : 't'));
    for (std::size_t i = 0; i < holdout_count; ++i)
      lang.holdout_stems.push_back(sample_stem(i % 2 == 0 ? 'a' : 't'));

    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<int> reps(1, 3);
    const auto attest = [&](const std::string& stem) {
      for (std::uint32_t slot = 1; slot <= kSlotCount; ++slot) {
        if (coin(rng) > form_coverage) continue;
        const std::string form = lang.inflect(stem, slot);
        for (int r = reps(rng); r > 0; --r) lang.corpus_tokens.push_back(form);
      }
    };
    for (const std::string& stem : lang.train_stems) attest(stem);
    if (attest_holdout)
      for (const std::string& stem : lang.holdout_stems) attest(stem);
    std::shuffle(lang.corpus_tokens.begin(), lang.corpus_tokens.end(), rng);
    return lang;
  }
};

// Random paradigm table over a small shared lemma/form pool, so two
// independently sampled tables still agree on many cells. With
// `dyadic_sizes` every slot holds 1, 2, 4 or 8 lemmas, which keeps all
// accuracy cells and their sums exactly representable as doubles.
inline paracomp::SlotTable random_slot_table(std::mt19937_64& rng,
                                             std::size_t max_slots = 6,
                                             bool dyadic_sizes = false,
                                             std::string_view label_prefix = "") {
  constexpr std::size_t kLemmaPool = 8;
  paracomp::SlotTable table;
  const std::size_t slots = 1 + rng() % max_slots;
  for (std::size_t s = 1; s <= slots; ++s) {
    std::size_t lemma_count;
    if (dyadic_sizes) {
      constexpr std::array<std::size_t, 4> kSizes = {1, 2, 4, 8};
      lemma_count = kSizes[rng() % kSizes.size()];
    } else {
      lemma_count = 1 + rng() % kLemmaPool;
    }
    std::array<std::size_t, kLemmaPool> order{};
    for (std::size_t i = 0; i < kLemmaPool; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t i = 0; i < lemma_count; ++i) {
      const std::string lemma = "l" + std::to_string(order[i]);
      const std::size_t forms = 1 + rng() % 2;
      for (std::size_t f = 0; f < forms; ++f)
        table.add(std::string(label_prefix) + std::to_string(s), lemma,
                  lemma + "_" + std::string(1, static_cast<char>('a' + rng() % 3)));
    }
  }
  return table;
}

// ---------------------------------------------------------------------------
// Subprocess helpers for CLI tests.

class TempDir {
 public:
  TempDir() {
    const auto base = std::filesystem::temp_directory_path();
    static std::atomic<unsigned> counter{0};
    path_ = base / ("paracomp_test_" + std::to_string(::getpid()) + "_" +
                    std::to_string(counter++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  const std::filesystem::path& path() const { return path_; }

  std::filesystem::path write(const std::string& name, const std::string& content) const {
    const auto p = path_ / name;
    std::ofstream out(p, std::ios::binary);
    out << content;
    return p;
  }

 private:
  std::filesystem::path path_;
};

struct CommandResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') out += "'\\''";
    else out.push_back(c);
  }
  out += "'";
  return out;
}

inline CommandResult run_command(const std::vector<std::string>& argv,
                                 const TempDir& dir) {
  const auto out_path = dir.path() / "cmd.stdout";
  const auto err_path = dir.path() / "cmd.stderr";
  std::string cmd;
  for (const std::string& a : argv) {
    if (!cmd.empty()) cmd += ' ';
    cmd += shell_quote(a);
  }
  cmd += " > " + shell_quote(out_path.string()) + " 2> " + shell_quote(err_path.string());
  const int status = std::system(cmd.c_str());
  CommandResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = read_file(out_path);
  result.err = read_file(err_path);
  return result;
}

inline std::string cli_path() { return PARACOMP_CLI_PATH; }
inline std::string test_data_dir() { return PARACOMP_TEST_DATA_DIR; }

}  // namespace test_support

#endif  // PARACOMP_TESTS_SUPPORT_HPP_
