// paracomp/config.hpp
//
// All pipeline thresholds in one record, loadable from a flat key=value
// file ('#' starts a comment). Defaults are uncalibrated starting points;
// every knob can be overridden per run.

#ifndef PARACOMP_CONFIG_HPP_
#define PARACOMP_CONFIG_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>

#include "paracomp/errors.hpp"

namespace paracomp {

struct Config {
  // retrieval
  std::uint32_t min_tree_freq = 2;    // keep trees seen in >= this many pairs
  double min_lcs_ratio = 0.5;         // pair filter: LCS >= max(3, ceil(ratio*|lemma|))
  std::size_t max_trees = 200;
  std::size_t max_affix_len = 8;      // pair filter: |type| <= |lemma| + this
  std::uint32_t min_lemma_score = 2;  // retrieved-lemma evidence threshold
  std::size_t max_new_lemmas = 1000;
  std::uint32_t bootstrap_rounds = 1; // retrieve-and-reextract iterations
  // slot discovery
  double max_overlap = 0.1;           // coverage overlap ratio for same-slot trees
  std::size_t max_slots = 200;
  // inflector
  double dev_fraction = 0.1;          // in [0, 0.5]
  std::size_t max_context = 6;        // conditioning affix length in characters
  // run
  std::uint64_t seed = 0;
  std::size_t jobs = 1;

  void validate() const {
    if (min_lcs_ratio < 0.0 || min_lcs_ratio > 1.0)
      throw InputError("min_lcs_ratio must be in [0, 1]");
    if (max_overlap < 0.0 || max_overlap > 1.0)
      throw InputError("max_overlap must be in [0, 1]");
    if (dev_fraction < 0.0 || dev_fraction > 0.5)
      throw InputError("dev_fraction must be in [0, 0.5]");
    if (jobs == 0) throw InputError("jobs must be >= 1");
  }
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

template <typename T>
T parse_number(std::string_view key, std::string_view value) {
  try {
    const std::string v(value);
    std::size_t pos = 0;
    T out;
    if constexpr (std::is_floating_point_v<T>) {
      out = static_cast<T>(std::stod(v, &pos));
    } else {
      out = static_cast<T>(std::stoull(v, &pos));
    }
    if (pos != v.size()) throw std::invalid_argument("trailing characters");
    return out;
  } catch (const std::exception&) {
    throw InputError("bad value for config key '" + std::string(key) + "': '" +
                     std::string(value) + "'");
  }
}

}  // namespace detail

inline void set_config_value(Config& cfg, std::string_view key,
                             std::string_view value) {
  using detail::parse_number;
  if (key == "min_tree_freq")
    cfg.min_tree_freq = parse_number<std::uint32_t>(key, value);
  else if (key == "min_lcs_ratio")
    cfg.min_lcs_ratio = parse_number<double>(key, value);
  else if (key == "max_trees")
    cfg.max_trees = parse_number<std::size_t>(key, value);
  else if (key == "max_affix_len")
    cfg.max_affix_len = parse_number<std::size_t>(key, value);
  else if (key == "min_lemma_score")
    cfg.min_lemma_score = parse_number<std::uint32_t>(key, value);
  else if (key == "max_new_lemmas")
    cfg.max_new_lemmas = parse_number<std::size_t>(key, value);
  else if (key == "bootstrap_rounds")
    cfg.bootstrap_rounds = parse_number<std::uint32_t>(key, value);
  else if (key == "max_overlap")
    cfg.max_overlap = parse_number<double>(key, value);
  else if (key == "max_slots")
    cfg.max_slots = parse_number<std::size_t>(key, value);
  else if (key == "dev_fraction")
    cfg.dev_fraction = parse_number<double>(key, value);
  else if (key == "max_context")
    cfg.max_context = parse_number<std::size_t>(key, value);
  else if (key == "seed")
    cfg.seed = parse_number<std::uint64_t>(key, value);
  else if (key == "jobs")
    cfg.jobs = parse_number<std::size_t>(key, value);
  else
    throw InputError("unknown config key '" + std::string(key) + "'");
}

// Parses "key = value" text; later assignments win.
inline void apply_config_text(Config& cfg, std::string_view text,
                              std::string_view source_name = "<config>") {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    ++line_no;
    pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos)
      throw InputError(std::string(source_name) + ":" + std::to_string(line_no) +
                       ": expected key=value");
    set_config_value(cfg, detail::trim(line.substr(0, eq)),
                     detail::trim(line.substr(eq + 1)));
  }
}

}  // namespace paracomp

#endif  // PARACOMP_CONFIG_HPP_
