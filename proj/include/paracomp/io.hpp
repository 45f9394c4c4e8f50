// paracomp/io.hpp
//
// File formats. Everything is UTF-8; LF and CRLF are both accepted on
// input, output is always LF.
//
//   corpus  : plain text, any line structure
//   lemmas  : one lemma per line
//   triples : lemma TAB form TAB slot, one per line. Predicted slots are
//             non-negative integers; gold slots are arbitrary labels (e.g.
//             feature bundles), kept verbatim.
//
// Lemmas and forms are normalized on load (NFC + case fold) so evaluation
// matches the tokenizer's view of the corpus.

#ifndef PARACOMP_IO_HPP_
#define PARACOMP_IO_HPP_

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "paracomp/bmacc.hpp"
#include "paracomp/corpus.hpp"
#include "paracomp/errors.hpp"
#include "paracomp/inflector.hpp"
#include "paracomp/unicode.hpp"

namespace paracomp {

inline std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw InputError("failed reading file: " + path.string());
  return std::move(buf).str();
}

namespace detail {

// Splits on '\n', dropping a trailing '\r' from each line. A final newline
// does not produce an extra empty line.
inline std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    pos = nl + 1;
  }
  return lines;
}

struct TripleRow {
  std::string lemma;  // normalized
  std::string form;   // normalized
  std::string label;  // verbatim
  std::size_t line_no = 0;
};

inline std::vector<TripleRow> parse_triple_rows(std::string_view text,
                                                std::string_view source_name) {
  std::vector<TripleRow> rows;
  const auto lines = split_lines(text);
  for (std::size_t idx = 0; idx < lines.size(); ++idx) {
    const std::string_view line = lines[idx];
    if (line.empty()) continue;
    const std::size_t line_no = idx + 1;
    const auto fail = [&](std::string_view why) {
      throw InputError(std::string(source_name) + ":" + std::to_string(line_no) +
                       ": " + std::string(why));
    };
    const std::size_t t1 = line.find('\t');
    if (t1 == std::string_view::npos) fail("expected 3 tab-separated fields");
    const std::size_t t2 = line.find('\t', t1 + 1);
    if (t2 == std::string_view::npos) fail("expected 3 tab-separated fields");
    if (line.find('\t', t2 + 1) != std::string_view::npos)
      fail("expected exactly 3 tab-separated fields");
    const std::string_view lemma = line.substr(0, t1);
    const std::string_view form = line.substr(t1 + 1, t2 - t1 - 1);
    const std::string_view label = line.substr(t2 + 1);
    if (lemma.empty() || form.empty() || label.empty())
      fail("empty field");
    TripleRow row;
    try {
      row.lemma = normalize_word_utf8(lemma);
      row.form = normalize_word_utf8(form);
      decode_utf8(label);  // validate encoding; label itself stays verbatim
    } catch (const InputError& e) {
      fail(e.what());
    }
    row.label = std::string(label);
    row.line_no = line_no;
    if (row.lemma.empty() || row.form.empty())
      fail("field normalizes to the empty string");
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace detail

inline Corpus load_corpus_file(const std::filesystem::path& path) {
  try {
    return build_corpus(tokenize(read_text_file(path)));
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

inline LemmaList load_lemma_file(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  std::vector<std::string> words;
  for (std::string_view line : detail::split_lines(text)) {
    if (!line.empty()) words.emplace_back(line);
  }
  try {
    return LemmaList::from_words(words);
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

// Gold table: slot labels are arbitrary non-empty strings.
inline SlotTable load_gold_table(const std::filesystem::path& path) {
  SlotTable table;
  for (const auto& row :
       detail::parse_triple_rows(read_text_file(path), path.string()))
    table.add(row.label, row.lemma, row.form);
  return table;
}

// Prediction table: slot labels must be non-negative integers; they are
// canonicalized (leading zeros dropped) so "03" and "3" name one slot.
inline SlotTable load_pred_table(const std::filesystem::path& path) {
  SlotTable table;
  for (const auto& row :
       detail::parse_triple_rows(read_text_file(path), path.string())) {
    std::uint64_t slot = 0;
    bool ok = !row.label.empty() && row.label.size() <= 18;
    if (ok)
      for (char c : row.label) ok = ok && c >= '0' && c <= '9';
    if (!ok)
      throw InputError(path.string() + ":" + std::to_string(row.line_no) +
                       ": predicted slot must be a non-negative integer, got '" +
                       row.label + "'");
    slot = std::stoull(row.label);
    table.add(std::to_string(slot), row.lemma, row.form);
  }
  return table;
}

// Prediction rows sorted by (lemma-list order, slot_id), one cell per row.
inline void write_predictions(std::ostream& out,
                              const std::vector<Paradigm>& paradigms) {
  for (const Paradigm& p : paradigms)
    for (const auto& [slot, form] : p.cells)
      out << p.lemma << '\t' << form << '\t' << slot << '\n';
}

inline void write_predictions_file(const std::filesystem::path& path,
                                   const std::vector<Paradigm>& paradigms) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write file: " + path.string());
  write_predictions(out, paradigms);
  out.flush();
  if (!out) throw InputError("failed writing file: " + path.string());
}

}  // namespace paracomp

#endif  // PARACOMP_IO_HPP_
