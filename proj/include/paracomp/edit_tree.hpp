// paracomp/edit_tree.hpp
//
// Edit trees: recursive string transformations that generalize across stems.
// A tree is either a Replace leaf (literal source -> target substitution) or
// a Node that copies the span between a source prefix and suffix verbatim and
// transforms the flanks recursively. Built around the longest common
// substring of the pair, so build("walk","walked") applied to "listen"
// yields "listened".
//
// Trees are immutable values with structural equality, a canonical total
// order, and a stable parenthesized debug form:
//   leaf  R("src","tgt")
//   node  N(prefix_len,suffix_len,left,right)
// e.g. build("walk","walked") prints as N(0,0,R("",""),R("","ed")).
//
// Characters are Unicode scalar values throughout. Trees may nest
// arbitrarily deep; no depth limit is imposed.

#ifndef PARACOMP_EDIT_TREE_HPP_
#define PARACOMP_EDIT_TREE_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "paracomp/unicode.hpp"

namespace paracomp {

struct CommonSubstring {
  std::size_t start_a = 0;
  std::size_t start_b = 0;
  std::size_t length = 0;
};

// Maximal-length common substring; ties broken by smallest start_a, then
// smallest start_b. Returns {0,0,0} when the strings share nothing.
inline CommonSubstring longest_common_substring(std::u32string_view a,
                                                std::u32string_view b) {
  CommonSubstring best;
  if (a.empty() || b.empty()) return best;
  std::vector<std::size_t> row(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = 0;  // run length ending at (i-1, j-1)
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t above = row[j];
      const std::size_t run = (a[i - 1] == b[j - 1]) ? diag + 1 : 0;
      diag = above;
      row[j] = run;
      // Strict improvement keeps the earliest (start_a, start_b) on ties.
      if (run > best.length) best = {i - run, j - run, run};
    }
  }
  return best;
}

class EditTree {
 public:
  static EditTree replace(std::u32string source, std::u32string target) {
    auto impl = std::make_shared<Impl>();
    impl->leaf = true;
    impl->src = std::move(source);
    impl->tgt = std::move(target);
    impl->hash = hash_leaf(impl->src, impl->tgt);
    return EditTree(std::move(impl));
  }

  static EditTree node(std::size_t prefix_len, std::size_t suffix_len,
                       EditTree left, EditTree right) {
    auto impl = std::make_shared<Impl>();
    impl->leaf = false;
    impl->prefix_len = prefix_len;
    impl->suffix_len = suffix_len;
    impl->hash = hash_node(prefix_len, suffix_len, left.hash(), right.hash());
    impl->left = std::move(left.impl_);
    impl->right = std::move(right.impl_);
    return EditTree(std::move(impl));
  }

  // Deterministic construction: the copied span is the longest common
  // substring under the tie-break above, recursing on the flanks.
  static EditTree build(std::u32string_view source, std::u32string_view target) {
    const CommonSubstring m = longest_common_substring(source, target);
    if (m.length == 0)
      return replace(std::u32string(source), std::u32string(target));
    EditTree left = build(source.substr(0, m.start_a), target.substr(0, m.start_b));
    EditTree right = build(source.substr(m.start_a + m.length),
                           target.substr(m.start_b + m.length));
    return node(m.start_a, source.size() - m.start_a - m.length,
                std::move(left), std::move(right));
  }

  static EditTree build_utf8(std::string_view source, std::string_view target) {
    return build(decode_utf8(source), decode_utf8(target));
  }

  // Absence is a value: a leaf fails on any word other than its source, a
  // node fails on words shorter than prefix_len + suffix_len or when a
  // subtree fails.
  std::optional<std::u32string> apply(std::u32string_view word) const {
    return apply_impl(impl_.get(), word);
  }

  std::optional<std::string> apply_utf8(std::string_view word) const {
    auto out = apply(decode_utf8(word));
    if (!out) return std::nullopt;
    return encode_utf8(*out);
  }

  bool is_replace() const { return impl_->leaf; }
  std::size_t hash() const noexcept { return impl_->hash; }

  friend bool operator==(const EditTree& a, const EditTree& b) {
    return compare(a, b) == 0;
  }

  // Canonical total order: leaves before nodes; leaves by (src, tgt); nodes
  // by (prefix_len, suffix_len, left, right).
  static int compare(const EditTree& a, const EditTree& b) {
    return compare_impl(a.impl_.get(), b.impl_.get());
  }

  friend bool operator<(const EditTree& a, const EditTree& b) {
    return compare(a, b) < 0;
  }

  std::string to_string() const {
    std::string out;
    print(impl_.get(), out);
    return out;
  }

 private:
  struct Impl {
    bool leaf = true;
    std::u32string src, tgt;                  // leaf payload
    std::size_t prefix_len = 0, suffix_len = 0;  // node payload
    std::shared_ptr<const Impl> left, right;
    std::size_t hash = 0;
  };

  explicit EditTree(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  static std::optional<std::u32string> apply_impl(const Impl* t,
                                                  std::u32string_view word) {
    if (t->leaf) {
      if (word != t->src) return std::nullopt;
      return t->tgt;
    }
    if (word.size() < t->prefix_len + t->suffix_len) return std::nullopt;
    auto left = apply_impl(t->left.get(), word.substr(0, t->prefix_len));
    if (!left) return std::nullopt;
    auto right = apply_impl(t->right.get(), word.substr(word.size() - t->suffix_len));
    if (!right) return std::nullopt;
    std::u32string out = std::move(*left);
    out.append(word.substr(t->prefix_len,
                           word.size() - t->prefix_len - t->suffix_len));
    out.append(*right);
    return out;
  }

  static int compare_impl(const Impl* a, const Impl* b) {
    if (a == b) return 0;
    if (a->leaf != b->leaf) return a->leaf ? -1 : 1;
    if (a->leaf) {
      if (int c = a->src.compare(b->src); c != 0) return c < 0 ? -1 : 1;
      if (int c = a->tgt.compare(b->tgt); c != 0) return c < 0 ? -1 : 1;
      return 0;
    }
    if (a->prefix_len != b->prefix_len)
      return a->prefix_len < b->prefix_len ? -1 : 1;
    if (a->suffix_len != b->suffix_len)
      return a->suffix_len < b->suffix_len ? -1 : 1;
    if (int c = compare_impl(a->left.get(), b->left.get()); c != 0) return c;
    return compare_impl(a->right.get(), b->right.get());
  }

  static std::size_t mix(std::size_t h, std::size_t v) {
    // FNV-1a style fold, stable within a process run.
    h ^= v + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
    return h;
  }

  static std::size_t hash_str(const std::u32string& s) {
    std::size_t h = 1469598103934665603ull;
    for (char32_t c : s) {
      h ^= static_cast<std::size_t>(c);
      h *= 1099511628211ull;
    }
    return h;
  }

  static std::size_t hash_leaf(const std::u32string& s, const std::u32string& t) {
    return mix(mix(0x1, hash_str(s)), hash_str(t));
  }

  static std::size_t hash_node(std::size_t p, std::size_t q, std::size_t hl,
                               std::size_t hr) {
    return mix(mix(mix(mix(0x2, p), q), hl), hr);
  }

  static void print(const Impl* t, std::string& out) {
    if (t->leaf) {
      out += "R(";
      print_quoted(t->src, out);
      out += ',';
      print_quoted(t->tgt, out);
      out += ')';
      return;
    }
    out += "N(";
    out += std::to_string(t->prefix_len);
    out += ',';
    out += std::to_string(t->suffix_len);
    out += ',';
    print(t->left.get(), out);
    out += ',';
    print(t->right.get(), out);
    out += ')';
  }

  static void print_quoted(const std::u32string& s, std::string& out) {
    out += '"';
    for (char32_t c : s) {
      if (c == U'"' || c == U'\\') out += '\\';
      out += encode_utf8(std::u32string_view(&c, 1));
    }
    out += '"';
  }

  std::shared_ptr<const Impl> impl_;
};

struct EditTreeHash {
  std::size_t operator()(const EditTree& t) const noexcept { return t.hash(); }
};

}  // namespace paracomp

#endif  // PARACOMP_EDIT_TREE_HPP_
