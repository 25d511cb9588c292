#ifndef PARTLOG_TEXT_HPP
#define PARTLOG_TEXT_HPP

// Partition literals with human-readable element labels.
//
//   block form:  {{a,b},{c}}     labels sorted lexicographically map to 0..n-1
//   rgs form:    rgs:0,0,1       elements take the default labels
//
// Output is always block form, blocks ordered by least element.

#include <algorithm>
#include <cctype>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "partlog/core.hpp"
#include "partlog/error.hpp"

namespace partlog {

/// Labels a, b, ..., z for n <= 26; otherwise zero-padded decimals so that
/// lexicographic and numeric order agree.
inline std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  if (n <= 26) {
    for (std::size_t i = 0; i < n; ++i) out.emplace_back(1, static_cast<char>('a' + i));
    return out;
  }
  const auto width = std::to_string(n - 1).size();
  for (std::size_t i = 0; i < n; ++i) {
    auto s = std::to_string(i);
    out.push_back(std::string(width - s.size(), '0') + s);
  }
  return out;
}

struct LabeledPartition {
  std::vector<std::string> labels;  // sorted; labels[i] names element i
  Partition partition;
  bool explicit_labels = true;      // false for rgs literals
};

namespace detail {

inline bool is_label_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

class LiteralParser {
 public:
  explicit LiteralParser(std::string_view text) : text_(text) {}

  LabeledPartition parse() {
    skip_space();
    if (text_.substr(pos_, 4) == "rgs:") {
      pos_ += 4;
      return parse_rgs();
    }
    return parse_blocks();
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_, message); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string label() {
    skip_space();
    const auto start = pos_;
    while (pos_ < text_.size() && is_label_char(text_[pos_])) ++pos_;
    if (start == pos_) fail("expected element label");
    return std::string(text_.substr(start, pos_ - start));
  }

  void finish() {
    skip_space();
    if (pos_ != text_.size()) fail("trailing characters in partition literal");
  }

  LabeledPartition parse_rgs() {
    std::vector<Element> rgs;
    do {
      skip_space();
      const auto start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected block index");
      rgs.push_back(static_cast<Element>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
    } while (accept(','));
    finish();
    auto p = Partition::from_rgs(std::move(rgs));
    return {default_labels(p.size()), std::move(p), false};
  }

  LabeledPartition parse_blocks() {
    std::vector<std::vector<std::string>> raw;
    expect('{');
    if (!accept('}')) {
      do {
        expect('{');
        auto& block = raw.emplace_back();
        if (!accept('}')) {
          do {
            block.push_back(label());
          } while (accept(','));
          expect('}');
        }
      } while (accept(','));
      expect('}');
    }
    finish();

    std::vector<std::string> labels;
    for (const auto& b : raw) labels.insert(labels.end(), b.begin(), b.end());
    std::sort(labels.begin(), labels.end());
    if (auto dup = std::adjacent_find(labels.begin(), labels.end()); dup != labels.end()) {
      throw ValidationError("overlapping blocks: element '" + *dup + "' appears more than once");
    }
    if (labels.empty()) throw ValidationError("invalid universe: partition literal has no elements");
    std::vector<Block> blocks;
    for (const auto& b : raw) {
      auto& out = blocks.emplace_back();
      for (const auto& l : b) {
        out.push_back(static_cast<Element>(
            std::lower_bound(labels.begin(), labels.end(), l) - labels.begin()));
      }
    }
    auto p = from_blocks(blocks, labels.size());
    return {std::move(labels), std::move(p), true};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline LabeledPartition parse_partition_literal(std::string_view text) {
  return detail::LiteralParser(text).parse();
}

inline std::string format_partition(const Partition& p, const std::vector<std::string>& labels) {
  if (labels.size() != p.size()) throw SizeMismatch(labels.size(), p.size());
  std::string out = "{";
  bool first_block = true;
  for (const auto& block : p.blocks()) {
    if (!first_block) out += ',';
    first_block = false;
    out += '{';
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i) out += ',';
      out += labels[block[i]];
    }
    out += '}';
  }
  return out + '}';
}

inline std::string format_partition(const Partition& p) {
  return format_partition(p, default_labels(p.size()));
}

inline std::string format_rgs(const Partition& p) {
  std::string out = "rgs:";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p.rgs()[i]);
  }
  return out;
}

/// Reconciles several literals onto one universe. Block literals must name
/// the same label set; rgs literals only need the same size.
inline std::vector<std::string> common_universe(const std::vector<LabeledPartition>& literals) {
  std::vector<std::string> labels;
  bool have_explicit = false;
  std::size_t n = 0;
  for (const auto& lit : literals) {
    if (n == 0) {
      n = lit.partition.size();
    } else if (lit.partition.size() != n) {
      throw SizeMismatch(n, lit.partition.size());
    }
    if (!lit.explicit_labels) continue;
    if (!have_explicit) {
      labels = lit.labels;
      have_explicit = true;
    } else if (lit.labels != labels) {
      throw ValidationError("inconsistent universe labels between partition literals");
    }
  }
  if (!have_explicit) labels = default_labels(n);
  return labels;
}

}  // namespace partlog

#endif  // PARTLOG_TEXT_HPP
