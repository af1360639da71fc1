#include <algorithm>
#include <numeric>

#include "c1p/errors.hpp"
#include "c1p/pqtree.hpp"
#include "word_set.hpp"

namespace c1p {
namespace {

using detail::Alphabet;
using detail::Letter;
using detail::WordSet;
using detail::WordView;

struct NodeWords {
  WordSet words;
  bool complete = true;
};

// Accumulates concatenations into a WordSet while keeping at most `limit`
// distinct words. Duplicates are squeezed out whenever the buffer grows
// past twice the limit.
class Collector {
 public:
  Collector(std::size_t width, std::size_t limit) : words_(width), limit_(limit) {}

  bool full() const noexcept { return !complete_; }

  void add(WordView w) {
    words_.append(w);
    if (words_.size() >= 2 * limit_ + 1024) squeeze();
  }

  NodeWords finish() {
    squeeze();
    return {std::move(words_), complete_};
  }

 private:
  void squeeze() {
    words_.normalize();
    if (words_.size() > limit_) {
      words_.truncate(limit_);
      complete_ = false;
    }
  }

  WordSet words_;
  std::size_t limit_;
  bool complete_ = true;
};

// Writes every concatenation of one word from each set in `sets`, in order.
void emit_products(const std::vector<const WordSet*>& sets, std::size_t depth, std::size_t offset,
                   std::u16string& scratch, Collector& out) {
  if (out.full()) return;
  if (depth == sets.size()) {
    out.add(scratch);
    return;
  }
  const WordSet& s = *sets[depth];
  for (std::size_t i = 0; i < s.size() && !out.full(); ++i) {
    auto w = s[i];
    std::copy(w.begin(), w.end(), scratch.begin() + static_cast<std::ptrdiff_t>(offset));
    emit_products(sets, depth + 1, offset + w.size(), scratch, out);
  }
}

// Children with identical word sets are interchangeable; returns one class
// id per child, numbered in order of first appearance.
std::vector<std::size_t> child_classes(const std::vector<NodeWords>& kids) {
  std::vector<std::size_t> cls(kids.size());
  for (std::size_t i = 0; i < kids.size(); ++i) {
    cls[i] = i;
    for (std::size_t j = 0; j < i; ++j) {
      if (kids[j].words == kids[i].words) {
        cls[i] = cls[j];
        break;
      }
    }
  }
  return cls;
}

NodeWords node_words(const PqNode& node, const Alphabet& alphabet, std::size_t limit);

std::vector<NodeWords> children_words(const PqNode& node, const Alphabet& alphabet,
                                      std::size_t limit, bool& complete) {
  std::vector<NodeWords> kids;
  kids.reserve(node.children().size());
  for (const auto& child : node.children()) {
    kids.push_back(node_words(child, alphabet, limit));
    complete = complete && kids.back().complete;
  }
  return kids;
}

NodeWords node_words(const PqNode& node, const Alphabet& alphabet, std::size_t limit) {
  if (node.is_leaf()) {
    WordSet w(1);
    Letter l = alphabet.letter(node.label());
    w.append(WordView(&l, 1));
    return {std::move(w), true};
  }

  bool complete = true;
  auto kids = children_words(node, alphabet, limit, complete);
  std::size_t width = 0;
  for (const auto& k : kids) width += k.words.width();

  Collector out(width, limit);
  std::u16string scratch(width, u'\0');
  auto cls = child_classes(kids);

  if (node.kind() == NodeKind::Q) {
    std::vector<const WordSet*> forward;
    for (const auto& k : kids) forward.push_back(&k.words);
    emit_products(forward, 0, 0, scratch, out);
    std::vector<std::size_t> rcls(cls.rbegin(), cls.rend());
    if (rcls != cls) {
      std::vector<const WordSet*> backward(forward.rbegin(), forward.rend());
      emit_products(backward, 0, 0, scratch, out);
    }
  } else {
    // Distinct arrangements of the child classes.
    std::vector<std::size_t> arrangement = cls;
    std::sort(arrangement.begin(), arrangement.end());
    std::vector<const WordSet*> sets(kids.size());
    do {
      for (std::size_t i = 0; i < arrangement.size(); ++i) sets[i] = &kids[arrangement[i]].words;
      emit_products(sets, 0, 0, scratch, out);
    } while (!out.full() && std::next_permutation(arrangement.begin(), arrangement.end()));
  }

  NodeWords result = out.finish();
  result.complete = result.complete && complete;
  return result;
}

// Counts words readable both as the forward and the reversed concatenation
// of a Q-node's children.
class BothWaysCounter {
 public:
  explicit BothWaysCounter(const std::vector<NodeWords>& kids) : kids_(kids) {
    std::size_t offset = 0;
    for (const auto& k : kids_) {
      forward_end_.push_back(offset += k.words.width());
    }
    offset = 0;
    for (std::size_t i = kids_.size(); i-- > 0;) {
      reverse_segments_.push_back({offset, kids_[i].words.width(), i});
      offset += kids_[i].words.width();
    }
    buffer_.assign(offset, u'\0');
  }

  Count run() {
    found_ = 0;
    descend(0);
    return found_;
  }

 private:
  struct Segment {
    std::size_t start;
    std::size_t width;
    std::size_t child;
  };

  void descend(std::size_t depth) {
    if (depth == kids_.size()) {
      ++found_;
      return;
    }
    const std::size_t begin = depth == 0 ? 0 : forward_end_[depth - 1];
    const std::size_t end = forward_end_[depth];
    const WordSet& s = kids_[depth].words;
    for (std::size_t i = 0; i < s.size(); ++i) {
      auto w = s[i];
      std::copy(w.begin(), w.end(), buffer_.begin() + static_cast<std::ptrdiff_t>(begin));
      if (consistent(begin, end)) descend(depth + 1);
    }
  }

  // Every reversed-order segment overlapping [begin, end) is a member, or a
  // member prefix when it extends beyond `end`.
  bool consistent(std::size_t begin, std::size_t end) const {
    WordView x(buffer_.data(), buffer_.size());
    for (const auto& seg : reverse_segments_) {
      const std::size_t seg_end = seg.start + seg.width;
      if (seg_end <= begin || seg.start >= end) continue;
      const WordSet& set = kids_[seg.child].words;
      if (seg_end <= end) {
        if (!set.contains(x.substr(seg.start, seg.width))) return false;
      } else if (!set.has_prefix(x.substr(seg.start, end - seg.start))) {
        return false;
      }
    }
    return true;
  }

  const std::vector<NodeWords>& kids_;
  std::vector<std::size_t> forward_end_;
  std::vector<Segment> reverse_segments_;
  std::u16string buffer_;
  Count found_;
};

std::size_t effective_limit(std::optional<std::size_t> limit) {
  if (limit && *limit == 0) throw PreconditionViolation("enumeration limit must be positive");
  return limit.value_or(std::numeric_limits<std::size_t>::max() / 4);
}

}  // namespace

FrontierSet enumerate_frontiers(const PqTree& tree, std::optional<std::size_t> limit) {
  Alphabet alphabet(tree.leaf_multiset());
  NodeWords words = node_words(tree.root(), alphabet, effective_limit(limit));
  FrontierSet out;
  out.complete = words.complete;
  out.strings.reserve(words.words.size());
  for (std::size_t i = 0; i < words.words.size(); ++i) {
    out.strings.push_back(alphabet.decode(words.words[i]));
  }
  return out;
}

Count count_frontiers_multiset(const PqTree& tree, std::optional<std::size_t> limit) {
  const std::size_t cap = effective_limit(limit);
  const PqTree canon = canonicalize(tree);
  const PqNode& root = canon.root();
  if (root.is_leaf()) return 1;

  Alphabet alphabet(canon.leaf_multiset());
  auto budget_error = [&] {
    return EnumerationBudgetExceeded("frontier enumeration exceeded the limit of " +
                                     std::to_string(cap) + " distinct strings");
  };

  if (root.kind() == NodeKind::P) {
    NodeWords words = node_words(root, alphabet, cap);
    if (!words.complete) throw budget_error();
    return Count(words.words.size());
  }

  bool complete = true;
  auto kids = children_words(root, alphabet, cap, complete);
  if (!complete) throw budget_error();

  Count product = 1;
  for (const auto& k : kids) product *= k.words.size();
  auto cls = child_classes(kids);
  std::vector<std::size_t> rcls(cls.rbegin(), cls.rend());
  if (rcls == cls) return product;
  return 2 * product - BothWaysCounter(kids).run();
}

}  // namespace c1p
