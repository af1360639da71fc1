#include <algorithm>
#include <limits>

#include "c1p/errors.hpp"
#include "c1p/multiset.hpp"
#include "word_set.hpp"

namespace c1p {
namespace {

using detail::Alphabet;
using detail::Letter;

struct Pattern {
  std::vector<std::size_t> need;  // dense, indexed by letter
  std::vector<Letter> support;
  std::size_t size = 0;
};

struct Compiled {
  Alphabet alphabet;
  std::vector<std::size_t> universe;  // dense, indexed by letter
  std::size_t length = 0;
  std::vector<Pattern> patterns;
};

Compiled compile(const FmoInstance& instance) {
  instance.validate();
  Compiled c{Alphabet(instance.universe), {}, instance.universe.size(), {}};
  c.universe.assign(c.alphabet.size(), 0);
  for (const auto& [sym, k] : instance.universe.counts()) c.universe[c.alphabet.letter(sym)] = k;

  // Identical members impose the same constraint once.
  std::vector<SymbolMultiset> family = instance.family;
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());

  for (const auto& member : family) {
    Pattern p;
    p.need.assign(c.alphabet.size(), 0);
    for (const auto& [sym, k] : member.counts()) {
      Letter l = c.alphabet.letter(sym);
      p.need[l] = k;
      p.support.push_back(l);
    }
    p.size = member.size();
    c.patterns.push_back(std::move(p));
  }
  return c;
}

bool occurs(const Pattern& p, const std::u16string& x, std::vector<long>& diff) {
  const std::size_t m = p.size;
  if (x.size() < m) return false;
  std::fill(diff.begin(), diff.end(), 0);
  std::size_t nonzero = 0;
  auto bump = [&](Letter l, long delta) {
    long& d = diff[l];
    if (d == 0) ++nonzero;
    d += delta;
    if (d == 0) --nonzero;
  };
  for (Letter l : p.support) bump(l, -static_cast<long>(p.need[l]));
  for (std::size_t i = 0; i < m; ++i) bump(x[i], 1);
  if (nonzero == 0) return true;
  for (std::size_t i = m; i < x.size(); ++i) {
    bump(x[i], 1);
    bump(x[i - m], -1);
    if (nonzero == 0) return true;
  }
  return false;
}

class SolutionSink {
 public:
  explicit SolutionSink(std::size_t limit) : limit_(limit) {}

  bool full() const noexcept { return !complete_; }

  void add(const std::u16string& x) {
    if (found_.size() == limit_) {
      complete_ = false;
      return;
    }
    found_.push_back(x);
  }

  SolutionSet finish(const Alphabet& alphabet) {
    SolutionSet out;
    out.complete = complete_;
    out.strings.reserve(found_.size());
    for (const auto& x : found_) out.strings.push_back(alphabet.decode(x));
    return out;
  }

 private:
  std::size_t limit_;
  std::vector<std::u16string> found_;
  bool complete_ = true;
};

SolutionSet solve_naive(const Compiled& c, std::size_t limit) {
  std::u16string x;
  x.reserve(c.length);
  for (std::size_t l = 0; l < c.universe.size(); ++l) x.append(c.universe[l], static_cast<Letter>(l));

  SolutionSink sink(limit);
  std::vector<long> diff(c.alphabet.size());
  // next_permutation on a sorted sequence visits each distinct arrangement
  // exactly once, in lexicographic order.
  do {
    bool ok = std::all_of(c.patterns.begin(), c.patterns.end(),
                          [&](const Pattern& p) { return occurs(p, x, diff); });
    if (ok) sink.add(x);
  } while (!sink.full() && std::next_permutation(x.begin(), x.end()));
  return sink.finish(c.alphabet);
}

// Places letters left to right in increasing order, so solutions come out
// sorted. After each placement every pattern not yet matched must still have
// a feasible window: either a window overlapping the placed prefix whose
// placed part fits inside the pattern and whose missing part is still
// available, or a window entirely in the unplaced suffix.
class PrunedSolver {
 public:
  PrunedSolver(const Compiled& c, std::size_t limit)
      : c_(c),
        remaining_(c.universe),
        matched_at_(c.patterns.size(), kUnmatched),
        window_(c.alphabet.size(), 0),
        sink_(limit) {
    x_.assign(c.length, u'\0');
  }

  SolutionSet run() {
    if (std::all_of(c_.patterns.begin(), c_.patterns.end(),
                    [&](const Pattern& p) { return fits_in_future(p, 0); })) {
      descend(0);
    }
    return sink_.finish(c_.alphabet);
  }

 private:
  static constexpr std::size_t kUnmatched = std::numeric_limits<std::size_t>::max();

  void descend(std::size_t placed) {
    if (placed == c_.length) {
      sink_.add(x_);
      return;
    }
    for (std::size_t l = 0; l < remaining_.size() && !sink_.full(); ++l) {
      if (remaining_[l] == 0) continue;
      x_[placed] = static_cast<Letter>(l);
      --remaining_[l];
      if (update(placed + 1)) descend(placed + 1);
      undo(placed + 1);
      ++remaining_[l];
    }
  }

  bool update(std::size_t placed) {
    for (std::size_t j = 0; j < c_.patterns.size(); ++j) {
      if (matched_at_[j] != kUnmatched) continue;
      const Pattern& p = c_.patterns[j];
      if (completes_here(p, placed)) {
        matched_at_[j] = placed;
        continue;
      }
      if (!fits_in_future(p, placed) && !fits_across(p, placed)) return false;
    }
    return true;
  }

  void undo(std::size_t placed) {
    for (auto& m : matched_at_) {
      if (m == placed) m = kUnmatched;
    }
  }

  // The window ending at the last placed letter matches exactly.
  bool completes_here(const Pattern& p, std::size_t placed) {
    if (placed < p.size) return false;
    for (Letter l : p.support) window_[l] = 0;
    for (std::size_t i = placed - p.size; i < placed; ++i) {
      Letter l = x_[i];
      if (window_[l] >= p.need[l]) return false;
      ++window_[l];
    }
    return true;
  }

  bool fits_in_future(const Pattern& p, std::size_t placed) const {
    if (placed + p.size > c_.length) return false;
    return std::all_of(p.support.begin(), p.support.end(),
                       [&](Letter l) { return p.need[l] <= remaining_[l]; });
  }

  // Some window starting inside the placed prefix and ending past it.
  bool fits_across(const Pattern& p, std::size_t placed) {
    if (p.size < 2) return false;
    for (Letter l : p.support) window_[l] = 0;
    const std::size_t lowest = placed >= p.size - 1 ? placed - (p.size - 1) : 0;
    for (std::size_t i = placed; i-- > lowest;) {
      Letter l = x_[i];
      // Extending the window leftwards only adds letters, so an excess
      // rules out every window further left as well.
      if (window_[l] >= p.need[l]) return false;
      ++window_[l];
      if (i + p.size > c_.length) continue;
      bool enough = std::all_of(p.support.begin(), p.support.end(), [&](Letter s) {
        return p.need[s] - window_[s] <= remaining_[s];
      });
      if (enough) return true;
    }
    return false;
  }

  const Compiled& c_;
  std::vector<std::size_t> remaining_;
  std::vector<std::size_t> matched_at_;
  std::vector<std::size_t> window_;
  std::u16string x_;
  SolutionSink sink_;
};

std::size_t checked_limit(std::optional<std::size_t> limit) {
  if (limit && *limit == 0) throw PreconditionViolation("enumeration limit must be positive");
  return limit.value_or(std::numeric_limits<std::size_t>::max());
}

}  // namespace

void FmoInstance::validate() const {
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (family[i].empty()) {
      throw InvalidInstance("family member " + std::to_string(i + 1) + " is empty");
    }
    if (!family[i].is_subset_of(universe)) {
      throw InvalidInstance("family member " + std::to_string(i + 1) + " " +
                            to_string(family[i]) + " is not contained in the universe");
    }
  }
}

std::string_view to_string(FmoEngine engine) noexcept {
  return engine == FmoEngine::Naive ? "naive" : "pruned";
}

FmoEngine parse_engine(std::string_view name) {
  if (name == "naive") return FmoEngine::Naive;
  if (name == "pruned") return FmoEngine::Pruned;
  throw ParseError("unknown engine '" + std::string(name) + "' (expected naive or pruned)");
}

SolutionSet solve_fmo(const FmoInstance& instance, FmoEngine engine,
                      std::optional<std::size_t> limit) {
  const std::size_t cap = checked_limit(limit);
  Compiled c = compile(instance);
  if (engine == FmoEngine::Naive) return solve_naive(c, cap);
  return PrunedSolver(c, cap).run();
}

Count count_fmo(const FmoInstance& instance, FmoEngine engine, std::optional<std::size_t> limit) {
  SolutionSet s = solve_fmo(instance, engine, limit);
  if (!s.complete) {
    throw EnumerationBudgetExceeded("#FMO solution set exceeded the limit of " +
                                    std::to_string(limit.value_or(0)) + " strings");
  }
  return Count(s.strings.size());
}

}  // namespace c1p
