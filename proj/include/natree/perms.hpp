#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace natree {

/// Permutation of 1..n in one-line notation.
class Permutation {
 public:
  Permutation() = default;  // size 0
  explicit Permutation(std::vector<int> one_line);
  static Permutation identity(int n);
  /// Cycles over 1..n; unmentioned points are fixed.
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);
  /// Comma separated one-line notation ("2,1,3"), or "" for size 0.
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(values_.size()); }
  /// sigma(i) for 1 <= i <= n.
  int operator()(int i) const { return values_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<int>& one_line() const { return values_; }
  Permutation inverse() const;
  /// Cycles, each starting at its smallest element, ordered by that element.
  std::vector<std::vector<int>> cycles() const;

  std::string to_string() const;
  /// "(1 3)(2)"; the empty permutation prints as "()".
  std::string cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> values_;
};

std::vector<Permutation> all_permutations(int n);

int inv(const Permutation& sigma);
/// Sum of the descent positions of sigma.
int maj(const Permutation& sigma);
/// maj of the inverse.
int imaj(const Permutation& sigma);
std::vector<int> descents(const Permutation& sigma);
std::vector<int> excedance_profile(const Permutation& sigma);
/// True when the excedances are exactly the positions 1..count.
bool has_excedance_prefix(const Permutation& sigma, int count);

/// Order-isomorphic permutation of a repetition-free word.
Permutation standardize(const std::vector<int>& word);

/// Cycle written as a word, e.g. {0, 13, 1, ...}.
std::string cycle_word_string(const std::vector<int>& word);
/// Cyclic successor map of a cycle word over 0..n-1 (word must be a permutation of 0..n-1).
std::vector<int> cycle_word_map(const std::vector<int>& word);

enum class Colour { Red, Blue };

struct Symbol {
  Colour colour = Colour::Red;
  int index = 1;
  std::string to_string() const;
  friend bool operator==(const Symbol&, const Symbol&) = default;
};

/// Cycle over {r1..ri} and {b1..bj}, each symbol once. Stored rotated to
/// the canonical representative: starting at b_j, or at r_i when j = 0.
class TwoColouredCycle {
 public:
  TwoColouredCycle() = default;
  TwoColouredCycle(int reds, int blues, std::vector<Symbol> cycle);
  /// "(b9 r5 b8 ...)"; the alphabet sizes are read off the symbols.
  static TwoColouredCycle parse(std::string_view text);

  int reds() const { return reds_; }
  int blues() const { return blues_; }
  const std::vector<Symbol>& symbols() const { return symbols_; }
  std::string to_string() const;

  friend bool operator==(const TwoColouredCycle&, const TwoColouredCycle&) = default;

 private:
  int reds_ = 0;
  int blues_ = 0;
  std::vector<Symbol> symbols_;
};

/// Empty when block decreasing, otherwise a description of the first bad step.
std::optional<std::string> validate_2cbd(const TwoColouredCycle& c);
/// Maximal cyclic runs of blue symbols.
int blue_blocks(const TwoColouredCycle& c);
/// Every 2-coloured block decreasing cycle of size i x j.
std::vector<TwoColouredCycle> enumerate_2cbd(int reds, int blues);

}  // namespace natree
