#include "natree/perms.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "natree/arith.hpp"

namespace natree {

Permutation::Permutation(std::vector<int> one_line) : values_(std::move(one_line)) {
  std::vector<bool> seen(values_.size() + 1, false);
  for (int v : values_) {
    if (v < 1 || v > size() || seen[static_cast<std::size_t>(v)])
      throw InputError("not a permutation of 1.." + std::to_string(size()));
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw InputError("permutation size must be non-negative");
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  for (const auto& c : cycles)
    for (std::size_t a = 0; a < c.size(); ++a) {
      const int x = c[a];
      if (x < 1 || x > n || used[static_cast<std::size_t>(x)]) throw InputError("bad cycle structure");
      used[static_cast<std::size_t>(x)] = true;
      v[static_cast<std::size_t>(x - 1)] = c[(a + 1) % c.size()];
    }
  return Permutation(std::move(v));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> v;
  if (text.empty()) return Permutation();
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string part(text.substr(pos, end - pos));
    part.erase(std::remove(part.begin(), part.end(), ' '), part.end());
    if (part.empty() || part.size() > 9 || part.find_first_not_of("0123456789") != std::string::npos)
      throw InputError("cannot parse permutation: '" + std::string(text) + "'");
    v.push_back(std::stoi(part));
    pos = end + 1;
  }
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
  std::vector<int> w(values_.size());
  for (int i = 1; i <= size(); ++i) w[static_cast<std::size_t>((*this)(i) - 1)] = i;
  return Permutation(std::move(w));
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(values_.size() + 1, false);
  for (int i = 1; i <= size(); ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    std::vector<int> c;
    for (int x = i; !seen[static_cast<std::size_t>(x)]; x = (*this)(x)) {
      seen[static_cast<std::size_t>(x)] = true;
      c.push_back(x);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::string Permutation::to_string() const {
  std::string s;
  for (int v : values_) {
    if (!s.empty()) s += ',';
    s += std::to_string(v);
  }
  return s;
}

std::string Permutation::cycle_string() const {
  if (values_.empty()) return "()";
  std::string s;
  for (const auto& c : cycles()) s += cycle_word_string(c);
  return s;
}

std::vector<Permutation> all_permutations(int n) {
  Permutation id = Permutation::identity(n);
  std::vector<int> v = id.one_line();
  std::vector<Permutation> out;
  do out.emplace_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

int inv(const Permutation& sigma) {
  int n = 0;
  const auto& v = sigma.one_line();
  for (std::size_t a = 0; a < v.size(); ++a)
    for (std::size_t b = a + 1; b < v.size(); ++b) n += v[a] > v[b];
  return n;
}

std::vector<int> descents(const Permutation& sigma) {
  std::vector<int> d;
  for (int i = 1; i < sigma.size(); ++i)
    if (sigma(i) > sigma(i + 1)) d.push_back(i);
  return d;
}

int maj(const Permutation& sigma) {
  const auto d = descents(sigma);
  return std::accumulate(d.begin(), d.end(), 0);
}

int imaj(const Permutation& sigma) { return maj(sigma.inverse()); }

std::vector<int> excedance_profile(const Permutation& sigma) {
  std::vector<int> e;
  for (int i = 1; i <= sigma.size(); ++i)
    if (sigma(i) > i) e.push_back(i);
  return e;
}

bool has_excedance_prefix(const Permutation& sigma, int count) {
  for (int i = 1; i <= sigma.size(); ++i)
    if ((sigma(i) > i) != (i <= count)) return false;
  return true;
}

Permutation standardize(const std::vector<int>& word) {
  std::vector<int> sorted = word;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InputError("standardization needs pairwise distinct letters");
  std::vector<int> v;
  for (int x : word)
    v.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), x) - sorted.begin()) + 1);
  return Permutation(std::move(v));
}

std::string cycle_word_string(const std::vector<int>& word) {
  std::string s = "(";
  for (std::size_t a = 0; a < word.size(); ++a) {
    if (a) s += ' ';
    s += std::to_string(word[a]);
  }
  return s + ")";
}

std::vector<int> cycle_word_map(const std::vector<int>& word) {
  std::vector<int> next(word.size(), -1);
  for (std::size_t a = 0; a < word.size(); ++a) {
    const int x = word[a];
    if (x < 0 || x >= static_cast<int>(word.size()) || next[static_cast<std::size_t>(x)] != -1)
      throw InputError("cycle word is not a permutation of 0.." + std::to_string(word.size() - 1));
    next[static_cast<std::size_t>(x)] = word[(a + 1) % word.size()];
  }
  return next;
}

// ---------------------------------------------------------- coloured cycles

std::string Symbol::to_string() const { return (colour == Colour::Red ? "r" : "b") + std::to_string(index); }

TwoColouredCycle::TwoColouredCycle(int reds, int blues, std::vector<Symbol> cycle)
    : reds_(reds), blues_(blues), symbols_(std::move(cycle)) {
  if (reds < 0 || blues < 0) throw InputError("alphabet sizes must be non-negative");
  if (static_cast<int>(symbols_.size()) != reds + blues)
    throw InputError("a coloured cycle of size " + std::to_string(reds) + "x" + std::to_string(blues) +
                     " has " + std::to_string(reds + blues) + " symbols");
  std::set<std::pair<int, int>> seen;
  for (const Symbol& s : symbols_) {
    const int bound = s.colour == Colour::Red ? reds : blues;
    if (s.index < 1 || s.index > bound) throw InputError("symbol " + s.to_string() + " out of range");
    if (!seen.emplace(static_cast<int>(s.colour), s.index).second)
      throw InputError("symbol " + s.to_string() + " repeated");
  }
  if (symbols_.empty()) return;
  const Symbol start = blues > 0 ? Symbol{Colour::Blue, blues} : Symbol{Colour::Red, reds};
  const auto it = std::find(symbols_.begin(), symbols_.end(), start);
  std::rotate(symbols_.begin(), it, symbols_.end());
}

TwoColouredCycle TwoColouredCycle::parse(std::string_view text) {
  auto fail = [&]() -> void { throw InputError("cannot parse coloured cycle: '" + std::string(text) + "'"); };
  std::string_view s = text;
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') fail();
  s = s.substr(1, s.size() - 2);
  std::vector<Symbol> symbols;
  int reds = 0, blues = 0;
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] == ' ' || s[pos] == ',') {
      ++pos;
      continue;
    }
    Symbol sym;
    if (s[pos] == 'r') sym.colour = Colour::Red;
    else if (s[pos] == 'b') sym.colour = Colour::Blue;
    else fail();
    const std::size_t start = ++pos;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
    if (pos == start || pos - start > 9) fail();
    sym.index = std::stoi(std::string(s.substr(start, pos - start)));
    (sym.colour == Colour::Red ? reds : blues) += 1;
    symbols.push_back(sym);
  }
  return TwoColouredCycle(reds, blues, std::move(symbols));
}

std::string TwoColouredCycle::to_string() const {
  std::string s = "(";
  for (std::size_t a = 0; a < symbols_.size(); ++a) {
    if (a) s += ' ';
    s += symbols_[a].to_string();
  }
  return s + ")";
}

std::optional<std::string> validate_2cbd(const TwoColouredCycle& c) {
  const auto& s = c.symbols();
  for (std::size_t a = 0; a < s.size(); ++a) {
    const Symbol& x = s[a];
    const Symbol& y = s[(a + 1) % s.size()];
    if (s.size() > 1 && x.colour == y.colour && x.index <= y.index)
      return x.to_string() + " is followed by " + y.to_string();
  }
  return std::nullopt;
}

int blue_blocks(const TwoColouredCycle& c) {
  const auto& s = c.symbols();
  if (s.empty()) return 0;
  int n = 0;
  bool all_blue = true;
  for (std::size_t a = 0; a < s.size(); ++a) {
    const Symbol& prev = s[(a + s.size() - 1) % s.size()];
    if (s[a].colour == Colour::Blue && prev.colour != Colour::Blue) ++n;
    if (s[a].colour != Colour::Blue) all_blue = false;
  }
  return all_blue ? 1 : n;
}

std::vector<TwoColouredCycle> enumerate_2cbd(int reds, int blues) {
  if (reds < 0 || blues < 0 || reds + blues == 0) throw InputError("need at least one symbol");
  std::vector<Symbol> rest;
  for (int r = reds; r >= 1; --r) rest.push_back({Colour::Red, r});
  for (int b = blues; b >= 1; --b) rest.push_back({Colour::Blue, b});
  const Symbol start = rest[blues > 0 ? static_cast<std::size_t>(reds) : 0];
  rest.erase(std::find(rest.begin(), rest.end(), start));
  std::vector<TwoColouredCycle> out;
  // Depth-first over arrangements of the remaining symbols after `start`.
  std::vector<Symbol> word{start};
  std::vector<bool> used(rest.size(), false);
  auto ok_step = [](const Symbol& x, const Symbol& y) { return x.colour != y.colour || x.index > y.index; };
  std::function<void()> rec = [&]() {
    if (word.size() == rest.size() + 1) {
      if (word.size() == 1 || ok_step(word.back(), word.front())) out.emplace_back(reds, blues, word);
      return;
    }
    for (std::size_t a = 0; a < rest.size(); ++a) {
      if (used[a] || !ok_step(word.back(), rest[a])) continue;
      used[a] = true;
      word.push_back(rest[a]);
      rec();
      word.pop_back();
      used[a] = false;
    }
  };
  rec();
  return out;
}

}  // namespace natree
