#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "fixtures.hpp"
#include "natree/bijections.hpp"
#include "natree/formulas.hpp"

using namespace natree;

namespace {

const std::vector<std::vector<int>> kZigzagCycles = {
    {13, 1, 6, 20, 12, 5, 22, 10, 2, 23}, {21}, {18, 3, 7, 17, 15, 4, 19}, {14, 9, 8, 16}, {11}};
const std::vector<int> kZigzagPsi = {0,  13, 1, 6, 20, 12, 5,  22, 10, 2, 23, 21,
                                       18, 3,  7, 17, 15, 4, 19, 14, 9,  8, 16, 11};

// Cycles ordered by decreasing maximum, each rotated to end at its maximum.
std::vector<int> lemma_word(const Permutation& s) {
  auto cycles = s.cycles();
  for (auto& c : cycles) std::rotate(c.begin(), std::max_element(c.begin(), c.end()) + 1, c.end());
  std::sort(cycles.begin(), cycles.end(), [](const auto& a, const auto& b) { return a.back() > b.back(); });
  std::vector<int> w{0};
  for (const auto& c : cycles) w.insert(w.end(), c.begin(), c.end());
  return w;
}

template <class F>
void for_small_nats(int max_sum, F f) {
  for (int i = 1; i < max_sum; ++i)
    for (int j = 1; i + j <= max_sum; ++j)
      for (const auto& t : enumerate_nats_by_size(i, j)) f(t, i, j);
}

}  // namespace

TEST_CASE("phi on the zigzag figure") {
  const Nat t = fixtures::figure_nat("zigzag.json");
  REQUIRE(validate_nat(t).empty());
  const Permutation s = phi(t);
  CHECK(s == Permutation::from_cycles(23, kZigzagCycles));
  CHECK(s(23) == 13);
  CHECK(s(3) == 7);
  CHECK(has_excedance_prefix(s, t.w_r() - 1));
}

TEST_CASE("psi on the zigzag figure") {
  const Nat t = fixtures::figure_nat("zigzag.json");
  const auto w = psi(t);
  CHECK(w == kZigzagPsi);
  const auto succ = cycle_word_map(w);
  CHECK(succ[19] == 14);
  CHECK(phi(t)(16) == 14);
  CHECK(psi_word_from_phi(phi(t)) == w);
  const TwoColouredCycle c = recolour(w, t.w_l(), t.w_r());
  CHECK_FALSE(validate_2cbd(c));
  CHECK(blue_blocks(c) == 7);
  CHECK(nat_stats(t).hook == 7);
  CHECK(uncolour(c) == w);
  CHECK(psi_inverse(c) == t);
  CHECK(phi_inverse(phi(t)) == t);
}

TEST_CASE("blue blocks on the 22-vertex figure") {
  const Nat t = fixtures::figure_nat("fig_nat.json");
  CHECK(blue_blocks(recolour(psi(t), t.w_l(), t.w_r())) == 8);
}

TEST_CASE("zigzag traces leave through border edges") {
  const Nat t = fixtures::figure_nat("zigzag.json");
  std::set<int> ends;
  for (int e = 0; e < t.w_l() + t.w_r(); ++e) ends.insert(zigzag_trace(t, e, true).end);
  CHECK(ends.size() == static_cast<std::size_t>(t.w_l() + t.w_r()));
  CHECK(column_edge(t.w_l(), t.w_r(), 3) == 3);
  CHECK(row_edge(t.w_l(), t.w_r(), t.w_l() - 1) == t.w_r());
}

TEST_CASE("phi, psi and theta exhaustively for w_L + w_R <= 7") {
  for_small_nats(7, [](const Nat& t, int i, int j) {
    const Permutation s = phi(t);
    CHECK(s.size() == i + j - 1);
    CHECK(has_excedance_prefix(s, j - 1));
    const auto w = psi(t);
    CHECK(w == lemma_word(s));
    const TwoColouredCycle c = recolour(w, i, j);
    CHECK_FALSE(validate_2cbd(c));
    CHECK(blue_blocks(c) == nat_stats(t).hook);
    CHECK(psi_inverse(w, i, j) == t);
    CHECK(phi_inverse(s) == t);
    CHECK(theta(c) == s);
  });
}

TEST_CASE("the 1x1 NAT") {
  const Nat t = enumerate_nats_by_size(1, 1).front();
  CHECK(phi(t) == Permutation::identity(1));
  CHECK(psi(t) == std::vector<int>{0, 1});
}

TEST_CASE("omega is an involution and carries blue blocks to CE") {
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; i + j <= 7; ++j)
      for (const auto& c : enumerate_2cbd(i, j)) {
        const TwoColouredCycle w = omega(c);
        CHECK_FALSE(validate_2cbd(w));
        CHECK(omega(w) == c);
        CHECK(blue_blocks(c) == ce(theta(w), i, j));
      }
}

TEST_CASE("CE after theta and omega equals the blue block count") {
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; i + j <= 7; ++j)
      for (const auto& c : enumerate_2cbd(i, j)) CHECK(ce(theta(omega(c)), i, j) == blue_blocks(c));
}

TEST_CASE("the displayed CE formula agrees when the sides are equal") {
  for (int i = 1; i <= 3; ++i)
    for (const auto& c : enumerate_2cbd(i, i)) {
      const Permutation s = theta(omega(c));
      CHECK(ce_as_displayed(s, i, i) == ce(s, i, i));
    }
}

TEST_CASE("zeta reproduces the table of first terms") {
  const std::vector<std::pair<std::string, std::string>> table = {
      {"(,)", "(())"},           {"((,),)", "((()))"},       {"(,(,))", "(()())"},
      {"((,),(,))", "((()()))"}, {"(((,),),)", "(((())))"},  {"(,(,(,)))", "(()()())"},
      {"((,(,)),)", "(()(()))"}, {"(,((,),))", "((())())"}};
  for (const auto& [b, o] : table) {
    CHECK(zeta(BinaryTree::parse(b)).to_string() == o);
    CHECK(zeta_inverse(OrderedTree::parse(o)) == BinaryTree::parse(b));
  }
}

TEST_CASE("zeta is a bijection sending hooks to childleaf") {
  for (int n = 1; n <= 8; ++n) {
    std::set<std::string> images;
    for (const auto& b : enumerate_binary_trees(n)) {
      const OrderedTree o = zeta(b);
      CHECK(o.edge_count() == static_cast<std::size_t>(n));
      CHECK(zeta_inverse(o) == b);
      CHECK(childleaf_count(o) == hook_count(b));
      images.insert(o.to_string());
    }
    CHECK(images.size() == enumerate_ordered_trees(n).size());
  }
}

TEST_CASE("bijection inputs are checked") {
  CHECK_THROWS_AS(psi_inverse(std::vector<int>{0, 2, 1}, 1, 1), InputError);
  CHECK_THROWS_AS(phi_inverse(Permutation::parse("1,3,2")), InputError);
}
