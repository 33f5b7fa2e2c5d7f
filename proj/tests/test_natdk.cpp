#include <doctest.h>

#include <functional>
#include <set>

#include "natree/formulas.hpp"
#include "natree/natdk.hpp"

using namespace natree;

namespace {

// The defining conditions checked directly on a labelling given as
// per-vertex full tuples (0 for the placeholder), root included.
bool satisfies_definition(const DKTree& m, const std::vector<std::vector<int>>& lab) {
  const int d = m.d(), n = static_cast<int>(m.size());
  for (int i = 0; i < d; ++i) {
    std::set<int> values;
    int count = 0;
    for (int v = 0; v < n; ++v)
      if (lab[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)] != 0) {
        values.insert(lab[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)]);
        ++count;
      }
    if (static_cast<int>(values.size()) != count) return false;
    if (!values.empty() && (*values.begin() != 1 || *values.rbegin() != count)) return false;
  }
  for (int v = 1; v < n; ++v)
    for (int u = m.vertex(v).parent; u != -1; u = m.vertex(u).parent)
      for (int i = 0; i < d; ++i) {
        const int a = lab[static_cast<std::size_t>(u)][static_cast<std::size_t>(i)];
        const int b = lab[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)];
        if (a != 0 && b != 0 && a <= b) return false;
      }
  return true;
}

// All labellings of the shape, filtered by the definition. The root gets a
// full tuple with free values too.
std::set<std::string> brute_dknats(const DKTree& m) {
  const int d = m.d(), n = static_cast<int>(m.size());
  std::vector<std::pair<int, int>> slots;  // (vertex, axis)
  for (int i = 0; i < d; ++i) slots.emplace_back(0, i);
  for (int v = 1; v < n; ++v)
    for (int i : m.vertex(v).direction->members()) slots.emplace_back(v, i - 1);
  std::vector<std::vector<int>> lab(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(d), 0));
  std::set<std::string> out;
  std::function<void(std::size_t)> rec = [&](std::size_t s) {
    if (s == slots.size()) {
      if (!satisfies_definition(m, lab)) return;
      std::vector<DKLabel> labels(static_cast<std::size_t>(n), DKLabel(static_cast<std::size_t>(d)));
      for (int v = 1; v < n; ++v)
        for (int i = 0; i < d; ++i)
          if (lab[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)] != 0)
            labels[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)] = lab[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)];
      out.insert(DKNat(m, labels).to_string());
      return;
    }
    for (int value = 1; value <= n; ++value) {
      lab[static_cast<std::size_t>(slots[s].first)][static_cast<std::size_t>(slots[s].second)] = value;
      rec(s + 1);
    }
  };
  rec(0);
  return out;
}

std::vector<std::pair<int, int>> kDims = {{2, 1}, {3, 1}, {3, 2}, {2, 2}, {3, 3}};

}  // namespace

TEST_CASE("enumeration equals the brute-force filter for up to 3 vertices") {
  for (auto [d, k] : kDims)
    for (int n = 1; n <= 3; ++n)
      for (const auto& m : enumerate_dk_trees(d, k, n)) {
        std::set<std::string> got;
        for (const auto& t : enumerate_dknats_of_shape(m)) {
          CHECK(validate_dknat(t).empty());
          got.insert(t.to_string());
        }
        CHECK(got == brute_dknats(m));
      }
}

TEST_CASE("enumeration counts equal the (d,k) hook formula for up to 4 vertices") {
  for (auto [d, k] : kDims)
    for (int n = 1; n <= 4; ++n)
      for (const auto& m : enumerate_dk_trees(d, k, n))
        CHECK(Integer(enumerate_dknats_of_shape(m).size()) == dk_hook_formula(m));
}

TEST_CASE("geometric size and completed labels") {
  const DKTree leaf = DKTree::leaf(3, 2);
  const DKNat root = enumerate_dknats_of_shape(leaf).front();
  CHECK(geometric_size(root) == std::vector<int>{1, 1, 1});
  CHECK(complete_labels(root).front() == std::vector<int>{1, 1, 1});
  for (auto [d, k] : kDims)
    for (int n = 1; n <= 4; ++n)
      for (const auto& m : enumerate_dk_trees(d, k, n))
        for (const auto& t : enumerate_dknats_of_shape(m)) {
          const auto full = complete_labels(t);
          CHECK(std::set<std::vector<int>>(full.begin(), full.end()).size() == full.size());
          CHECK(full.front() == geometric_size(t));
        }
}

TEST_CASE("(d,d) chains have one labelling and reject non-decreasing labels") {
  for (int d = 2; d <= 3; ++d) {
    const Direction all = all_directions(d, d).front();
    DKTree chain = DKTree::leaf(d, d);
    for (int n = 2; n <= 4; ++n) {
      chain = DKTree::node(d, d, {{all, chain}});
      CHECK(enumerate_dknats_of_shape(chain).size() == 1);
      CHECK(geometric_size(enumerate_dknats_of_shape(chain).front()) == std::vector<int>(static_cast<std::size_t>(d), n));
    }
    const DKTree two = DKTree::node(d, d, {{all, DKTree::node(d, d, {{all, DKTree::leaf(d, d)}})}});
    std::vector<DKLabel> labels(3, DKLabel(static_cast<std::size_t>(d), 1));
    labels[2].assign(static_cast<std::size_t>(d), 2);
    const auto v = validate_dknat(DKNat(two, labels));
    REQUIRE_FALSE(v.empty());
    CHECK(v.front().condition == "decreasing");
  }
}

TEST_CASE("(2,1) NATs are ordinary NATs") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& b : enumerate_binary_trees(n)) {
      const auto nats = enumerate_nats_of_shape(b);
      const auto dk = enumerate_dknats_of_shape(to_dk_tree(b));
      REQUIRE(nats.size() == dk.size());
      std::set<std::string> a, c;
      for (const auto& t : nats) {
        a.insert(t.to_string());
        CHECK(to_nat(to_dknat(t)) == t);
      }
      for (const auto& t : dk) c.insert(to_nat(t).to_string());
      CHECK(a == c);
    }
}

TEST_CASE("geometric round trip for (3,1) and (3,2) up to 4 vertices") {
  for (auto [d, k] : std::vector<std::pair<int, int>>{{3, 1}, {3, 2}})
    for (int n = 1; n <= 4; ++n)
      for (const auto& m : enumerate_dk_trees(d, k, n))
        for (const auto& t : enumerate_dknats_of_shape(m)) {
          const DKGeometric g = dknat_to_geometric(t);
          CHECK(g.box == geometric_size(t));
          CHECK(geometric_to_dknat(g) == t);
        }
}

TEST_CASE("geometric conditions are named") {
  CHECK_THROWS_WITH_AS(geometric_to_dknat({3, 1, {2, 1, 1}, {{2, 1, 1}, {3, 1, 1}}}), doctest::Contains("condition 1"),
                       InputError);
  CHECK_THROWS_WITH_AS(geometric_to_dknat({3, 1, {2, 1, 1}, {{1, 1, 1}}}), doctest::Contains("condition 2"),
                       InputError);
  // (1,1,1) sees the root along both axis 1 and axis 2.
  CHECK_THROWS_WITH_AS(geometric_to_dknat({3, 1, {2, 2, 1}, {{2, 2, 1}, {1, 2, 1}, {2, 1, 1}, {1, 1, 1}}}),
                       doctest::Contains("condition 3"), InputError);
  CHECK_THROWS_WITH_AS(geometric_to_dknat({3, 1, {3, 1, 1}, {{3, 1, 1}, {1, 1, 1}}}), doctest::Contains("condition 4"),
                       InputError);
  CHECK(geometric_to_dknat({3, 2, {1, 1, 1}, {{1, 1, 1}}}).size() == 1);
}

TEST_CASE("labels and paths") {
  const DKNat t = DKNat::from_paths(3, 1, {{"1", "1,.,."}, {"2", ".,1,."}});
  CHECK(validate_dknat(t).empty());
  CHECK(geometric_size(t) == std::vector<int>{2, 2, 1});
  CHECK(DKNat::from_paths(3, 1, t.to_paths()) == t);
  CHECK(parse_label(3, "2,.,1") == DKLabel{2, std::nullopt, 1});
  CHECK_THROWS_AS(parse_label(3, "2,1"), InputError);
  const DKNat bad = DKNat::from_paths(3, 1, {{"1", ".,1,."}});
  CHECK(validate_dknat(bad).front().condition == "direction");
}

TEST_CASE("desk-scale guard") {
  CHECK_THROWS_AS(check_dk_scale(7, {1, 1, 1, 1, 1, 1, 1}), ResourceError);
  CHECK_THROWS_AS(check_dk_scale(3, {101, 101, 101}), ResourceError);
  CHECK_NOTHROW(check_dk_scale(3, {100, 100, 100}));
}
