#include <doctest.h>

#include <functional>
#include <map>

#include "fixtures.hpp"
#include "natree/formulas.hpp"

using namespace natree;

namespace {

const ParamPoly qL = ParamPoly::var(Param::qL);
const ParamPoly qR = ParamPoly::var(Param::qR);
const ParamPoly alpha = ParamPoly::var(Param::alpha);
const ParamPoly beta = ParamPoly::var(Param::beta);

// Set partitions of {1..n} as restricted growth strings; `f` gets the
// block count and the size of the block holding n.
void for_set_partitions(int n, const std::function<void(int, int)>& f) {
  std::vector<int> g(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int pos, int blocks) {
    if (pos == n) {
      int with_n = 0;
      for (int x : g) with_n += x == g.back();
      f(blocks, with_n);
      return;
    }
    for (int b = 0; b <= blocks && (pos > 0 || b == 0); ++b) {
      g[static_cast<std::size_t>(pos)] = b;
      rec(pos + 1, std::max(blocks, b + 1));
    }
  };
  if (n == 0) f(0, 0);
  else rec(0, 0);
}

ParamPoly poly_pow(const ParamPoly& p, int e) { return p.pow(static_cast<unsigned>(e)); }

}  // namespace

TEST_CASE("hook formula example gives 24") {
  const BinaryTree b = fixtures::figure_tree("ex_hook.json");
  CHECK(hook_formula(b) == 24);
  CHECK(enumerate_nats_of_shape(b).size() == 24);
  CHECK(validate_nat(fixtures::figure_nat("ex_hook_nat.json")).empty());
}

TEST_CASE("hook formula against enumeration for shapes up to 6 vertices") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& b : enumerate_binary_trees(n)) CHECK(hook_formula(b) == Integer(enumerate_nats_of_shape(b).size()));
}

TEST_CASE("q-hook formula example") {
  const BinaryTree b = fixtures::figure_tree("ex_hook.json");
  const ParamPoly expected = (poly_pow(qR, 3) + poly_pow(qR, 2) + qR + 1) * (poly_pow(qL, 2) + qL + 1) * (qR + 1);
  CHECK(q_hook_formula(b) == expected);
  CHECK(expected.coeff(make_monomial({{Param::qR, 2}, {Param::qL, 1}})) == 2);
  for (Statistic s : {Statistic::Inv, Statistic::Imaj}) {
    ParamPoly sum;
    for (const auto& t : enumerate_nats_of_shape(b)) sum += weight(t, s);
    CHECK(sum == expected);
  }
}

TEST_CASE("q-hook theorem for shapes up to 5 vertices") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& b : enumerate_binary_trees(n))
      for (Statistic s : {Statistic::Inv, Statistic::Imaj}) {
        ParamPoly sum;
        for (const auto& t : enumerate_nats_of_shape(b)) sum += weight(t, s);
        CHECK(sum == q_hook_formula(b));
      }
}

TEST_CASE("sigma readings are permutations of the side sizes") {
  const Nat t = fixtures::figure_nat("fig_nat.json");
  const auto [l, r] = sigma_readings(t);
  CHECK(l.size() == t.w_l() - 1);
  CHECK(r.size() == t.w_r() - 1);
}

TEST_CASE("q-integers, q-factorials and q-binomials") {
  const ParamPoly q = ParamPoly::var(Param::q);
  CHECK(q_int(3, Param::q) == 1 + q + q * q);
  CHECK(q_factorial(3, Param::q) == (1 + q) * (1 + q + q * q));
  CHECK(q_binomial(2, 3, Param::q).is_zero());
  // Inversions of 0/1 words with k ones.
  for (int n = 0; n <= 8; ++n)
    for (int k = 0; k <= n; ++k) {
      ParamPoly sum;
      for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != k) continue;
        unsigned inversions = 0;
        for (int a = 0; a < n; ++a)
          for (int b = a + 1; b < n; ++b) inversions += ((mask >> a) & 1u) && !((mask >> b) & 1u);
        sum += ParamPoly::var(Param::q, inversions);
      }
      CHECK(q_binomial(n, k, Param::q) == sum);
    }
}

TEST_CASE("rising factorial") {
  const ParamPoly x = ParamPoly::var(Param::alpha);
  CHECK(rising_factorial(x, 0) == ParamPoly(1L));
  CHECK(rising_factorial(x, 3) == x * (x + 1) * (x + 2));
}

TEST_CASE("Stirling numbers against set partitions") {
  const ParamPoly q = ParamPoly::var(Param::q);
  for (int n = 1; n <= 8; ++n) {
    std::map<int, Integer> plain;
    std::map<int, ParamPoly> marked;
    for_set_partitions(n, [&](int blocks, int with_n) {
      plain[blocks] += 1;
      marked[blocks] += ParamPoly::var(Param::q, static_cast<unsigned>(with_n - 1));
    });
    for (int k = 1; k <= n; ++k) {
      CHECK(stirling2(n, k) == plain[k]);
      CHECK(stirling2_q(n, k, Param::q) == marked[k]);
    }
  }
  CHECK(stirling2_q(3, 2, Param::q) == 1 + 2 * q);
  CHECK(stirling2_q(4, 2, Param::q) == 1 + 3 * q + 3 * q * q);
  CHECK(stirling2_q(4, 3, Param::q) == 3 + 3 * q);
}

TEST_CASE("counting by size against enumeration") {
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; i + j <= 7; ++j) {
      ParamPoly by_branches;
      std::map<int, Integer> by_hook;
      std::map<int, ParamPoly> by_hook_ab;
      for (const auto& t : enumerate_nats_by_size(i, j)) {
        const NatStats s = nat_stats(t);
        const ParamPoly w = poly_pow(alpha, s.lo) * poly_pow(beta, s.ro);
        by_branches += w;
        by_hook[s.hook] += 1;
        by_hook_ab[s.hook] += w;
      }
      CHECK(count_by_size(i, j) == by_branches);
      for (int p = 1; p <= std::min(i, j); ++p) {
        CHECK(count_by_size_and_hook(i, j, p) == by_hook[p]);
        CHECK(count_by_size_and_hook_ab(i, j, p) == by_hook_ab[p]);
      }
    }
}

TEST_CASE("bsg(21,12) is the printed list") {
  std::vector<std::string> got;
  for (const auto& s : bsg(Permutation::parse("2,1"), Permutation::parse("1,2"))) {
    std::string w;
    for (int x : s.one_line()) w += std::to_string(x);
    got.push_back(w);
  }
  CHECK(got == std::vector<std::string>{"21345", "21435", "21534", "31425", "31524", "41523", "32415", "32514",
                                        "42513", "43512"});
}

TEST_CASE("bsg lemma for small pairs") {
  const ParamPoly q = ParamPoly::var(Param::q);
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; m + n <= 4; ++n)
      for (const auto& tau : all_permutations(m))
        for (const auto& pi : all_permutations(n))
          for (Statistic s : {Statistic::Inv, Statistic::Imaj}) {
            ParamPoly sum;
            for (const auto& uv : bsg(tau, pi)) sum += ParamPoly::var(Param::q, static_cast<unsigned>(statistic(uv, s)));
            CHECK(sum == ParamPoly::var(Param::q, static_cast<unsigned>(statistic(tau, s) + statistic(pi, s))) *
                             q_binomial(m + n + 1, m + 1, Param::q));
          }
}

TEST_CASE("(d,k) geometric size and hook formula on small cases") {
  const DKTree leaf = DKTree::leaf(3, 1);
  CHECK(dk_geometric_size(leaf) == std::vector<int>{1, 1, 1});
  CHECK(dk_hook_formula(leaf) == 1);
  for (int n = 1; n <= 4; ++n)
    for (const auto& t : enumerate_dk_trees(2, 1, n))
      CHECK(dk_hook_formula(t) == hook_formula(to_binary_tree(t)));
  CHECK_THROWS_AS(dk_hook_formula(DKTree::empty(3, 1, Direction(3, {2}))), InputError);
}
