#include "natree/formulas.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace natree {

namespace {

// Dense univariate polynomial with integer coefficients, lowest degree first.
using UPoly = std::vector<Integer>;

UPoly umul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

// Exact division; a non-zero remainder means a formula is wrong.
UPoly udiv_exact(UPoly num, const UPoly& den) {
  if (den.empty() || den.back() == 0) throw std::logic_error("division by the zero polynomial");
  while (!num.empty() && num.back() == 0) num.pop_back();
  if (num.empty()) return {};
  if (num.size() < den.size()) throw std::logic_error("inexact polynomial division");
  UPoly quo(num.size() - den.size() + 1, 0);
  for (std::size_t k = quo.size(); k-- > 0;) {
    const Integer& lead = num[k + den.size() - 1];
    if (lead % den.back() != 0) throw std::logic_error("inexact polynomial division");
    quo[k] = lead / den.back();
    for (std::size_t j = 0; j < den.size(); ++j) num[k + j] -= quo[k] * den[j];
  }
  for (const Integer& r : num)
    if (r != 0) throw std::logic_error("inexact polynomial division");
  return quo;
}

UPoly uqint(int n) { return UPoly(static_cast<std::size_t>(std::max(n, 0)), 1); }

UPoly uqfact(int n) {
  UPoly p{1};
  for (int i = 2; i <= n; ++i) p = umul(p, uqint(i));
  return p;
}

ParamPoly to_param(const UPoly& p, Param q) {
  ParamPoly out;
  for (std::size_t e = 0; e < p.size(); ++e)
    if (p[e] != 0) out += ParamPoly::var(q, static_cast<unsigned>(e)) * ParamPoly(Rational(p[e]));
  return out;
}

void require_nonempty(const BinaryTree& tree) {
  if (tree.empty()) throw InputError("hook formulas need a non-empty tree");
}

}  // namespace

Integer hook_formula(const BinaryTree& tree) {
  require_nonempty(tree);
  const auto [nl, nr] = lv_rv(tree);
  Integer num = factorial(static_cast<unsigned>(nl)) * factorial(static_cast<unsigned>(nr));
  Integer den = 1;
  for (const auto& sc : subtree_counts(tree)) den *= tree.is_left_child(sc.vertex) ? sc.el : sc.er;
  if (num % den != 0) throw std::logic_error("hook formula division is not exact");
  return num / den;
}

std::pair<Permutation, Permutation> sigma_readings(const Nat& t) {
  if (t.empty()) throw InputError("readings of an empty NAT");
  const BinaryTree& s = t.shape();
  std::vector<int> left, right;
  std::function<void(int)> read_left = [&](int v) {
    if (v == BinaryTree::kAbsent) return;
    read_left(s.vertex(v).left);
    read_left(s.vertex(v).right);
    if (s.is_left_child(v)) left.push_back(t.label(v));
  };
  std::function<void(int)> read_right = [&](int v) {
    if (v == BinaryTree::kAbsent) return;
    read_right(s.vertex(v).right);
    read_right(s.vertex(v).left);
    if (s.is_right_child(v)) right.push_back(t.label(v));
  };
  read_left(0);
  read_right(0);
  return {Permutation(left), Permutation(right)};
}

int statistic(const Permutation& sigma, Statistic s) { return s == Statistic::Inv ? inv(sigma) : imaj(sigma); }

ParamPoly weight(const Nat& t, Statistic s) {
  const auto [l, r] = sigma_readings(t);
  return ParamPoly::var(Param::qL, static_cast<unsigned>(statistic(l, s))) *
         ParamPoly::var(Param::qR, static_cast<unsigned>(statistic(r, s)));
}

ParamPoly q_int(int n, Param q) {
  if (n < 0) throw InputError("q-integers need n >= 0");
  return to_param(uqint(n), q);
}

ParamPoly q_factorial(int n, Param q) {
  if (n < 0) throw InputError("q-factorials need n >= 0");
  return to_param(uqfact(n), q);
}

ParamPoly q_binomial(int n, int k, Param q) {
  if (n < 0) throw InputError("q-binomials need n >= 0");
  if (k < 0 || k > n) return ParamPoly();
  return to_param(udiv_exact(uqfact(n), umul(uqfact(k), uqfact(n - k))), q);
}

ParamPoly rising_factorial(const ParamPoly& x, int n) {
  if (n < 0) throw InputError("rising factorials need n >= 0");
  ParamPoly p(1L);
  for (int i = 0; i < n; ++i) p *= x + ParamPoly(static_cast<long>(i));
  return p;
}

ParamPoly q_hook_formula(const BinaryTree& tree) {
  require_nonempty(tree);
  const auto [nl, nr] = lv_rv(tree);
  UPoly den_l{1}, den_r{1};
  for (const auto& sc : subtree_counts(tree)) {
    if (tree.is_left_child(sc.vertex)) den_l = umul(den_l, uqint(sc.el));
    else den_r = umul(den_r, uqint(sc.er));
  }
  return to_param(udiv_exact(uqfact(nl), den_l), Param::qL) *
         to_param(udiv_exact(uqfact(nr), den_r), Param::qR);
}

Integer stirling2(int n, int k) {
  if (n < 0 || k < 0) throw InputError("Stirling numbers need n, k >= 0");
  if (k > n) return 0;
  std::vector<Integer> row(static_cast<std::size_t>(k) + 1, 0);  // S(m, 0..k)
  row[0] = 1;
  for (int m = 1; m <= n; ++m)
    for (int c = std::min(m, k); c >= 0; --c)
      row[static_cast<std::size_t>(c)] =
          c == 0 ? Integer(0) : Integer(c * row[static_cast<std::size_t>(c)] + row[static_cast<std::size_t>(c - 1)]);
  return row[static_cast<std::size_t>(k)];
}

// The block of n holds n and s of the other n-1 elements; the rest is
// partitioned into k-1 blocks.
ParamPoly stirling2_q(int n, int k, Param q) {
  if (n < 0 || k < 0) throw InputError("Stirling numbers need n, k >= 0");
  if (n == 0) return ParamPoly(k == 0 ? 1L : 0L);
  if (k == 0 || k > n) return ParamPoly();
  ParamPoly out;
  for (int s = 0; s <= n - k; ++s)
    out += ParamPoly::var(q, static_cast<unsigned>(s)) *
           ParamPoly(Rational(binomial(static_cast<unsigned>(n - 1), static_cast<unsigned>(s)) *
                              stirling2(n - 1 - s, k - 1)));
  return out;
}

ParamPoly count_by_size_and_hook_ab(int i, int j, int p) {
  if (i < 1 || j < 1 || p < 1) throw InputError("sizes and hook number must be positive");
  const ParamPoly ab = ParamPoly::var(Param::alpha) + ParamPoly::var(Param::beta);
  return ParamPoly(Rational(factorial(static_cast<unsigned>(p - 1)))) * rising_factorial(ab, p - 1) *
         stirling2_q(i, p, Param::alpha) * stirling2_q(j, p, Param::beta);
}

ParamPoly count_by_size(int i, int j) {
  if (i < 1 || j < 1) throw InputError("sizes must be positive");
  ParamPoly out;
  for (int p = 1; p <= std::min(i, j); ++p) out += count_by_size_and_hook_ab(i, j, p);
  return out;
}

Integer count_by_size_and_hook(int i, int j, int p) {
  if (i < 1 || j < 1 || p < 1) throw InputError("sizes and hook number must be positive");
  return factorial(static_cast<unsigned>(p - 1)) * factorial(static_cast<unsigned>(p)) * stirling2(i, p) *
         stirling2(j, p);
}

std::vector<Permutation> bsg(const Permutation& sigma, const Permutation& mu) {
  const int m = sigma.size(), n = mu.size(), total = m + n + 1;
  std::vector<int> lifted = sigma.one_line();
  lifted.push_back(m + 1);
  std::vector<Permutation> out;
  std::vector<int> chosen(static_cast<std::size_t>(m) + 1);
  for (int a = 0; a <= m; ++a) chosen[static_cast<std::size_t>(a)] = a + 1;
  while (true) {
    std::vector<int> rest;
    std::size_t at = 0;
    for (int x = 1; x <= total; ++x) {
      if (at < chosen.size() && chosen[at] == x) ++at;
      else rest.push_back(x);
    }
    std::vector<int> word;
    for (int v : lifted) word.push_back(chosen[static_cast<std::size_t>(v - 1)]);
    for (int v : mu.one_line()) word.push_back(rest[static_cast<std::size_t>(v - 1)]);
    out.emplace_back(std::move(word));
    int a = m;
    while (a >= 0 && chosen[static_cast<std::size_t>(a)] == total - m + a) --a;
    if (a < 0) break;
    ++chosen[static_cast<std::size_t>(a)];
    for (int b = a + 1; b <= m; ++b) chosen[static_cast<std::size_t>(b)] = chosen[static_cast<std::size_t>(b - 1)] + 1;
  }
  return out;
}

std::vector<int> dk_geometric_size(const DKTree& tree) {
  std::vector<int> w(static_cast<std::size_t>(tree.d()), 1);
  if (tree.empty()) {
    for (int i = 1; i <= tree.d(); ++i)
      if (tree.empty_direction()->contains(i)) w[static_cast<std::size_t>(i - 1)] = 0;
    return w;
  }
  for (const auto& v : tree.vertices())
    if (v.direction)
      for (int i : v.direction->members()) ++w[static_cast<std::size_t>(i - 1)];
  return w;
}

Integer dk_hook_formula(const DKTree& tree) {
  if (tree.empty()) throw InputError("hook formulas need a non-empty tree");
  const int d = tree.d();
  const int n = static_cast<int>(tree.size());
  // e[v][i]: vertices of the subtree at v whose direction contains i+1.
  std::vector<std::vector<int>> e(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(d), 0));
  for (int v = n - 1; v >= 0; --v) {
    const auto& x = tree.vertex(v);
    if (x.direction)
      for (int i : x.direction->members()) ++e[static_cast<std::size_t>(v)][static_cast<std::size_t>(i - 1)];
    for (const auto& [dir, c] : x.children)
      for (int i = 0; i < d; ++i) e[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)] += e[static_cast<std::size_t>(c)][static_cast<std::size_t>(i)];
  }
  Integer num = 1, den = 1;
  for (int w : dk_geometric_size(tree)) num *= factorial(static_cast<unsigned>(w - 1));
  for (int v = 1; v < n; ++v)
    for (int i : tree.vertex(v).direction->members())
      den *= e[static_cast<std::size_t>(v)][static_cast<std::size_t>(i - 1)];
  if (num % den != 0) throw std::logic_error("(d,k) hook formula division is not exact");
  return num / den;
}

}  // namespace natree
