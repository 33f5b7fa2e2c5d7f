#include <doctest.h>

#include <map>

#include "natree/formulas.hpp"
#include "natree/nat.hpp"
#include "natree/series.hpp"

using namespace natree;

namespace {

Integer stirling_rec(int n, int k) {
  if (n == 0 || k == 0) return n == k ? 1 : 0;
  return k * stirling_rec(n - 1, k) + stirling_rec(n - 1, k - 1);
}

// [x^a y^b / (a! b!)] e^{x+y} / (1 - (e^x-1)(e^y-1))^2, from
// (e^x - 1)^m = m! sum_a S(a,m) x^a / a!.
Integer n_closed_egf(int a, int b) {
  Integer total = 0;
  for (int a1 = 0; a1 <= a; ++a1)
    for (int b1 = 0; b1 <= b; ++b1) {
      Integer inner = 0;
      for (int m = 0; m <= std::min(a1, b1); ++m)
        inner += (m + 1) * factorial(m) * factorial(m) * stirling_rec(a1, m) * stirling_rec(b1, m);
      total += binomial(a, a1) * binomial(b, b1) * inner;
    }
  return total;
}

Rational scalar(const ParamPoly& p) { return p.constant_term(); }

TruncSeries::Exponent ex(std::initializer_list<int> e) { return TruncSeries::Exponent(e); }

}  // namespace

TEST_CASE("truncated arithmetic") {
  const TruncSeries x = TruncSeries::variable(2, 4, 0), y = TruncSeries::variable(2, 4, 1);
  const TruncSeries one = TruncSeries::constant(2, 4, ParamPoly(1L));
  const TruncSeries p = (one + x) * (one + y);
  CHECK(scalar(p.coeff(ex({1, 1}))) == 1);
  CHECK((x * x * x * x * x).is_zero());
  CHECK(p.integral(0).derivative(0) == p);
  CHECK(exp_nilpotent(TruncSeries(2, 4) + x).coeff(ex({3, 0})).constant_term() == Rational(1, 6));
  CHECK(exp_nilpotent(TruncSeries(2, 4) - log_one_minus(x * y)) == geometric(x * y));
  CHECK_THROWS_AS(exp_nilpotent(one), InputError);
  CHECK_THROWS_AS(TruncSeries::variable(1, 4, 0) + x, InputError);
}

TEST_CASE("caps bound individual exponents") {
  const TruncSeries x = TruncSeries::variable(2, 6, 0, {2, TruncSeries::kNoCap});
  CHECK((x * x * x).is_zero());
  CHECK_FALSE((x * x).is_zero());
}

TEST_CASE("N solves to the closed form and matches the Stirling-sum coefficients") {
  const int order = 8;
  const TruncSeries n = solve_N(order);
  CHECK(n == closed_N(order));
  for (int a = 0; a <= order; ++a)
    for (int b = 0; a + b <= order; ++b)
      CHECK(scalar(n.coeff(ex({a, b}))) * factorial(a) * factorial(b) == n_closed_egf(a, b));
}

TEST_CASE("N counts NATs by side sizes") {
  const TruncSeries n = solve_N(6);
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; i + j <= 7; ++j)
      CHECK(scalar(n.coeff(ex({i - 1, j - 1}))) * factorial(i - 1) * factorial(j - 1) ==
            Integer(enumerate_nats_by_size(i, j).size()));
}

TEST_CASE("M is consistent with N") {
  const int order = 8;
  const TruncSeries m = solve_M(order);
  CHECK(m == closed_M(order));
  CHECK(m.derivative(0).derivative(1).truncated(order - 2) == solve_N(order - 2));
}

TEST_CASE("N(x,y;alpha,beta)") {
  const int order = 6;
  const TruncSeries n = solve_N_ab(order);
  CHECK(n == closed_N_ab(order));
  CHECK(n.substitute(Param::alpha, 1).substitute(Param::beta, 1) == solve_N(order));
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; i + j <= 7; ++j) {
      ParamPoly c = n.coeff(ex({i - 1, j - 1}));
      c *= Rational(factorial(i - 1) * factorial(j - 1));
      CHECK(c == count_by_size(i, j));
    }
}

TEST_CASE("hook generating function against enumeration") {
  const int order = 5;
  const TruncSeries gf = closed_hook_gf(order);
  const TruncSeries lg = closed_hook_log(order + 2);
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; i + j - 2 <= order; ++j) {
      ParamPoly sum, hooks;
      for (const auto& t : enumerate_nats_by_size(i, j)) {
        const NatStats s = nat_stats(t);
        sum += ParamPoly::term(make_monomial({{Param::alpha, s.lo}, {Param::beta, s.ro}, {Param::z, s.hook}}), 1);
        hooks += ParamPoly::var(Param::z, static_cast<unsigned>(s.hook));
      }
      ParamPoly c = gf.coeff(ex({i - 1, j - 1}));
      c *= Rational(factorial(i - 1) * factorial(j - 1));
      CHECK(c == sum);
      ParamPoly l = lg.coeff(ex({i, j}));
      l *= Rational(factorial(i) * factorial(j));
      CHECK(l == hooks);
    }
}

TEST_CASE("pumping a shape gives its NAT count") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& b : enumerate_binary_trees(n)) {
      const TruncSeries s = pump_tree(b, n + 1);
      const auto [lv, rv] = lv_rv(b);
      CHECK(s.terms().size() == 1);
      CHECK(scalar(s.coeff(ex({lv + 1, rv + 1}))) * factorial(lv + 1) * factorial(rv + 1) == hook_formula(b));
    }
  CHECK(pump_tree(BinaryTree::empty_left(), 3) == TruncSeries::variable(2, 3, 1));
}

TEST_CASE("(d,k) series") {
  CHECK(solve_N_dk(2, 1, 8) == solve_N(8));
  for (int d = 1; d <= 3; ++d) {
    TruncSeries expected(d, 6);
    for (int n = 0; n * d <= 6; ++n) {
      Integer den = 1;
      for (int i = 0; i < d; ++i) den *= factorial(n);
      expected.add_to_coeff(TruncSeries::Exponent(static_cast<std::size_t>(d), n), ParamPoly(Rational(1) / Rational(den)));
    }
    CHECK(solve_N_dk(d, d, 6) == expected);
  }
  CHECK(solve_N_dk(3, 1, 6).drop_variable(2) == solve_N_dk(2, 1, 6));
  CHECK(solve_N_dk(4, 2, 4).drop_variable(3).drop_variable(2).is_zero() == false);
  for (int n = 1; n <= 3; ++n)
    for (const auto& m : enumerate_dk_trees(3, 2, n)) {
      const auto w = dk_geometric_size(m);
      TruncSeries::Exponent e(w.begin(), w.end());
      Integer den = 1;
      for (int x : w) den *= factorial(x);
      const TruncSeries s = pump_dk_tree(m, 3 + 2 * n);
      CHECK(scalar(s.coeff(e)) * den == dk_hook_formula(m));
    }
}

TEST_CASE("B_p and O_p coincide and count trees by hooks and childleaf") {
  const auto [b, o] = solve_Bp_Op(8);
  CHECK(b == o);
  CHECK(b.constant_term() == ParamPoly(1L));
  for (int n = 1; n <= 8; ++n) {
    ParamPoly hooks, leaves;
    for (const auto& t : enumerate_binary_trees(n)) hooks += ParamPoly::var(Param::t, static_cast<unsigned>(hook_count(t)));
    for (const auto& t : enumerate_ordered_trees(n))
      leaves += ParamPoly::var(Param::t, static_cast<unsigned>(childleaf_count(t)));
    CHECK(b.coeff(ex({n})) == hooks);
    CHECK(o.coeff(ex({n})) == leaves);
  }
}

TEST_CASE("order guard") {
  CHECK_THROWS_AS(check_order(resource_cap() + 1), ResourceError);
  CHECK_THROWS_AS(check_order(-1), InputError);
  CHECK_NOTHROW(check_order(resource_cap()));
}
