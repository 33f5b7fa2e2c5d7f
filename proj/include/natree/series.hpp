#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "natree/poly.hpp"
#include "natree/trees.hpp"

namespace natree {

/// Multivariate power series truncated at a total degree, optionally with a
/// cap per variable. Coefficients are ParamPoly, so parameters such as
/// alpha, beta, z or t ride along exactly.
class TruncSeries {
 public:
  using Exponent = std::vector<int>;
  static constexpr int kNoCap = -1;

  TruncSeries() = default;
  TruncSeries(int variables, int order, std::vector<int> caps = {});

  static TruncSeries constant(int variables, int order, const ParamPoly& c, std::vector<int> caps = {});
  static TruncSeries variable(int variables, int order, int v, std::vector<int> caps = {});
  /// Same shape (variables, order, caps) as `like`.
  static TruncSeries constant_like(const TruncSeries& like, const ParamPoly& c);
  static TruncSeries variable_like(const TruncSeries& like, int v);
  static TruncSeries monomial_like(const TruncSeries& like, const Exponent& e, const ParamPoly& c);

  int variables() const { return variables_; }
  int order() const { return order_; }
  const std::vector<int>& caps() const { return caps_; }
  const std::map<Exponent, ParamPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool keeps(const Exponent& e) const;

  ParamPoly coeff(const Exponent& e) const;
  void add_to_coeff(const Exponent& e, const ParamPoly& c);
  ParamPoly constant_term() const { return coeff(Exponent(static_cast<std::size_t>(variables_), 0)); }

  TruncSeries& operator+=(const TruncSeries& o);
  TruncSeries& operator-=(const TruncSeries& o);
  TruncSeries& operator*=(const ParamPoly& c);
  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator*(TruncSeries a, const ParamPoly& c) { return a *= c; }
  friend bool operator==(const TruncSeries& a, const TruncSeries& b) = default;

  TruncSeries derivative(int v) const;
  /// Antiderivative vanishing at x_v = 0.
  TruncSeries integral(int v) const;
  /// Coefficientwise parameter substitution.
  TruncSeries substitute(Param p, const Rational& value) const;
  /// Sets x_v = 0 and removes the variable.
  TruncSeries drop_variable(int v) const;
  /// Same terms under a smaller order (or tighter caps).
  TruncSeries truncated(int order) const;

  /// "c*x0^a*x1^b + ..." with graded order, lowest first.
  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  void check_compatible(const TruncSeries& o) const;

  int variables_ = 0;
  int order_ = 0;
  std::vector<int> caps_;
  std::map<Exponent, ParamPoly> terms_;
};

/// sum c_n g^n for a univariate coefficient list c; g must have zero
/// constant term.
TruncSeries compose_into_nilpotent(const std::vector<ParamPoly>& coefficients, const TruncSeries& g);
/// exp(g), g with zero constant term.
TruncSeries exp_nilpotent(const TruncSeries& g);
/// log(1 - u), u with zero constant term.
TruncSeries log_one_minus(const TruncSeries& u);
/// 1 / (1 - u), u with zero constant term.
TruncSeries geometric(const TruncSeries& u);

/// Variables: x = 0, y = 1.
TruncSeries pump(const TruncSeries& f, const TruncSeries& g);
/// Phi(NAT(B)) through the recursion B(EmptyLeft) = y, B(EmptyRight) = x.
TruncSeries pump_tree(const BinaryTree& tree, int order);

/// N = (1 + int_x N)(1 + int_y N).
TruncSeries solve_N(int order);
/// M = x + y + int int d_x M d_y M.
TruncSeries solve_M(int order);
/// N = (1 + alpha int_x N|_{beta=1})(1 + beta int_y N|_{alpha=1}).
TruncSeries solve_N_ab(int order);

/// e^{x+y} / (1 - (e^x-1)(e^y-1))^2
TruncSeries closed_N(int order);
/// x + y - log(1 - (e^x-1)(e^y-1))
TruncSeries closed_M(int order);
/// e^{alpha x + beta y} exp(-(alpha+beta) log(1-u)), u = (e^x-1)(e^y-1).
TruncSeries closed_N_ab(int order);
/// z e^{alpha x + beta y} / (1 - z u)^{alpha+beta}
TruncSeries closed_hook_gf(int order);
/// -log(1 - z u)
TruncSeries closed_hook_log(int order);

/// Multilinear pumping: int_{[1,d]} prod_pi d_{[1,d] minus pi} f_pi, with
/// the f_pi listed in direction order.
TruncSeries pump_dk(int d, int k, const std::vector<TruncSeries>& f);
/// Phi(NAT(M)) through the multilinear recursion, Phi(empty_pi) = x_{[1,d] minus pi}.
TruncSeries pump_dk_tree(const DKTree& tree, int order);
/// N_{d,k} = prod over directions pi of (1 + int_pi N_{d,k}).
TruncSeries solve_N_dk(int d, int k, int order);

/// Univariate in x with coefficients in t:
/// B = 1 + x t / (1 - x B)^2 and O = (1 + x t / (1 - x O)) / (1 - x (O - 1)).
std::pair<TruncSeries, TruncSeries> solve_Bp_Op(int order);

/// Throws ResourceError above resource_cap(), InputError below 0.
void check_order(int order);

}  // namespace natree
