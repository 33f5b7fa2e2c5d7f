#include "natree/series.hpp"

#include <numeric>
#include <stdexcept>

#include "natree/arith.hpp"

namespace natree {

namespace {

constexpr int kX = 0;
constexpr int kY = 1;

int total(const TruncSeries::Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

ParamPoly rat(const Rational& r) { return ParamPoly(r); }

// Iterates `step` from `start` until it stops changing; each step freezes
// at least one more total degree, so order + 2 rounds always suffice.
template <class Step>
TruncSeries fixed_point(TruncSeries current, int order, Step step) {
  for (int round = 0; round <= order + 2; ++round) {
    TruncSeries next = step(current);
    if (next == current) return current;
    current = std::move(next);
  }
  throw std::logic_error("fixed-point iteration did not stabilise");
}

}  // namespace

TruncSeries::TruncSeries(int variables, int order, std::vector<int> caps)
    : variables_(variables), order_(order), caps_(std::move(caps)) {
  if (variables < 1) throw InputError("a series needs at least one variable");
  if (order < 0) throw InputError("series order must be non-negative");
  if (caps_.empty()) caps_.assign(static_cast<std::size_t>(variables), kNoCap);
  if (static_cast<int>(caps_.size()) != variables) throw InputError("one cap per variable");
}

TruncSeries TruncSeries::constant(int variables, int order, const ParamPoly& c, std::vector<int> caps) {
  TruncSeries s(variables, order, std::move(caps));
  s.add_to_coeff(Exponent(static_cast<std::size_t>(variables), 0), c);
  return s;
}

TruncSeries TruncSeries::variable(int variables, int order, int v, std::vector<int> caps) {
  TruncSeries s(variables, order, std::move(caps));
  Exponent e(static_cast<std::size_t>(variables), 0);
  e.at(static_cast<std::size_t>(v)) = 1;
  s.add_to_coeff(e, ParamPoly(1L));
  return s;
}

TruncSeries TruncSeries::constant_like(const TruncSeries& like, const ParamPoly& c) {
  return constant(like.variables_, like.order_, c, like.caps_);
}

TruncSeries TruncSeries::variable_like(const TruncSeries& like, int v) {
  return variable(like.variables_, like.order_, v, like.caps_);
}

TruncSeries TruncSeries::monomial_like(const TruncSeries& like, const Exponent& e, const ParamPoly& c) {
  TruncSeries s(like.variables_, like.order_, like.caps_);
  s.add_to_coeff(e, c);
  return s;
}

bool TruncSeries::keeps(const Exponent& e) const {
  if (static_cast<int>(e.size()) != variables_) return false;
  for (std::size_t v = 0; v < e.size(); ++v) {
    if (e[v] < 0) return false;
    if (caps_[v] != kNoCap && e[v] > caps_[v]) return false;
  }
  return total(e) <= order_;
}

ParamPoly TruncSeries::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? ParamPoly() : it->second;
}

void TruncSeries::add_to_coeff(const Exponent& e, const ParamPoly& c) {
  if (!keeps(e) || c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void TruncSeries::check_compatible(const TruncSeries& o) const {
  if (variables_ != o.variables_) throw InputError("series over different variables");
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_to_coeff(e, c);
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_to_coeff(e, -c);
  return *this;
}

TruncSeries& TruncSeries::operator*=(const ParamPoly& c) {
  std::map<Exponent, ParamPoly> out;
  for (const auto& [e, a] : terms_) {
    ParamPoly p = a * c;
    if (!p.is_zero()) out.emplace(e, std::move(p));
  }
  terms_ = std::move(out);
  return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  a.check_compatible(b);
  // The result keeps the tighter truncation of the two.
  TruncSeries out(a.variables_, std::min(a.order_, b.order_), a.caps_);
  for (std::size_t v = 0; v < out.caps_.size(); ++v)
    if (b.caps_[v] != TruncSeries::kNoCap && (out.caps_[v] == TruncSeries::kNoCap || b.caps_[v] < out.caps_[v]))
      out.caps_[v] = b.caps_[v];
  TruncSeries::Exponent e(static_cast<std::size_t>(a.variables_));
  for (const auto& [ea, ca] : a.terms_) {
    const int ta = total(ea);
    for (const auto& [eb, cb] : b.terms_) {
      if (ta + total(eb) > out.order_) continue;
      for (std::size_t v = 0; v < e.size(); ++v) e[v] = ea[v] + eb[v];
      out.add_to_coeff(e, ca * cb);
    }
  }
  return out;
}

TruncSeries TruncSeries::derivative(int v) const {
  TruncSeries out(variables_, order_, caps_);
  for (const auto& [e, c] : terms_) {
    if (e.at(static_cast<std::size_t>(v)) == 0) continue;
    Exponent f = e;
    --f[static_cast<std::size_t>(v)];
    out.add_to_coeff(f, c * rat(Rational(e[static_cast<std::size_t>(v)])));
  }
  return out;
}

TruncSeries TruncSeries::integral(int v) const {
  TruncSeries out(variables_, order_, caps_);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    ++f.at(static_cast<std::size_t>(v));
    out.add_to_coeff(f, c * rat(Rational(1, f[static_cast<std::size_t>(v)])));
  }
  return out;
}

TruncSeries TruncSeries::substitute(Param p, const Rational& value) const {
  TruncSeries out(variables_, order_, caps_);
  for (const auto& [e, c] : terms_) out.add_to_coeff(e, c.substitute(p, value));
  return out;
}

TruncSeries TruncSeries::drop_variable(int v) const {
  if (variables_ < 2) throw InputError("cannot drop the only variable");
  std::vector<int> caps = caps_;
  caps.erase(caps.begin() + v);
  TruncSeries out(variables_ - 1, order_, caps);
  for (const auto& [e, c] : terms_) {
    if (e.at(static_cast<std::size_t>(v)) != 0) continue;
    Exponent f = e;
    f.erase(f.begin() + v);
    out.add_to_coeff(f, c);
  }
  return out;
}

TruncSeries TruncSeries::truncated(int order) const {
  TruncSeries out(variables_, std::min(order, order_), caps_);
  for (const auto& [e, c] : terms_) out.add_to_coeff(e, c);
  return out;
}

std::string TruncSeries::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponent, const ParamPoly*>> sorted;
  for (const auto& [e, c] : terms_) sorted.emplace_back(e, &c);
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const auto& a, const auto& b) { return total(a.first) < total(b.first); });
  std::string out;
  for (const auto& [e, c] : sorted) {
    if (!out.empty()) out += " + ";
    std::string mono;
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += v < names.size() ? names[v] : "x" + std::to_string(v + 1);
      if (e[v] > 1) mono += '^' + std::to_string(e[v]);
    }
    const std::string coef = c->to_string();
    if (mono.empty()) out += coef;
    else if (coef == "1") out += mono;
    else out += "(" + coef + ")*" + mono;
  }
  return out;
}

TruncSeries compose_into_nilpotent(const std::vector<ParamPoly>& coefficients, const TruncSeries& g) {
  if (!g.constant_term().is_zero()) throw InputError("composition needs a series with zero constant term");
  TruncSeries out(g.variables(), g.order(), g.caps());
  TruncSeries power = TruncSeries::constant_like(g, ParamPoly(1L));
  for (std::size_t n = 0; n < coefficients.size() && !power.is_zero(); ++n) {
    out += power * coefficients[n];
    power = power * g;
  }
  return out;
}

TruncSeries exp_nilpotent(const TruncSeries& g) {
  std::vector<ParamPoly> c;
  for (int n = 0; n <= g.order(); ++n) c.emplace_back(Rational(1, factorial(static_cast<unsigned>(n))));
  return compose_into_nilpotent(c, g);
}

TruncSeries log_one_minus(const TruncSeries& u) {
  std::vector<ParamPoly> c{ParamPoly()};
  for (int n = 1; n <= u.order(); ++n) c.emplace_back(Rational(-1, n));
  return compose_into_nilpotent(c, u);
}

TruncSeries geometric(const TruncSeries& u) {
  return compose_into_nilpotent(std::vector<ParamPoly>(static_cast<std::size_t>(u.order()) + 1, ParamPoly(1L)), u);
}

void check_order(int order) {
  if (order < 0) throw InputError("series order must be non-negative");
  check_resource(order, "series order");
}

TruncSeries pump(const TruncSeries& f, const TruncSeries& g) {
  if (f.variables() != 2 || g.variables() != 2) throw InputError("pump works on series in x and y");
  return (f.derivative(kY) * g.derivative(kX)).integral(kY).integral(kX);
}

TruncSeries pump_tree(const BinaryTree& tree, int order) {
  if (tree.kind() == BinaryTree::Kind::EmptyLeft) return TruncSeries::variable(2, order, kY);
  if (tree.kind() == BinaryTree::Kind::EmptyRight) return TruncSeries::variable(2, order, kX);
  return pump(pump_tree(tree.left_tree(), order), pump_tree(tree.right_tree(), order));
}

TruncSeries solve_N(int order) {
  check_order(order);
  const TruncSeries one = TruncSeries::constant(2, order, ParamPoly(1L));
  return fixed_point(one, order, [&](const TruncSeries& n) {
    return (one + n.integral(kX)) * (one + n.integral(kY));
  });
}

TruncSeries solve_M(int order) {
  check_order(order);
  const TruncSeries base = TruncSeries::variable(2, order, kX) + TruncSeries::variable(2, order, kY);
  return fixed_point(base, order, [&](const TruncSeries& m) {
    return base + (m.derivative(kX) * m.derivative(kY)).integral(kX).integral(kY);
  });
}

TruncSeries solve_N_ab(int order) {
  check_order(order);
  const TruncSeries one = TruncSeries::constant(2, order, ParamPoly(1L));
  const ParamPoly alpha = ParamPoly::var(Param::alpha), beta = ParamPoly::var(Param::beta);
  return fixed_point(one, order, [&](const TruncSeries& n) {
    return (one + n.substitute(Param::beta, 1).integral(kX) * alpha) *
           (one + n.substitute(Param::alpha, 1).integral(kY) * beta);
  });
}

namespace {

// u = (e^x - 1)(e^y - 1)
TruncSeries u_series(int order) {
  const TruncSeries x = TruncSeries::variable(2, order, kX), y = TruncSeries::variable(2, order, kY);
  const TruncSeries one = TruncSeries::constant(2, order, ParamPoly(1L));
  return (exp_nilpotent(x) - one) * (exp_nilpotent(y) - one);
}

}  // namespace

TruncSeries closed_N(int order) {
  check_order(order);
  const TruncSeries x = TruncSeries::variable(2, order, kX), y = TruncSeries::variable(2, order, kY);
  const TruncSeries g = geometric(u_series(order));
  return exp_nilpotent(x + y) * g * g;
}

TruncSeries closed_M(int order) {
  check_order(order);
  const TruncSeries x = TruncSeries::variable(2, order, kX), y = TruncSeries::variable(2, order, kY);
  return x + y - log_one_minus(u_series(order));
}

TruncSeries closed_N_ab(int order) {
  check_order(order);
  const ParamPoly alpha = ParamPoly::var(Param::alpha), beta = ParamPoly::var(Param::beta);
  const TruncSeries x = TruncSeries::variable(2, order, kX), y = TruncSeries::variable(2, order, kY);
  return exp_nilpotent(x * alpha + y * beta) * exp_nilpotent(log_one_minus(u_series(order)) * -(alpha + beta));
}

TruncSeries closed_hook_gf(int order) {
  check_order(order);
  const ParamPoly alpha = ParamPoly::var(Param::alpha), beta = ParamPoly::var(Param::beta);
  const ParamPoly z = ParamPoly::var(Param::z);
  const TruncSeries x = TruncSeries::variable(2, order, kX), y = TruncSeries::variable(2, order, kY);
  return exp_nilpotent(x * alpha + y * beta) * exp_nilpotent(log_one_minus(u_series(order) * z) * -(alpha + beta)) *
         z;
}

TruncSeries closed_hook_log(int order) {
  check_order(order);
  return TruncSeries(2, order) - log_one_minus(u_series(order) * ParamPoly::var(Param::z));
}

TruncSeries pump_dk(int d, int k, const std::vector<TruncSeries>& f) {
  const auto dirs = all_directions(d, k);
  if (f.size() != dirs.size()) throw InputError("pump_dk needs one series per direction");
  TruncSeries prod = TruncSeries::constant_like(f.front(), ParamPoly(1L));
  for (std::size_t a = 0; a < dirs.size(); ++a) {
    if (f[a].variables() != d) throw InputError("pump_dk series must be in d variables");
    TruncSeries g = f[a];
    for (int i = 1; i <= d; ++i)
      if (!dirs[a].contains(i)) g = g.derivative(i - 1);
    prod = prod * g;
  }
  for (int i = 0; i < d; ++i) prod = prod.integral(i);
  return prod;
}

TruncSeries pump_dk_tree(const DKTree& tree, int order) {
  const int d = tree.d(), k = tree.k();
  auto empty_weight = [&](const Direction& dir) {
    TruncSeries::Exponent e(static_cast<std::size_t>(d), 0);
    for (int i = 1; i <= d; ++i) e[static_cast<std::size_t>(i - 1)] = dir.contains(i) ? 0 : 1;
    TruncSeries s(d, order);
    s.add_to_coeff(e, ParamPoly(1L));
    return s;
  };
  if (tree.empty()) return empty_weight(*tree.empty_direction());
  std::vector<TruncSeries> f;
  for (const auto& dir : all_directions(d, k)) {
    const int c = tree.child(0, dir);
    f.push_back(c == -1 ? empty_weight(dir) : pump_dk_tree(tree.subtree(c), order));
  }
  return pump_dk(d, k, f);
}

TruncSeries solve_N_dk(int d, int k, int order) {
  check_dk(d, k);
  if (d > 6) throw ResourceError("dimension above 6 is outside desk scale");
  check_order(order);
  const auto dirs = all_directions(d, k);
  const TruncSeries one = TruncSeries::constant(d, order, ParamPoly(1L));
  return fixed_point(one, order, [&](const TruncSeries& n) {
    TruncSeries out = one;
    for (const auto& dir : dirs) {
      TruncSeries g = n;
      for (int i : dir.members()) g = g.integral(i - 1);
      out = out * (one + g);
    }
    return out;
  });
}

std::pair<TruncSeries, TruncSeries> solve_Bp_Op(int order) {
  check_order(order);
  const TruncSeries one = TruncSeries::constant(1, order, ParamPoly(1L));
  const TruncSeries x = TruncSeries::variable(1, order, 0);
  const TruncSeries xt = x * ParamPoly::var(Param::t);
  TruncSeries b = fixed_point(one, order, [&](const TruncSeries& s) {
    const TruncSeries g = geometric(x * s);
    return one + xt * g * g;
  });
  TruncSeries o = fixed_point(one, order, [&](const TruncSeries& s) {
    return geometric(x * (s - one)) * (one + xt * geometric(x * s));
  });
  return {b, o};
}

}  // namespace natree
