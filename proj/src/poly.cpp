#include "natree/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace natree {

namespace {

constexpr std::array<std::string_view, kParamCount> kNames = {
    "q", "qL", "qR", "alpha", "beta", "z", "t"};

unsigned total_degree(const Monomial& m) {
  return std::accumulate(m.begin(), m.end(), 0u);
}

}  // namespace

std::string_view param_name(Param p) { return kNames[static_cast<std::size_t>(p)]; }

std::optional<Param> param_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kParamCount; ++i) {
    if (kNames[i] == name) return static_cast<Param>(i);
  }
  return std::nullopt;
}

Monomial make_monomial(std::initializer_list<std::pair<Param, unsigned>> powers) {
  Monomial m{};
  for (auto [p, e] : powers) m[static_cast<std::size_t>(p)] += static_cast<std::uint16_t>(e);
  return m;
}

std::string monomial_to_string(const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < kParamCount; ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += kNames[i];
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

ParamPoly::ParamPoly(const Rational& constant) { add_term(Monomial{}, constant); }

ParamPoly::ParamPoly(long constant) : ParamPoly(Rational(constant)) {}

ParamPoly ParamPoly::var(Param p, unsigned exponent) {
  Monomial m{};
  m[static_cast<std::size_t>(p)] = static_cast<std::uint16_t>(exponent);
  return term(m, 1);
}

ParamPoly ParamPoly::term(const Monomial& m, const Rational& coeff) {
  ParamPoly result;
  result.add_term(m, coeff);
  return result;
}

void ParamPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational ParamPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational ParamPoly::constant_term() const { return coeff(Monomial{}); }

unsigned ParamPoly::degree(Param p) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max<unsigned>(d, m[static_cast<std::size_t>(p)]);
  return d;
}

bool ParamPoly::only_uses(std::initializer_list<Param> allowed) const {
  Monomial mask{};
  for (Param p : allowed) mask[static_cast<std::size_t>(p)] = 1;
  for (const auto& [m, c] : terms_) {
    for (std::size_t i = 0; i < kParamCount; ++i) {
      if (m[i] != 0 && mask[i] == 0) return false;
    }
  }
  return true;
}

ParamPoly ParamPoly::substitute(Param p, const Rational& value) const {
  const auto idx = static_cast<std::size_t>(p);
  ParamPoly result;
  for (const auto& [m, c] : terms_) {
    Monomial reduced = m;
    reduced[idx] = 0;
    Rational factor = 1;
    for (unsigned e = 0; e < m[idx]; ++e) factor *= value;
    result.add_term(reduced, c * factor);
  }
  return result;
}

Rational ParamPoly::evaluate_all(const Rational& value) const {
  Rational sum = 0;
  for (const auto& [m, c] : terms_) {
    Rational factor = 1;
    for (unsigned e = 0, d = total_degree(m); e < d; ++e) factor *= value;
    sum += c * factor;
  }
  return sum;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
  ParamPoly result;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m;
      for (std::size_t i = 0; i < kParamCount; ++i) m[i] = ma[i] + mb[i];
      result.add_term(m, ca * cb);
    }
  }
  return result;
}

ParamPoly& ParamPoly::operator*=(const ParamPoly& other) { return *this = *this * other; }

ParamPoly& ParamPoly::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

ParamPoly operator-(const ParamPoly& a) {
  ParamPoly result = a;
  for (auto& [m, c] : result.terms_) c = -c;
  return result;
}

ParamPoly ParamPoly::pow(unsigned n) const {
  ParamPoly result(1);
  ParamPoly base = *this;
  while (n > 0) {
    if (n & 1u) result *= base;
    n >>= 1u;
    if (n > 0) base *= base;
  }
  return result;
}

std::string ParamPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Monomial, Rational>> ordered(terms_.begin(), terms_.end());
  std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    unsigned da = total_degree(a.first), db = total_degree(b.first);
    if (da != db) return da > db;
    return a.first > b.first;
  });
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : ordered) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool is_constant = total_degree(m) == 0;
    if (is_constant) {
      out << natree::to_string(mag);
    } else {
      if (mag != 1) out << natree::to_string(mag) << '*';
      out << monomial_to_string(m);
    }
  }
  return out.str();
}

}  // namespace natree
