#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "natree/arith.hpp"

namespace natree {

/// Parameter symbols that may appear in counting polynomials.
enum class Param : std::uint8_t { q, qL, qR, alpha, beta, z, t };
inline constexpr std::size_t kParamCount = 7;

std::string_view param_name(Param p);
std::optional<Param> param_from_name(std::string_view name);

/// Exponent of each parameter, indexed by Param.
using Monomial = std::array<std::uint16_t, kParamCount>;

std::string monomial_to_string(const Monomial& m);

/// Sparse polynomial with exact rational coefficients in the parameter
/// symbols. Zero coefficients are never stored.
class ParamPoly {
 public:
  ParamPoly() = default;
  ParamPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  ParamPoly(long constant);             // NOLINT(google-explicit-constructor)

  static ParamPoly var(Param p, unsigned exponent = 1);
  static ParamPoly term(const Monomial& m, const Rational& coeff);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  Rational coeff(const Monomial& m) const;
  Rational constant_term() const;
  unsigned degree(Param p) const;
  std::size_t term_count() const { return terms_.size(); }

  /// True when no parameter other than those listed occurs.
  bool only_uses(std::initializer_list<Param> allowed) const;

  ParamPoly substitute(Param p, const Rational& value) const;
  /// Sets every parameter to `value`.
  Rational evaluate_all(const Rational& value) const;

  ParamPoly& operator+=(const ParamPoly& other);
  ParamPoly& operator-=(const ParamPoly& other);
  ParamPoly& operator*=(const ParamPoly& other);
  ParamPoly& operator*=(const Rational& scalar);

  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
  friend ParamPoly operator-(const ParamPoly& a);
  friend bool operator==(const ParamPoly& a, const ParamPoly& b) = default;

  ParamPoly pow(unsigned n) const;

  /// Canonical expanded form, e.g. "2*qL*qR^2 + qR + 1" (graded reverse
  /// order of monomials, highest first).
  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  std::map<Monomial, Rational> terms_;
};

Monomial make_monomial(std::initializer_list<std::pair<Param, unsigned>> powers);

}  // namespace natree
