#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace natree {

using Integer = mpz_class;
using Rational = mpq_class;

/// Malformed or out-of-domain input. The CLI maps it to exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Desk-scale guard tripped. The CLI maps it to exit code 3.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Desk-scale bound on tree sizes and series orders: 12, or the value of
/// the NAT_RESOURCE_CAP environment variable.
int resource_cap();
/// Throws ResourceError when `value` exceeds resource_cap().
void check_resource(long value, const std::string& what);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

std::string to_string(const Integer& value);
/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& value);
Rational parse_rational(const std::string& text);

}  // namespace natree
