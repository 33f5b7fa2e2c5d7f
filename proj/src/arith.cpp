#include "natree/arith.hpp"

#include <cstdlib>

namespace natree {

int resource_cap() {
  static const int cap = [] {
    const char* env = std::getenv("NAT_RESOURCE_CAP");
    if (!env || !*env) return 12;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1 || v > 1000) return 12;
    return static_cast<int>(v);
  }();
  return cap;
}

void check_resource(long value, const std::string& what) {
  if (value > resource_cap())
    throw ResourceError(what + " " + std::to_string(value) + " exceeds the resource cap " +
                        std::to_string(resource_cap()) + " (set NAT_RESOURCE_CAP to raise it)");
}

Integer factorial(unsigned n) {
  Integer result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

Integer binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  Integer result;
  mpz_bin_uiui(result.get_mpz_t(), n, k);
  return result;
}

std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_string(const Rational& value) {
  Rational canonical(value);
  canonical.canonicalize();
  return canonical.get_str();
}

Rational parse_rational(const std::string& text) {
  Rational value;
  if (text.empty() || value.set_str(text, 10) != 0) throw InputError("not a rational number: " + text);
  if (value.get_den() == 0) throw InputError("zero denominator: " + text);
  value.canonicalize();
  return value;
}

}  // namespace natree
