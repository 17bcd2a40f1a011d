#pragma once

#include <gmpxx.h>

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace swampstab {

// Exact rational scalar. GMP keeps values canonical (lowest terms,
// positive denominator) after canonicalize(); every constructor here
// canonicalizes.
using Rational = mpq_class;

// Domain error with a stable machine-readable code, e.g. "NonPositiveWeight".
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

private:
  std::string code_;
};

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw Error("ZeroDenominator", "denominator must be nonzero");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Parses "p/q" or "p". Rejects anything else, in particular decimal points.
inline Rational parse_rational(const std::string& text) {
  if (text.empty()) throw Error("ParseError", "empty rational literal");
  if (text.find('.') != std::string::npos ||
      text.find('e') != std::string::npos ||
      text.find('E') != std::string::npos)
    throw Error("ParseError", "floating point literal rejected: " + text);
  Rational q;
  if (q.set_str(text, 10) != 0)
    throw Error("ParseError", "invalid rational literal: " + text);
  if (q.get_den() == 0)
    throw Error("ParseError", "zero denominator: " + text);
  q.canonicalize();
  return q;
}

// Canonical rendering: "p" when the denominator is 1, else "p/q".
inline std::string rational_to_string(const Rational& q) {
  return q.get_str();
}

inline long lcm_of_denominators(const std::vector<Rational>& values) {
  mpz_class m = 1;
  for (const auto& v : values) mpz_lcm(m.get_mpz_t(), m.get_mpz_t(), v.get_den().get_mpz_t());
  if (!m.fits_slong_p())
    throw Error("Overflow", "lcm of denominators does not fit a machine long");
  return m.get_si();
}

}  // namespace swampstab
