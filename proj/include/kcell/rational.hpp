#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kcell {

using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Serializes as "num/den" (the denominator is always written, "1/1" included).
std::string to_string(const Rational& q);

/// Accepts "num/den" or a bare integer. Throws Error on malformed input or a
/// zero denominator.
Rational parse_rational(std::string_view text);

/// Comma separated list of rationals, e.g. "3,5,7/2".
RationalVector parse_rational_list(std::string_view text);

std::string join(const RationalVector& values, std::string_view sep = ",");

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline int sign(const Rational& q) { return sgn(q); }

/// n! as a rational.
Rational factorial(int n);

}  // namespace kcell
