#ifndef HYPERSING_RATIONAL_HPP
#define HYPERSING_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "hypersing/error.hpp"

namespace hypersing {

using Int = mpz_class;
// mpq_class keeps numerator/denominator reduced with a positive denominator
// after every arithmetic operation; 0 is stored as 0/1.
using Rat = mpq_class;

inline std::string to_string(const Int& v) { return v.get_str(); }
inline std::string to_string(const Rat& v) { return v.get_str(); }

/// Parses "p" or "p/q" with optional sign. Rejects q == 0.
inline Rat parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  auto parse_int = [&](const std::string& s) {
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start == s.size()) throw PreconditionError("not a rational number: '" + text + "'");
    for (std::size_t i = start; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') throw PreconditionError("not a rational number: '" + text + "'");
    return Int(s[0] == '+' ? s.substr(1) : s, 10);
  };
  if (slash == std::string::npos) return Rat(parse_int(text));
  const Int num = parse_int(text.substr(0, slash));
  const Int den = parse_int(text.substr(slash + 1));
  if (den == 0) throw PreconditionError("zero denominator in '" + text + "'");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace hypersing

#endif  // HYPERSING_RATIONAL_HPP
