#ifndef HYPERSING_CHERN_HPP
#define HYPERSING_CHERN_HPP

#include <array>
#include <cstdint>

#include "hypersing/error.hpp"
#include "hypersing/rational.hpp"

namespace hypersing {

/// Characteristic data of a smooth degree-d hypersurface V0 in CP^4.
/// c1..c3 are coefficients of x, x^2, x^3 (x the pulled-back hyperplane
/// class); chi pairs c3 against [V0] using <x^3, [V0]> = d.
struct ChernData {
  std::int64_t degree = 0;
  Int c1, c2, c3;
  Int chi;
  Int p1_coeff;  // p1(V0) = p1_coeff * x^2
  bool spin = false;
};

namespace detail {
inline void require_degree(std::int64_t d) {
  if (d < 1) throw PreconditionError("degree must be at least 1, got " + std::to_string(d));
}
}  // namespace detail

/// Truncated quotient (1+x)^5 / (1+dx) mod x^4 by series long division.
inline ChernData total_chern_hypersurface(std::int64_t d) {
  detail::require_degree(d);
  const std::array<Int, 4> numerator{1, 5, 10, 10};
  std::array<Int, 4> c;
  c[0] = numerator[0];
  for (std::size_t i = 1; i < 4; ++i) c[i] = numerator[i] - Int(d) * c[i - 1];

  ChernData out;
  out.degree = d;
  out.c1 = c[1];
  out.c2 = c[2];
  out.c3 = c[3];
  out.chi = Int(d) * c[3];
  // p1 = -c2(T ⊕ conj T) = c1^2 - 2 c2
  out.p1_coeff = c[1] * c[1] - 2 * c[2];
  // w2 ≡ c1 = (5 - d) x mod 2
  out.spin = (d % 2) == 1;
  return out;
}

/// chi(M) = chi(V0) - chi(closed Milnor fibre), the fibre being a wedge of mu
/// 3-spheres with chi = 1 - mu.
inline Int chi_smooth_part(std::int64_t d, std::int64_t mu) {
  if (mu < 0) throw PreconditionError("Milnor number must be nonnegative");
  return total_chern_hypersurface(d).chi - (1 - Int(mu));
}

/// Coefficient of the pullback of x^2 in p1(M); depends on d alone.
inline Int p1_smooth_part(std::int64_t d) { return total_chern_hypersurface(d).p1_coeff; }

inline bool is_spin_smooth_part(std::int64_t d) {
  detail::require_degree(d);
  return d % 2 == 1;
}

}  // namespace hypersing

#endif  // HYPERSING_CHERN_HPP
