#ifndef HYPERSING_SURGERY_HPP
#define HYPERSING_SURGERY_HPP

#include <array>
#include <optional>
#include <stdexcept>
#include <string>

#include "hypersing/error.hpp"
#include "hypersing/matrix.hpp"
#include "hypersing/rational.hpp"

namespace hypersing {

/// Wall's realizability congruence p ≡ 4λ (mod 24).
inline bool wall_check(const Int& p, const Int& lambda) {
  const Int r = p - 4 * lambda;
  return r % 24 == 0;
}

/// Gluing parameters (b, c) that kill (p, λ), with the replayed values.
struct GlueResult {
  Int b, c;
  Int p_after, lambda_after;
};

/// b = -p/4, c = (p - 4λ)/24. Replay: gluing in P with Dp1(P) = 4b·u and
/// <u*^3, [P]> = 6c + b moves p to p + 4b and λ to λ + 6c + b.
inline GlueResult glue_normalize(const Int& p, const Int& lambda) {
  if (!wall_check(p, lambda))
    throw PreconditionError("Wall congruence p ≡ 4λ (mod 24) fails for p = " + p.get_str() + ", λ = " + lambda.get_str());
  GlueResult g;
  g.b = -p / 4;  // exact: 24 | p - 4λ forces 4 | p
  g.c = (p - 4 * lambda) / 24;
  g.p_after = p + 4 * g.b;
  g.lambda_after = lambda + 6 * g.c + g.b;
  if (g.p_after != 0 || g.lambda_after != 0) throw std::logic_error("gluing replay did not reach (0, 0)");
  return g;
}

/// Y-level data: Dp1(Y) = p·e1 + P·e2 and the trilinear form on the dual basis,
/// trilinear = (μ(e1*³), μ(e1*²e2*), μ(e1*e2*²), μ(e2*³)).
struct BordismRecord {
  std::array<Int, 2> dp1_vec;
  std::array<Int, 4> trilinear;

  bool satisfies_wall() const { return wall_check(dp1_vec[0], trilinear[0]); }
  friend bool operator==(const BordismRecord&, const BordismRecord&) = default;
};

/// Re-expresses a record in a new basis. Column j of `basis` holds the new
/// e_j in old coordinates; it must be unimodular.
inline BordismRecord change_basis(const BordismRecord& r, const IntMatrix& basis) {
  if (basis.rows() != 2 || basis.cols() != 2) throw PreconditionError("base change must be 2x2");
  const Int det = determinant(basis);
  if (det != 1 && det != -1) throw PreconditionError("base change is not unimodular");
  // Homology coordinates transform by basis^-1.
  IntMatrix inv{{Int(basis(1, 1) * det), Int(-basis(0, 1) * det)}, {Int(-basis(1, 0) * det), Int(basis(0, 0) * det)}};
  BordismRecord out;
  for (std::size_t i = 0; i < 2; ++i) out.dp1_vec[i] = inv(i, 0) * r.dp1_vec[0] + inv(i, 1) * r.dp1_vec[1];
  // New dual basis e'_j* = sum_i basis(i, j) e_i*; evaluate the cubic on it.
  auto tensor = [&](std::size_t i, std::size_t j, std::size_t k) -> const Int& { return r.trilinear[i + j + k]; };
  auto value = [&](std::size_t a, std::size_t b, std::size_t c) {
    Int s = 0;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t k = 0; k < 2; ++k) s += basis(i, a) * basis(j, b) * basis(k, c) * tensor(i, j, k);
    return s;
  };
  out.trilinear = {value(0, 0, 0), value(0, 0, 1), value(0, 1, 1), value(1, 1, 1)};
  return out;
}

/// Componentwise equality, optionally after moving r1 into r0's basis.
inline bool bordism_records_equal(const BordismRecord& r0, const BordismRecord& r1,
                                  const std::optional<IntMatrix>& base_change = std::nullopt) {
  return base_change ? r0 == change_basis(r1, *base_change) : r0 == r1;
}

/// Coordinates of e1 (boundary image) and e2 (lift of x) in the basis order
/// used by ManifoldInvariants::q, which lists the lift first.
struct SesData {
  std::array<Int, 2> boundary_image{Int(0), Int(1)};
  std::array<Int, 2> quotient_lift{Int(1), Int(0)};

  void validate() const {
    const Int det = quotient_lift[0] * boundary_image[1] - quotient_lift[1] * boundary_image[0];
    if (det != 1 && det != -1) throw PreconditionError("SES vectors do not form a basis of Z^2");
  }
  friend bool operator==(const SesData&, const SesData&) = default;
};

inline const std::string kPairingConvention =
    "H^4 classes paired through the preferred generator x with <x^3, [V0]> = d";

/// M-level invariants for a 6-manifold with boundary S2xS3. q is the
/// symmetric form on the dual basis ordered (e2*, e1*): the lift slot first.
struct ManifoldInvariants {
  Int chi;
  Int dp1;
  IntMatrix q{2, 2};
  bool w2_spin = false;
  Int cube_x{1};
  SesData ses;
  std::string pairing_convention = kPairingConvention;

  void validate() const {
    if (cube_x <= 0) throw PreconditionError("cube_x must be positive for the preferred generator");
    if (q.rows() != 2 || q.cols() != 2 || !q.is_symmetric()) throw PreconditionError("q must be a symmetric 2x2 matrix");
    ses.validate();
  }
  friend bool operator==(const ManifoldInvariants&, const ManifoldInvariants&) = default;
};

/// Φ(e1) = ε e1, Φ(e2) = e2 + m e1.
struct BaseChange {
  int epsilon = 1;
  Int m;
  friend bool operator==(const BaseChange&, const BaseChange&) = default;
};

inline BaseChange inverse(const BaseChange& phi) { return {phi.epsilon, -phi.epsilon * phi.m}; }

/// Transports q along Φ: with Φ*(e2*) = e2* and Φ*(e1*) = ε e1* + m e2*,
/// [[A, B], [B, C]] goes to [[A, εB + mA], [εB + mA, C + 2εmB + m²A]].
inline ManifoldInvariants apply_base_change(const ManifoldInvariants& t, const BaseChange& phi) {
  if (phi.epsilon != 1 && phi.epsilon != -1) throw PreconditionError("epsilon must be +1 or -1");
  ManifoldInvariants out = t;
  const Int& a = t.q(0, 0);
  const Int& b = t.q(0, 1);
  const Int& c = t.q(1, 1);
  const Int e = phi.epsilon;
  out.q(0, 1) = out.q(1, 0) = e * b + phi.m * a;
  out.q(1, 1) = c + 2 * e * phi.m * b + phi.m * phi.m * a;
  return out;
}

namespace detail {

inline bool exact_quotient(const Int& num, const Int& den, Int& q) {
  if (den == 0 || num % den != 0) return false;
  q = num / den;
  return true;
}

}  // namespace detail

/// Decides whether an SES isomorphism fixing x carries t0 to t1. The q(e2*, e2*)
/// slot is fixed by every admissible Φ; m is then read off the off-diagonal
/// entry (or off the last entry when that slot vanishes) and verified.
inline std::optional<BaseChange> tuples_equivalent(const ManifoldInvariants& t0, const ManifoldInvariants& t1) {
  t0.validate();
  t1.validate();
  if (t0.pairing_convention != t1.pairing_convention)
    throw PreconditionError("tuples use different pairing conventions");
  if (t0.chi != t1.chi || t0.dp1 != t1.dp1 || t0.w2_spin != t1.w2_spin || t0.cube_x != t1.cube_x) return std::nullopt;
  const Int& a0 = t0.q(0, 0);
  const Int& b0 = t0.q(0, 1);
  const Int& c0 = t0.q(1, 1);
  if (a0 != t1.q(0, 0)) return std::nullopt;
  for (const int e : {1, -1}) {
    Int m;
    if (a0 != 0) {
      if (!detail::exact_quotient(t1.q(0, 1) - e * b0, a0, m)) continue;
    } else if (t1.q(0, 1) != e * b0) {
      continue;
    } else if (b0 != 0) {
      if (!detail::exact_quotient(t1.q(1, 1) - c0, 2 * e * b0, m)) continue;
    } else {
      m = 0;  // q = [[0,0],[0,c]] is fixed by every Φ
    }
    const BaseChange phi{e, m};
    if (apply_base_change(t0, phi).q == t1.q) return phi;
  }
  return std::nullopt;
}

}  // namespace hypersing

#endif  // HYPERSING_SURGERY_HPP
