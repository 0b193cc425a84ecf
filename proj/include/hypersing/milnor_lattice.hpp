#ifndef HYPERSING_MILNOR_LATTICE_HPP
#define HYPERSING_MILNOR_LATTICE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hypersing/error.hpp"
#include "hypersing/matrix.hpp"
#include "hypersing/polynomial.hpp"

namespace hypersing {

/// Integer skew-symmetric bilinear form.
class SkewForm {
 public:
  explicit SkewForm(IntMatrix m) : m_(std::move(m)) {
    if (!m_.is_skew_symmetric()) throw PreconditionError("matrix is not skew-symmetric");
  }
  const IntMatrix& matrix() const noexcept { return m_; }
  std::size_t size() const noexcept { return m_.rows(); }

 private:
  IntMatrix m_;
};

/// Hyperbolic blocks [[0, d_i], [-d_i, 0]] with d_1 | d_2 | ... followed by a
/// zero block of size radical_rank. `transform` is the unimodular P with
/// P^T S P equal to block_matrix().
struct SkewNormalForm {
  std::vector<Int> hyperbolic_divisors;
  std::size_t radical_rank = 0;
  IntMatrix transform;

  std::size_t size() const { return 2 * hyperbolic_divisors.size() + radical_rank; }

  IntMatrix block_matrix() const {
    IntMatrix b(size(), size());
    for (std::size_t i = 0; i < hyperbolic_divisors.size(); ++i) {
      b(2 * i, 2 * i + 1) = hyperbolic_divisors[i];
      b(2 * i + 1, 2 * i) = -hyperbolic_divisors[i];
    }
    return b;
  }
};

enum class LinkTag { S2xS3, S5, Unsupported };

struct LinkType {
  LinkTag tag = LinkTag::Unsupported;
  std::optional<SkewNormalForm> unsupported_form;  // set iff tag == Unsupported

  std::string name() const {
    switch (tag) {
      case LinkTag::S2xS3: return "S2xS3";
      case LinkTag::S5: return "S5";
      default: return "Unsupported";
    }
  }
  friend bool operator==(const LinkType& a, const LinkType& b) { return a.tag == b.tag; }
};

/// Intersection form of the stabilized A_k Milnor lattice in a distinguished
/// basis: +1 on the superdiagonal, -1 on the subdiagonal.
inline SkewForm milnor_lattice_Ak(std::int64_t k) {
  if (k < 1) throw PreconditionError("A_k needs k >= 1");
  const auto n = static_cast<std::size_t>(k);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    m(i, i + 1) = 1;
    m(i + 1, i) = -1;
  }
  return SkewForm(std::move(m));
}

namespace detail {

// Congruence A -> E^T A E for E = I + factor * e_src e_dst^T, i.e. basis
// vector dst += factor * basis vector src.
inline void add_basis_vector(IntMatrix& a, IntMatrix& p, std::size_t dst, std::size_t src, const Int& factor) {
  a.add_col(dst, src, factor);
  a.add_row(dst, src, factor);
  p.add_col(dst, src, factor);
}

inline void swap_basis_vectors(IntMatrix& a, IntMatrix& p, std::size_t i, std::size_t j) {
  a.swap_cols(i, j);
  a.swap_rows(i, j);
  p.swap_cols(i, j);
}

inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace detail

/// Skew analogue of Smith normal form by simultaneous row/column operations.
/// Pivot: smallest nonzero |a_ij| (i < j) in the active block, ties broken by
/// lowest row then lowest column index.
inline SkewNormalForm skew_normal_form(const SkewForm& s) {
  const std::size_t n = s.size();
  IntMatrix a = s.matrix();
  IntMatrix p = IntMatrix::identity(n);
  SkewNormalForm nf;

  std::size_t t = 0;
  while (t + 1 < n) {
    // Locate the pivot in the active block [t, n).
    std::optional<std::pair<std::size_t, std::size_t>> pivot;
    for (std::size_t i = t; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        if (a(i, j) == 0) continue;
        if (!pivot || abs(a(i, j)) < abs(a(pivot->first, pivot->second))) pivot = {i, j};
      }
    if (!pivot) break;

    detail::swap_basis_vectors(a, p, t, pivot->first);
    std::size_t col = pivot->second == t ? pivot->first : pivot->second;
    detail::swap_basis_vectors(a, p, t + 1, col);
    if (a(t, t + 1) < 0) detail::swap_basis_vectors(a, p, t, t + 1);

    bool restart = false;
    const Int d = a(t, t + 1);
    for (std::size_t k = t + 2; k < n && !restart; ++k) {
      // a(t,k) -> a(t,k) - q d via e_k -= q e_{t+1}
      if (a(t, k) != 0) {
        const Int q = detail::floor_div(a(t, k), d);
        detail::add_basis_vector(a, p, k, t + 1, -q);
      }
      // a(t+1,k) -> a(t+1,k) - q d via e_k += q e_t
      if (a(t + 1, k) != 0) {
        const Int q = detail::floor_div(a(t + 1, k), d);
        detail::add_basis_vector(a, p, k, t, q);
      }
      restart = a(t, k) != 0 || a(t + 1, k) != 0;
    }
    if (restart) continue;  // a smaller remainder appeared; re-pivot

    // Divisibility: every remaining entry must be a multiple of d.
    std::optional<std::size_t> offender;
    for (std::size_t i = t + 2; i < n && !offender; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (a(i, j) % d != 0) {
          offender = i;
          break;
        }
    if (offender) {
      // e_t += e_i brings a non-multiple into row t; the next pass reduces it.
      detail::add_basis_vector(a, p, t, *offender, Int(1));
      continue;
    }
    nf.hyperbolic_divisors.push_back(d);
    t += 2;
  }
  nf.radical_rank = n - 2 * nf.hyperbolic_divisors.size();
  nf.transform = std::move(p);
  return nf;
}

/// Lookup of the two simply connected 5-manifolds that occur as links here.
inline LinkType link_from_form(const SkewNormalForm& nf) {
  bool unimodular_blocks = true;
  for (const auto& d : nf.hyperbolic_divisors) unimodular_blocks = unimodular_blocks && d == 1;
  if (unimodular_blocks && nf.radical_rank == 0) return {LinkTag::S5, std::nullopt};
  if (unimodular_blocks && nf.radical_rank == 1) return {LinkTag::S2xS3, std::nullopt};
  return {LinkTag::Unsupported, nf};
}

inline LinkType link_of_Ak(std::int64_t k) { return link_from_form(skew_normal_form(milnor_lattice_Ak(k))); }

/// Milnor number of a nondegenerate quasihomogeneous germ: prod (1/alpha_i - 1).
inline std::size_t milnor_number_qh(const Weights& w) {
  w.validate();
  Rat product = 1;
  for (const auto& a : w.alpha) product *= (Rat(1) / (a / w.degree) - 1);
  if (product <= 0 || product.get_den() != 1)
    throw PreconditionError("weights do not give a positive integer Milnor number (got " + product.get_str() + ")");
  return product.get_num().get_ui();
}

}  // namespace hypersing

#endif  // HYPERSING_MILNOR_LATTICE_HPP
