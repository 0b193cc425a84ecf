#ifndef HYPERSING_QUADRATIC_FORM_HPP
#define HYPERSING_QUADRATIC_FORM_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "hypersing/error.hpp"
#include "hypersing/matrix.hpp"

namespace hypersing {

/// Result of a rational congruence diagonalization: T^T A T = diag(diagonal).
struct Diagonalization {
  std::vector<Rat> diagonal;
  RatMatrix transform;

  std::size_t rank() const {
    std::size_t r = 0;
    for (const auto& d : diagonal) r += d != 0;
    return r;
  }
};

/// Lagrange's method over Q. Pivot: the first unprocessed index with a
/// nonzero diagonal entry; if every remaining diagonal entry vanishes, the
/// first nonzero off-diagonal pair (p, q) is turned into a diagonal entry by
/// the change e_p -> e_p + e_q (a_pp becomes 2 a_pq).
inline Diagonalization lagrange_diagonalize(const RatMatrix& symmetric) {
  if (!symmetric.is_symmetric()) throw PreconditionError("quadratic form matrix is not symmetric");
  const std::size_t n = symmetric.rows();
  RatMatrix a = symmetric;
  RatMatrix t = RatMatrix::identity(n);
  std::vector<bool> done(n, false);

  auto congruence_add = [&](std::size_t dst, std::size_t src, const Rat& f) {
    a.add_col(dst, src, f);
    a.add_row(dst, src, f);
    t.add_col(dst, src, f);
  };

  for (std::size_t step = 0; step < n; ++step) {
    std::optional<std::size_t> pivot;
    for (std::size_t i = 0; i < n && !pivot; ++i)
      if (!done[i] && a(i, i) != 0) pivot = i;
    if (!pivot) {
      for (std::size_t i = 0; i < n && !pivot; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (!done[i] && !done[j] && a(i, j) != 0) {
            congruence_add(i, j, Rat(1));
            pivot = i;
            break;
          }
    }
    if (!pivot) break;  // remaining block is zero
    const std::size_t p = *pivot;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == p || done[j] || a(p, j) == 0) continue;
      congruence_add(j, p, -a(p, j) / a(p, p));
    }
    done[p] = true;
  }
  Diagonalization out;
  for (std::size_t i = 0; i < n; ++i) out.diagonal.push_back(a(i, i));
  out.transform = std::move(t);
  return out;
}

}  // namespace hypersing

#endif  // HYPERSING_QUADRATIC_FORM_HPP
