#ifndef HYPERSING_TESTS_SUPPORT_HPP
#define HYPERSING_TESTS_SUPPORT_HPP

// Fixed-seed generators shared by the property tests.

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "hypersing/hypersing.hpp"

namespace hs_test {

using namespace hypersing;

inline constexpr std::uint64_t kSeed = 0x5eed2024ULL;

class Gen {
 public:
  explicit Gen(std::uint64_t salt = 0) : rng_(kSeed ^ (salt * 0x9e3779b97f4a7c15ULL)) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi) { return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  Rat rational(std::int64_t bound = 9) {
    Rat r(Int(integer(-bound, bound)), Int(integer(1, bound)));
    r.canonicalize();
    return r;
  }
  Rat nonzero_rational(std::int64_t bound = 9) {
    Rat r = 0;
    while (r == 0) r = rational(bound);
    return r;
  }

  Exponents exponents(std::size_t n, unsigned max_total) {
    Exponents e(n, 0);
    unsigned left = static_cast<unsigned>(integer(0, max_total));
    for (std::size_t i = 0; i < n && left; ++i) {
      const auto k = static_cast<unsigned>(integer(0, left));
      e[i] = k;
      left -= k;
    }
    return e;
  }

  Poly poly(const std::vector<std::string>& vars, std::size_t terms, unsigned max_degree) {
    Poly p(vars);
    for (std::size_t t = 0; t < terms; ++t) p.add_term(exponents(vars.size(), max_degree), rational());
    return p;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// z1^(k+1) + z2^2 + z3^2 + z4^2.
inline Poly ak_normal_form(std::int64_t k) {
  const auto v = z_variables();
  return Poly::variable(v, 0).pow(static_cast<unsigned>(k + 1)) + Poly::variable(v, 1).pow(2) +
         Poly::variable(v, 2).pow(2) + Poly::variable(v, 3).pow(2);
}

inline Weights ak_weights(std::int64_t k) {
  return Weights{{Rat(1, static_cast<unsigned long>(k + 1)), Rat(1, 2), Rat(1, 2), Rat(1, 2)}, Rat(1)};
}

/// `count` distinct random monomials of weighted degree > 1 (and total degree
/// at most max_total) with nonzero rational coefficients.
inline Poly random_higher_terms(Gen& gen, const std::vector<std::string>& vars, const Weights& w, std::size_t count,
                                unsigned max_total) {
  Poly out(vars);
  while (out.size() < count) {
    Exponents e(vars.size(), 0);
    for (auto& x : e) x = static_cast<unsigned>(gen.integer(0, max_total));
    if (total_degree(e) > max_total || weighted_degree(e, w) <= 1 || out.coefficient(e) != 0) continue;
    out.add_term(e, gen.nonzero_rational());
  }
  return out;
}

/// f(z_{perm}), i.e. variable i is replaced by variable perm[i].
inline Poly permute_variables(const Poly& f, const std::vector<std::size_t>& perm) {
  std::map<std::string, Poly> sigma;
  for (std::size_t i = 0; i < perm.size(); ++i) sigma.emplace(f.variables()[i], Poly::variable(f.variables(), perm[i]));
  return substitute(f, sigma);
}

/// z_i -> c_i z_i.
inline Poly rescale_variables(const Poly& f, const std::vector<Rat>& c) {
  std::map<std::string, Poly> sigma;
  for (std::size_t i = 0; i < c.size(); ++i) sigma.emplace(f.variables()[i], c[i] * Poly::variable(f.variables(), i));
  return substitute(f, sigma);
}

}  // namespace hs_test

#endif  // HYPERSING_TESTS_SUPPORT_HPP
