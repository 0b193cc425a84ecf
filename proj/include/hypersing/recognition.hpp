#ifndef HYPERSING_RECOGNITION_HPP
#define HYPERSING_RECOGNITION_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypersing/error.hpp"
#include "hypersing/locus.hpp"
#include "hypersing/milnor_lattice.hpp"
#include "hypersing/parse.hpp"
#include "hypersing/polynomial.hpp"
#include "hypersing/quadratic_form.hpp"

namespace hypersing {

/// f is not semiquasihomogeneous for the given weights.
class NotSemiquasihomogeneous : public Error {
 public:
  using Error::Error;
};

/// f = f0 + g with f0 of weighted degree exactly w.degree and every term of g
/// of strictly larger weighted degree.
struct SqhSplit {
  Poly f0;
  Poly g;
  Weights weights;
};

inline SqhSplit sqh_split(const Poly& f, const Weights& w) {
  w.validate();
  if (f.num_variables() != 4) throw PreconditionError("semiquasihomogeneous splitting needs a germ in 4 variables");
  if (f.constant_term() != 0) throw PreconditionError("germ has a nonzero constant term");
  SqhSplit s{Poly(f.variables()), Poly(f.variables()), w};
  for (const auto& [e, c] : f.terms()) {
    const Rat d = weighted_degree(e, w);
    if (d < w.degree) {
      Poly mono = Poly::monomial(f.variables(), e, c);
      throw NotSemiquasihomogeneous("term " + to_string(mono) + " has weighted degree " + d.get_str() + " < " +
                                    w.degree.get_str());
    }
    (d == w.degree ? s.f0 : s.g).add_term(e, c);
  }
  if (s.f0.is_zero()) throw NotSemiquasihomogeneous("weighted-degree-" + w.degree.get_str() + " part is empty");
  return s;
}

/// One recorded coordinate change, applied as f(z) -> f(sigma(z)).
struct CoordinateChange {
  std::string description;
  std::map<std::string, Poly> images;
};

inline Poly apply_changes(const Poly& f, const std::vector<CoordinateChange>& changes) {
  Poly out = f;
  for (const auto& c : changes) out = substitute(out, c.images);
  return out;
}

/// Outcome of reducing the degree-one part to
///   residual * z_d^n + sum_i square_coefficients[i] * z_i^2.
struct DegreeOneReduction {
  SqhSplit split;
  Rat residual;
  std::vector<Rat> square_coefficients;  // over the non-distinguished variables, in order
  std::size_t distinguished = 0;
  unsigned order = 0;  // n, where the distinguished weight is 1/n
  std::vector<CoordinateChange> changes;
};

namespace detail {

/// n with weights (1/n at `dist`, 1/2 elsewhere) and degree 1, if that shape holds.
inline std::optional<unsigned> distinguished_order(const Weights& w, std::size_t dist) {
  if (w.degree != 1 || w.alpha.size() != 4 || dist >= 4) return std::nullopt;
  for (std::size_t i = 0; i < 4; ++i)
    if (i != dist && w.alpha[i] != Rat(1, 2)) return std::nullopt;
  const Rat inv = Rat(1) / w.alpha[dist];
  if (inv.get_den() != 1 || inv < 2) return std::nullopt;
  return static_cast<unsigned>(inv.get_num().get_ui());
}

inline std::vector<std::size_t> distinguished_candidates(const Weights& w) {
  std::vector<std::size_t> odd;
  for (std::size_t i = 0; i < w.alpha.size(); ++i)
    if (w.alpha[i] != Rat(1, 2)) odd.push_back(i);
  if (odd.empty()) return {0, 1, 2, 3};
  if (odd.size() == 1 && distinguished_order(w, odd[0])) return odd;
  return {};
}

inline Poly normal_form_polynomial(const std::vector<std::string>& vars, std::size_t dist, unsigned n,
                                   const Rat& residual, const std::vector<Rat>& squares) {
  Poly nf(vars);
  Exponents e(4, 0);
  e[dist] = n;
  nf.add_term(e, residual);
  std::size_t k = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    if (i == dist) continue;
    Exponents sq(4, 0);
    sq[i] = 2;
    nf.add_term(sq, squares[k++]);
  }
  return nf;
}

}  // namespace detail

/// Brings the degree-one part of a split with weights (1/n, 1/2, 1/2, 1/2)
/// (distinguished variable anywhere) to a diagonal normal form:
///  1. diagonalize the quadratic form in the three weight-1/2 variables by
///     rational congruence;
///  2. for even n = 2m, absorb the z_d^m-linear terms by completing squares,
///     z_i -> z_i - b_i/(2 D_i) z_d^m;
///  3. report the residual coefficient of z_d^n.
/// Both changes preserve weighted degree, so the remainder stays above 1.
/// No final rescaling is done: nonvanishing coefficients decide the class.
inline DegreeOneReduction reduce_degree_one_part(const SqhSplit& s, std::optional<std::size_t> distinguished = std::nullopt) {
  const Weights& w = s.weights;
  std::size_t dist = 0;
  if (distinguished) {
    dist = *distinguished;
  } else {
    const auto cands = detail::distinguished_candidates(w);
    if (cands.empty()) throw PreconditionError("weights are not of the form (1/n, 1/2, 1/2, 1/2)");
    dist = cands.front();
  }
  const auto order = detail::distinguished_order(w, dist);
  if (!order) throw PreconditionError("weights are not of the form (1/n, 1/2, 1/2, 1/2) with the distinguished variable first");
  const unsigned n = *order;
  const auto& vars = s.f0.variables();

  std::vector<std::size_t> others;
  for (std::size_t i = 0; i < 4; ++i)
    if (i != dist) others.push_back(i);
  auto slot = [&](std::size_t var) {
    for (std::size_t k = 0; k < 3; ++k)
      if (others[k] == var) return k;
    return std::size_t{3};
  };

  Rat a1 = 0;
  std::vector<Rat> cross(3, Rat(0));
  RatMatrix q(3, 3);
  for (const auto& [e, c] : s.f0.terms()) {
    if (e[dist] == n) {
      a1 = c;
      continue;
    }
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < 3; ++k)
      for (unsigned r = 0; r < e[others[k]]; ++r) idx.push_back(k);
    if (e[dist] == 0 && idx.size() == 2) {
      if (idx[0] == idx[1]) q(idx[0], idx[0]) = c;
      else q(idx[0], idx[1]) = q(idx[1], idx[0]) = c / 2;
    } else if (2 * e[dist] == n && idx.size() == 1) {
      cross[idx[0]] = c;
    } else {
      throw std::logic_error("unexpected weighted-degree-1 monomial");
    }
  }
  (void)slot;

  const Diagonalization diag = lagrange_diagonalize(q);
  if (diag.rank() < 3) {
    throw DegenerateError("quadratic part in " + vars[others[0]] + ", " + vars[others[1]] + ", " + vars[others[2]] +
                          " has rank " + std::to_string(diag.rank()) + " < 3");
  }

  DegreeOneReduction out;
  out.distinguished = dist;
  out.order = n;

  if (!(diag.transform == RatMatrix::identity(3))) {
    CoordinateChange change{"rational congruence diagonalizing the quadratic part", {}};
    for (std::size_t i = 0; i < 3; ++i) {
      Poly img(vars);
      for (std::size_t j = 0; j < 3; ++j) img += diag.transform(i, j) * Poly::variable(vars, others[j]);
      change.images.emplace(vars[others[i]], std::move(img));
    }
    out.changes.push_back(std::move(change));
  }
  // Cross terms b . z become (T^T b) . w under z = T w.
  std::vector<Rat> b(3, Rat(0));
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t i = 0; i < 3; ++i) b[j] += diag.transform(i, j) * cross[i];

  Rat residual = a1;
  bool any_cross = false;
  for (std::size_t i = 0; i < 3; ++i) {
    residual -= b[i] * b[i] / (4 * diag.diagonal[i]);
    any_cross = any_cross || b[i] != 0;
  }
  if (any_cross) {
    CoordinateChange change{"completing the squares against " + vars[dist] + "^" + std::to_string(n / 2), {}};
    Exponents half(4, 0);
    half[dist] = n / 2;
    for (std::size_t i = 0; i < 3; ++i) {
      if (b[i] == 0) continue;
      Poly img = Poly::variable(vars, others[i]);
      img.add_term(half, -b[i] / (2 * diag.diagonal[i]));
      change.images.emplace(vars[others[i]], std::move(img));
    }
    out.changes.push_back(std::move(change));
  }
  if (residual == 0)
    throw DegenerateError("residual coefficient of " + vars[dist] + "^" + std::to_string(n) +
                          " vanishes; the germ is not of type A_" + std::to_string(n - 1));

  out.residual = residual;
  out.square_coefficients = diag.diagonal;
  out.split = sqh_split(apply_changes(s.f0 + s.g, out.changes), w);
  if (!(out.split.f0 == detail::normal_form_polynomial(vars, dist, n, residual, diag.diagonal)))
    throw std::logic_error("degree-one reduction did not reach the diagonal normal form");
  return out;
}

enum class SingularityTag { Ak, NotAk, Degenerate };

struct SingularityClass {
  SingularityTag tag = SingularityTag::NotAk;
  std::int64_t k = 0;  // valid for Ak
  std::string reason;  // valid for NotAk / Degenerate
  std::optional<std::size_t> milnor_number;
  std::optional<LinkType> link;
  std::vector<CoordinateChange> certificate;
  std::vector<std::string> notes;

  bool is_Ak(std::int64_t index) const { return tag == SingularityTag::Ak && k == index; }

  std::string label() const {
    switch (tag) {
      case SingularityTag::Ak: return "A_" + std::to_string(k);
      case SingularityTag::NotAk: return "NotAk";
      default: return "Degenerate";
    }
  }

  static SingularityClass ak(std::int64_t k) {
    SingularityClass c;
    c.tag = SingularityTag::Ak;
    c.k = k;
    c.milnor_number = static_cast<std::size_t>(k);
    c.link = link_of_Ak(k);
    return c;
  }
  static SingularityClass failure(SingularityTag tag, std::string reason) {
    SingularityClass c;
    c.tag = tag;
    c.reason = std::move(reason);
    return c;
  }
};

/// Recognizes A_{n-1} for a germ semiquasihomogeneous with weights
/// (1/n, 1/2, 1/2, 1/2) in some variable order. With `var_permutation` the
/// weights are listed in that order (w.alpha[i] belongs to variable
/// var_permutation[i]) and its first entry is the distinguished variable.
/// Otherwise the distinguished variable is read off the weights, and every
/// position is tried when all weights are 1/2.
inline SingularityClass recognize_with_weights(const Poly& f, const Weights& w_in,
                                               const std::optional<std::vector<std::size_t>>& var_permutation = std::nullopt) {
  Weights w = w_in;
  if (var_permutation) {
    std::vector<std::size_t> sorted = *var_permutation;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != std::vector<std::size_t>{0, 1, 2, 3}) throw PreconditionError("variable permutation must permute 0..3");
    w_in.validate();
    for (std::size_t i = 0; i < 4; ++i) w.alpha[(*var_permutation)[i]] = w_in.alpha[i];
  }
  SqhSplit split;
  try {
    split = sqh_split(f, w);
  } catch (const NotSemiquasihomogeneous& e) {
    return SingularityClass::failure(SingularityTag::NotAk, e.what());
  }
  std::vector<std::size_t> candidates;
  if (var_permutation) {
    candidates = {var_permutation->front()};
  } else {
    candidates = detail::distinguished_candidates(w);
  }
  if (candidates.empty() || !detail::distinguished_order(w, candidates.front()))
    return SingularityClass::failure(SingularityTag::NotAk, "weights are not of the form (1/n, 1/2, 1/2, 1/2)");

  std::string last_failure;
  for (const std::size_t dist : candidates) {
    try {
      DegreeOneReduction red = reduce_degree_one_part(split, dist);
      const std::int64_t k = static_cast<std::int64_t>(red.order) - 1;
      // Local-algebra basis 1, z, ..., z^(k-1) of the normal form: all weights
      // i/(k+1) < 1, so no basis monomial lies on or above the diagonal.
      for (std::int64_t i = 0; i < k; ++i) {
        Exponents e(4, 0);
        e[dist] = static_cast<unsigned>(i);
        if (weighted_degree(e, w) >= 1) throw std::logic_error("superdiagonal basis monomial");
      }
      SingularityClass cls = SingularityClass::ak(k);
      cls.certificate = std::move(red.changes);
      cls.notes.push_back("distinguished variable " + f.variables()[dist] + ", residual coefficient " +
                          red.residual.get_str());
      cls.notes.push_back("no local-algebra basis monomial has weighted degree >= 1; higher terms are absorbable");
      return cls;
    } catch (const DegenerateError& e) {
      last_failure = e.what();
    }
  }
  return SingularityClass::failure(SingularityTag::Degenerate, last_failure);
}

/// Candidate weights read off the germ: for each variable with a lowest pure
/// power of degree n >= 2, weights 1/n on it and 1/2 elsewhere.
inline std::vector<Weights> infer_weight_candidates(const Poly& f) {
  std::vector<Weights> out;
  if (f.num_variables() != 4) return out;
  for (std::size_t v = 0; v < 4; ++v) {
    unsigned lowest = 0;
    for (const auto& [e, c] : f.terms()) {
      const auto pv = detail::pure_power_variable(e);
      if (pv && *pv == v && e[v] >= 2 && (lowest == 0 || e[v] < lowest)) lowest = e[v];
    }
    if (lowest == 0) continue;
    Weights w{{Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(1, 2)}, Rat(1)};
    w.alpha[v] = Rat(1, lowest);
    if (std::find(out.begin(), out.end(), w) == out.end()) out.push_back(w);
  }
  return out;
}

/// Tries every inferred weight vector in turn.
inline SingularityClass recognize(const Poly& f) {
  const auto cands = infer_weight_candidates(f);
  if (cands.empty()) return SingularityClass::failure(SingularityTag::NotAk, "no pure power of degree >= 2 to infer weights from");
  SingularityClass last;
  for (const auto& w : cands) {
    last = recognize_with_weights(f, w);
    if (last.tag == SingularityTag::Ak) return last;
  }
  return last;
}

/// A_mu whenever the origin is an isolated critical point of Milnor number
/// mu and the Hessian has corank <= 1.
inline SingularityClass classify_mu_corank(const Poly& f, const GermLocus& locus) {
  if (!locus.isolated || !locus.milnor_number)
    throw PreconditionError("locus certificate missing or the critical point is not isolated");
  const std::size_t mu = *locus.milnor_number;
  const std::size_t corank = f.num_variables() - rank(hessian_at_origin(f));
  if (corank > 1) {
    SingularityClass c = SingularityClass::failure(
        SingularityTag::NotAk, "Hessian corank " + std::to_string(corank) + " >= 2 (not an A_k germ)");
    c.milnor_number = mu;
    return c;
  }
  SingularityClass c = SingularityClass::ak(static_cast<std::int64_t>(mu));
  c.notes.push_back("Milnor number " + std::to_string(mu) + " (" + locus.method + "), Hessian corank " +
                    std::to_string(corank));
  return c;
}

inline SingularityClass classify_mu_corank(const Poly& f) { return classify_mu_corank(f, local_milnor_certificate(f)); }

}  // namespace hypersing

#endif  // HYPERSING_RECOGNITION_HPP
