#ifndef HYPERSING_GROEBNER_HPP
#define HYPERSING_GROEBNER_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "hypersing/error.hpp"
#include "hypersing/polynomial.hpp"

namespace hypersing {

enum class OrderKind { grevlex, lex };

/// A monomial order over n variables. `priority[0]` is the most significant
/// variable; for grevlex the last entry is the one compared first in reverse.
struct MonomialOrder {
  OrderKind kind = OrderKind::grevlex;
  std::vector<std::size_t> priority;

  static MonomialOrder grevlex(std::size_t n) { return {OrderKind::grevlex, identity(n)}; }
  static MonomialOrder lex(std::size_t n) { return {OrderKind::lex, identity(n)}; }

  /// Lex order in which `var` is the least significant variable, so a reduced
  /// basis of a zero-dimensional ideal ends with a polynomial in `var` alone.
  static MonomialOrder lex_eliminating_to(std::size_t n, std::size_t var) {
    MonomialOrder o{OrderKind::lex, {}};
    for (std::size_t i = 0; i < n; ++i)
      if (i != var) o.priority.push_back(i);
    o.priority.push_back(var);
    return o;
  }

  void validate(std::size_t n) const {
    std::vector<std::size_t> sorted = priority;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != identity(n)) throw PreconditionError("monomial order priority is not a permutation of the variables");
  }

  /// True when a ranks strictly above b.
  bool greater(const Exponents& a, const Exponents& b) const {
    if (kind == OrderKind::grevlex) {
      const unsigned da = total_degree(a);
      const unsigned db = total_degree(b);
      if (da != db) return da > db;
      for (std::size_t k = priority.size(); k-- > 0;) {
        const std::size_t i = priority[k];
        if (a[i] != b[i]) return a[i] < b[i];
      }
      return false;
    }
    for (const std::size_t i : priority)
      if (a[i] != b[i]) return a[i] > b[i];
    return false;
  }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  static std::vector<std::size_t> identity(std::size_t n) {
    std::vector<std::size_t> v(n);
    std::iota(v.begin(), v.end(), std::size_t{0});
    return v;
  }
};

namespace detail {

struct OrderGreater {
  const MonomialOrder* order;
  bool operator()(const Exponents& a, const Exponents& b) const { return order->greater(a, b); }
};

// Working representation: terms sorted by the active order, leading first.
using OrderedTerms = std::map<Exponents, Rat, OrderGreater>;

inline OrderedTerms to_ordered(const Poly& p, const MonomialOrder& order) {
  OrderedTerms t(OrderGreater{&order});
  for (const auto& [e, c] : p.terms()) t.emplace(e, c);
  return t;
}

inline Poly from_ordered(const OrderedTerms& t, const std::vector<std::string>& vars) {
  Poly p(vars);
  for (const auto& [e, c] : t) p.add_term(e, c);
  return p;
}

inline bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Exponents lcm(const Exponents& a, const Exponents& b) {
  Exponents l(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) l[i] = std::max(a[i], b[i]);
  return l;
}

inline bool coprime(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && b[i]) return false;
  return true;
}

/// p -= coeff * x^shift * g
inline void subtract_multiple(OrderedTerms& p, const OrderedTerms& g, const Exponents& shift, const Rat& coeff) {
  Exponents e(shift.size());
  for (const auto& [ge, gc] : g) {
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = ge[i] + shift[i];
    auto [it, inserted] = p.try_emplace(e, -coeff * gc);
    if (!inserted) {
      it->second -= coeff * gc;
      if (it->second == 0) p.erase(it);
    }
  }
}

/// Full normal form of p modulo the ordered basis (every term is reduced).
inline OrderedTerms normal_form(OrderedTerms p, const std::vector<OrderedTerms>& basis) {
  OrderedTerms remainder(p.key_comp());
  while (!p.empty()) {
    const auto lead = p.begin();
    const OrderedTerms* divisor = nullptr;
    for (const auto& g : basis) {
      if (!g.empty() && divides(g.begin()->first, lead->first)) {
        divisor = &g;
        break;
      }
    }
    if (!divisor) {
      remainder.insert(*lead);
      p.erase(lead);
      continue;
    }
    Exponents shift(lead->first.size());
    for (std::size_t i = 0; i < shift.size(); ++i) shift[i] = lead->first[i] - divisor->begin()->first[i];
    const Rat coeff = lead->second / divisor->begin()->second;
    subtract_multiple(p, *divisor, shift, coeff);
  }
  return remainder;
}

inline OrderedTerms s_polynomial(const OrderedTerms& f, const OrderedTerms& g) {
  const auto& [fe, fc] = *f.begin();
  const auto& [ge, gc] = *g.begin();
  const Exponents l = lcm(fe, ge);
  Exponents sf(l.size()), sg(l.size());
  for (std::size_t i = 0; i < l.size(); ++i) {
    sf[i] = l[i] - fe[i];
    sg[i] = l[i] - ge[i];
  }
  OrderedTerms s(f.key_comp());
  subtract_multiple(s, f, sf, Rat(-1) / fc);
  subtract_multiple(s, g, sg, Rat(1) / gc);
  return s;
}

/// Index of the single variable of a pure power x_v^k (k >= 1).
inline std::optional<std::size_t> pure_power_variable(const Exponents& e) {
  std::optional<std::size_t> var;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (var) return std::nullopt;
    var = i;
  }
  return var;
}

inline void make_monic(OrderedTerms& p) {
  if (p.empty()) return;
  const Rat lc = p.begin()->second;
  if (lc == 1) return;
  for (auto& [e, c] : p) c /= lc;
}

}  // namespace detail

/// Reduced Groebner basis: monic, inter-reduced generators sorted by leading
/// monomial (ascending in the basis order). The zero ideal has no generators.
struct GroebnerBasis {
  std::vector<std::string> variables;
  MonomialOrder order;
  std::vector<Poly> generators;

  bool is_unit_ideal() const { return generators.size() == 1 && generators[0].is_constant() && !generators[0].is_zero(); }
  bool is_zero_ideal() const { return generators.empty(); }

  Exponents leading_monomial(const Poly& p) const {
    if (p.is_zero()) throw PreconditionError("zero polynomial has no leading monomial");
    const Exponents* best = nullptr;
    for (const auto& [e, c] : p.terms())
      if (!best || order.greater(e, *best)) best = &e;
    return *best;
  }

  std::vector<Exponents> leading_monomials() const {
    std::vector<Exponents> lms;
    for (const auto& g : generators) lms.push_back(leading_monomial(g));
    return lms;
  }

  /// Normal form of p with respect to this basis.
  Poly reduce(const Poly& p) const {
    std::vector<detail::OrderedTerms> basis;
    for (const auto& g : generators) basis.push_back(detail::to_ordered(g, order));
    return detail::from_ordered(detail::normal_form(detail::to_ordered(p.embed(variables), order), basis), variables);
  }

  bool contains(const Poly& p) const { return reduce(p).is_zero(); }
};

/// Buchberger's algorithm with the normal selection strategy (smallest lcm
/// first), the coprime-leading-monomial criterion and the chain criterion,
/// followed by minimalization and full inter-reduction.
inline GroebnerBasis buchberger(const std::vector<Poly>& gens, const MonomialOrder& order) {
  if (gens.empty()) throw PreconditionError("buchberger needs at least one generator");
  const auto& vars = gens.front().variables();
  for (const auto& g : gens)
    if (g.variables() != vars) throw PreconditionError("generators live over different variable lists");
  order.validate(vars.size());

  using detail::OrderedTerms;
  std::vector<OrderedTerms> basis;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    OrderedTerms t = detail::to_ordered(g, order);
    detail::make_monic(t);
    basis.push_back(std::move(t));
  }
  GroebnerBasis result{vars, order, {}};
  if (basis.empty()) return result;

  auto lm = [&](std::size_t i) -> const Exponents& { return basis[i].begin()->first; };

  // Pending pairs ordered by lcm (normal strategy), with a bitmap for the
  // chain criterion. Pairs whose S-polynomial is trivially zero (coprime
  // leads, two monomials) count as treated and never enter the queue.
  struct Pair {
    Exponents lcm;
    std::size_t i, j;
  };
  auto pair_less = [&](const Pair& a, const Pair& b) {
    if (a.lcm != b.lcm) return order.greater(b.lcm, a.lcm);
    return std::tie(a.j, a.i) < std::tie(b.j, b.i);
  };
  std::set<Pair, decltype(pair_less)> queue(pair_less);
  std::vector<std::vector<char>> pending;
  auto add_pairs_for = [&](std::size_t t) {
    pending.emplace_back(t, 0);
    for (std::size_t k = 0; k < t; ++k) {
      if (detail::coprime(lm(k), lm(t))) continue;
      if (basis[k].size() == 1 && basis[t].size() == 1) continue;
      queue.insert({detail::lcm(lm(k), lm(t)), k, t});
      pending[t][k] = 1;
    }
  };
  auto is_pending = [&](std::size_t a, std::size_t b) { return a > b ? pending[a][b] : pending[b][a]; };
  for (std::size_t t = 0; t < basis.size(); ++t) add_pairs_for(t);

  while (!queue.empty()) {
    const Pair best = *queue.begin();
    queue.erase(queue.begin());
    const std::size_t i = best.i;
    const std::size_t j = best.j;
    pending[j][i] = 0;

    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == i || k == j) continue;
      chain = !is_pending(i, k) && !is_pending(j, k) && detail::divides(lm(k), best.lcm);
    }
    if (chain) continue;

    OrderedTerms h = detail::normal_form(detail::s_polynomial(basis[i], basis[j]), basis);
    if (h.empty()) continue;
    detail::make_monic(h);
    const bool unit = total_degree(h.begin()->first) == 0;
    basis.push_back(std::move(h));
    if (unit) {
      basis = {basis.back()};
      break;
    }
    add_pairs_for(basis.size() - 1);
  }

  // Minimalize: drop generators whose leading monomial is divisible by another's.
  std::vector<OrderedTerms> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t k = 0; k < basis.size() && !redundant; ++k) {
      if (k == i) continue;
      if (detail::divides(lm(k), lm(i)) && (lm(k) != lm(i) || k < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  // Inter-reduce tails.
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<OrderedTerms> others;
    for (std::size_t k = 0; k < minimal.size(); ++k)
      if (k != i) others.push_back(minimal[k]);
    OrderedTerms lead(minimal[i].key_comp());
    lead.insert(*minimal[i].begin());
    OrderedTerms tail = minimal[i];
    tail.erase(tail.begin());
    OrderedTerms reduced_tail = detail::normal_form(std::move(tail), others);
    lead.insert(reduced_tail.begin(), reduced_tail.end());
    minimal[i] = std::move(lead);
  }
  std::sort(minimal.begin(), minimal.end(), [&](const OrderedTerms& a, const OrderedTerms& b) {
    return order.greater(b.begin()->first, a.begin()->first);
  });
  for (const auto& g : minimal) result.generators.push_back(detail::from_ordered(g, vars));
  return result;
}

/// Re-checks the Buchberger criterion directly: every S-polynomial of every
/// pair reduces to zero modulo the basis.
inline bool all_s_polynomials_reduce_to_zero(const GroebnerBasis& gb) {
  std::vector<detail::OrderedTerms> basis;
  for (const auto& g : gb.generators) basis.push_back(detail::to_ordered(g, gb.order));
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (!detail::normal_form(detail::s_polynomial(basis[i], basis[j]), basis).empty()) return false;
  return true;
}

/// Every variable has a pure power among the leading monomials. The unit
/// ideal (empty variety) counts as zero-dimensional.
inline bool is_zero_dimensional(const GroebnerBasis& gb) {
  if (gb.is_unit_ideal()) return true;
  if (gb.is_zero_ideal()) return gb.variables.empty();
  std::vector<bool> found(gb.variables.size(), false);
  for (const auto& e : gb.leading_monomials())
    if (auto v = detail::pure_power_variable(e)) found[*v] = true;
  return std::all_of(found.begin(), found.end(), [](bool b) { return b; });
}

/// Number of monomials outside the leading-term ideal; std::nullopt when the
/// quotient is infinite-dimensional.
inline std::optional<std::size_t> standard_monomial_count(const GroebnerBasis& gb) {
  if (gb.is_unit_ideal()) return 0;
  if (!is_zero_dimensional(gb)) return std::nullopt;
  const std::size_t n = gb.variables.size();
  const auto lms = gb.leading_monomials();
  std::vector<unsigned> bound(n, 0);
  for (const auto& e : lms)
    if (auto v = detail::pure_power_variable(e))
      if (bound[*v] == 0 || e[*v] < bound[*v]) bound[*v] = e[*v];
  std::size_t count = 0;
  Exponents m(n, 0);
  while (true) {
    bool standard = true;
    for (const auto& e : lms)
      if (detail::divides(e, m)) {
        standard = false;
        break;
      }
    if (standard) ++count;
    std::size_t k = 0;
    while (k < n && ++m[k] == bound[k]) m[k++] = 0;
    if (k == n) break;
  }
  return count;
}

/// Generator of I ∩ Q[var] for a zero-dimensional ideal, via a lex basis with
/// `var` last. Returns the constant 1 for the unit ideal.
inline Poly univariate_eliminant(const std::vector<Poly>& gens, std::size_t var) {
  if (gens.empty()) throw PreconditionError("univariate_eliminant needs generators");
  const std::size_t n = gens.front().num_variables();
  if (var >= n) throw PreconditionError("variable index out of range");
  const GroebnerBasis grevlex = buchberger(gens, MonomialOrder::grevlex(n));
  if (grevlex.is_unit_ideal()) return Poly::constant(gens.front().variables(), Rat(1));
  if (!is_zero_dimensional(grevlex)) throw DegenerateError("ideal is not zero-dimensional");
  const GroebnerBasis lex = buchberger(grevlex.generators, MonomialOrder::lex_eliminating_to(n, var));
  for (const auto& g : lex.generators) {
    const auto used = g.used_variables();
    if (used.size() == 1 && used[0] == var) return g;
  }
  throw DegenerateError("lex basis has no univariate element");  // unreachable for zero-dim ideals
}

/// True when p is exactly x_var^n with n >= 1 (monic).
inline bool is_pure_power_of(const Poly& p, std::size_t var) {
  if (p.size() != 1) return false;
  const auto& [e, c] = *p.terms().begin();
  if (c != 1 || e[var] == 0) return false;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (i != var && e[i] != 0) return false;
  return true;
}

}  // namespace hypersing

#endif  // HYPERSING_GROEBNER_HPP
