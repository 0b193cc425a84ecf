#ifndef HYPERSING_POLYNOMIAL_HPP
#define HYPERSING_POLYNOMIAL_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hypersing/error.hpp"
#include "hypersing/matrix.hpp"
#include "hypersing/rational.hpp"

namespace hypersing {

inline constexpr std::size_t kMaxVariables = 5;

using Exponents = std::vector<unsigned>;

inline unsigned total_degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0u);
}

/// Graded reverse lexicographic order on exponent vectors; the declared
/// variable order is x_0 > x_1 > ... . Returns true when a ranks above b.
struct GrevlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const {
    const unsigned da = total_degree(a);
    const unsigned db = total_degree(b);
    if (da != db) return da > db;
    for (std::size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  }
};

/// Variable names are "x0".."x4" or "z1".."z4"; the two families never mix.
inline bool is_valid_variable_name(std::string_view name) {
  if (name.size() != 2) return false;
  if (name[0] == 'x') return name[1] >= '0' && name[1] <= '4';
  if (name[0] == 'z') return name[1] >= '1' && name[1] <= '4';
  return false;
}

inline std::vector<std::string> x_variables() { return {"x0", "x1", "x2", "x3", "x4"}; }
inline std::vector<std::string> z_variables() { return {"z1", "z2", "z3", "z4"}; }

/// Sparse multivariate polynomial with rational coefficients over an ordered
/// list of at most five variables. Zero coefficients are never stored and the
/// terms iterate in grevlex order (leading term first).
class Poly {
 public:
  using TermMap = std::map<Exponents, Rat, GrevlexGreater>;

  Poly() = default;

  explicit Poly(std::vector<std::string> variables) : vars_(std::move(variables)) {
    if (vars_.size() > kMaxVariables)
      throw PreconditionError("at most " + std::to_string(kMaxVariables) + " variables are supported");
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (!is_valid_variable_name(vars_[i])) throw PreconditionError("invalid variable name '" + vars_[i] + "'");
      if (vars_[i][0] != vars_[0][0]) throw PreconditionError("x- and z-variables cannot be mixed");
      for (std::size_t j = 0; j < i; ++j)
        if (vars_[i] == vars_[j]) throw PreconditionError("duplicate variable '" + vars_[i] + "'");
    }
  }

  static Poly constant(std::vector<std::string> variables, const Rat& c) {
    Poly p(std::move(variables));
    p.add_term(Exponents(p.num_variables(), 0), c);
    return p;
  }

  static Poly variable(std::vector<std::string> variables, std::size_t index) {
    Poly p(std::move(variables));
    if (index >= p.num_variables()) throw PreconditionError("variable index out of range");
    Exponents e(p.num_variables(), 0);
    e[index] = 1;
    p.add_term(e, Rat(1));
    return p;
  }

  static Poly monomial(std::vector<std::string> variables, Exponents e, const Rat& c) {
    Poly p(std::move(variables));
    p.add_term(e, c);
    return p;
  }

  const std::vector<std::string>& variables() const noexcept { return vars_; }
  std::size_t num_variables() const noexcept { return vars_.size(); }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
  }

  Rat constant_term() const { return coefficient(Exponents(vars_.size(), 0)); }

  Rat coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
  }

  /// -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : static_cast<int>(total_degree(terms_.begin()->first)); }

  unsigned degree_in(std::size_t var) const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const unsigned d = total_degree(terms_.begin()->first);
    return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return total_degree(t.first) == d; });
  }

  std::optional<std::size_t> index_of(std::string_view name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i] == name) return i;
    return std::nullopt;
  }

  /// Variables that occur with a positive exponent.
  std::vector<std::size_t> used_variables() const {
    std::vector<std::size_t> used;
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (degree_in(i) > 0) used.push_back(i);
    return used;
  }

  /// Re-expresses the polynomial over another variable list. Every variable
  /// that actually occurs must be present in `target`.
  Poly embed(const std::vector<std::string>& target) const {
    Poly out(target);
    std::vector<std::optional<std::size_t>> where(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) where[i] = out.index_of(vars_[i]);
    for (const auto& [e, c] : terms_) {
      Exponents ne(target.size(), 0);
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!where[i]) throw PreconditionError("variable '" + vars_[i] + "' is not declared in the target ring");
        ne[*where[i]] = e[i];
      }
      out.add_term(ne, c);
    }
    return out;
  }

  Rat evaluate(std::span<const Rat> point) const {
    if (point.size() != vars_.size()) throw PreconditionError("evaluation point has the wrong dimension");
    Rat sum = 0;
    for (const auto& [e, c] : terms_) {
      Rat t = c;
      for (std::size_t i = 0; i < e.size(); ++i)
        for (unsigned k = 0; k < e[i]; ++k) t *= point[i];
      sum += t;
    }
    return sum;
  }

  void add_term(const Exponents& e, const Rat& c) {
    if (e.size() != vars_.size()) throw PreconditionError("exponent vector length does not match the variable count");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }

  Poly& operator+=(const Poly& o) {
    require_same_ring(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    require_same_ring(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    a.require_same_ring(b);
    Poly p(a.vars_);
    Exponents e(a.vars_.size());
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        p.add_term(e, ca * cb);
      }
    return p;
  }
  friend Poly operator*(const Rat& s, Poly p) {
    if (s == 0) return Poly(p.vars_);
    for (auto& [e, c] : p.terms_) c *= s;
    return p;
  }

  Poly pow(unsigned n) const {
    Poly result = constant(vars_, Rat(1));
    Poly base = *this;
    while (n) {
      if (n & 1u) result *= base;
      n >>= 1u;
      if (n) base *= base;
    }
    return result;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.vars_ == b.vars_ && a.terms_ == b.terms_; }

 private:
  void require_same_ring(const Poly& o) const {
    if (vars_ != o.vars_) throw PreconditionError("polynomials live over different variable lists");
  }

  std::vector<std::string> vars_;
  TermMap terms_;
};

/// Rational weight vector with the target quasihomogeneity degree.
struct Weights {
  std::vector<Rat> alpha;
  Rat degree{1};

  void validate() const {
    if (alpha.size() != 4) throw PreconditionError("weights must have exactly 4 entries");
    for (const auto& a : alpha)
      if (a <= 0 || a > 1) throw PreconditionError("weight " + a.get_str() + " is outside (0, 1]");
    if (degree <= 0) throw PreconditionError("weighted degree must be positive");
  }

  friend bool operator==(const Weights&, const Weights&) = default;
};

inline Rat weighted_degree(const Exponents& e, const Weights& w) {
  if (e.size() != w.alpha.size())
    throw PreconditionError("exponent vector of length " + std::to_string(e.size()) + " against " +
                            std::to_string(w.alpha.size()) + " weights");
  Rat d = 0;
  for (std::size_t i = 0; i < e.size(); ++i) d += w.alpha[i] * e[i];
  return d;
}

/// Partial derivative with respect to variable `var`.
inline Poly derivative(const Poly& f, std::size_t var) {
  if (var >= f.num_variables()) throw PreconditionError("variable index out of range");
  Poly d(f.variables());
  for (const auto& [e, c] : f.terms()) {
    if (e[var] == 0) continue;
    Exponents ne = e;
    --ne[var];
    d.add_term(ne, c * e[var]);
  }
  return d;
}

/// All first partials in declared variable order.
inline std::vector<Poly> gradient(const Poly& f) {
  std::vector<Poly> g;
  g.reserve(f.num_variables());
  for (std::size_t i = 0; i < f.num_variables(); ++i) g.push_back(derivative(f, i));
  return g;
}

/// Matrix of second partials at the origin. Requires a vanishing linear part.
inline RatMatrix hessian_at_origin(const Poly& f) {
  const std::size_t n = f.num_variables();
  RatMatrix h(n, n);
  for (const auto& [e, c] : f.terms()) {
    const unsigned deg = total_degree(e);
    if (deg == 1) throw PreconditionError("germ has a nonzero linear part, so the origin is not singular");
    if (deg != 2) continue;
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      for (unsigned k = 0; k < e[i]; ++k) idx.push_back(i);
    if (idx[0] == idx[1]) {
      h(idx[0], idx[0]) = 2 * c;
    } else {
      h(idx[0], idx[1]) = c;
      h(idx[1], idx[0]) = c;
    }
  }
  return h;
}

/// Simultaneous substitution x_i -> sigma(x_i); unmapped variables stay fixed.
/// Images are re-expressed over f's variables, so they may only use those.
inline Poly substitute(const Poly& f, const std::map<std::string, Poly>& sigma) {
  const auto& vars = f.variables();
  std::vector<Poly> images;
  images.reserve(vars.size());
  for (std::size_t i = 0; i < vars.size(); ++i) {
    auto it = sigma.find(vars[i]);
    images.push_back(it == sigma.end() ? Poly::variable(vars, i) : it->second.embed(vars));
  }
  for (const auto& [name, img] : sigma)
    if (!f.index_of(name)) throw PreconditionError("substitution maps undeclared variable '" + name + "'");

  // Powers are cached per variable; exponents are small in practice.
  std::vector<std::vector<Poly>> powers(vars.size());
  auto power = [&](std::size_t i, unsigned k) -> const Poly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Poly::constant(vars, Rat(1)));
    while (cache.size() <= k) cache.push_back(cache.back() * images[i]);
    return cache[k];
  };

  Poly out(vars);
  for (const auto& [e, c] : f.terms()) {
    Poly term = Poly::constant(vars, c);
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (e[i]) term *= power(i, e[i]);
    out += term;
  }
  return out;
}

/// Substitutes rational constants for some variables and drops them from the
/// variable list.
inline Poly specialize(const Poly& f, const std::map<std::string, Rat>& values) {
  std::vector<std::string> kept;
  std::vector<std::optional<Rat>> fixed(f.num_variables());
  for (std::size_t i = 0; i < f.num_variables(); ++i) {
    auto it = values.find(f.variables()[i]);
    if (it == values.end()) kept.push_back(f.variables()[i]);
    else fixed[i] = it->second;
  }
  for (const auto& [name, v] : values)
    if (!f.index_of(name)) throw PreconditionError("cannot specialize undeclared variable '" + name + "'");
  Poly out(kept);
  for (const auto& [e, c] : f.terms()) {
    Rat coeff = c;
    Exponents ne;
    ne.reserve(kept.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (fixed[i]) {
        for (unsigned k = 0; k < e[i]; ++k) coeff *= *fixed[i];
      } else {
        ne.push_back(e[i]);
      }
    }
    out.add_term(ne, coeff);
  }
  return out;
}

/// Sets the chart variable to 1. F must be homogeneous.
inline Poly dehomogenize(const Poly& F, std::string_view chart) {
  if (!F.index_of(chart)) throw PreconditionError("chart variable '" + std::string(chart) + "' is not declared");
  if (!F.is_homogeneous()) throw PreconditionError("cannot dehomogenize a non-homogeneous polynomial");
  return specialize(F, {{std::string(chart), Rat(1)}});
}

/// Translation x_i -> x_i + shift_i, moving the point `shift` to the origin.
inline Poly translate(const Poly& f, std::span<const Rat> shift) {
  if (shift.size() != f.num_variables()) throw PreconditionError("translation has the wrong dimension");
  std::map<std::string, Poly> sigma;
  for (std::size_t i = 0; i < shift.size(); ++i)
    if (shift[i] != 0)
      sigma.emplace(f.variables()[i], Poly::variable(f.variables(), i) + Poly::constant(f.variables(), shift[i]));
  return sigma.empty() ? f : substitute(f, sigma);
}

}  // namespace hypersing

#endif  // HYPERSING_POLYNOMIAL_HPP
