#ifndef HYPERSING_LOCUS_HPP
#define HYPERSING_LOCUS_HPP

#include <cstddef>
#include <functional>
#include <future>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypersing/error.hpp"
#include "hypersing/groebner.hpp"
#include "hypersing/parse.hpp"
#include "hypersing/polynomial.hpp"

namespace hypersing {

struct ChartDiagnostic {
  std::size_t chart = 0;       // index i of the chart x_i = 1
  bool contains_point = false;
  std::string outcome;
  std::vector<std::string> eliminants;  // only on the point's chart
};

struct LocusReport {
  bool is_unique_at_point = false;
  /// Standard-monomial count of the chart ideal generated by the five
  /// dehomogenized partials. Present only with a uniqueness certificate.
  std::optional<std::size_t> milnor_number_at_point;
  std::vector<ChartDiagnostic> chart_diagnostics;
  std::vector<std::string> notes;
  /// F on the point's chart, translated so the point is the origin.
  Poly chart_germ;
};

namespace detail {

inline bool is_unit(const std::vector<Poly>& gens) {
  return buchberger(gens, MonomialOrder::grevlex(gens.front().num_variables())).is_unit_ideal();
}

inline std::vector<Poly> dehomogenized_partials(const Poly& F, std::size_t chart) {
  std::vector<Poly> out;
  for (const auto& p : gradient(F)) out.push_back(dehomogenize(p, F.variables()[chart]));
  return out;
}

inline ChartDiagnostic check_point_chart(const Poly& F, std::size_t chart, const std::vector<Rat>& point,
                                         std::optional<std::size_t>& count, bool& certified) {
  ChartDiagnostic diag{chart, true, {}, {}};
  std::vector<Rat> shift;
  for (std::size_t i = 0; i < point.size(); ++i)
    if (i != chart) shift.push_back(point[i]);
  std::vector<Poly> ideal;
  for (const auto& p : dehomogenized_partials(F, chart)) ideal.push_back(translate(p, shift));

  const GroebnerBasis gb = buchberger(ideal, MonomialOrder::grevlex(ideal.front().num_variables()));
  if (gb.is_unit_ideal()) {
    diag.outcome = "singular locus on this chart is empty; the point is a smooth point of V";
    return diag;
  }
  if (!is_zero_dimensional(gb)) {
    diag.outcome = "singular locus on this chart is positive-dimensional (unsupported)";
    return diag;
  }
  bool all_pure = true;
  for (std::size_t v = 0; v < ideal.front().num_variables(); ++v) {
    Poly e = univariate_eliminant(gb.generators, v);
    all_pure = all_pure && is_pure_power_of(e, v);
    diag.eliminants.push_back(to_string(e));
  }
  if (all_pure) {
    certified = true;
    count = standard_monomial_count(gb);
    diag.outcome = "every eliminant is a pure power: the point is the only singular point on this chart";
  } else {
    diag.outcome = "some eliminant is not a pure power: singular points other than the given one exist";
  }
  return diag;
}

inline ChartDiagnostic check_far_chart(const Poly& F, std::size_t chart, std::size_t point_chart) {
  ChartDiagnostic diag{chart, false, {}, {}};
  std::vector<Poly> ideal = dehomogenized_partials(F, chart);
  const auto& vars = ideal.front().variables();
  const auto where = ideal.front().index_of(F.variables()[point_chart]);
  ideal.push_back(Poly::variable(vars, *where));
  if (is_unit(ideal))
    diag.outcome = "no singular point with " + F.variables()[point_chart] + " = 0 on this chart";
  else
    diag.outcome = "singular points with " + F.variables()[point_chart] + " = 0 exist on this chart";
  return diag;
}

}  // namespace detail

/// Decides whether `point` is the unique singular point of the projective
/// hypersurface V(F) in CP^4.
///
/// The singular locus is cut out by the five partials of F; Euler's relation
/// d*F = sum x_i dF/dx_i makes F itself redundant. On the point's chart the
/// partials are dehomogenized and translated to the origin, and the point is
/// certified isolated and unique there when every univariate eliminant is a
/// pure power. Every other chart x_j = 1 is checked with the extra equation
/// x_c = 0 (c the point's chart), which covers exactly the singular points the
/// point's chart cannot see. Charts are checked concurrently; the report lists
/// them in chart order.
inline LocusReport unique_projective_singularity(const Poly& F_in, const std::vector<Rat>& point) {
  const Poly F = F_in.embed(x_variables());
  if (!F.is_homogeneous() || F.is_zero()) throw PreconditionError("F is not a nonzero homogeneous polynomial");
  if (F.degree() < 2) throw PreconditionError("F must have degree at least 2");
  if (point.size() != 5) throw PreconditionError("a point of CP^4 needs 5 coordinates");
  std::size_t chart = 5;
  for (std::size_t i = 0; i < 5 && chart == 5; ++i)
    if (point[i] != 0) chart = i;
  if (chart == 5) throw PreconditionError("the zero vector is not a projective point");
  std::vector<Rat> normalized(point);
  const Rat scale = point[chart];
  for (auto& c : normalized) c /= scale;
  if (F.evaluate(normalized) != 0) throw PreconditionError("the point does not lie on V(F)");

  LocusReport report;
  report.notes.push_back("singular locus generated by the five partials of F (Euler relation makes F redundant)");
  {
    std::vector<Rat> shift;
    for (std::size_t i = 0; i < 5; ++i)
      if (i != chart) shift.push_back(normalized[i]);
    report.chart_germ = translate(dehomogenize(F, F.variables()[chart]), shift);
  }

  std::optional<std::size_t> count;
  bool certified = false;
  auto local = std::async(std::launch::async, [&] {
    return detail::check_point_chart(F, chart, normalized, count, certified);
  });
  std::vector<std::future<ChartDiagnostic>> far;
  for (std::size_t j = 0; j < 5; ++j)
    if (j != chart)
      far.push_back(std::async(std::launch::async, [&F, j, chart] { return detail::check_far_chart(F, j, chart); }));

  bool far_clear = true;
  std::vector<ChartDiagnostic> diags(5);
  diags[chart] = local.get();
  for (std::size_t j = 0, k = 0; j < 5; ++j) {
    if (j == chart) continue;
    diags[j] = far[k++].get();
    diags[j].contains_point = normalized[j] != 0;
    far_clear = far_clear && diags[j].outcome.rfind("no singular point", 0) == 0;
  }
  report.chart_diagnostics = std::move(diags);
  report.is_unique_at_point = certified && far_clear;
  if (report.is_unique_at_point) {
    report.milnor_number_at_point = count;
    report.notes.push_back(
        "count taken from the chart ideal (F, grad F); it equals the Milnor number for quasihomogeneous germs such as A_k");
  }
  return report;
}

/// (g, dg/dx_1, ..., dg/dx_n) is the unit ideal.
inline bool is_smooth_affine_curve(const Poly& g) {
  if (g.is_constant()) throw PreconditionError("a constant does not define a curve");
  std::vector<Poly> ideal{g};
  for (auto& p : gradient(g)) ideal.push_back(std::move(p));
  return detail::is_unit(ideal);
}

/// (g, grad g) vanishes only at the origin (and does vanish there).
inline bool singular_only_at_origin(const Poly& g) {
  if (g.is_constant()) throw PreconditionError("a constant does not define a hypersurface");
  std::vector<Poly> ideal{g};
  for (auto& p : gradient(g)) ideal.push_back(std::move(p));
  const GroebnerBasis gb = buchberger(ideal, MonomialOrder::grevlex(g.num_variables()));
  if (gb.is_unit_ideal() || !is_zero_dimensional(gb)) return false;
  for (std::size_t v = 0; v < g.num_variables(); ++v)
    if (!is_pure_power_of(univariate_eliminant(gb.generators, v), v)) return false;
  return true;
}

/// Certificate that the origin is an isolated critical point of a germ,
/// carrying its local Milnor number dim O_0 / J_f.
struct GermLocus {
  bool isolated = false;
  bool jacobian_supported_at_origin = false;  // every critical point is the origin
  std::optional<std::size_t> milnor_number;
  std::size_t truncation_order = 0;           // N with J + m^N = J + m^(N+1), 0 if unused
  std::string method;
};

namespace detail {

inline std::vector<Poly> maximal_ideal_power(const std::vector<std::string>& vars, unsigned N) {
  std::vector<Poly> out;
  const std::size_t n = vars.size();
  Exponents e(n, 0);
  // enumerate exponent vectors of total degree N
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (i + 1 == n) {
      e[i] = left;
      out.push_back(Poly::monomial(vars, e, Rat(1)));
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      e[i] = k;
      rec(i + 1, left - k);
    }
  };
  rec(0, N);
  return out;
}

}  // namespace detail

/// Local Milnor number at the origin. The counts c_N = dim Q[x]/(J + m^N) are
/// nondecreasing and bounded by the local Milnor number; the first N with
/// c_N = c_{N+1} gives m^N ⊆ J locally (Nakayama), hence the local number.
/// No stabilization up to `max_order` means the critical point is not
/// isolated (or has Milnor number ≥ max_order). With `global_check`, the
/// Jacobian ideal is also tested for being supported at the origin alone;
/// that needs a full Groebner basis and can be slow for dense germs.
inline GermLocus local_milnor_certificate(const Poly& f, unsigned max_order = 32, bool global_check = false) {
  const std::size_t n = f.num_variables();
  if (n == 0) throw PreconditionError("germ has no variables");
  for (const auto& [e, c] : f.terms())
    if (total_degree(e) == 1) throw PreconditionError("germ has a nonzero linear part, so the origin is not critical");

  GermLocus cert;
  const std::vector<Poly> jac = gradient(f);
  std::size_t previous = 0;
  for (unsigned N = 1; N <= max_order && !cert.isolated; ++N) {
    // Terms of degree >= N already lie in m^N.
    std::vector<Poly> gens;
    for (const auto& g : jac) {
      Poly t(f.variables());
      for (const auto& [e, c] : g.terms())
        if (total_degree(e) < N) t.add_term(e, c);
      if (!t.is_zero()) gens.push_back(std::move(t));
    }
    for (auto& m : detail::maximal_ideal_power(f.variables(), N)) gens.push_back(std::move(m));
    const std::size_t c = *standard_monomial_count(buchberger(gens, MonomialOrder::grevlex(n)));
    if (N > 1 && c == previous) {
      cert.isolated = true;
      cert.milnor_number = c;
      cert.truncation_order = N - 1;
      cert.method = "local count dim Q[x]/(J + m^N) stabilized at N = " + std::to_string(N - 1);
    }
    previous = c;
  }
  if (!cert.isolated) {
    cert.method = "no stabilization of dim Q[x]/(J + m^N) up to N = " + std::to_string(max_order);
    return cert;
  }
  if (global_check) {
    const GroebnerBasis gb = buchberger(jac, MonomialOrder::grevlex(n));
    if (!gb.is_unit_ideal() && is_zero_dimensional(gb)) {
      bool pure = true;
      for (std::size_t v = 0; v < n && pure; ++v) pure = is_pure_power_of(univariate_eliminant(gb.generators, v), v);
      if (pure && standard_monomial_count(gb) != cert.milnor_number)
        throw std::logic_error("global and local Milnor counts disagree at an isolated critical point");
      cert.jacobian_supported_at_origin = pure;
    }
  }
  return cert;
}

}  // namespace hypersing

#endif  // HYPERSING_LOCUS_HPP
