#ifndef HYPERSING_CLASSIFIER_HPP
#define HYPERSING_CLASSIFIER_HPP

#include <cstdint>
#include <future>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hypersing/chern.hpp"
#include "hypersing/error.hpp"
#include "hypersing/locus.hpp"
#include "hypersing/milnor_lattice.hpp"
#include "hypersing/parse.hpp"
#include "hypersing/recognition.hpp"
#include "hypersing/surgery.hpp"

namespace hypersing {

/// Rank of H2 of the smooth part of a degree-d hypersurface with one
/// A_{2k+1} point: 2 when 2d < k + 5, else 1.
inline int h2_rank(std::int64_t d, std::int64_t k) {
  if (d < 1) throw PreconditionError("degree must be at least 1");
  if (k < 0) throw PreconditionError("k must be nonnegative");
  return 2 * d < k + 5 ? 2 : 1;
}

inline bool is_square_free(std::int64_t d) {
  if (d < 1) throw PreconditionError("square-freeness needs d >= 1");
  for (std::int64_t p = 2; p * p <= d; ++p) {
    if (d % (p * p) == 0) return false;
  }
  return true;
}

/// q in the basis (a + m·b, b) with the lift slot first: diag(d, 0).
inline IntMatrix normalized_q(std::int64_t d) {
  if (!is_square_free(d))
    throw PreconditionError("d = " + std::to_string(d) + " is not square-free; the q-form normalization does not apply");
  IntMatrix q(2, 2);
  q(0, 0) = Int(d);
  return q;
}

/// Invariants of the smooth part for an A_{2k+1} point (boundary S2xS3).
inline ManifoldInvariants assemble_boundary_invariants(std::int64_t d, std::int64_t k) {
  if (d < 1) throw PreconditionError("degree must be at least 1");
  if (k < 0) throw PreconditionError("k must be nonnegative for A_{2k+1}");
  const std::int64_t mu = 2 * k + 1;
  if (link_of_Ak(mu).tag != LinkTag::S2xS3)
    throw PreconditionError("link of A_" + std::to_string(mu) + " is not S2xS3");
  if (h2_rank(d, k) != 2)
    throw PreconditionError("h2_rank = 1 for d = " + std::to_string(d) + ", k = " + std::to_string(k) +
                            " (needs 2d < k + 5)");
  ManifoldInvariants t;
  t.q = normalized_q(d);
  t.chi = chi_smooth_part(d, mu);
  t.dp1 = p1_smooth_part(d) * d;
  t.w2_spin = is_spin_smooth_part(d);
  t.cube_x = d;
  return t;
}

/// Invariants of N = M ∪ D^6 for an A_2k point (boundary S5).
struct ClosedInvariants {
  Int chi;
  Int p1;
  bool w2_spin = false;
  Int cube;
  friend bool operator==(const ClosedInvariants&, const ClosedInvariants&) = default;
};

inline ClosedInvariants assemble_closed_invariants(std::int64_t d, std::int64_t k) {
  if (d < 1) throw PreconditionError("degree must be at least 1");
  if (k < 1) throw PreconditionError("k must be >= 1 for A_{2k}");
  if (link_of_Ak(2 * k).tag != LinkTag::S5) throw PreconditionError("link of A_" + std::to_string(2 * k) + " is not S5");
  ClosedInvariants c;
  c.chi = chi_smooth_part(d, 2 * k) + 1;  // the 6-disk adds one even cell
  c.p1 = p1_smooth_part(d) * d;
  c.w2_spin = is_spin_smooth_part(d);
  c.cube = d;
  return c;
}

/// A degree-d hypersurface in CP^4 with one A_index point.
struct HypersurfaceRecord {
  std::int64_t degree = 0;
  std::int64_t index = 0;
  std::int64_t mu = 0;
  LinkType link;

  static HypersurfaceRecord make(std::int64_t d, std::int64_t index) {
    if (d < 1) throw PreconditionError("degree must be at least 1");
    if (index < 1) throw PreconditionError("A_k needs k >= 1");
    return {d, index, index, link_of_Ak(index)};
  }

  void validate() const {
    if (degree < 1) throw PreconditionError("degree must be at least 1");
    if (index < 1) throw PreconditionError("A_k needs k >= 1");
    if (mu != index) throw PreconditionError("Milnor number of A_" + std::to_string(index) + " must be " + std::to_string(index));
    if (!(link == link_of_Ak(index))) throw PreconditionError("link does not match A_" + std::to_string(index));
  }

  std::string label() const { return "d=" + std::to_string(degree) + ", A_" + std::to_string(index); }
};

enum class Outcome { Homeomorphic, NotHomeomorphic, NotApplicable };

inline std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Homeomorphic: return "Homeomorphic";
    case Outcome::NotHomeomorphic: return "NotHomeomorphic";
    default: return "NotApplicable";
  }
}

struct Verdict {
  Outcome outcome = Outcome::NotApplicable;
  std::vector<std::string> reasons;
  std::optional<std::pair<ManifoldInvariants, ManifoldInvariants>> boundary_invariants;
  std::optional<std::pair<ClosedInvariants, ClosedInvariants>> closed_invariants;
  std::optional<BaseChange> witness;
};

namespace detail {

inline std::vector<std::string> odd_hypothesis_failures(const HypersurfaceRecord& r) {
  std::vector<std::string> out;
  const std::int64_t k = (r.index - 1) / 2;
  if (r.link.tag != LinkTag::S2xS3) out.push_back(r.label() + ": link is not S2xS3");
  if (h2_rank(r.degree, k) != 2)
    out.push_back(r.label() + ": h2_rank = 1 (2d >= k + 5 with k = " + std::to_string(k) + ")");
  if (!is_square_free(r.degree)) out.push_back(r.label() + ": degree is not square-free");
  return out;
}

}  // namespace detail

/// Homeomorphism decision for two hypersurfaces with one A_k point each.
/// Odd index: equal degree and Milnor number, under the rank-2, square-free
/// and S2xS3-link hypotheses. Even index: equal degree and k.
inline Verdict decide_homeomorphism(const HypersurfaceRecord& r1, const HypersurfaceRecord& r2) {
  r1.validate();
  r2.validate();
  Verdict v;
  const bool odd1 = r1.index % 2 == 1;
  const bool odd2 = r2.index % 2 == 1;
  if (odd1 != odd2) {
    v.outcome = Outcome::NotApplicable;
    v.reasons.push_back("only singularities of equal index parity are compared (" + r1.label() + " vs " + r2.label() + ")");
    return v;
  }
  if (odd1) {
    auto f1 = detail::odd_hypothesis_failures(r1);
    auto f2 = detail::odd_hypothesis_failures(r2);
    if (!f1.empty() || !f2.empty()) {
      v.outcome = Outcome::NotApplicable;
      v.reasons = std::move(f1);
      v.reasons.insert(v.reasons.end(), f2.begin(), f2.end());
      return v;
    }
    const bool same = r1.degree == r2.degree && r1.mu == r2.mu;
    auto t1 = assemble_boundary_invariants(r1.degree, (r1.index - 1) / 2);
    auto t2 = assemble_boundary_invariants(r2.degree, (r2.index - 1) / 2);
    v.witness = tuples_equivalent(t1, t2);
    if (v.witness.has_value() != same)
      throw std::logic_error("invariant-tuple comparison disagrees with the degree/Milnor-number comparison");
    v.boundary_invariants = std::make_pair(std::move(t1), std::move(t2));
    v.outcome = same ? Outcome::Homeomorphic : Outcome::NotHomeomorphic;
    if (same) {
      v.reasons.push_back("d1 = d2 = " + std::to_string(r1.degree) + " and mu1 = mu2 = " + std::to_string(r1.mu));
    } else {
      if (r1.degree != r2.degree) v.reasons.push_back("degrees differ: " + std::to_string(r1.degree) + " vs " + std::to_string(r2.degree));
      if (r1.mu != r2.mu) v.reasons.push_back("Milnor numbers differ: " + std::to_string(r1.mu) + " vs " + std::to_string(r2.mu));
    }
    return v;
  }
  const std::int64_t k1 = r1.index / 2;
  const std::int64_t k2 = r2.index / 2;
  const bool same = r1.degree == r2.degree && k1 == k2;
  auto c1 = assemble_closed_invariants(r1.degree, k1);
  auto c2 = assemble_closed_invariants(r2.degree, k2);
  if ((c1 == c2) != same) throw std::logic_error("closed invariants disagree with the degree/k comparison");
  v.closed_invariants = std::make_pair(std::move(c1), std::move(c2));
  v.outcome = same ? Outcome::Homeomorphic : Outcome::NotHomeomorphic;
  v.reasons.push_back("Milnor number of A_2k taken as 2k (local-algebra basis count)");
  if (same) {
    v.reasons.push_back("d1 = d2 = " + std::to_string(r1.degree) + " and k1 = k2 = " + std::to_string(k1));
  } else {
    if (r1.degree != r2.degree) v.reasons.push_back("degrees differ: " + std::to_string(r1.degree) + " vs " + std::to_string(r2.degree));
    if (k1 != k2) v.reasons.push_back("k differs: " + std::to_string(k1) + " vs " + std::to_string(k2));
  }
  return v;
}

// ---------------------------------------------------------------------------
// Cubic families with one A_5 point at [1,0,0,0,0]

enum class Family { A, B };

inline std::string to_string(Family f) { return f == Family::A ? "A" : "B"; }

struct FamilyStage {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct FamilyReport {
  Family family = Family::A;
  Rat a, b;
  Poly F;
  Poly F0;  // the cubic surface part
  std::vector<FamilyStage> stages;
  std::optional<LocusReport> locus;
  std::optional<SingularityClass> mu_corank;
  std::optional<SingularityClass> recognition;
  std::vector<std::string> diagnostics;

  bool passed() const {
    if (stages.empty()) return false;
    for (const auto& s : stages)
      if (!s.passed) return false;
    return true;
  }
  const FamilyStage* first_failure() const {
    for (const auto& s : stages)
      if (!s.passed) return &s;
    return nullptr;
  }
};

namespace detail {

inline Poly family_polynomial(Family fam, const Rat& a, const Rat& b) {
  const auto vars = x_variables();
  auto x = [&](std::size_t i) { return Poly::variable(vars, i); };
  if (fam == Family::A)
    return x(0) * (x(4) * x(4) + x(1) * x(2)) + x(1) * x(3) * (x(1) + a * x(3)) + b * x(2).pow(3);
  return x(0) * (x(2) * x(2) - x(1) * x(3)) + a * x(1).pow(3) + b * x(3).pow(3) + x(1) * x(4) * x(4);
}

}  // namespace detail

/// Runs the certificate chain for one member of a family: locus uniqueness,
/// the curve hypotheses on the cubic surface part, the Milnor-number/corank
/// classification, and (family B) recognition after x3 -> x3 + x4^2.
/// Stage failures are reported, not thrown.
inline FamilyReport verify_family(Family fam, const Rat& a, const Rat& b) {
  if (a == 0 || b == 0) throw PreconditionError("family parameters must satisfy a != 0 and b != 0");
  FamilyReport rep;
  rep.family = fam;
  rep.a = a;
  rep.b = b;
  rep.F = detail::family_polynomial(fam, a, b);
  const auto vars = x_variables();
  const Poly x4sq = Poly::variable(vars, 4) * Poly::variable(vars, 4);
  rep.F0 = rep.F - (fam == Family::A ? Poly::variable(vars, 0) : Poly::variable(vars, 1)) * x4sq;
  rep.F0 = rep.F0.embed({"x0", "x1", "x2", "x3"});
  if (fam == Family::A)
    rep.diagnostics.push_back("cubic surface part taken as F0 = F - x0*x4^2 (homogeneous of degree 3)");

  auto run = [&](const std::string& name, auto&& body) {
    FamilyStage st{name, false, {}};
    try {
      st.detail = body();
      st.passed = true;
    } catch (const std::exception& e) {
      st.detail = e.what();
    }
    rep.stages.push_back(std::move(st));
  };

  auto curves = std::async(std::launch::async, [&]() -> std::string {
    std::vector<std::pair<std::string, bool>> checks;
    if (fam == Family::A) {
      checks.emplace_back("F0(0,1,x2,x3) smooth", is_smooth_affine_curve(specialize(rep.F0, {{"x0", 0}, {"x1", 1}})));
      checks.emplace_back("F0(0,x1,1,x3) smooth", is_smooth_affine_curve(specialize(rep.F0, {{"x0", 0}, {"x2", 1}})));
      checks.emplace_back("F0(0,x1,x2,1) smooth", is_smooth_affine_curve(specialize(rep.F0, {{"x0", 0}, {"x3", 1}})));
    } else {
      checks.emplace_back("F0(1,0,x2,x3) singular only at (0,0)",
                          singular_only_at_origin(specialize(rep.F0, {{"x0", 1}, {"x1", 0}})));
      checks.emplace_back("F0(x0,0,1,x3) smooth", is_smooth_affine_curve(specialize(rep.F0, {{"x1", 0}, {"x2", 1}})));
      checks.emplace_back("F0(x0,0,x2,1) smooth", is_smooth_affine_curve(specialize(rep.F0, {{"x1", 0}, {"x3", 1}})));
    }
    std::string detail;
    for (const auto& [what, ok] : checks) {
      if (!ok) throw DegenerateError("curve hypothesis fails: " + what);
      detail += (detail.empty() ? "" : "; ") + what;
    }
    return detail;
  });

  run("unique singular point", [&]() -> std::string {
    LocusReport lr = unique_projective_singularity(rep.F, {Rat(1), Rat(0), Rat(0), Rat(0), Rat(0)});
    rep.locus = lr;
    if (!lr.is_unique_at_point) throw DegenerateError("[1,0,0,0,0] is not certified as the unique singular point");
    return "[1,0,0,0,0] is the unique singular point; chart count " + std::to_string(*lr.milnor_number_at_point);
  });
  run("curve hypotheses", [&] { return curves.get(); });

  run("Milnor number and corank", [&]() -> std::string {
    if (!rep.locus) throw DegenerateError("no chart germ (locus stage failed)");
    const GermLocus cert = local_milnor_certificate(rep.locus->chart_germ);
    SingularityClass cls = classify_mu_corank(rep.locus->chart_germ, cert);
    rep.mu_corank = cls;
    if (!cls.is_Ak(5)) throw DegenerateError("germ classified as " + cls.label() + ", expected A_5");
    return "A_5 via " + cert.method;
  });

  if (fam == Family::B) {
    run("recognition after x3 -> x3 + x4^2", [&]() -> std::string {
      if (!rep.locus) throw DegenerateError("no chart germ (locus stage failed)");
      const Poly& germ = rep.locus->chart_germ;
      const auto& gv = germ.variables();
      Poly shifted = Poly::variable(gv, 2) + Poly::variable(gv, 3) * Poly::variable(gv, 3);
      const Poly moved = substitute(germ, {{"x3", shifted}});
      const Weights w{{Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(1, 6)}, Rat(1)};
      SingularityClass cls = recognize_with_weights(moved, w);
      cls.certificate.insert(cls.certificate.begin(), CoordinateChange{"x3 -> x3 + x4^2", {{"x3", shifted}}});
      rep.recognition = cls;
      if (!cls.is_Ak(5)) throw DegenerateError("recognition gave " + cls.label() + ": " + cls.reason);
      return "A_5 with weights (1/2, 1/2, 1/2, 1/6) on (x1, x2, x3, x4)";
    });
  }

  run("A_5 with link S2xS3", [&]() -> std::string {
    if (!rep.mu_corank || !rep.locus) throw DegenerateError("earlier stages did not classify the germ");
    if (rep.mu_corank->milnor_number != std::optional<std::size_t>(5)) throw DegenerateError("Milnor number is not 5");
    if (rep.locus->milnor_number_at_point != std::optional<std::size_t>(5))
      throw DegenerateError("chart count disagrees with the Milnor number");
    if (!rep.mu_corank->link || rep.mu_corank->link->tag != LinkTag::S2xS3) throw DegenerateError("link is not S2xS3");
    return "A_5, mu = 5, link S2xS3";
  });
  return rep;
}

}  // namespace hypersing

#endif  // HYPERSING_CLASSIFIER_HPP
