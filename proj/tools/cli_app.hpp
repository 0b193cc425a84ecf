#ifndef HYPERSING_TOOLS_CLI_APP_HPP
#define HYPERSING_TOOLS_CLI_APP_HPP

// Command-line front end. Every invocation prints one JSON document
//   {"command", "status": "ok"|"error", "payload", "diagnostics": [...]}
// with sorted keys and integers/rationals as decimal strings.
// Exit codes: 0 ok, 1 domain error, 2 usage error.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hypersing/hypersing.hpp"

namespace hypersing::cli {

using json = nlohmann::json;

/// Domain failure that still carries a payload (verify-family stage failures).
struct ReportedFailure {
  json payload;
  std::vector<std::string> diagnostics;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline json to_json(const Int& v) { return v.get_str(); }
inline json to_json(const Rat& v) { return v.get_str(); }

inline json to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
    rows.push_back(std::move(row));
  }
  return rows;
}

inline json to_json(const ManifoldInvariants& t) {
  return {{"chi", to_json(t.chi)},
          {"dp1", to_json(t.dp1)},
          {"q", to_json(t.q)},
          {"q_basis_order", "(e2*, e1*)"},
          {"w2_spin", t.w2_spin},
          {"cube_x", to_json(t.cube_x)},
          {"ses",
           {{"boundary_image", {to_json(t.ses.boundary_image[0]), to_json(t.ses.boundary_image[1])}},
            {"quotient_lift", {to_json(t.ses.quotient_lift[0]), to_json(t.ses.quotient_lift[1])}}}},
          {"pairing_convention", t.pairing_convention}};
}

inline json to_json(const ClosedInvariants& c) {
  return {{"chi", to_json(c.chi)},
          {"p1", to_json(c.p1)},
          {"w2_spin", c.w2_spin},
          {"cube", to_json(c.cube)},
          {"pairing_convention", kPairingConvention}};
}

inline json to_json(const SingularityClass& c) {
  json j{{"tag", c.label()}};
  if (c.tag == SingularityTag::Ak) j["k"] = std::to_string(c.k);
  if (!c.reason.empty()) j["reason"] = c.reason;
  if (c.milnor_number) j["milnor_number"] = std::to_string(*c.milnor_number);
  if (c.link) j["link"] = c.link->name();
  json cert = json::array();
  for (const auto& ch : c.certificate) {
    json images = json::object();
    for (const auto& [v, p] : ch.images) images[v] = to_string(p);
    cert.push_back({{"description", ch.description}, {"images", images}});
  }
  j["certificate"] = cert;
  j["notes"] = c.notes;
  return j;
}

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) {
    cur.erase(0, cur.find_first_not_of(" \t"));
    cur.erase(cur.find_last_not_of(" \t") + 1);
    out.push_back(cur);
  }
  return out;
}

inline std::vector<Rat> parse_rationals(const std::string& text, std::size_t expected, const std::string& what) {
  std::vector<Rat> out;
  for (const auto& s : split(text, ',')) out.push_back(parse_rational(s));
  if (out.size() != expected)
    throw PreconditionError(what + " needs " + std::to_string(expected) + " comma-separated entries");
  return out;
}

inline std::int64_t parse_positive(const std::string& text, const std::string& what) {
  const Rat r = parse_rational(text);
  if (r.get_den() != 1 || r < 1 || !r.get_num().fits_slong_p()) throw PreconditionError(what + " must be a positive integer");
  return r.get_num().get_si();
}

/// "A:K" -> K
inline std::int64_t parse_singularity(const std::string& text) {
  if (text.size() < 3 || text.substr(0, 2) != "A:") throw PreconditionError("singularity must be written A:K, got '" + text + "'");
  return parse_positive(text.substr(2), "singularity index K");
}

/// "D,A:K" -> record
inline HypersurfaceRecord parse_record(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 2) throw PreconditionError("record must be written D,A:K, got '" + text + "'");
  return HypersurfaceRecord::make(parse_positive(parts[0], "degree D"), parse_singularity(parts[1]));
}

/// Four germ variables for recognition: --vars if given, else z1..z4 or the
/// x-block the polynomial lives in.
inline std::vector<std::string> germ_variables(const std::string& text, const std::string& vars_flag) {
  if (!vars_flag.empty()) return split(vars_flag, ',');
  const auto used = hypersing::detail::scan_variables(text);
  if (used.empty() || used.front()[0] == 'z') return z_variables();
  auto within = [&](std::vector<std::string> block) {
    return std::all_of(used.begin(), used.end(),
                       [&](const std::string& v) { return std::find(block.begin(), block.end(), v) != block.end(); });
  };
  if (within({"x1", "x2", "x3", "x4"})) return {"x1", "x2", "x3", "x4"};
  if (within({"x0", "x1", "x2", "x3"})) return {"x0", "x1", "x2", "x3"};
  throw PreconditionError("cannot choose 4 germ variables; pass --vars");
}

/// Lines "var = poly"; blank lines and lines starting with '#' are skipped.
inline CoordinateChange parse_substitution(const std::string& text, const std::vector<std::string>& vars) {
  CoordinateChange change{"user substitution", {}};
  std::istringstream in(text);
  std::string line;
  std::string described;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw PreconditionError("substitution line without '=': '" + line + "'");
    std::string lhs = line.substr(0, eq);
    lhs.erase(0, lhs.find_first_not_of(" \t"));
    lhs.erase(lhs.find_last_not_of(" \t") + 1);
    if (std::find(vars.begin(), vars.end(), lhs) == vars.end())
      throw PreconditionError("substitution target '" + lhs + "' is not a germ variable");
    Poly rhs = parse_poly(line.substr(eq + 1), vars);
    described += (described.empty() ? "" : ", ") + lhs + " -> " + to_string(rhs);
    change.images.insert_or_assign(lhs, std::move(rhs));
  }
  if (change.images.empty()) throw PreconditionError("substitution file has no entries");
  change.description = "user substitution " + described;
  return change;
}

inline std::string poly_text(const std::string& file, const std::string& expr) {
  if (!file.empty() && !expr.empty()) throw UsageError("--poly and --expr are mutually exclusive");
  if (file.empty() && expr.empty()) throw UsageError("one of --poly FILE or --expr TEXT is required");
  return file.empty() ? expr : read_file(file);
}

}  // namespace detail

inline json cmd_chern(std::int64_t d) {
  const ChernData c = total_chern_hypersurface(d);
  return {{"degree", std::to_string(d)},
          {"c1", to_json(c.c1)},
          {"c2", to_json(c.c2)},
          {"c3", to_json(c.c3)},
          {"chi", to_json(c.chi)},
          {"p1_coeff", to_json(c.p1_coeff)},
          {"spin", c.spin}};
}

inline json cmd_lattice(std::int64_t k) {
  const SkewForm s = milnor_lattice_Ak(k);
  const SkewNormalForm nf = skew_normal_form(s);
  json divisors = json::array();
  for (const auto& d : nf.hyperbolic_divisors) divisors.push_back(d.get_str());
  return {{"k", std::to_string(k)},
          {"matrix", to_json(s.matrix())},
          {"hyperbolic_divisors", divisors},
          {"hyperbolic_count", std::to_string(nf.hyperbolic_divisors.size())},
          {"radical_rank", std::to_string(nf.radical_rank)},
          {"transform", to_json(nf.transform)},
          {"link", link_from_form(nf).name()}};
}

inline json cmd_invariants(std::int64_t d, std::int64_t index, std::vector<std::string>& diags) {
  json j{{"degree", std::to_string(d)}, {"singularity", "A_" + std::to_string(index)}};
  if (index % 2 == 1) {
    j["kind"] = "boundary";
    j["invariants"] = to_json(assemble_boundary_invariants(d, (index - 1) / 2));
  } else {
    j["kind"] = "closed";
    j["invariants"] = to_json(assemble_closed_invariants(d, index / 2));
    diags.push_back("Milnor number of A_" + std::to_string(index) + " taken as " + std::to_string(index) +
                    " (local-algebra basis count)");
  }
  return j;
}

inline json record_json(const HypersurfaceRecord& r) {
  return {{"degree", std::to_string(r.degree)},
          {"singularity", "A_" + std::to_string(r.index)},
          {"mu", std::to_string(r.mu)},
          {"link", r.link.name()}};
}

inline json cmd_decide(const std::string& left, const std::string& right, std::vector<std::string>& diags) {
  const HypersurfaceRecord r1 = detail::parse_record(left);
  const HypersurfaceRecord r2 = detail::parse_record(right);
  const Verdict v = decide_homeomorphism(r1, r2);
  json j{{"left", record_json(r1)}, {"right", record_json(r2)}, {"outcome", to_string(v.outcome)}, {"reasons", v.reasons}};
  if (v.boundary_invariants)
    j["invariants"] = {{"left", to_json(v.boundary_invariants->first)}, {"right", to_json(v.boundary_invariants->second)}};
  if (v.closed_invariants)
    j["invariants"] = {{"left", to_json(v.closed_invariants->first)}, {"right", to_json(v.closed_invariants->second)}};
  if (v.witness) j["witness"] = {{"epsilon", std::to_string(v.witness->epsilon)}, {"m", to_json(v.witness->m)}};
  for (const auto& r : v.reasons)
    if (r.rfind("Milnor number of A_2k", 0) == 0) diags.push_back(r);
  return j;
}

inline json cmd_recognize(const std::string& text, const std::string& weights, const std::string& subst_file,
                          const std::string& vars_flag) {
  const auto vars = detail::germ_variables(text, vars_flag);
  Poly f = parse_poly(text, vars);
  json j{{"input", to_string(f)}, {"variables", vars}};
  std::vector<CoordinateChange> pre;
  if (!subst_file.empty()) {
    pre.push_back(detail::parse_substitution(detail::read_file(subst_file), vars));
    f = substitute(f, pre.back().images);
    j["substituted"] = to_string(f);
  }
  SingularityClass cls;
  if (weights.empty()) {
    cls = recognize(f);
  } else {
    const auto alpha = detail::parse_rationals(weights, 4, "--weights");
    const Weights w{alpha, Rat(1)};
    json wj = json::array();
    for (const auto& a : alpha) wj.push_back(a.get_str());
    j["weights"] = wj;
    cls = recognize_with_weights(f, w);
  }
  cls.certificate.insert(cls.certificate.begin(), pre.begin(), pre.end());
  j["classification"] = to_json(cls);
  try {
    j["mu_corank"] = to_json(classify_mu_corank(f));
  } catch (const Error& e) {
    j["mu_corank"] = {{"tag", "unavailable"}, {"reason", e.what()}};
  }
  return j;
}

inline json cmd_locus(const std::string& text, const std::string& point_text) {
  const Poly F = parse_poly(text, x_variables());
  const auto point = detail::parse_rationals(point_text, 5, "--point");
  const LocusReport r = unique_projective_singularity(F, point);
  json charts = json::array();
  for (const auto& c : r.chart_diagnostics)
    charts.push_back({{"chart", "x" + std::to_string(c.chart) + " = 1"},
                      {"contains_point", c.contains_point},
                      {"outcome", c.outcome},
                      {"eliminants", c.eliminants}});
  json pj = json::array();
  for (const auto& p : point) pj.push_back(p.get_str());
  json j{{"polynomial", to_string(F)},
         {"point", pj},
         {"is_unique_at_point", r.is_unique_at_point},
         {"charts", charts},
         {"notes", r.notes},
         {"chart_germ", to_string(r.chart_germ)}};
  if (r.milnor_number_at_point) j["milnor_number_at_point"] = std::to_string(*r.milnor_number_at_point);
  return j;
}

inline json cmd_verify_family(const std::string& family, const std::string& a, const std::string& b,
                              std::vector<std::string>& diags) {
  Family fam;
  if (family == "A") fam = Family::A;
  else if (family == "B") fam = Family::B;
  else throw UsageError("--family must be A or B");
  const FamilyReport rep = verify_family(fam, parse_rational(a), parse_rational(b));
  json stages = json::array();
  for (const auto& s : rep.stages) stages.push_back({{"name", s.name}, {"passed", s.passed}, {"detail", s.detail}});
  json j{{"family", to_string(fam)},
         {"a", to_json(rep.a)},
         {"b", to_json(rep.b)},
         {"F", to_string(rep.F)},
         {"F0", to_string(rep.F0)},
         {"stages", stages},
         {"passed", rep.passed()}};
  if (rep.locus) j["chart_germ"] = to_string(rep.locus->chart_germ);
  if (rep.mu_corank) j["mu_corank"] = to_json(*rep.mu_corank);
  if (rep.recognition) j["recognition"] = to_json(*rep.recognition);
  diags.insert(diags.end(), rep.diagnostics.begin(), rep.diagnostics.end());
  if (!rep.passed()) {
    std::vector<std::string> d = diags;
    d.push_back("stage '" + rep.first_failure()->name + "' failed: " + rep.first_failure()->detail);
    throw ReportedFailure{j, d};
  }
  return j;
}

inline json cmd_glue(const std::string& p_text, const std::string& l_text) {
  const Rat p = parse_rational(p_text);
  const Rat l = parse_rational(l_text);
  if (p.get_den() != 1 || l.get_den() != 1) throw PreconditionError("p and lambda must be integers");
  const GlueResult g = glue_normalize(p.get_num(), l.get_num());
  return {{"p", to_json(p.get_num())},
          {"lambda", to_json(l.get_num())},
          {"wall_congruence", true},
          {"b", to_json(g.b)},
          {"c", to_json(g.c)},
          {"p_after", to_json(g.p_after)},
          {"lambda_after", to_json(g.lambda_after)}};
}

inline int emit(std::ostream& out, const std::string& command, bool ok, json payload, std::vector<std::string> diags,
                int code) {
  json doc{{"command", command}, {"status", ok ? "ok" : "error"}, {"payload", std::move(payload)}, {"diagnostics", diags}};
  out << doc.dump(2) << "\n";
  return code;
}

/// Runs one invocation; `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{"Exact topology of hypersurfaces in CP^4 with one A_k singularity", "hypersing"};
  app.require_subcommand(1);

  std::string s1, s2, s3, s4;
  std::int64_t n = 0;

  auto* chern = app.add_subcommand("chern", "Chern data of a smooth degree-d hypersurface in CP^4");
  chern->add_option("--degree", n, "degree d >= 1")->required();

  auto* lattice = app.add_subcommand("lattice", "Milnor lattice of A_k, its skew normal form and link");
  lattice->add_option("--ak", n, "k >= 1")->required();

  auto* invariants = app.add_subcommand("invariants", "invariants of the smooth part (A_odd) or closed manifold (A_even)");
  invariants->add_option("--degree", n, "degree d >= 1")->required();
  invariants->add_option("--singularity", s1, "A:K")->required();

  auto* decide = app.add_subcommand("decide", "homeomorphism decision for two records D,A:K");
  decide->add_option("--left", s1, "D,A:K")->required();
  decide->add_option("--right", s2, "D,A:K")->required();

  std::string poly_file, expr;
  auto* recognize_cmd = app.add_subcommand("recognize", "A_k recognition of a germ in 4 variables");
  recognize_cmd->add_option("--poly", poly_file, "file holding the polynomial");
  recognize_cmd->add_option("--expr", expr, "inline polynomial");
  recognize_cmd->add_option("--weights", s1, "four rationals a1,a2,a3,a4 (weighted degree 1)");
  recognize_cmd->add_option("--subst", s2, "file of 'var = poly' lines applied first");
  recognize_cmd->add_option("--vars", s3, "germ variables, e.g. x1,x2,x3,x4");

  auto* locus = app.add_subcommand("locus", "is the point the unique singular point of V(F) in CP^4");
  locus->add_option("--poly", poly_file, "file holding F(x0..x4)");
  locus->add_option("--expr", expr, "inline F(x0..x4)");
  locus->add_option("--point", s1, "five rationals")->required();

  auto* family = app.add_subcommand("verify-family", "certificate chain for a cubic family member");
  family->add_option("--family", s1, "A or B")->required();
  family->add_option("--a", s2, "nonzero rational")->required();
  family->add_option("--b", s3, "nonzero rational")->required();

  auto* glue = app.add_subcommand("glue-normalize", "gluing parameters (b, c) killing (p, lambda)");
  glue->add_option("--p", s1, "integer p")->required();
  glue->add_option("--lambda", s2, "integer lambda")->required();

  const std::string command = args.empty() ? std::string() : args.front();
  auto usage = [&](const std::string& message) {
    CLI::App* sub = command.empty() ? nullptr : app.get_subcommand_no_throw(command);
    std::vector<std::string> diags{message, "usage:\n" + (sub ? sub->help() : app.help())};
    return emit(out, command, false, json::object(), diags, 2);
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    CLI::App* sub = command.empty() ? nullptr : app.get_subcommand_no_throw(command);
    out << (sub ? sub->help() : app.help());
    return 0;
  } catch (const CLI::ParseError& e) {
    return usage(e.what());
  }

  std::vector<std::string> diags;
  try {
    json payload;
    if (chern->parsed()) payload = cmd_chern(n);
    else if (lattice->parsed()) payload = cmd_lattice(n);
    else if (invariants->parsed()) payload = cmd_invariants(n, detail::parse_singularity(s1), diags);
    else if (decide->parsed()) payload = cmd_decide(s1, s2, diags);
    else if (recognize_cmd->parsed()) payload = cmd_recognize(detail::poly_text(poly_file, expr), s1, s2, s3);
    else if (locus->parsed()) payload = cmd_locus(detail::poly_text(poly_file, expr), s1);
    else if (family->parsed()) payload = cmd_verify_family(s1, s2, s3, diags);
    else payload = cmd_glue(s1, s2);
    return emit(out, command, true, std::move(payload), diags, 0);
  } catch (const UsageError& e) {
    return usage(e.what());
  } catch (const ReportedFailure& f) {
    return emit(out, command, false, f.payload, f.diagnostics, 1);
  } catch (const std::exception& e) {
    diags.push_back(e.what());
    return emit(out, command, false, json::object(), diags, 1);
  }
}

}  // namespace hypersing::cli

#endif  // HYPERSING_TOOLS_CLI_APP_HPP
