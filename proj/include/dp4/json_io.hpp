#pragma once

#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

#include "dp4/family.hpp"
#include "dp4/lines.hpp"
#include "dp4/monodromy.hpp"
#include "dp4/paper_examples.hpp"
#include "dp4/pencil.hpp"
#include "dp4/plane_curve.hpp"
#include "dp4/quintic.hpp"

namespace dp4 {

using json = nlohmann::ordered_json;

/// Directory of golden files: DP4_GOLDEN_DIR if set, else `fallback`.
inline std::string golden_dir(const std::string& fallback = "data/golden/v1") {
  if (const char* env = std::getenv("DP4_GOLDEN_DIR"); env && *env) return env;
  return fallback;
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw input_error(std::string("malformed JSON: ") + e.what());
  }
}

namespace io {

inline json to_json(const Rational& q) { return to_string(q); }

inline Rational rational_from(const json& j) {
  try {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
  } catch (const input_error&) {
    throw;
  } catch (const std::exception& e) {
    throw input_error(std::string("bad rational: ") + e.what());
  }
  throw input_error("rational must be a string \"p/q\" or an integer, got " + j.dump());
}

inline const json& field(const json& j, const std::string& key) {
  if (!j.is_object() || !j.contains(key)) throw input_error("missing field '" + key + "'");
  return j.at(key);
}

inline int int_from(const json& j) {
  if (!j.is_number_integer()) throw input_error("expected an integer, got " + j.dump());
  return j.get<int>();
}

inline json to_json(const BinaryForm& f) {
  json c = json::array();
  for (const auto& x : f.coeffs()) c.push_back(to_json(x));
  return {{"degree", f.degree()}, {"coeffs", c}};
}

inline BinaryForm form_from(const json& j) {
  const int d = int_from(field(j, "degree"));
  const json& c = field(j, "coeffs");
  if (d < 0 || !c.is_array() || static_cast<int>(c.size()) != d + 1) throw input_error("binary form needs degree+1 coefficients");
  BinaryForm f(d);
  for (int i = 0; i <= d; ++i) f[i] = rational_from(c[static_cast<std::size_t>(i)]);
  return f;
}

inline json to_json(const BiForm& F) {
  json grid = json::array();
  for (const auto& r : F.rows()) {
    json row = json::array();
    for (const auto& x : r.coeffs()) row.push_back(to_json(x));
    grid.push_back(row);
  }
  return {{"bidegree", {F.m(), F.n()}}, {"twist", F.twist()}, {"grid", grid}};
}

inline json to_json(const RationalMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    out.push_back(row);
  }
  return out;
}

inline RationalMatrix matrix_from(const json& j, std::size_t n) {
  if (!j.is_array() || j.size() != n) throw input_error("expected a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
  RationalMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!j[r].is_array() || j[r].size() != n) throw input_error("matrix row has wrong length");
    for (std::size_t c = 0; c < n; ++c) m(r, c) = rational_from(j[r][c]);
  }
  return m;
}

inline json to_json(const FormMatrix& m) {
  json out = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& f : row) r.push_back(to_json(f));
    out.push_back(r);
  }
  return out;
}

inline FormMatrix form_matrix_from(const json& j) {
  if (!j.is_array() || j.size() != 5) throw input_error("expected a 5x5 matrix of binary forms");
  FormMatrix m;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != 5) throw input_error("matrix row has wrong length");
    std::vector<BinaryForm> r;
    for (const auto& f : row) r.push_back(form_from(f));
    m.push_back(std::move(r));
  }
  return m;
}

inline json to_json(const FamilySpec& s) {
  return {{"d", s.d}, {"e", s.e}, {"A1", to_json(s.A[0])}, {"A2", to_json(s.A[1])}};
}

/// Either explicit {"d","e","A1","A2"} or a complete-intersection presentation:
/// {"presentation":"ci_p1xp4","m":[m1,m2],"forms":[Q1,Q2]} with 5x5 matrices of
/// binary forms, or {"presentation":"ci_p1xp5","ell":[6 linear forms],"forms":[Q1,Q2]}
/// with constant 6x6 matrices.
inline FamilySpec family_from(const json& j) {
  if (j.is_object() && j.contains("presentation")) {
    const std::string kind = field(j, "presentation").get<std::string>();
    const json& forms = field(j, "forms");
    if (!forms.is_array() || forms.size() != 2) throw input_error("a complete intersection needs two quadric forms");
    if (kind == "ci_p1xp4") {
      CompleteIntersectionP4 ci;
      const json& m = field(j, "m");
      if (!m.is_array() || m.size() != 2) throw input_error("'m' must list two bidegrees");
      for (std::size_t k = 0; k < 2; ++k) {
        ci.m[k] = int_from(m[k]);
        ci.Q[k] = form_matrix_from(forms[k]);
      }
      return family_from_ci(ci);
    }
    if (kind == "ci_p1xp5") {
      CompleteIntersectionP5 ci;
      const json& ell = field(j, "ell");
      if (!ell.is_array() || ell.size() != 6) throw input_error("'ell' must list six linear forms");
      for (std::size_t i = 0; i < 6; ++i) ci.ell[i] = form_from(ell[i]);
      for (std::size_t k = 0; k < 2; ++k) ci.Q[k] = matrix_from(forms[k], 6);
      return family_from_ci(ci);
    }
    throw input_error("unknown presentation '" + kind + "'");
  }
  FamilySpec s;
  const json &d = field(j, "d"), &e = field(j, "e");
  if (!d.is_array() || d.size() != 5 || !e.is_array() || e.size() != 2) throw input_error("'d' needs 5 entries and 'e' needs 2");
  for (std::size_t i = 0; i < 5; ++i) s.d[i] = int_from(d[i]);
  for (std::size_t k = 0; k < 2; ++k) s.e[k] = int_from(e[k]);
  s.A[0] = form_matrix_from(field(j, "A1"));
  s.A[1] = form_matrix_from(field(j, "A2"));
  validate(s);
  return s;
}

inline json to_json(const CompleteIntersectionP4& ci) {
  return {{"presentation", "ci_p1xp4"}, {"m", ci.m}, {"forms", {to_json(ci.Q[0]), to_json(ci.Q[1])}}};
}

inline json to_json(const CompleteIntersectionP5& ci) {
  json ell = json::array();
  for (const auto& l : ci.ell) ell.push_back(to_json(l));
  return {{"presentation", "ci_p1xp5"}, {"ell", ell}, {"forms", {to_json(ci.Q[0]), to_json(ci.Q[1])}}};
}

inline SymmetricPencil pencil_from(const json& j) { return {matrix_from(field(j, "P"), 5), matrix_from(field(j, "Q"), 5)}; }

inline json to_json(const SymmetricPencil& p) { return {{"P", to_json(p.P)}, {"Q", to_json(p.Q)}}; }

/// Polynomial as a list of {"coeff", "exponents"} terms.
inline json to_json(const MPoly& p, std::size_t nvars) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) {
    std::vector<int> ex(e.begin(), e.end());
    ex.resize(std::max(ex.size(), nvars), 0);
    terms.push_back({{"coeff", to_json(c)}, {"exponents", ex}});
  }
  return terms;
}

inline MPoly poly_from(const json& terms, std::size_t nvars) {
  if (!terms.is_array()) throw input_error("polynomial terms must be an array");
  MPoly p;
  for (const auto& t : terms) {
    const json& ex = field(t, "exponents");
    if (!ex.is_array() || ex.size() != nvars) throw input_error("exponent vector has wrong length");
    MPoly::Exponents e;
    for (const auto& x : ex) {
      const int k = int_from(x);
      if (k < 0) throw input_error("negative exponent");
      e.push_back(k);
    }
    p += MPoly::monomial(e, rational_from(field(t, "coeff")));
  }
  return p;
}

/// Plane curve {"degree": d, "terms": [...]} in (x, y, z).
inline PlaneCurve curve_from(const json& j) { return PlaneCurve(poly_from(field(j, "terms"), 3), int_from(field(j, "degree"))); }

inline json to_json(const PlaneCurve& c) { return {{"degree", c.degree}, {"terms", to_json(c.F, 3)}}; }

inline std::vector<PlanePoint> points_from(const json& j) {
  if (!j.is_array()) throw input_error("divisor must be an array of points");
  std::vector<PlanePoint> out;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 3) throw input_error("plane points have three coordinates");
    out.push_back({rational_from(p[0]), rational_from(p[1]), rational_from(p[2])});
  }
  return out;
}

inline json to_json(const std::vector<PlanePoint>& pts) {
  json out = json::array();
  for (const auto& p : pts) out.push_back({to_json(p[0]), to_json(p[1]), to_json(p[2])});
  return out;
}

inline json to_json(const ConicBundleSpec& c) {
  json a = json::array();
  for (const auto& row : c.A) {
    json r = json::array();
    for (const auto& x : row) r.push_back(to_json(x, 4));
    a.push_back(r);
  }
  return {{"variables", {"u", "v", "s", "t"}}, {"A", a}};
}

}  // namespace io

inline json lines_report() {
  const LineConfiguration cfg = lines16();
  json out;
  json lines = json::array();
  for (const auto& c : cfg.lines) lines.push_back({{"name", line_name(c)}, {"class", c}});
  out["lines"] = lines;
  json inc = json::array();
  for (const auto& row : cfg.incidence) inc.push_back(row);
  out["incidence"] = inc;
  json parts = json::array();
  for (std::size_t i = 0; i < cfg.partitions.size(); ++i) {
    json sides = json::array();
    for (const auto& side : cfg.partitions[i].sides) {
      json pairs = json::array();
      for (const auto& [a, b] : side.pairs)
        pairs.push_back({line_name(cfg.lines[static_cast<std::size_t>(a)]), line_name(cfg.lines[static_cast<std::size_t>(b)])});
      sides.push_back({{"conic", side.conic}, {"pairs", pairs}});
    }
    parts.push_back({{"index", i + 1}, {"sides", sides}});
  }
  out["partitions"] = parts;
  const WeylGroup& w = weyl_group(cfg);
  out["group"] = {{"order", w.elements.size()},
                  {"kernel_order", w.kernel.size()},
                  {"quotient_order", w.quotient_order},
                  {"s5_order", w.s5.size()},
                  {"no_intermediate_subgroup", no_intermediate_subgroup(cfg)}};
  json spec = json::object();
  for (const auto& [e, m] : incidence_spectrum(cfg)) spec[std::to_string(e)] = m;
  int degree = 0;
  for (int v : cfg.incidence[0]) degree += v;
  out["graph"] = {{"degree", degree}, {"triangle_free", triangle_free(cfg)}, {"spectrum", spec}};
  return out;
}

inline json moduli_json(const ModuliPoint& m) {
  return {{"coords", {io::to_json(m.coords[0]), io::to_json(m.coords[1]), io::to_json(m.coords[2])}}, {"chart", m.chart}};
}

inline json pencil_report(const SymmetricPencil& pencil) {
  const BinaryForm f = spectral_quintic(pencil);
  json out;
  out["spectral"] = io::to_json(f);
  json profile = json::array();
  if (!f.is_zero())
    for (const auto& r : degeneracy_profile(pencil))
      profile.push_back({{"factor", io::to_json(r.factor)}, {"multiplicity", r.multiplicity}, {"corank", r.corank}});
  out["profile"] = profile;
  out["label"] = f.is_zero() ? std::string("outside-U") : to_string(classify_profile(degeneracy_profile(pencil)));
  const bool in_u = !f.is_zero() && stability_classify(f) != StabilityLabel::unstable;
  out["moduli"] = in_u ? moduli_json(moduli_point(f)) : json(nullptr);
  return out;
}

/// Invariants of a binary quintic. With normalize, the moduli entry is the
/// canonical representative in P(1,2,3); otherwise the raw triple (J4, J8, J12).
inline json quintic_report(const BinaryForm& f, bool normalize) {
  if (f.degree() != 5) throw input_error("expected a binary quintic, got degree " + std::to_string(f.degree()));
  const InvariantVector v = invariants(f);
  json out{{"J4", io::to_json(v.J4)}, {"J8", io::to_json(v.J8)}, {"J12", io::to_json(v.J12)}, {"J18", io::to_json(v.J18)}};
  const StabilityLabel st = f.is_zero() ? StabilityLabel::unstable : stability_classify(f);
  if (!normalize) out["moduli"] = {io::to_json(v.J4), io::to_json(v.J8), io::to_json(v.J12)};
  else out["moduli"] = st == StabilityLabel::unstable ? json(nullptr) : moduli_json(moduli_point(f));
  out["stability"] = to_string(st);
  out["discriminant"] = io::to_json(discriminant(f));
  return out;
}

inline json scan_report(int max_h) {
  if (max_h < 0) throw input_error("--max must be non-negative");
  json rows = json::array();
  for (int h = 0; h <= max_h; h += 2) {
    const auto s = height_bounds_scan(h);
    auto pairs = [](const std::vector<std::pair<int, int>>& v) {
      json a = json::array();
      for (const auto& [x, n] : v) a.push_back({{"a", x}, {"n", n}});
      return a;
    };
    json genera = json::array();
    for (const auto& [a, n] : s.irreducible) genera.push_back(arithmetic_genus(spectral_class_for(h, a).cls));
    rows.push_back({{"h", h},
                    {"reduced", pairs(s.reduced)},
                    {"irreducible", pairs(s.irreducible)},
                    {"admissible", !s.reduced.empty()},
                    {"irreducible_admissible", !s.irreducible.empty()},
                    {"genera", genera}});
  }
  return rows;
}

inline json family_report(const FamilySpec& spec) {
  const int h = height(spec);
  const BiForm F = spectral_form(spec);
  json out;
  out["family"] = io::to_json(spec);
  out["height"] = h;
  out["spectral"] = io::to_json(F);
  const auto sc = spectral_class(spec);
  out["spectral_class"] = {{"a", sc.a},
                           {"n", sc.cls.n},
                           {"alpha", sc.cls.alpha},
                           {"beta", sc.cls.beta},
                           {"genus", arithmetic_genus(sc.cls)},
                           {"reduced_range", sc.reduced_range},
                           {"irreducible_range", sc.irreducible_range}};
  const auto disc = discriminant_of(F);
  out["discriminant"] = {{"degree", disc.degree}, {"square_free", disc.g1}, {"singular_fibers", disc.singular_fibers}, {"form", io::to_json(disc.delta)}};
  const auto g = genericity_of(F, h);
  json gen{{"G1'", g.g1}, {"rational_factor_found", g.rational_factor_found}, {"irreducible", g.irreducible}, {"G2'", to_string(g.g2)}};
  if (g.witness_fiber) gen["witness"] = {{"s", io::to_json(*g.witness_fiber)}, {"factor_degrees", g.witness_degrees}};
  if (g.factor) gen["factor"] = io::to_json(*g.factor);
  out["genericity"] = gen;
  const auto dims = dimension_report(h);
  out["dimensions"] = {{"moduli", dims.moduli_dimension},
                       {"linear_system", dims.linear_system_dimension},
                       {"expected", dims.expected_dimension},
                       {"map_degree", dims.map_degree}};
  json pulls = json::array();
  for (const auto& p : invariant_pullbacks(F)) pulls.push_back({{"d", p.d}, {"degree", p.predicted}, {"affine_degree", p.affine_degree}});
  out["invariant_pullbacks"] = pulls;
  return out;
}

inline json example_json(const BuiltExample& ex) {
  json out{{"name", ex.name}, {"seed", ex.seed}, {"attempts", ex.attempts}, {"expected_height", ex.expected_height}};
  if (ex.family) out["family"] = io::to_json(*ex.family);
  if (ex.conic) {
    out["conic_bundle"] = io::to_json(*ex.conic);
    const auto r = conic_identity_report(*ex.conic);
    out["discriminant_curve"] = io::to_json(r.discriminant_curve);
  }
  json checks = json::array();
  for (const auto& c : verify_example(ex)) checks.push_back({{"check", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  out["checks"] = checks;
  return out;
}

}  // namespace dp4
