#pragma once

#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dp4/chow.hpp"
#include "dp4/json_io.hpp"

namespace dp4 {

enum class CheckStatus { pass, fail, inconclusive };

inline std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

struct CheckResult {
  int id = 0;
  std::string name;
  std::string anchor;
  CheckStatus status = CheckStatus::inconclusive;
  double seconds = 0;
  std::string details;
};

struct VerificationReport {
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (c.status != CheckStatus::pass) return false;
    return !checks.empty();
  }
};

namespace detail {

/// Accumulates sub-check failures into one verdict with a readable trail.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++total_;
    if (!ok) failures_.push_back(what);
  }
  CheckStatus status() const { return failures_.empty() ? CheckStatus::pass : CheckStatus::fail; }
  std::string summary(const std::string& passed_note) const {
    if (failures_.empty()) return passed_note;
    std::ostringstream os;
    os << failures_.size() << "/" << total_ << " sub-checks failed:";
    for (std::size_t i = 0; i < failures_.size() && i < 5; ++i) os << " [" << failures_[i] << "]";
    return os.str();
  }

 private:
  int total_ = 0;
  std::vector<std::string> failures_;
};

inline std::vector<Rational> distinct_rationals(std::mt19937_64& rng, std::size_t count) {
  std::vector<Rational> out;
  while (out.size() < count) {
    Rational r(random_int(rng, -12, 12), random_int(rng, 1, 4));
    r.canonicalize();
    if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
  }
  return out;
}

}  // namespace detail

inline CheckResult check_roundtrip(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  detail::Tally t;
  for (int i = 0; i < 25; ++i) {
    auto roots = detail::distinct_rationals(rng, 5);
    if (i % 5 == 4) roots[1] = roots[0];  // one double root, still in U
    t.expect(roundtrip_check(form_from_roots(roots)), "sample " + std::to_string(i));
  }
  return {1, "round trip", "moduli point of the spectral quintic of the blow-up equals that of the input", t.status(), 0,
          t.summary("25 split quintics in U, 5 with a double root")};
}

inline CheckResult check_invariants(std::uint64_t seed) {
  std::mt19937_64 rng(seed + 1);
  detail::Tally t;
  for (int i = 0; i < 10; ++i) {
    const BinaryForm f = random_form(rng, 5);
    const InvariantVector v = invariants(f);
    for (int k = 0; k < 20; ++k) t.expect(invariants(mobius_substitute(f, random_unimodular(rng))) == v, "SL2 invariance");
  }
  const DiscRelation& rel = disc_as_invariant();
  for (int i = 0; i < 100; ++i) {
    const BinaryForm f = random_form(rng, 5);
    const InvariantVector v = invariants(f);
    t.expect(rel.c1 * v.J4 * v.J4 + rel.c2 * v.J8 == discriminant(f), "disc relation");
  }
  const Syzygy& syz = j18_syzygy();
  for (int i = 0; i < 100; ++i) t.expect(syz.holds(invariants(random_form(rng, 5))), "J18 syzygy");
  std::ostringstream os;
  os << "disc = " << to_string(rel.c1) << " J4^2 + " << to_string(rel.c2) << " J8; J18^2 in span of "
     << syz.monomials.size() << " weight-36 monomials";
  return {2, "invariant theory", "J4, J8, J12, J18 invariant; disc and J18^2 expressed in J4, J8, J12", t.status(), 0,
          t.summary(os.str())};
}

inline CheckResult check_lines() {
  detail::Tally t;
  const LineConfiguration cfg = lines16();
  t.expect(cfg.lines.size() == 16, "16 classes");
  LineClass sum{};
  for (const auto& c : cfg.lines) sum = detail::add(sum, c);
  LineClass minus4k = anticanonical();
  for (auto& x : minus4k) x *= 4;
  t.expect(sum == minus4k, "sum of lines is -4K");
  for (const auto& row : cfg.incidence) {
    int deg = 0;
    for (int v : row) deg += v;
    t.expect(deg == 5, "5-regular");
  }
  t.expect(cfg.partitions.size() == 5, "5 partitions");
  const WeylGroup& w = weyl_group(cfg);
  t.expect(w.elements.size() == 1920, "order 1920");
  t.expect(w.kernel.size() == 16, "kernel order 16");
  std::set<int> orbit;
  for (std::size_t k : w.kernel) orbit.insert(w.elements[k].on_lines[0]);
  t.expect(orbit.size() == 16, "kernel simply transitive");
  t.expect(w.s5.size() == 120 && w.quotient_order == 120, "S5 quotient");
  t.expect(no_intermediate_subgroup(cfg), "no intermediate subgroup");
  return {3, "line configuration", "16 lines summing to -4K, 5 partitions, W(D5) of order 1920", t.status(), 0,
          t.summary("16 lines, 5-regular, 5 partitions, |W|=1920, |kernel|=16, maximal S5")};
}

inline CheckResult check_family_numerics(std::uint64_t seed) {
  detail::Tally t;
  for (std::uint64_t k = 0; k < 3; ++k) {
    const auto h10 = build_example("h10_ci", seed + k);
    t.expect(discriminant_family(*h10.family).degree == 20, "h10 deg 20");
    const auto h8 = build_example("h8_ci", seed + k);
    t.expect(discriminant_family(*h8.family).degree == 16, "h8 deg 16");
  }
  const auto c8 = spectral_class_for(8, -2).cls, c10 = spectral_class_for(10, -3).cls, c12 = spectral_class_for(12, -3).cls;
  t.expect(c8.n == 0 && c8.alpha == 2 && c8.beta == 5, "h8 class (2,5)");
  t.expect(c10.n == 1 && c10.alpha == 5 && c10.beta == 5, "h10 class 5f+5xi");
  t.expect(c12.n == 0 && c12.alpha == 3 && c12.beta == 5, "h12 class (3,5)");
  int pairs = 0;
  for (int h = 8; h <= 20; h += 2)
    for (const auto& [a, n] : height_bounds_scan(h).reduced) {
      ++pairs;
      t.expect(arithmetic_genus(spectral_class_for(h, a).cls) == h - 4, "genus h-4");
    }
  for (int h = 0; h <= 40; h += 2) {
    const auto d = dimension_report(h);
    t.expect(2 * d.moduli_dimension == 3 * h + 4, "3h/2+2");
    t.expect(2 * d.linear_system_dimension == 3 * h + 10 && d.riemann_roch_dimension == d.linear_system_dimension, "3h/2+5");
    t.expect(2 * d.expected_dimension == 3 * h - 2, "3h/2-1");
    t.expect(d.map_degree == 6 * h, "6h");
  }
  return {4, "family numerics", "discriminant of degree 2h; spectral classes; genus h-4; dimension counts", t.status(), 0,
          t.summary("deg 20/16 on 3 seeds each; " + std::to_string(pairs) + " admissible (a,n) with genus h-4")};
}

inline CheckResult check_height_bounds() {
  detail::Tally t;
  t.expect(height_bounds_scan(2).reduced.empty(), "h=2 inadmissible");
  t.expect(!height_bounds_scan(6).reduced.empty() && height_bounds_scan(6).irreducible.empty(), "h=6 irreducible-inadmissible");
  const auto four = height_bounds_scan(4);
  t.expect(four.reduced.size() == 1, "h=4 single shape");
  if (four.reduced.size() == 1) {
    const auto cls = spectral_class_for(4, four.reduced[0].first).cls;
    t.expect(cls.n == 0 && cls.alpha == 1 && cls.beta == 5, "h=4 bidegree (1,5)");
    t.expect(arithmetic_genus(cls) == 0, "h=4 genus 0");
  }
  for (int h = 8; h <= 20; h += 2) t.expect(!height_bounds_scan(h).irreducible.empty(), "h>=8 admissible");
  return {5, "height bounds", "h >= 4; h = 4 forces a rational spectral curve", t.status(), 0,
          t.summary("h=2 none, h=4 bidegree (1,5) genus 0, h=6 no irreducible shape")};
}

inline CheckResult check_conic_identity(std::uint64_t seed) {
  detail::Tally t;
  for (std::uint64_t k = 0; k < 20; ++k) {
    std::mt19937_64 rng(seed + k);
    const auto r = conic_identity_report(random_conic_bundle(rng));
    t.expect(r.identity, "identity");
    t.expect(r.branch_divides, "branch containment");
  }
  return {6, "conic-bundle identity", "ac - b^2 factorization and branch-locus containment", t.status(), 0,
          t.summary("20 seeded instances, identity exact and zero remainder")};
}

inline CheckResult check_chern() {
  const ChernCheck c = chern_verify_symbolic();
  return {7, "Chern identity", "c1(omega)^3 = -2 deg(pi_* omega^-1) in the Chow ring", c.holds ? CheckStatus::pass : CheckStatus::fail,
          0, c.holds ? "polynomial identity in d1..d5, e1, e2" : "identity fails"};
}

inline CheckResult check_two_torsion() {
  detail::Tally t;
  t.expect(orbit_sizes(4) == std::vector<std::uint64_t>{1, 45, 210}, "orbit sizes");
  const auto classes = all_torsion_classes(4);
  t.expect(classes.size() == 256, "256 classes");
  std::vector<std::uint64_t> counted(3, 0);
  for (const auto& c : classes) ++counted.at(static_cast<std::size_t>(torsion_orbit_label(c)));
  t.expect(counted == orbit_sizes(4), "enumerated orbit sizes");
  // S10 is generated by (1 2) and (1 2 ... 10); invariance under generators covers the group.
  std::vector<int> swap{2, 1, 3, 4, 5, 6, 7, 8, 9, 10}, cycle{2, 3, 4, 5, 6, 7, 8, 9, 10, 1};
  for (const auto& c : classes)
    for (const auto* g : {&swap, &cycle}) t.expect(torsion_orbit_label(c.relabel(*g)) == torsion_orbit_label(c), "relabel");
  return {8, "two-torsion orbits", "orbits of J[2] on a genus-4 hyperelliptic curve", t.status(), 0,
          t.summary("(1,45,210), total 256, labels S10-invariant")};
}

inline CheckResult check_classifier() {
  detail::Tally t;
  for (int h = 0; h <= 6; h += 2)
    for (int d = 0; d <= 1; ++d) t.expect(classify_component(h, d) == ComponentLabel::empty, "empty for h <= 6");
  std::set<ComponentLabel> h8{classify_component(8, 1), classify_component(8, 2)};
  std::set<ComponentLabel> h10{classify_component(10, 0), classify_component(10, 1)};
  t.expect(h8.size() == 2 && !h8.contains(ComponentLabel::s5_only), "two labels for h=8");
  t.expect(h10.size() == 2 && !h10.contains(ComponentLabel::s5_only), "two labels for h=10");
  for (int h = 12; h <= 40; h += 2) t.expect(classify_component(h, 1) == ComponentLabel::w_single, "one label for h >= 12");
  return {9, "component classifier", "empty for h <= 6, two components for h = 8, 10, one for h >= 12", t.status(), 0,
          t.summary("table reproduced for h <= 40")};
}

inline CheckResult check_genericity(std::uint64_t seed) {
  detail::Tally t;
  const auto squared = genericity_check(squared_discriminant_family(seed));
  t.expect(!squared.g1, "squared discriminant fails G1'");
  t.expect(genericity_check(split_diagonal_family()).g2 == G2Status::fails, "split family fails G2'");
  for (const auto& name : {"h8_ci", "h10_ci", "h10_bundle"}) {
    const auto ex = build_example(name, seed);
    t.expect(genericity_check(*ex.family).g2 == G2Status::certified, std::string(name) + " certifies G2'");
  }
  return {10, "genericity", "squared discriminant fails G1'; split cover fails G2'; explicit families certify G2'", t.status(), 0,
          t.summary("counterexamples rejected, 3 explicit families certified")};
}

inline VerificationReport run_paper_checks(std::uint64_t seed) {
  VerificationReport report;
  report.seed = seed;
  const std::vector<std::function<CheckResult()>> checks{
      [&] { return check_roundtrip(seed); },       [&] { return check_invariants(seed); },
      [] { return check_lines(); },                [&] { return check_family_numerics(seed); },
      [] { return check_height_bounds(); },        [&] { return check_conic_identity(seed); },
      [] { return check_chern(); },                [] { return check_two_torsion(); },
      [] { return check_classifier(); },           [&] { return check_genericity(seed); }};
  for (const auto& run : checks) {
    const auto start = std::chrono::steady_clock::now();
    CheckResult r;
    try {
      r = run();
    } catch (const std::exception& e) {
      r.id = static_cast<int>(report.checks.size()) + 1;
      r.name = "check " + std::to_string(r.id);
      r.status = CheckStatus::fail;
      r.details = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report.checks.push_back(std::move(r));
  }
  return report;
}

/// JSON form; timings are omitted unless requested so output is reproducible.
inline json to_json(const VerificationReport& r, bool with_timing = false) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json j{{"id", c.id}, {"name", c.name}, {"anchor", c.anchor}, {"status", to_string(c.status)}, {"details", c.details}};
    if (with_timing) j["seconds"] = c.seconds;
    checks.push_back(j);
  }
  return {{"seed", r.seed}, {"all_pass", r.all_pass()}, {"checks", checks}};
}

}  // namespace dp4
