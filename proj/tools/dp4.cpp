#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "dp4/verify.hpp"

namespace {

using dp4::json;

enum Exit { kOk = 0, kCheckFailed = 1, kUsage = 2, kBadInput = 3 };

struct Output {
  std::string out_path;
  std::string format = "json";
};

void flatten(const json& j, const std::string& prefix, std::ostream& os) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, os);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", os);
  } else {
    os << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

void emit(const json& j, const Output& o, const std::string& text = "") {
  std::ostringstream os;
  if (o.format == "text") {
    if (text.empty()) flatten(j, "", os);
    else os << text;
  } else {
    os << j.dump(2) << "\n";
  }
  if (o.out_path.empty()) {
    std::cout << os.str();
    return;
  }
  std::ofstream f(o.out_path);
  if (!f) throw dp4::input_error("cannot write " + o.out_path);
  f << os.str();
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw dp4::input_error("bad integer '" + tok + "' in list");
    }
  }
  return out;
}

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      const auto v = std::stoull(s);
      return {v, v};
    }
    const auto a = std::stoull(s.substr(0, dots)), b = std::stoull(s.substr(dots + 2));
    if (b < a) throw std::invalid_argument(s);
    return {a, b};
  } catch (const std::exception&) {
    throw dp4::input_error("bad seed range '" + s + "', expected a..b");
  }
}

std::string verify_text(const dp4::VerificationReport& r) {
  std::ostringstream os;
  for (const auto& c : r.checks)
    os << (c.status == dp4::CheckStatus::pass ? "PASS" : "FAIL") << "  " << c.id << ". " << c.name << ": " << c.details << "\n";
  os << (r.all_pass() ? "all checks pass" : "some checks failed") << "\n";
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quartic del Pezzo fibrations: exact invariants, line configurations and height-based classification", "dp4"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  Output out;
  std::uint64_t seed = 1;
  app.add_option("--out", out.out_path, "Write the report to this path instead of stdout");
  app.add_option("--format", out.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", seed, "Seed for every random choice");

  std::string input;
  auto* pencil = app.add_subcommand("pencil", "Pencils of quadrics in P^4");
  auto* pencil_analyze = pencil->add_subcommand(
      "analyze", "Spectral quintic det(uP+vQ), degeneracy profile, surface label and moduli point. Input {\"P\":[[..]],\"Q\":[[..]]}");
  pencil_analyze->add_option("--input", input, "Pencil JSON")->required();
  pencil->require_subcommand(1);

  bool normalize = false;
  auto* quintic = app.add_subcommand("quintic", "Binary quintics");
  auto* quintic_inv = quintic->add_subcommand(
      "invariants", "Invariants J4, J8, J12, J18, stability and the point of P(1,2,3). Input {\"degree\":5,\"coeffs\":[..]}");
  quintic_inv->add_option("--input", input, "Binary form JSON")->required();
  quintic_inv->add_flag("--normalize", normalize, "Report the canonical weighted representative instead of the raw triple");
  quintic->require_subcommand(1);

  auto* lines = app.add_subcommand("lines", "The 16 lines on a quartic del Pezzo surface");
  auto* lines_report = lines->add_subcommand("report", "Classes, incidence, the 5 partitions and the W(D5) action");
  lines->require_subcommand(1);

  int max_h = 20;
  auto* family = app.add_subcommand("family", "Del Pezzo fibrations over P^1");
  auto* family_analyze = family->add_subcommand(
      "analyze", "Height, spectral cover and class, discriminant of degree 2h, genericity (G1') and (G2'), dimension counts");
  family_analyze->add_option("--input", input, "Family JSON: {d,e,A1,A2} or a complete-intersection presentation")->required();
  auto* family_scan = family->add_subcommand("scan-heights", "Admissible (a,n) per even height; h >= 4, and h = 4 forces a rational spectral curve");
  family_scan->add_option("--max", max_h, "Largest height scanned");
  family->require_subcommand(1);

  int height = 0;
  std::string torsion, curve_path, eta_path;
  int qvalue = -2;
  auto* classify = app.add_subcommand(
      "classify", "Component of general families: empty for h <= 6, two for h = 8 and h = 10, one for h >= 12");
  classify->add_option("--height", height, "Even height h")->required();
  classify->add_option("--torsion", torsion, "Branch-point subset of a 2-torsion class, e.g. \"1,2\" (genus h-4)");
  classify->add_option("--quintic", curve_path, "Plane quintic JSON {\"degree\":5,\"terms\":[{\"coeff\",\"exponents\"}]} (h = 10)");
  classify->add_option("--eta", eta_path, "Divisor JSON {\"D1\":[[x,y,z],..],\"D2\":[..]} presenting eta (h = 10)");
  classify->add_option("--q", qvalue, "Theta form value for h = 10 when no curve is given (-1 for the zero class)");

  std::string example_name, seeds = "1..20";
  auto* examples = app.add_subcommand("examples", "Explicit height 8 and 10 families");
  auto* ex_build = examples->add_subcommand("build", "Build a named example: h8_ci, h8_conic, h10_ci or h10_bundle");
  ex_build->add_option("name", example_name, "Example name")->required()->check(CLI::IsMember(dp4::example_names()));
  auto* ex_verify = examples->add_subcommand("verify-all", "Build and check every example for a range of seeds");
  ex_verify->add_option("--seeds", seeds, "Seed range a..b");
  examples->require_subcommand(1);

  bool timing = false;
  auto* verify = app.add_subcommand("verify", "Umbrella verification");
  auto* verify_checks = verify->add_subcommand("paper-checks", "Run acceptance checks 1-10 and report pass/fail for each");
  verify_checks->add_flag("--timing", timing, "Include elapsed seconds per check");
  verify->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*pencil_analyze) {
      emit(dp4::pencil_report(dp4::io::pencil_from(dp4::read_json_file(input))), out);
    } else if (*quintic_inv) {
      emit(dp4::quintic_report(dp4::io::form_from(dp4::read_json_file(input)), normalize), out);
    } else if (*lines_report) {
      emit(dp4::lines_report(), out);
    } else if (*family_analyze) {
      emit(dp4::family_report(dp4::io::family_from(dp4::read_json_file(input))), out);
    } else if (*family_scan) {
      const json rows = dp4::scan_report(max_h);
      std::ostringstream text;
      text << "h  reduced(a,n)            irreducible(a,n)\n";
      for (const auto& r : rows) {
        text << r["h"].get<int>() << "  ";
        for (const auto* key : {"reduced", "irreducible"}) {
          std::string cell;
          for (const auto& p : r[key]) cell += "(" + std::to_string(p["a"].get<int>()) + "," + std::to_string(p["n"].get<int>()) + ")";
          text << (cell.empty() ? "-" : cell) << "  ";
        }
        text << "\n";
      }
      emit({{"max", max_h}, {"heights", rows}}, out, text.str());
    } else if (*classify) {
      if (height < 0 || height % 2) throw dp4::input_error("height must be even and non-negative");
      json report{{"height", height}};
      dp4::ComponentLabel label;
      if (height <= 6) {
        label = dp4::classify_component(height, 0);
      } else if (height == 10) {
        int datum = qvalue;
        if (!curve_path.empty() || !eta_path.empty()) {
          if (curve_path.empty() || eta_path.empty()) throw dp4::input_error("--quintic and --eta go together");
          const auto curve = dp4::io::curve_from(dp4::read_json_file(curve_path));
          const json eta = dp4::read_json_file(eta_path);
          const auto d1 = dp4::io::points_from(dp4::io::field(eta, "D1")), d2 = dp4::io::points_from(dp4::io::field(eta, "D2"));
          const auto theta = dp4::theta_quadratic_form(curve, d1, d2);
          datum = d1.empty() ? -1 : theta.q;
          report["theta"] = {{"q", theta.q}, {"h0_theta", theta.h0_theta}, {"h0_theta_eta", theta.h0_theta_eta}};
        } else if (qvalue == -2) {
          throw dp4::input_error("height 10 needs --quintic and --eta, or --q");
        }
        label = dp4::classify_component(height, datum);
        report["q"] = datum;
      } else {
        const dp4::TwoTorsionClass cls(height - 4, parse_int_list(torsion));
        json subset = json::array();
        for (int i : cls.subset()) subset.push_back(i);
        report["torsion"] = {{"genus", cls.genus()}, {"canonical_subset", subset}, {"orbit_label", dp4::torsion_orbit_label(cls)}};
        label = dp4::classify_component(height, cls);
      }
      report["label"] = dp4::to_string(label);
      emit(report, out);
    } else if (*ex_build) {
      const json ex = dp4::example_json(dp4::build_example(example_name, seed));
      emit(ex, out);
      for (const auto& c : ex["checks"])
        if (!c["passed"].get<bool>()) return kCheckFailed;
    } else if (*ex_verify) {
      const auto [lo, hi] = parse_range(seeds);
      json rows = json::array();
      bool ok = true;
      std::ostringstream text;
      for (const auto& name : dp4::example_names())
        for (std::uint64_t s = lo; s <= hi; ++s) {
          const auto ex = dp4::build_example(name, s);
          bool pass = true;
          for (const auto& c : dp4::verify_example(ex)) pass = pass && c.passed;
          ok = ok && pass;
          rows.push_back({{"name", name}, {"seed", s}, {"attempts", ex.attempts}, {"passed", pass}});
          text << (pass ? "PASS " : "FAIL ") << name << " seed " << s << "\n";
        }
      emit({{"all_pass", ok}, {"examples", rows}}, out, text.str());
      return ok ? kOk : kCheckFailed;
    } else if (*verify_checks) {
      const auto report = dp4::run_paper_checks(seed);
      emit(dp4::to_json(report, timing), out, verify_text(report));
      return report.all_pass() ? kOk : kCheckFailed;
    }
  } catch (const dp4::input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kOk;
}
