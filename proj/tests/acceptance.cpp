#include <CLI11.hpp>

#include <iostream>

#include "dp4/verify.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria 1-10"};
  std::uint64_t seed = 7;
  app.add_option("--seed", seed, "Seed for the randomized criteria");
  CLI11_PARSE(app, argc, argv);
  const auto report = dp4::run_paper_checks(seed);
  for (const auto& c : report.checks)
    std::cout << "criterion " << c.id << " [" << c.name << "]: " << (c.status == dp4::CheckStatus::pass ? "PASS" : "FAIL") << " ("
              << c.details << ", " << c.seconds << " s)\n";
  std::cout << (report.all_pass() ? "ALL PASS" : "FAILURES PRESENT") << "\n";
  return report.all_pass() ? 0 : 1;
}
