// noricert verify: builds the family for each requested n, runs every
// certificate and prints a JSON or text report.
//
// Exit codes: 0 all certified, 1 refutation, 2 budget exhausted, 64 usage.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>

#include "noricert/noricert.hpp"

namespace {

std::size_t default_budget() {
  if (const char* env = std::getenv("NORICERT_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "ignoring malformed NORICERT_BUDGET\n";
    }
  }
  return noricert::kDefaultBudget;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact certification of the polynomial disk family"};
  app.require_subcommand(1);
  auto* verify = app.add_subcommand("verify", "run the certificate pipeline");

  std::string n_text = "2..3", r_text = "1/5", rho_text = "1/2", eps_text, format = "json";
  noricert::RunConfig cfg;
  cfg.budget = default_budget();
  verify->add_option("--n", n_text, "n values: 2..4 or 2,3,4")->capture_default_str();
  verify->add_option("--r", r_text, "chart radius r as num/den")->capture_default_str();
  verify->add_option("--rho", rho_text, "cone parameter rho as num/den")->capture_default_str();
  verify->add_option("--eps", eps_text, "override eps (num/den)");
  verify->add_flag("--unsafe-eps", cfg.unsafe_eps, "run the pipeline even if eps breaks its bound");
  verify->add_option("--seed", cfg.seed, "sampling seed")->capture_default_str();
  verify->add_option("--samples", cfg.samples, "disk samples per n")->capture_default_str();
  verify->add_option("--budget", cfg.budget, "evaluations per circle certificate (env NORICERT_BUDGET)")
      ->capture_default_str();
  verify->add_option("--max-n", cfg.max_n, "largest admissible n")->capture_default_str();
  verify->add_option("--atlas-samples", cfg.atlas_samples, "samples per chart pair")->capture_default_str();
  verify->add_option("--format", format, "json or text")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : noricert::kExitUsage;
  }

  try {
    cfg.n_list = noricert::parse_n_list(n_text);
    cfg.r = noricert::parse_rational(r_text);
    cfg.rho = noricert::parse_rational(rho_text);
    if (!eps_text.empty()) cfg.eps_override = noricert::parse_rational(eps_text);
    cfg.format = format == "text" ? noricert::OutputFormat::text : noricert::OutputFormat::json;
    noricert::validate(cfg);
  } catch (const std::invalid_argument& e) {
    std::cerr << "noricert: " << e.what() << "\n";
    return noricert::kExitUsage;
  }

  const auto res = noricert::run_verify(cfg);
  if (cfg.format == noricert::OutputFormat::json)
    std::cout << noricert::report_json(res).dump(2) << "\n";
  else
    std::cout << noricert::report_text(res);
  return res.exit_code();
}
