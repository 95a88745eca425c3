#pragma once

// Orchestration: config validation, the per-n certificate DAG, the run-level
// atlas and escape/convergence witnesses, report emission and exit codes.

#include <json.hpp>
#include <openssl/evp.h>

#include <chrono>
#include <cstdint>
#include <ctime>
#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "noricert/atlas.hpp"
#include "noricert/bounds.hpp"
#include "noricert/certificate.hpp"
#include "noricert/disktrace.hpp"
#include "noricert/family.hpp"

namespace noricert {

enum ExitCode : int {
  kExitOk = 0,
  kExitRefuted = 1,
  kExitExhausted = 2,
  kExitUsage = 64,
};

enum class OutputFormat { json, text };

struct RunConfig {
  std::vector<int> n_list{2, 3};
  Rational r = default_r();
  Rational rho = default_rho();
  std::optional<Rational> eps_override;
  bool unsafe_eps = false;
  std::size_t samples = 2000;
  std::size_t budget = kDefaultBudget;
  std::uint64_t seed = 1;
  OutputFormat format = OutputFormat::json;
  int max_n = 5;
  std::size_t atlas_samples = 10000;  ///< per chart pair
  long atlas_max_index = 6;
};

struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// "2..4", "2,3,5" or a single integer.
inline std::vector<int> parse_n_list(const std::string& text) {
  std::vector<int> out;
  auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      throw ConfigError("bad n value '" + s + "'");
    }
    if (used != s.size()) throw ConfigError("bad n value '" + s + "'");
    return v;
  };
  if (const auto dots = text.find(".."); dots != std::string::npos) {
    const int lo = to_int(text.substr(0, dots));
    const int hi = to_int(text.substr(dots + 2));
    if (hi < lo) throw ConfigError("empty n range '" + text + "'");
    for (int n = lo; n <= hi; ++n) out.push_back(n);
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(to_int(item));
  if (out.empty()) throw ConfigError("empty n list");
  return out;
}

/// Throws ConfigError naming the first violated invariant.
inline void validate(const RunConfig& cfg) {
  if (cfg.n_list.empty()) throw ConfigError("n list is empty");
  for (std::size_t i = 0; i < cfg.n_list.size(); ++i) {
    const int n = cfg.n_list[i];
    if (n < 2 || n > cfg.max_n)
      throw ConfigError("n = " + std::to_string(n) + " outside [2, " + std::to_string(cfg.max_n) + "]");
    if (i > 0 && n <= cfg.n_list[i - 1]) throw ConfigError("n list must be strictly increasing");
  }
  if (!(cfg.r > 0 && cfg.r < 1)) throw ConfigError("r must lie in (0,1)");
  if (!(cfg.rho > 0 && cfg.rho < 1)) throw ConfigError("rho must lie in (0,1)");
  if (!(cfg.r <= cfg.rho / 2 * (1 - cfg.r))) throw ConfigError("r <= (rho/2)(1-r) violated");
  if (cfg.eps_override && *cfg.eps_override <= 0) throw ConfigError("eps must be positive");
  if (cfg.samples == 0) throw ConfigError("samples must be positive");
  if (cfg.budget == 0) throw ConfigError("budget must be positive");
}

inline std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  std::ostringstream out;
  for (unsigned int i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
  return out.str();
}

inline std::string family_digest(const Family& fam) { return sha256_hex(family_to_json(fam).dump()); }

struct NResult {
  int n = 0;
  nlohmann::json family = nlohmann::json::object();
  std::string digest;
  std::vector<Certificate> certificates;
  std::optional<TraceReport> trace;
  std::optional<Family> fam;
  double seconds = 0;

  [[nodiscard]] Verdict verdict() const {
    Verdict v = Verdict::certified;
    for (const auto& c : certificates) v = worst(v, c.verdict);
    if (trace) v = worst(v, worst(trace->condition_I.verdict, trace->condition_II.verdict));
    return v;
  }
};

struct RunResult {
  RunConfig config;
  std::vector<NResult> per_n;
  std::vector<Certificate> atlas;
  std::optional<EscapeTable> escape;
  std::optional<ConvergenceWitness> convergence;
  double seconds = 0;

  [[nodiscard]] Verdict verdict() const {
    Verdict v = Verdict::certified;
    for (const auto& r : per_n) v = worst(v, r.verdict());
    for (const auto& c : atlas) v = worst(v, c.verdict);
    if (escape) v = worst(v, escape->certificate.verdict);
    if (convergence) v = worst(v, convergence->certificate.verdict);
    return v;
  }
  [[nodiscard]] int exit_code() const {
    switch (verdict()) {
      case Verdict::certified: return kExitOk;
      case Verdict::refuted: return kExitRefuted;
      case Verdict::skipped:
      case Verdict::exhausted: return kExitExhausted;
    }
    return kExitRefuted;
  }
};

inline Certificate parameter_certificate(const FamilyParams& p, bool unsafe_eps) {
  Certificate cert("parameters");
  const auto bad = param_violations(p);
  const bool eps_bad = std::find(bad.begin(), bad.end(), "eps < (1/6)^N r/(n+2)") != bad.end();
  for (const auto& v : bad) cert.check(v, false);
  if (bad.empty()) cert.check("all parameter invariants", true);
  if (eps_bad && unsafe_eps) cert.evidence["unsafe_eps"] = true;
  cert.evidence["eps"] = to_string(p.eps);
  return cert;
}

/// The certificate DAG for one n. Later stages take earlier certificates as
/// prerequisites and report "skipped" when those did not certify.
inline NResult run_one(const RunConfig& cfg, int n) {
  const auto t0 = std::chrono::steady_clock::now();
  NResult out;
  out.n = n;
  const FamilyParams params = make_params(n, cfg.r, cfg.rho, cfg.eps_override);
  out.family = {{"eps", to_string(params.eps)}, {"c", params.c}, {"d", params.d}, {"N", params.N}};
  out.certificates.push_back(parameter_certificate(params, cfg.unsafe_eps));
  const auto bad = param_violations(params);
  const bool only_eps = bad.size() == 1 && bad.front() == "eps < (1/6)^N r/(n+2)";
  if (!bad.empty() && !(cfg.unsafe_eps && only_eps)) return out;

  Family fam = build_family(params, BuildOptions{cfg.unsafe_eps});
  out.digest = family_digest(fam);
  out.family["degree_f1"] = fam.f1.degree();
  out.family["degree_f2"] = fam.f2.degree();
  auto& certs = out.certificates;

  certs.push_back(structural_checks(fam));
  const RootLocalization roots = localize_roots(fam, cfg.budget);
  for (const auto& c : roots.certificates) certs.push_back(c);
  const Certificate bounds = annulus_bounds_certificate(fam, roots);
  certs.push_back(bounds);
  const Certificate ineq = corollary_ineq_certificate(fam, bounds);
  certs.push_back(ineq);
  for (int k = 1; k <= n - 1; ++k) certs.push_back(lemma_div_check(fam, k));

  TraceOptions topt;
  topt.budget = cfg.budget;
  topt.disk_samples = cfg.samples;
  topt.seed = cfg.seed;
  const std::uint64_t nseed = cfg.seed * 1000003ULL + static_cast<std::uint64_t>(n);
  const auto samples = disk_samples(fam, cfg.samples, nseed);

  TraceReport trace;
  trace.n = n;
  trace.condition_II = annulus_in_Kn(fam, ineq, topt.kn_spot_points);
  certs.push_back(trace.condition_II);

  std::vector<Certificate> cond_I_parts;
  cond_I_parts.push_back(image_chart_window(fam, ineq, samples, topt.boundary_points));
  for (int k = 1; k <= n - 1; ++k) {
    topt.seed = nseed;
    cond_I_parts.push_back(cone_certificate(fam, k, roots, ineq, topt));
  }
  const std::size_t interior = std::min<std::size_t>(samples.size(), 256);
  cond_I_parts.push_back(k0_certificate(fam, ineq, std::span(samples).first(interior), topt.boundary_points));
  cond_I_parts.push_back(condition_I_samples(fam, samples));
  trace.condition_I = Certificate("condition_I");
  for (const auto& c : cond_I_parts) {
    trace.condition_I.absorb(c, c.kind + (c.index ? "[" + std::to_string(*c.index) + "]" : ""));
    certs.push_back(c);
  }
  certs.push_back(vanishing_orders_certificate(fam));

  trace.condition_III_sup_squared = boundary_metric(fam, kSpotPoints).sup_squared;
  const auto orders = vanishing_orders(fam);
  trace.condition_IV_escape_index = orders.f1 - orders.f2;
  trace.sample_plan = {{"seed", nseed},
                       {"disk_samples", samples.size()},
                       {"region_samples_per_k", topt.region_samples},
                       {"boundary_points", topt.boundary_points},
                       {"kn_spot_points_per_circle", topt.kn_spot_points},
                       {"metric_points", kSpotPoints}};
  out.trace = std::move(trace);
  out.fam = std::move(fam);
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

/// Chart-level checks that do not depend on n.
inline std::vector<Certificate> run_atlas(const RunConfig& cfg) {
  std::vector<Certificate> out;
  Certificate dis("chart_disjointness");
  std::uint64_t s = cfg.seed;
  nlohmann::json pairs = nlohmann::json::array();
  for (long j = 0; j <= cfg.atlas_max_index; ++j)
    for (long k = j + 2; k <= cfg.atlas_max_index; ++k) {
      const auto rep = disjointness_search(cfg.r, j, k, cfg.atlas_samples, ++s);
      dis.check("U(" + std::to_string(j) + ") and U(" + std::to_string(k) + ") disjoint", rep.ok(),
                std::to_string(rep.samples) + " samples, " + std::to_string(rep.in_first) + "/" +
                    std::to_string(rep.in_second) + " inside");
      nlohmann::json e{{"j", j}, {"k", k}, {"seed", s}, {"samples", rep.samples},
                       {"chain_checked", rep.chain_checked}};
      if (rep.counterexample) e["counterexample"] = point_to_json(*rep.counterexample);
      pairs.push_back(std::move(e));
    }
  dis.evidence["pairs"] = pairs;
  out.push_back(std::move(dis));

  Certificate ov("overlap_polydisk");
  const auto rep = overlap_polydisk_check(cfg.r, cfg.atlas_samples, cfg.seed);
  ov.check("overlap equals the polydisk |x| < r, |y| < r", rep.ok(),
           std::to_string(rep.inside) + " inside, " + std::to_string(rep.outside) + " outside");
  ov.evidence = {{"seed", cfg.seed}, {"base_checked", rep.base_checked}, {"violations", rep.violations}};
  out.push_back(std::move(ov));

  Certificate nd("intersection_matrices");
  nd.check("[[-3,2],[2,-3]] negative definite", negative_definite({-3, 2, 2, -3}));
  nd.check("[[-2,2],[2,-2]] not negative definite", !negative_definite({-2, 2, 2, -2}));
  out.push_back(std::move(nd));
  return out;
}

inline RunResult run_verify(const RunConfig& cfg) {
  validate(cfg);
  const auto t0 = std::chrono::steady_clock::now();
  RunResult res;
  res.config = cfg;
  std::vector<Family> fams;
  for (int n : cfg.n_list) {
    res.per_n.push_back(run_one(cfg, n));
    if (res.per_n.back().fam) fams.push_back(*res.per_n.back().fam);
  }
  res.atlas = run_atlas(cfg);
  if (fams.size() == cfg.n_list.size()) {
    res.escape = escape_witness(std::span<const Family>(fams));
    res.convergence = uniform_convergence_witness(std::span<const Family>(fams), kSpotPoints);
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

inline nlohmann::json report_json(const RunResult& res, bool with_timing = true) {
  const auto& cfg = res.config;
  nlohmann::json j;
  j["params"] = {{"n", cfg.n_list},
                 {"r", to_string(cfg.r)},
                 {"rho", to_string(cfg.rho)},
                 {"eps_override", cfg.eps_override ? nlohmann::json(to_string(*cfg.eps_override)) : nlohmann::json()},
                 {"unsafe_eps", cfg.unsafe_eps},
                 {"samples", cfg.samples},
                 {"budget", cfg.budget},
                 {"seed", cfg.seed},
                 {"atlas_samples", cfg.atlas_samples}};
  nlohmann::json per_n = nlohmann::json::array();
  for (const auto& r : res.per_n) {
    nlohmann::json e{{"n", r.n},
                     {"verdict", to_string(r.verdict())},
                     {"family", r.family},
                     {"family_digest", r.digest},
                     {"certificates", r.certificates}};
    if (r.trace) e["trace"] = trace_to_json(*r.trace);
    per_n.push_back(std::move(e));
  }
  j["per_n"] = per_n;
  j["atlas"] = res.atlas;
  nlohmann::json summary{{"verdict", to_string(res.verdict())}, {"exit_code", res.exit_code()}};
  if (res.escape) summary["escape"] = res.escape->certificate;
  if (res.convergence) summary["uniform_convergence"] = res.convergence->certificate;
  j["summary"] = summary;
  if (with_timing) {
    nlohmann::json per = nlohmann::json::object();
    for (const auto& r : res.per_n) per[std::to_string(r.n)] = r.seconds;
    j["timing"] = {{"timestamp", static_cast<std::int64_t>(std::time(nullptr))},
                   {"total_seconds", res.seconds},
                   {"per_n_seconds", per}};
  }
  return j;
}

namespace detail {

inline const char* lemma_label(const std::string& kind) {
  if (kind == "parameters") return "parameter invariants";
  if (kind == "structural") return "structure of P_k, f1, f2";
  if (kind == "lemma_roots") return "Lemma roots";
  if (kind == "corollary_bounds") return "Corollary bounds";
  if (kind == "corollary_ineq") return "Corollary ineq (a)-(d)";
  if (kind == "lemma_div") return "Lemma div";
  if (kind == "annulus_in_Kn") return "annulus image in K_n (II)";
  if (kind == "image_chart_window") return "chart window 0..n-1";
  if (kind == "lemma_ml") return "Lemma ml (cone, k >= 1)";
  if (kind == "cone_k0") return "cone lemma, k = 0";
  if (kind == "vanishing_orders") return "vanishing orders";
  if (kind == "condition_I_samples") return "condition I samples";
  return "";
}

inline void text_row(std::ostream& os, const Certificate& c) {
  std::string name = c.kind;
  if (c.index) name += "[" + std::to_string(*c.index) + "]";
  os << "  " << std::left << std::setw(24) << name << std::setw(12) << to_string(c.verdict)
     << lemma_label(c.kind);
  if (!c.failed_stage.empty()) os << "  (failed: " << c.failed_stage << ")";
  os << '\n';
}

}  // namespace detail

inline std::string report_text(const RunResult& res) {
  std::ostringstream os;
  const auto& cfg = res.config;
  os << "r = " << to_string(cfg.r) << ", rho = " << to_string(cfg.rho) << ", seed = " << cfg.seed
     << ", samples = " << cfg.samples << ", budget = " << cfg.budget << "\n";
  for (const auto& r : res.per_n) {
    os << "\nn = " << r.n << "  eps = " << r.family.value("eps", std::string("?")) << "  "
       << to_string(r.verdict()) << "\n";
    for (const auto& c : r.certificates) detail::text_row(os, c);
    if (r.trace) {
      os << "  condition I   " << to_string(r.trace->condition_I.verdict) << "\n"
         << "  condition II  " << to_string(r.trace->condition_II.verdict) << "\n"
         << "  condition III sup metric^2 = ~2^" << approx_log2(r.trace->condition_III_sup_squared)
         << " (bound 1/" << r.n * r.n << ")\n"
         << "  condition IV  escape index " << r.trace->condition_IV_escape_index << "\n";
      for (const auto& c : r.certificates)
        if (c.kind == "image_chart_window" && c.evidence.contains("chart_histogram")) {
          os << "  chart indices of sampled images:\n";
          std::size_t total = 0;
          for (const auto& [k, v] : c.evidence["chart_histogram"].items()) total += v.get<std::size_t>();
          for (const auto& [k, v] : c.evidence["chart_histogram"].items()) {
            const auto count = v.get<std::size_t>();
            const std::size_t bar = total == 0 ? 0 : (40 * count + total - 1) / total;
            os << "    k=" << k << " " << std::string(bar, '#') << " " << count << "\n";
          }
        }
    }
  }
  os << "\natlas\n";
  for (const auto& c : res.atlas) detail::text_row(os, c);
  if (res.escape) {
    os << "\nescape indices:";
    for (const auto& row : res.escape->rows) os << " (" << row.n << ", " << row.escape_index << ")";
    os << "  " << to_string(res.escape->certificate.verdict) << "\n";
  }
  if (res.convergence)
    os << "uniform convergence witness  " << to_string(res.convergence->certificate.verdict) << "\n";
  os << "\nverdict: " << to_string(res.verdict()) << " (exit " << res.exit_code() << ")\n";
  return os.str();
}

}  // namespace noricert
