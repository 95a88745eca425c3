#pragma once

// Family-level inequality certificates: root localization of each P_k,
// the two-sided annulus bounds for |P_k|, the four f1/f2 inequalities on
// the annulus 1 <= |lambda| <= 2, and the divisibility identities.

#include <json.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "noricert/certificate.hpp"
#include "noricert/circle.hpp"
#include "noricert/family.hpp"
#include "noricert/filtered.hpp"
#include "noricert/roots.hpp"

namespace noricert {

inline constexpr std::size_t kSpotPoints = 512;

inline Rational dyadic(long k) { return pow(make_rational(1, 2), static_cast<unsigned long>(k)); }

struct RootLocalization {
  std::vector<Certificate> certificates;                ///< one per k, ascending
  std::vector<std::optional<RootCountCertificate>> counts;  ///< counts[k-1] for P_k

  [[nodiscard]] bool ok() const {
    for (const auto& c : certificates)
      if (!c.ok()) return false;
    return true;
  }
  [[nodiscard]] const RootCountCertificate* at(int k) const {
    const auto& c = counts.at(static_cast<std::size_t>(k - 1));
    return c ? &*c : nullptr;
  }
};

/// Places all d_k roots of P_k in |lambda| < 2^-k, by backward induction on
/// k: on |lambda| = 2^-k the product P_{k+1} P_{k+2}^2 ... lambda^{n-k}
/// dominates the constant eps^{c_k}, and its roots are already localized.
inline RootLocalization localize_roots(const Family& fam, std::size_t budget = kDefaultBudget) {
  const int n = fam.n();
  const auto& prm = fam.params;
  RootLocalization out;
  out.counts.resize(static_cast<std::size_t>(n - 1));
  std::vector<Certificate> desc;
  for (int k = n - 1; k >= 1; --k) {
    Certificate cert("lemma_roots", k);
    const Rational radius = dyadic(k);
    FactorSplit split{Rational(-1), n - k, {}};
    bool have_all = true;
    for (int j = k + 1; j <= n - 1; ++j) {
      const auto* f = out.at(j);
      if (f == nullptr) {
        have_all = false;
        break;
      }
      split.factors.push_back({std::cref(*f), j - k});
    }
    if (!have_all) {
      cert.fail(Verdict::skipped, "prerequisite root localization");
      desc.push_back(std::move(cert));
      continue;
    }
    auto res = count_roots_in_disk(fam.P_at(k), radius, split, budget);
    if (res.status == RootCountResult::Status::exhausted) {
      cert.fail(Verdict::exhausted, "dominance on |lambda| = 2^-k");
    } else if (!res.ok()) {
      cert.check("dominance on |lambda| = 2^-k", false, res.reason);
      if (res.counterexample) cert.evidence["counterexample"] = to_string(*res.counterexample);
    } else {
      const auto& rc = *res.certificate;
      cert.check("dominance on |lambda| = 2^-k", true);
      cert.check("root count equals d_k", rc.count == prm.d_at(k),
                 std::to_string(rc.count) + " of " + std::to_string(prm.d_at(k)));
      if (const auto* dom = std::get_if<DominanceEvidence>(&rc.evidence)) {
        cert.note_margin(dom->dominance.margin);
        cert.subdivisions = dom->dominance.subdivision_count;
      }
      cert.evidence = root_count_to_json(rc);
      if (rc.count == prm.d_at(k)) out.counts[static_cast<std::size_t>(k - 1)] = rc;
    }
    // closed-form chain: factor distances are at least 2^-(k+1), so
    // |P_{k+1} ... lambda^{n-k}| >= 2^-((k+1)(d_k-(n-k)) + k(n-k)) >= 2^-N > eps >= eps^{c_k}
    const long chain_exp = (k + 1) * (prm.d_at(k) - (n - k)) + k * (n - k);
    cert.check("closed-form lower bound >= 2^-N", chain_exp <= prm.N,
               "exponent " + std::to_string(chain_exp) + " vs N = " + std::to_string(prm.N));
    cert.check("2^-N > eps", dyadic(prm.N) > prm.eps);
    cert.check("eps >= eps^{c_k}", prm.eps >= fam.eps_pow(prm.c_at(k)));
    desc.push_back(std::move(cert));
  }
  out.certificates.assign(desc.rbegin(), desc.rend());
  return out;
}

/// (1/2)^{d_k} < |P_k| < 3^{d_k} on 1 <= |lambda| <= 2, from the root
/// localization: with every root inside |lambda| < 1/2, each linear factor
/// of P_k (leading coefficient +-1) has modulus in (1/2, 5/2). Exact spot checks follow.
inline Certificate annulus_bounds_certificate(const Family& fam, const RootLocalization& roots,
                                              std::size_t spot_points = kSpotPoints) {
  Certificate cert("corollary_bounds");
  const int n = fam.n();
  const Rational half = make_rational(1, 2);
  for (int k = 1; k <= n - 1; ++k) {
    const RootCountCertificate* rc = k - 1 < static_cast<int>(roots.counts.size()) ? roots.at(k) : nullptr;
    if (rc == nullptr) {
      cert.fail(Verdict::skipped, "root localization of P_" + std::to_string(k));
      continue;
    }
    const std::string tag = "P_" + std::to_string(k);
    cert.check(tag + " monic up to sign", fam.P_at(k).is_unit_leading() && rc->poly == fam.P_at(k));
    cert.check(tag + " roots inside |lambda| < 1/2", rc->all_inside() && rc->radius <= half,
               "radius " + to_string(rc->radius));
  }
  if (!cert.ok()) return cert;

  std::size_t violations = 0;
  for (const Rational& radius : {Rational(1), Rational(2)}) {
    const auto pts = circle_points(radius, spot_points);
    for (int k = 1; k <= n - 1; ++k) {
      const long d = fam.params.d_at(k);
      const FilteredReal lo(pow(make_rational(1, 4), static_cast<unsigned long>(d)));
      const FilteredReal hi(pow(Rational(9), static_cast<unsigned long>(d)));
      const Evaluator Pk(fam.P_at(k));
      for (const auto& z : pts) {
        const FilteredReal v = abs2(FilteredComplex(Pk(z)));
        if (!(lo < v && v < hi)) ++violations;
      }
    }
  }
  cert.check("spot checks (1/2)^{2d_k} < |P_k|^2 < 3^{2d_k}", violations == 0,
             std::to_string(violations) + " violations over " + std::to_string(2 * spot_points) +
                 " points per polynomial");
  cert.evidence["spot_points_per_circle"] = spot_points;
  return cert;
}

/// Closed-form enclosures of |f1|, |f2| on the annulus from the P_k bounds.
struct AnnulusEnclosure {
  Rational f1_lower;  ///< |f1| > f1_lower
  Rational f1_upper;  ///< |f1| < f1_upper
  Rational f2_lower;
  Rational f2_upper;
};

inline AnnulusEnclosure annulus_enclosure(const FamilyParams& p) {
  const auto S1 = static_cast<unsigned long>(p.d_weighted_sum());
  const auto Sd = static_cast<unsigned long>(p.d_sum());
  const Rational half = make_rational(1, 2);
  AnnulusEnclosure e;
  e.f1_upper = p.eps * pow(Rational(3), S1) * pow(Rational(2), static_cast<unsigned long>(p.n));
  e.f1_lower = p.eps * pow(half, S1);
  e.f2_upper = p.eps * p.eps * pow(Rational(3), Sd) * 2;
  e.f2_lower = p.eps * p.eps * pow(half, Sd);
  return e;
}

/// On 1 <= |lambda| <= 2:
///   (a) |f1| < r/n,  (b) |f2| < r^2/n,  (c) |f2| < |f1|/n,  (d) |f1| > |f2|^k, k >= 1.
inline Certificate corollary_ineq_certificate(const Family& fam, const Certificate& bounds,
                                              std::size_t spot_points = kSpotPoints) {
  Certificate cert("corollary_ineq");
  if (!bounds.ok()) {
    cert.fail(Verdict::skipped, "annulus bounds");
    return cert;
  }
  const auto& p = fam.params;
  const int n = p.n;
  const Rational nn(n);
  const auto e = annulus_enclosure(p);
  cert.evidence["enclosure"] = {{"f1_lower", to_string(e.f1_lower)},
                                {"f1_upper", to_string(e.f1_upper)},
                                {"f2_lower", to_string(e.f2_lower)},
                                {"f2_upper", to_string(e.f2_upper)}};

  cert.check("(a) chain: f1_upper <= r/n", e.f1_upper <= p.r / nn);
  cert.check("(b) chain: f2_upper <= r^2/n", e.f2_upper <= p.r * p.r / nn);
  cert.check("(c) chain: f2_upper <= f1_lower/n", e.f2_upper <= e.f1_lower / nn);
  cert.check("(d) chain: f2_upper <= f1_lower", e.f2_upper <= e.f1_lower);
  cert.check("(d) chain: f2_upper < 1, so |f2|^k <= |f2| for all k >= 1", e.f2_upper < 1);
  bool powers_ok = true;
  Rational f2k = e.f2_upper;
  for (int k = 1; k <= 2 * n; ++k, f2k *= e.f2_upper) powers_ok = powers_ok && f2k <= e.f1_lower;
  cert.check("(d) chain for k = 1..2n", powers_ok);
  cert.check("f1, f2 zero-free on the annulus", e.f1_lower > 0 && e.f2_lower > 0);

  const FilteredReal n2(Rational(nn * nn));
  const FilteredReal r2(Rational(p.r * p.r));
  const Evaluator f1(fam.f1), f2(fam.f2);
  std::size_t va = 0, vb = 0, vc = 0, vd = 0;
  for (const Rational& radius : {Rational(1), Rational(2)}) {
    for (const auto& z : circle_points(radius, spot_points)) {
      const ComplexFraction zf(z);
      const FilteredReal a1 = abs2(FilteredComplex(f1(zf)));
      const FilteredReal a2 = abs2(FilteredComplex(f2(zf)));
      if (!(n2 * a1 < r2)) ++va;
      if (!(n2 * a2 < r2 * r2)) ++vb;
      if (!(n2 * a2 < a1)) ++vc;
      FilteredReal pw = a2;
      for (int k = 1; k <= 2 * n; ++k, pw = pw * a2)
        if (!(pw < a1)) {
          ++vd;
          break;
        }
    }
  }
  const std::string over = " violations over " + std::to_string(2 * spot_points) + " points";
  cert.check("(a) spot checks", va == 0, std::to_string(va) + over);
  cert.check("(b) spot checks", vb == 0, std::to_string(vb) + over);
  cert.check("(c) spot checks", vc == 0, std::to_string(vc) + over);
  cert.check("(d) spot checks, k = 1..2n", vd == 0, std::to_string(vd) + over);
  return cert;
}

/// eps^{2k-1} P_1^{k-1} P_2^{k-2} ... P_{k-1} - P_{k+1} P_{k+2}^2 ... P_{n-1}^{n-k-1} lambda^{n-k}
inline Poly lemma_div_dividend(const Family& fam, int k) {
  const int n = fam.n();
  return factor_product(fam, head_exponents(n, k), 0, fam.eps_pow(2L * k - 1)) -
         factor_product(fam, tail_exponents(n, k), n - k);
}

/// P_k divides the dividend above exactly; the quotient is recorded.
inline Certificate lemma_div_check(const Family& fam, int k) {
  if (k < 1 || k > fam.n() - 1) throw std::out_of_range("lemma_div_check: k outside 1..n-1");
  Certificate cert("lemma_div", k);
  const Poly dividend = lemma_div_dividend(fam, k);
  const auto [q, r] = divrem(dividend, fam.P_at(k));
  cert.check("remainder is zero", r.is_zero(),
             r.is_zero() ? std::string{} : "remainder degree " + std::to_string(r.degree()));
  cert.evidence["quotient"] = q;
  cert.evidence["dividend_degree"] = dividend.degree();
  return cert;
}

}  // namespace noricert
