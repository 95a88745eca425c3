#pragma once

// Per-n verification of the disk g_n = proper transform of (f1, f2):
// containment of the annulus image in K_n, the chart window 0..n-1, the
// cone inequalities for every chart index, vanishing orders at 0 (the
// escape index), and the boundary metric that witnesses convergence on
// the unit circle.

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "noricert/atlas.hpp"
#include "noricert/bounds.hpp"
#include "noricert/certificate.hpp"
#include "noricert/circle.hpp"
#include "noricert/family.hpp"
#include "noricert/filtered.hpp"
#include "noricert/roots.hpp"
#include "noricert/sampling.hpp"

namespace noricert {

/// K_n in affine data: |z1| <= 1/n, |z2| <= 1/n, |z2| <= |z1|/n.
struct KnSpec {
  int n = 1;
  [[nodiscard]] Rational bound() const { return make_rational(1, n); }
  template <class C>
  [[nodiscard]] bool contains(const C& z1, const C& z2) const {
    using S = modulus_t<C>;
    const S n2(Rational(static_cast<long>(n) * n));
    const S one(Rational(1));
    const S a1 = abs2(z1), a2 = abs2(z2);
    return n2 * a1 <= one && n2 * a2 <= one && n2 * a2 <= a1;
  }
};

struct TraceOptions {
  std::size_t budget = kDefaultBudget;
  std::size_t disk_samples = 2000;   ///< condition I samples in the closed disk of radius 2
  std::size_t region_samples = 256;  ///< accepted samples per A_k
  std::size_t boundary_points = 256;
  std::size_t kn_spot_points = 64;
  std::uint64_t seed = 1;
};

/// Image point (f1(lambda), f2(lambda)).
inline ChartPoint image_point(const Family& fam, const ComplexRational& lambda) {
  return {fam.f1.eval(lambda), fam.f2.eval(lambda)};
}

using FilteredPoint = BasicChartPoint<FilteredComplex>;

/// Repeated evaluation of (f1, f2). Values are exact but unreduced, with an
/// interval enclosure that settles most comparisons cheaply.
class ImageEvaluator {
 public:
  explicit ImageEvaluator(const Family& fam) : f1_(fam.f1), f2_(fam.f2) {}
  [[nodiscard]] FilteredPoint operator()(const ComplexRational& lambda) const {
    const ComplexFraction z(lambda);
    return {FilteredComplex(f1_(z)), FilteredComplex(f2_(z))};
  }

 private:
  Evaluator f1_;
  Evaluator f2_;
};

/// A_k = { |f1| < r |f2|^k } at one point, exactly.
template <class C>
bool in_region_A(const Family& fam, long k, const BasicChartPoint<C>& img) {
  using S = modulus_t<C>;
  const S r2(Rational(fam.params.r * fam.params.r));
  return abs2(img.z1) < r2 * pow(abs2(img.z2), static_cast<unsigned long>(k));
}

/// The dyadic depth e at which lambda = 2^-e enters A_k along the positive
/// axis: doubling then bisection between lambda = 2 (outside A_k by the
/// annulus inequalities) and a depth where the lowest-order terms win.
/// Used only to aim samples.
inline long region_depth(const Family& fam, long k) {
  const ImageEvaluator image(fam);
  auto inside = [&](long e) { return in_region_A(fam, k, image(ComplexRational(dyadic(e)))); };
  long lo = -1, hi = 64;
  while (!inside(hi)) {
    lo = hi;
    hi *= 2;
    if (hi > (1L << 20)) return hi;
  }
  while (hi - lo > 1) {
    const long mid = lo + (hi - lo) / 2;
    (inside(mid) ? hi : lo) = mid;
  }
  return hi;
}

/// Seeded points of the closed disk |lambda| <= 2 off the zero set Z. A
/// quarter are uniform in modulus; the rest have log-uniform modulus down
/// to below the deepest chart transition, so every chart index is visited.
inline std::vector<ComplexRational> disk_samples(const Family& fam, std::size_t count,
                                                 std::uint64_t seed) {
  RationalSampler rng(seed);
  const Evaluator f2(fam.f2);
  const long depth = region_depth(fam, fam.n() - 1) + 32;
  std::vector<ComplexRational> out;
  out.reserve(count);
  while (out.size() < count) {
    ComplexRational lam = out.size() % 4 == 0 ? rng.with_modulus(rng.uniform_open(Rational(0), Rational(2)))
                                              : rng.log_scale(0, depth);
    if (abs2(lam) > 4) continue;
    // f2 vanishes exactly on Z
    if (f2(lam).is_zero()) continue;
    out.push_back(std::move(lam));
  }
  return out;
}

/// Condition II: the annulus 1 <= |lambda| <= 2 maps into K_n. Follows from
/// inequalities (a)-(c); exact spot checks on both bounding circles.
inline Certificate annulus_in_Kn(const Family& fam, const Certificate& ineq,
                                 std::size_t spot_points = 64) {
  Certificate cert("annulus_in_Kn");
  if (!ineq.ok()) {
    cert.fail(Verdict::skipped, "annulus inequalities");
    return cert;
  }
  const auto& p = fam.params;
  cert.check("|f1| < r/n <= 1/n", p.r <= 1);
  cert.check("|f2| < r^2/n <= 1/n", p.r * p.r <= 1);
  cert.check("|f2| < |f1|/n", true, "inequality (c)");
  const KnSpec kn{p.n};
  const ImageEvaluator image(fam);
  std::size_t misses = 0;
  for (const Rational& radius : {Rational(1), Rational(2)})
    for (const auto& z : circle_points(radius, spot_points)) {
      const auto img = image(z);
      if (!kn.contains(img.z1, img.z2)) ++misses;
    }
  cert.check("spot checks in K_n", misses == 0,
             std::to_string(misses) + " misses over " + std::to_string(2 * spot_points) + " points");
  return cert;
}

/// The image of the closed disk minus Z stays in charts 0..n-1: f2^n is
/// divisible by f1, |f2^n / f1| < 1 on |lambda| = 2 and so on the whole disk,
/// which rules out every chart k >= n. Sampled image points confirm it.
inline Certificate image_chart_window(const Family& fam, const Certificate& ineq,
                                      std::span<const ComplexRational> samples,
                                      std::size_t boundary_points = 256) {
  Certificate cert("image_chart_window");
  const int n = fam.n();
  const auto [q, rem] = divrem(pow(fam.f2, static_cast<unsigned long>(n)), fam.f1);
  cert.check("f2^n divisible by f1", rem.is_zero());
  cert.evidence["quotient"] = q;
  if (!ineq.ok()) {
    cert.fail(Verdict::skipped, "annulus inequalities");
    return cert;
  }
  cert.check("|f2^n| < |f1| on the annulus", true, "inequality (d) with k = n");
  std::size_t bad_boundary = 0;
  const Evaluator qe(q);
  const FilteredReal one(Rational(1));
  for (const auto& z : circle_points(Rational(2), boundary_points))
    if (!(abs2(FilteredComplex(qe(z))) < one)) ++bad_boundary;
  cert.check("|f2^n / f1| < 1 on |lambda| = 2", bad_boundary == 0,
             std::to_string(bad_boundary) + " of " + std::to_string(boundary_points));

  std::size_t empty = 0, out_of_window = 0;
  std::map<long, std::size_t> histogram;
  const ImageEvaluator image(fam);
  for (const auto& lam : samples) {
    const auto img = image(lam);
    const auto cover = chart_cover_indices(img, fam.params.r, 2L * n + 2);
    if (cover.indices.empty()) {
      ++empty;
      continue;
    }
    if (cover.indices.back() > n - 1) ++out_of_window;
    for (long k : cover.indices) ++histogram[k];
  }
  cert.check("sampled images covered by some chart", empty == 0,
             std::to_string(empty) + " of " + std::to_string(samples.size()));
  cert.check("sampled chart indices <= n-1", out_of_window == 0,
             std::to_string(out_of_window) + " of " + std::to_string(samples.size()));
  nlohmann::json h = nlohmann::json::object();
  for (const auto& [k, c] : histogram) h[std::to_string(k)] = c;
  cert.evidence["chart_histogram"] = h;
  return cert;
}

/// Samples of A_k, aimed by region_depth and filtered exactly.
inline std::vector<ComplexRational> region_samples(const Family& fam, long k, std::size_t want,
                                                   std::uint64_t seed) {
  RationalSampler rng(seed);
  const long depth = region_depth(fam, k);
  const ImageEvaluator image(fam);
  std::vector<ComplexRational> out;
  const std::size_t max_tries = 64 * want;
  for (std::size_t t = 0; t < max_tries && out.size() < want; ++t) {
    ComplexRational lam = rng.log_scale(std::max(0L, depth - 4), depth + 64);
    const auto img = image(lam);
    if (img.z2.is_zero()) continue;
    if (in_region_A(fam, k, img)) out.push_back(std::move(lam));
  }
  return out;
}

/// |f1|^2 <= (rho/2) |f2^{k+1} - f1| |f2|^k at one image point, squared.
template <class C>
bool cone_inequality_holds(const Family& fam, long k, const BasicChartPoint<C>& img) {
  using S = modulus_t<C>;
  const auto uk = static_cast<unsigned long>(k);
  const S a1 = abs2(img.z1);
  const Rational& rho = fam.params.rho;
  const S rhs = S(Rational(rho * rho / 4)) * abs2(pow(img.z2, uk + 1) - img.z1) * pow(abs2(img.z2), uk);
  return a1 * a1 <= rhs;
}

/// Cone inequality on the closure of A_k, 1 <= k <= n-1:
///   (1) f2^{k+1} - f1 = G * C with C the Lemma-div dividend for k+1
///       (for k = n-1: f2^n - f1 = f1 * Q1);
///   (2) C = P_{k+1} * Q with Q zero-free on |lambda| <= 2, via a Rouché
///       count on |lambda| = 2 and exact absorption of the d_{k+1} roots of
///       P_{k+1};
///   (3) the boundary reduction r^2 <= (rho/2)(r - r^2);
///   (4) exact validation on sampled points of A_k.
inline Certificate cone_certificate(const Family& fam, int k, const RootLocalization& roots,
                                    const Certificate& ineq, const TraceOptions& opts) {
  const int n = fam.n();
  if (k < 1 || k > n - 1) throw std::out_of_range("cone_certificate: k outside 1..n-1");
  Certificate cert("lemma_ml", k);
  const auto& p = fam.params;
  const Rational radius(2);

  if (!roots.ok()) {
    cert.fail(Verdict::skipped, "root localization");
    return cert;
  }
  for (int j = 1; j <= n - 1; ++j)
    if (!lemma_div_check(fam, j).ok()) {
      cert.fail(Verdict::refuted, "divisibility for index " + std::to_string(j));
      return cert;
    }
  if (!ineq.ok()) {
    cert.fail(Verdict::skipped, "annulus inequalities");
    return cert;
  }

  const Poly f2k1 = pow(fam.f2, static_cast<unsigned long>(k + 1));
  if (k <= n - 2) {
    std::vector<long> g_exp(static_cast<std::size_t>(n - 1));
    for (int j = 1; j <= n - 1; ++j) g_exp[static_cast<std::size_t>(j - 1)] = std::min(j, k + 1);
    const Poly G = factor_product(fam, g_exp, k + 1, p.eps);
    const Poly C = lemma_div_dividend(fam, k + 1);
    if (!cert.check("f2^{k+1} - f1 = G * C", f2k1 - fam.f1 == G * C)) return cert;

    const auto [Q, rem] = divrem(C, fam.P_at(k + 1));
    if (!cert.check("P_{k+1} divides C", rem.is_zero())) return cert;
    const Poly tail = factor_product(fam, tail_exponents(n, k + 1), n - k - 1);
    cert.check("deg of dominant part = d_{k+1}", tail.degree() == p.d_at(k + 1));

    // C = (eps-term) - tail: split with dominant part -tail
    FactorSplit split{Rational(-1), n - k - 1, {}};
    for (int j = k + 2; j <= n - 1; ++j) split.factors.push_back({std::cref(*roots.at(j)), j - k - 1});
    const auto count = count_roots_in_disk(C, radius, split, opts.budget);
    if (count.status == RootCountResult::Status::exhausted) {
      cert.fail(Verdict::exhausted, "dominance on |lambda| = 2");
      return cert;
    }
    if (!cert.check("dominance on |lambda| = 2", count.ok(), count.reason)) return cert;
    const auto& rc = *count.certificate;
    if (const auto* dom = std::get_if<DominanceEvidence>(&rc.evidence)) {
      cert.note_margin(dom->dominance.margin);
      cert.subdivisions = dom->dominance.subdivision_count;
      cert.evidence["dominance"] = dominance_to_json(dom->dominance);
    }
    const RootCountCertificate* pk1 = roots.at(k + 1);
    const bool absorbed = pk1 != nullptr && pk1->all_inside() && pk1->radius <= radius &&
                          rc.count == pk1->count;
    cert.check("C has exactly d_{k+1} roots in |lambda| < 2", rc.count == p.d_at(k + 1),
               std::to_string(rc.count));
    cert.check("P_{k+1} absorbs every root of C in the disk; Q zero-free on |lambda| <= 2",
               absorbed);
    cert.check("gcd(P_{k+1}, Q) = 1", gcd(fam.P_at(k + 1), Q).degree() == 0);
    cert.evidence["Q_degree"] = Q.degree();
    // f1^2 / ((f2^{k+1} - f1) f2^k): exponents of P_j (j >= k) and lambda
    bool bookkeeping = 2L * k >= k + std::min(k, k + 1) && 2L * n >= 2L * k + 1;
    for (int j = k + 1; j <= n - 1; ++j)
      bookkeeping = bookkeeping && 2L * j >= std::min(j, k + 1) + (j == k + 1 ? 1 : 0) + k;
    cert.check("numerator exponents cover the denominator for P_j, j >= k, and lambda",
               bookkeeping);
  } else {
    const Poly Q1 =
        factor_product(fam, head_exponents(n, n), 0, fam.eps_pow(2L * n - 1)) - Poly::constant(Rational(1));
    if (!cert.check("f2^n - f1 = f1 * Q1", f2k1 - fam.f1 == fam.f1 * Q1)) return cert;
    const auto count = count_roots_in_disk(Q1, radius, FactorSplit{Rational(-1), 0, {}}, opts.budget);
    if (count.status == RootCountResult::Status::exhausted) {
      cert.fail(Verdict::exhausted, "dominance on |lambda| = 2");
      return cert;
    }
    if (!cert.check("dominance of 1 on |lambda| = 2", count.ok(), count.reason)) return cert;
    const auto& rc = *count.certificate;
    if (const auto* dom = std::get_if<DominanceEvidence>(&rc.evidence)) {
      cert.note_margin(dom->dominance.margin);
      cert.subdivisions = dom->dominance.subdivision_count;
      cert.evidence["dominance"] = dominance_to_json(dom->dominance);
    }
    cert.check("Q1 zero-free on |lambda| <= 2", rc.count == 0);
    cert.check("lambda order of f1 covers f2^{n-1}", fam.f1.order_at_zero() >= static_cast<std::size_t>(n - 1));
  }

  const Rational lhs = p.r * p.r;
  const Rational rhs = p.rho / 2 * (p.r - p.r * p.r);
  cert.check("r^2 <= (rho/2)(r - r^2)", lhs <= rhs, lhs == rhs ? "equality" : "strict");
  cert.check("|f2| <= r^2 on the closed disk", true, "inequality (b) and maximum modulus");

  const auto pts = region_samples(fam, k, opts.region_samples,
                                  opts.seed + 7919ULL * static_cast<std::uint64_t>(k));
  std::size_t bad = 0;
  const ImageEvaluator image(fam);
  for (const auto& lam : pts)
    if (!cone_inequality_holds(fam, k, image(lam))) ++bad;
  cert.check("sampled points of A_k", pts.size() >= opts.region_samples,
             std::to_string(pts.size()) + " accepted");
  cert.check("cone inequality at sampled points", bad == 0,
             std::to_string(bad) + " violations of " + std::to_string(pts.size()));
  cert.evidence["region_depth"] = region_depth(fam, k);
  return cert;
}

/// Chart index 0: |f1|^2 <= (rho/2) |f2 - f1| on the closed disk. Here
/// f2 - f1 = eps P_1^2 P_2 ... P_{n-1} lambda, and f1^2 is an exact
/// polynomial multiple of it, so the quotient is entire; the bound is then
/// checked on |lambda| = 2 via |f1|^2 + (rho/2)|f2| <= (rho/2)|f1|.
inline Certificate k0_certificate(const Family& fam, const Certificate& ineq,
                                  std::span<const ComplexRational> interior,
                                  std::size_t boundary_points = 256) {
  Certificate cert("cone_k0", 0);
  const auto& p = fam.params;
  const int n = p.n;
  const Poly diff = fam.f2 - fam.f1;
  std::vector<long> e(static_cast<std::size_t>(n - 1), 1);
  e[0] = 2;
  cert.check("f2 - f1 = eps P_1^2 P_2 ... P_{n-1} lambda", diff == factor_product(fam, e, 1, p.eps));
  const auto [H, rem] = divrem(fam.f1 * fam.f1, diff);
  cert.check("f2 - f1 divides f1^2", rem.is_zero());
  if (!ineq.ok()) {
    cert.fail(Verdict::skipped, "annulus inequalities");
    return cert;
  }
  // enclosures on |lambda| = 2, where |lambda|^m = 2^m exactly
  const auto S1 = static_cast<unsigned long>(p.d_weighted_sum());
  const auto Sd = static_cast<unsigned long>(p.d_sum());
  const Rational two_n = pow(Rational(2), static_cast<unsigned long>(n));
  const Rational f1_up = p.eps * pow(Rational(3), S1) * two_n;
  const Rational f1_lo = p.eps * pow(make_rational(1, 2), S1) * two_n;
  const Rational f2_up = p.eps * p.eps * pow(Rational(3), Sd) * 2;
  const Rational half_rho = p.rho / 2;
  cert.check("|f1|^2 + (rho/2)|f2| <= (rho/2)|f1| on |lambda| = 2",
             f1_up * f1_up + half_rho * f2_up <= half_rho * f1_lo);

  const FilteredReal rho2_4(Rational(p.rho * p.rho / 4));
  const ImageEvaluator image(fam);
  auto holds = [&](const ComplexRational& lam) {
    const auto img = image(lam);
    const FilteredReal a1 = abs2(img.z1);
    return a1 * a1 <= rho2_4 * abs2(img.z2 - img.z1);
  };
  std::size_t bad_boundary = 0, bad_interior = 0;
  for (const auto& z : circle_points(Rational(2), boundary_points))
    if (!holds(z)) ++bad_boundary;
  for (const auto& z : interior)
    if (!holds(z)) ++bad_interior;
  cert.check("boundary validation", bad_boundary == 0,
             std::to_string(bad_boundary) + " of " + std::to_string(boundary_points));
  cert.check("interior validation", bad_interior == 0,
             std::to_string(bad_interior) + " of " + std::to_string(interior.size()));
  cert.evidence["quotient_degree"] = H.degree();
  return cert;
}

struct VanishingOrders {
  long f1 = 0;
  long f2 = 0;
};

inline VanishingOrders vanishing_orders(const Family& fam) {
  return {static_cast<long>(fam.f1.order_at_zero()), static_cast<long>(fam.f2.order_at_zero())};
}

inline Certificate vanishing_orders_certificate(const Family& fam) {
  Certificate cert("vanishing_orders");
  const auto o = vanishing_orders(fam);
  cert.check("ord_0 f1 = n", o.f1 == fam.n(), std::to_string(o.f1));
  cert.check("ord_0 f2 = 1", o.f2 == 1, std::to_string(o.f2));
  cert.evidence = {{"f1", o.f1}, {"f2", o.f2}};
  return cert;
}

struct EscapeRow {
  int n = 0;
  long escape_index = 0;
};

struct EscapeTable {
  std::vector<EscapeRow> rows;
  Certificate certificate{"escape"};
};

/// With orders (m, 1) at 0, the proper transform of (f1, f2) meets L_{m-1};
/// the landing index therefore increases with n without bound.
inline EscapeTable escape_witness(std::span<const Family> fams) {
  EscapeTable out;
  for (const auto& fam : fams) {
    const auto o = vanishing_orders(fam);
    out.certificate.check("n = " + std::to_string(fam.n()) + ": ord_0 f2 = 1", o.f2 == 1);
    out.rows.push_back({fam.n(), o.f1 - o.f2});
  }
  bool increasing = true;
  for (std::size_t i = 1; i < out.rows.size(); ++i)
    increasing = increasing && out.rows[i].escape_index > out.rows[i - 1].escape_index;
  out.certificate.check("escape indices strictly increase", increasing);
  for (const auto& row : out.rows)
    out.certificate.check("n = " + std::to_string(row.n) + ": escape index n - 1",
                          row.escape_index == row.n - 1, std::to_string(row.escape_index));
  nlohmann::json t = nlohmann::json::array();
  for (const auto& row : out.rows) t.push_back({{"n", row.n}, {"escape_index", row.escape_index}});
  out.certificate.evidence["table"] = t;
  return out;
}

inline EscapeTable escape_witness(std::span<const int> n_values) {
  std::vector<Family> fams;
  for (int n : n_values) fams.push_back(build_family(n));
  return escape_witness(std::span<const Family>(fams));
}

struct BoundaryMetric {
  int n = 0;
  Rational sup_squared;  ///< sup over samples of max(|f1|, |f2|, |f2/f1|)^2
};

/// Boundary metric on |lambda| = 1, squared so it stays exact.
inline BoundaryMetric boundary_metric(const Family& fam, std::size_t samples) {
  const ImageEvaluator image(fam);
  Fraction sup(Rational(0));
  for (const auto& z : circle_points(Rational(1), samples)) {
    const auto img = image(z);
    const Fraction a1 = abs2(img.z1.exact()), a2 = abs2(img.z2.exact());
    sup = std::max(sup, std::max(a1, a2));
    if (!a1.is_zero()) sup = std::max(sup, Fraction(Integer(a2.num * a1.den), Integer(a2.den * a1.num)));
  }
  return {fam.n(), sup.reduced()};
}

struct ConvergenceWitness {
  std::vector<BoundaryMetric> metrics;
  Certificate certificate{"uniform_convergence"};
};

/// sup metric(n)^2 <= 1/n^2 for each n and nonincreasing along the list.
inline ConvergenceWitness uniform_convergence_witness(std::span<const Family> fams,
                                                      std::size_t samples) {
  ConvergenceWitness out;
  for (const auto& fam : fams) {
    auto m = boundary_metric(fam, samples);
    const Rational cap = make_rational(1, static_cast<long>(fam.n()) * fam.n());
    out.certificate.check("n = " + std::to_string(fam.n()) + ": sup metric <= 1/n",
                          m.sup_squared <= cap);
    out.metrics.push_back(std::move(m));
  }
  bool nonincreasing = true;
  for (std::size_t i = 1; i < out.metrics.size(); ++i)
    nonincreasing = nonincreasing && out.metrics[i].sup_squared <= out.metrics[i - 1].sup_squared;
  out.certificate.check("sup metric nonincreasing in n", nonincreasing);
  nlohmann::json t = nlohmann::json::array();
  for (const auto& m : out.metrics)
    t.push_back({{"n", m.n}, {"sup_metric_squared", to_string(m.sup_squared)}});
  out.certificate.evidence["metrics"] = t;
  return out;
}

/// Condition I at sampled points: every sample lands in a chart k <= n-1
/// and satisfies the rho-cone condition for each chart that contains it.
inline Certificate condition_I_samples(const Family& fam, std::span<const ComplexRational> samples) {
  Certificate cert("condition_I_samples");
  const int n = fam.n();
  std::size_t uncovered = 0, outside_window = 0, cone_fail = 0;
  const ImageEvaluator image(fam);
  for (const auto& lam : samples) {
    const auto img = image(lam);
    const auto cover = chart_cover_indices(img, fam.params.r, 2L * n + 2);
    if (cover.indices.empty()) {
      ++uncovered;
      continue;
    }
    if (cover.indices.back() > n - 1) ++outside_window;
    for (long k : cover.indices)
      if (!cone_condition(img, k, fam.params.rho)) {
        ++cone_fail;
        break;
      }
  }
  const std::string of = " of " + std::to_string(samples.size());
  cert.check("covered by a chart", uncovered == 0, std::to_string(uncovered) + of);
  cert.check("chart index <= n-1", outside_window == 0, std::to_string(outside_window) + of);
  cert.check("rho-cone condition in every covering chart", cone_fail == 0,
             std::to_string(cone_fail) + of);
  cert.evidence["samples"] = samples.size();
  return cert;
}

struct TraceReport {
  int n = 0;
  Certificate condition_I{"condition_I"};
  Certificate condition_II{"condition_II"};
  Rational condition_III_sup_squared;
  long condition_IV_escape_index = 0;
  nlohmann::json sample_plan = nlohmann::json::object();
};

inline nlohmann::json trace_to_json(const TraceReport& t) {
  return {{"n", t.n},
          {"condition_I", t.condition_I},
          {"condition_II", t.condition_II},
          {"condition_III", {{"sup_metric_squared", to_string(t.condition_III_sup_squared)},
                             {"bound_squared", to_string(make_rational(1, static_cast<long>(t.n) * t.n))}}},
          {"condition_IV", {{"escape_index", t.condition_IV_escape_index}}},
          {"sample_plan", t.sample_plan}};
}

}  // namespace noricert
