#pragma once

// Blow-up chart combinatorics in the base affine coordinates (z1, z2).
//
// Off the exceptional curves, the chart U_r^(k) is
//   |z2|^{k+2} < r |z1|  and  |z1| < r |z2|^k,
// and the cone neighbourhood adds
//   |z1|^2 < rho |z2^{k+1} - z1| |z2|^k.
// Every test compares squared moduli, so all predicates are exact.

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "noricert/rational.hpp"
#include "noricert/sampling.hpp"

namespace noricert {

/// A point in base affine coordinates. C is ComplexRational for reduced
/// exact values or ComplexFraction for unreduced polynomial images.
template <class C>
struct BasicChartPoint {
  C z1;
  C z2;

  [[nodiscard]] bool is_origin() const { return z1.is_zero() && z2.is_zero(); }
};

using ChartPoint = BasicChartPoint<ComplexRational>;
using ImagePoint = BasicChartPoint<ComplexFraction>;

inline nlohmann::json point_to_json(const ChartPoint& p) {
  return {{"z1", {to_string(p.z1.re), to_string(p.z1.im)}},
          {"z2", {to_string(p.z2.re), to_string(p.z2.im)}}};
}

template <class C>
using modulus_t = std::decay_t<decltype(abs2(std::declval<const C&>()))>;

namespace detail {

template <class C>
void require_off_origin(const BasicChartPoint<C>& p) {
  if (p.is_origin()) throw std::invalid_argument("chart query at the origin");
}

/// a2pk = |z2|^{2k}; all arguments squared moduli.
template <class S>
bool chart_membership_sq(const S& a1, const S& a2, const S& r2, const S& a2pk) {
  return a2pk * a2 * a2 < r2 * a1 && a1 < r2 * a2pk;
}

}  // namespace detail

/// Membership of (z1, z2) in U_r^(k) minus the exceptional set.
template <class C>
bool chart_membership(const BasicChartPoint<C>& p, const Rational& r, long k) {
  using S = modulus_t<C>;
  detail::require_off_origin(p);
  if (k < 0) throw std::invalid_argument("chart index must be nonnegative");
  const S a2 = abs2(p.z2);
  return detail::chart_membership_sq(abs2(p.z1), a2, S(Rational(r * r)),
                                     pow(a2, static_cast<unsigned long>(k)));
}

struct CoverResult {
  std::vector<long> indices;
  bool in_region = false;  ///< 0 < |z1| < r and |z2| < r^2

  [[nodiscard]] bool contiguous() const {
    for (std::size_t i = 1; i < indices.size(); ++i)
      if (indices[i] != indices[i - 1] + 1) return false;
    return true;
  }
};

/// All k <= k_max whose chart contains the point. Outside the covered
/// region the result is empty and in_region is false.
template <class C>
CoverResult chart_cover_indices(const BasicChartPoint<C>& p, const Rational& r, long k_max) {
  using S = modulus_t<C>;
  CoverResult out;
  const S a1 = abs2(p.z1);
  const S a2 = abs2(p.z2);
  const S r2(Rational(r * r));
  const S zero(Rational(0));
  out.in_region = a1 > zero && a1 < r2 && a2 < r2 * r2;
  if (!out.in_region) return out;
  // |z1| < r|z2|^k fails from some k on, since |z2| < 1; stop there
  S a2pk(Rational(1));
  for (long k = 0; k <= k_max; ++k) {
    if (!(a1 < r2 * a2pk)) break;
    if (a2pk * a2 * a2 < r2 * a1) out.indices.push_back(k);
    a2pk = a2pk * a2;
  }
  return out;
}

/// |z1|^2 < rho |z2^{k+1} - z1| |z2|^k, squared on both sides.
template <class C>
bool cone_condition(const BasicChartPoint<C>& p, long k, const Rational& rho) {
  using S = modulus_t<C>;
  detail::require_off_origin(p);
  const auto uk = static_cast<unsigned long>(k);
  const S a1 = abs2(p.z1);
  const S rhs = S(Rational(rho * rho)) * abs2(pow(p.z2, uk + 1) - p.z1) * pow(abs2(p.z2), uk);
  return a1 * a1 < rhs;
}

struct ChartVerdict {
  long k = 0;
  bool in_chart = false;
  bool in_cone = false;  ///< implies in_chart
};

template <class C>
std::vector<ChartVerdict> chart_verdicts(const BasicChartPoint<C>& p, const Rational& r,
                                         const Rational& rho, long k_max) {
  std::vector<ChartVerdict> out;
  for (long k = 0; k <= k_max; ++k) {
    const bool in = chart_membership(p, r, k);
    out.push_back({k, in, in && cone_condition(p, k, rho)});
  }
  return out;
}

struct DisjointnessReport {
  long j = 0;
  long k = 0;
  bool declined = false;
  std::string reason;
  std::size_t samples = 0;
  std::size_t in_first = 0;   ///< samples inside U^(j)
  std::size_t in_second = 0;  ///< samples inside U^(k)
  std::size_t chain_checked = 0;
  std::size_t chain_failures = 0;
  std::optional<ChartPoint> counterexample;

  [[nodiscard]] bool ok() const { return !declined && !counterexample && chain_failures == 0; }
};

/// Randomized search for a point of U_r^(j) and U_r^(k) with |j - k| >= 2.
/// Samples are aimed at both charts by drawing |z1| inside the interval
/// (|z2|^{m+2}/r, r|z2|^m) for m in {j, k}; a third of them are uniform in
/// the covered region. At every sample of U^(j) the contradiction chain is
/// re-verified: |z2| < r and r^2 |z2|^{k-j-2} <= r^{k-j} <= 1.
inline DisjointnessReport disjointness_search(const Rational& r, long j, long k,
                                              std::size_t samples, std::uint64_t seed) {
  DisjointnessReport rep;
  if (j > k) std::swap(j, k);
  rep.j = j;
  rep.k = k;
  if (j < 0 || k - j < 2) {
    rep.declined = true;
    rep.reason = "charts must satisfy |j - k| >= 2";
    return rep;
  }
  if (!(r > 0 && r <= 1)) {
    rep.declined = true;
    rep.reason = "r must lie in (0, 1]";
    return rep;
  }
  RationalSampler rng(seed);
  const Rational r2 = r * r;
  const Rational r4 = r2 * r2;
  const auto gap = static_cast<unsigned long>(k - j);
  for (std::size_t s = 0; s < samples; ++s) {
    ChartPoint p;
    const std::size_t mode = s % 3;
    if (mode == 2) {
      p.z1 = rng.in_disk(r);
      p.z2 = rng.in_disk(r2);
    } else {
      const long m = mode == 0 ? j : k;
      const Rational z2mod = rng.coin() ? rng.uniform_open(Rational(0), r)
                                        : rng.log_modulus(1, 64) * r / 2;
      const Rational lo = pow(z2mod, static_cast<unsigned long>(m + 2)) / r;
      const Rational hi = r * pow(z2mod, static_cast<unsigned long>(m));
      p.z2 = rng.with_modulus(z2mod);
      p.z1 = rng.with_modulus(lo < hi ? rng.uniform_open(lo, hi) : rng.uniform_open(Rational(0), r));
    }
    if (p.is_origin()) continue;
    ++rep.samples;
    const bool a = chart_membership(p, r, j);
    const bool b = chart_membership(p, r, k);
    rep.in_first += a;
    rep.in_second += b;
    if (a && b && !rep.counterexample) rep.counterexample = p;
    if (a) {
      ++rep.chain_checked;
      const Rational a2 = abs2(p.z2);
      // squared forms of |z2| < r and r^2 |z2|^{k-j-2} <= r^{k-j} <= 1
      const bool below_r = a2 < r2;
      const bool chain = r4 * pow(a2, gap - 2) <= pow(r2, gap) && pow(r2, gap) <= 1;
      if (!below_r || !chain) ++rep.chain_failures;
    }
  }
  return rep;
}

/// (x, y) -> the overlap coordinates of U^(k) and U^(k+1):
/// z2 = xy, z1^(k) = x^2 y, z1^(k+1) = x, and the fibre ratio x y^2.
inline bool overlap_predicate(const ComplexRational& x, const ComplexRational& y,
                              const Rational& r) {
  const Rational r2 = r * r;
  const ComplexRational z1k = x * x * y;
  const ComplexRational ratio = x * y * y;
  return abs2(y) < r2 && abs2(z1k) < r2 && abs2(ratio) < r2 && abs2(x) < r2;
}

inline bool in_polydisk(const ComplexRational& x, const ComplexRational& y, const Rational& r) {
  return abs2(x) < r * r && abs2(y) < r * r;
}

struct OverlapReport {
  bool declined = false;
  std::size_t inside = 0;
  std::size_t outside = 0;
  std::size_t base_checked = 0;  ///< samples also checked through base-coordinate charts
  std::size_t violations = 0;
  std::optional<std::pair<ComplexRational, ComplexRational>> counterexample;

  [[nodiscard]] bool ok() const { return !declined && violations == 0; }
};

/// The four overlap inequalities reduce to the polydisk |x| < r, |y| < r.
/// Checked in both directions on random points, and cross-checked against
/// chart_membership for k = 0, 1 at the base point (x^2 y, x y).
inline OverlapReport overlap_polydisk_check(const Rational& r, std::size_t samples,
                                            std::uint64_t seed) {
  OverlapReport rep;
  if (!(r > 0 && r < 1)) {
    rep.declined = true;
    return rep;
  }
  RationalSampler rng(seed);
  auto record = [&](const ComplexRational& x, const ComplexRational& y, bool expect_inside) {
    bool good = overlap_predicate(x, y, r) == expect_inside &&
                in_polydisk(x, y, r) == expect_inside;
    if (!x.is_zero() && !y.is_zero()) {
      ++rep.base_checked;
      const ChartPoint base{x * x * y, x * y};
      const bool both = chart_membership(base, r, 0) && chart_membership(base, r, 1);
      good = good && both == expect_inside;
    }
    if (!good) {
      ++rep.violations;
      if (!rep.counterexample) rep.counterexample = std::make_pair(x, y);
    }
  };
  for (std::size_t s = 0; s < samples; ++s) {
    if (s % 2 == 0) {
      record(rng.in_disk(r), rng.in_disk(r), true);
      ++rep.inside;
    } else {
      // |x| >= r or |y| >= r
      ComplexRational x = rng.in_disk(r);
      ComplexRational y = rng.in_disk(r);
      const Rational big = rng.coin() ? r : rng.uniform_open(r, 2 * r);
      (rng.coin() ? x : y) = rng.with_modulus(big);
      record(x, y, false);
      ++rep.outside;
    }
  }
  return rep;
}

/// A symmetric 2x2 integer matrix of intersection numbers.
struct IntersectionMatrix {
  long a11 = 0;
  long a12 = 0;
  long a21 = 0;
  long a22 = 0;
};

/// Sylvester: a11 < 0 and det > 0.
inline bool negative_definite(const IntersectionMatrix& m) {
  if (m.a12 != m.a21) throw std::invalid_argument("intersection matrix must be symmetric");
  return m.a11 < 0 && m.a11 * m.a22 - m.a12 * m.a21 > 0;
}

}  // namespace noricert
