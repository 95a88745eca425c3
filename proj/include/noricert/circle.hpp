#pragma once

// Certified modulus bounds for polynomials on circles |lambda| = R.
//
// Points are placed exactly on the circle with the half-angle map
//   lambda(t) = s * R * ((1 - t^2) + 2 i t) / (1 + t^2),   t in [-1, 1],
// using chart s = +1 for the right half and s = -1 for the left half. On a
// parameter interval [t0, t1] the speed |lambda'(t)| = 2R / (1 + t^2) is at
// most 2R / (1 + tau^2) with tau = min |t|, so every point of the arc lies
// within delta = speed * (t1 - t0) / 2 of the image of the midpoint. A
// polynomial with coefficients a_i is M-Lipschitz on the closed disk with
// M = sum i |a_i| R^(i-1), which turns one exact midpoint value into an
// enclosure of |p| over the whole arc.

#include <json.hpp>

#include <cstddef>
#include <deque>
#include <optional>
#include <queue>
#include <stdexcept>
#include <vector>

#include "noricert/poly.hpp"
#include "noricert/rational.hpp"

namespace noricert {

inline constexpr std::size_t kDefaultBudget = std::size_t{1} << 16;

struct CircleSpec {
  Rational radius;

  explicit CircleSpec(Rational r) : radius(std::move(r)) {
    if (radius <= 0) throw std::invalid_argument("circle radius must be positive");
  }
};

/// The parameter interval [t0, t1] of one of the two half-circle charts.
struct Arc {
  int chart = 0;  ///< 0: lambda(t), 1: -lambda(t)
  Rational t0;
  Rational t1;

  [[nodiscard]] Rational mid() const { return (t0 + t1) / 2; }
  [[nodiscard]] std::pair<Arc, Arc> split() const {
    const Rational m = mid();
    return {Arc{chart, t0, m}, Arc{chart, m, t1}};
  }
};

/// The exact point of the circle at parameter t in the given chart.
inline ComplexRational circle_point(const Rational& radius, int chart, const Rational& t) {
  const Rational den = 1 + t * t;
  ComplexRational z{radius * (1 - t * t) / den, radius * 2 * t / den};
  return chart == 0 ? z : -z;
}

/// Initial cover of the whole circle: two charts, each cut at t = 0.
inline std::vector<Arc> initial_arcs() {
  const Rational m1(-1), zero(0), p1(1);
  return {Arc{0, m1, zero}, Arc{0, zero, p1}, Arc{1, m1, zero}, Arc{1, zero, p1}};
}

/// Distance bound from the midpoint image to any point of the arc.
inline Rational arc_reach(const Rational& radius, const Arc& arc) {
  Rational tau(0);
  if (arc.t0 > 0) tau = arc.t0;
  else if (arc.t1 < 0) tau = -arc.t1;
  const Rational speed = 2 * radius / (1 + tau * tau);
  return speed * (arc.t1 - arc.t0) / 2;
}

/// M = sum i |a_i| R^(i-1), a bound for |p'| on the closed disk of radius R.
inline Rational lipschitz_bound(const Poly& p, const Rational& radius) {
  Rational m(0);
  Rational rpow(1);
  const auto c = p.coefficients();
  for (std::size_t i = 1; i < c.size(); ++i) {
    m += Rational(static_cast<unsigned long>(i)) * abs(c[i]) * rpow;
    rpow *= radius;
  }
  return m;
}

/// `count` distinct exact points of the circle spread over both charts.
inline std::vector<ComplexRational> circle_points(const Rational& radius, std::size_t count) {
  std::vector<ComplexRational> out;
  out.reserve(count);
  const std::size_t per_chart = (count + 1) / 2;
  for (int chart = 0; chart < 2 && out.size() < count; ++chart)
    for (std::size_t j = 0; j < per_chart && out.size() < count; ++j) {
      const Rational t = make_rational(static_cast<long>(2 * j + 1), static_cast<long>(per_chart)) - 1;
      out.push_back(circle_point(radius, chart, t));
    }
  return out;
}

namespace detail {

/// Enclosure of |p| over an arc, from one exact midpoint value.
struct ArcEnclosure {
  Rational mid_abs2;   ///< exact |p(mid)|^2
  Rational lower;      ///< |p| >= lower on the arc (may be <= 0: no information)
  Rational lower_sq;   ///< lower^2 when lower > 0, else 0
  Rational upper;      ///< |p| <= upper on the arc
};

inline ArcEnclosure enclose(const Poly& p, const Rational& lipschitz, const Rational& reach,
                            const ComplexRational& mid) {
  ArcEnclosure e;
  e.mid_abs2 = abs2(p.eval(mid));
  const Rational spread = lipschitz * reach;
  if (spread == 0) {
    e.lower_sq = e.mid_abs2;
    e.lower = sqrt_lower(e.mid_abs2);
    e.upper = sqrt_upper(e.mid_abs2);
    return e;
  }
  e.lower = sqrt_lower(e.mid_abs2) - spread;
  e.lower_sq = e.lower > 0 ? Rational(e.lower * e.lower) : Rational(0);
  e.upper = sqrt_upper(e.mid_abs2) + spread;
  return e;
}

}  // namespace detail

struct MinModulusResult {
  enum class Status {
    certified,       ///< |p|^2 >= bound everywhere on the circle, bound > 0
    exhausted,       ///< budget ran out before positivity was established
    zero_on_circle,  ///< an exact root was hit; bound is 0
  };
  Status status = Status::exhausted;
  Rational bound;  ///< lower bound for |p|^2 on the circle
  std::size_t arcs = 0;
  std::size_t evaluations = 0;
  std::optional<ComplexRational> witness;  ///< root found on the circle

  [[nodiscard]] bool ok() const { return status == Status::certified; }
};

struct MinModulusOptions {
  std::size_t budget = kDefaultBudget;
  /// Refinement stops once the certified bound is within this relative
  /// gap of the smallest sampled value.
  Rational tolerance = make_rational(1, 64);
};

/// A certified lower bound L with |p(lambda)|^2 >= L on the whole circle.
/// Exhausting the budget is reported as such, never as a bound.
inline MinModulusResult circle_min_modulus_lower_bound(const Poly& p, const CircleSpec& circle,
                                                       const MinModulusOptions& opts = {}) {
  if (p.is_zero()) throw std::invalid_argument("minimum modulus of the zero polynomial");
  const Rational& R = circle.radius;
  const Rational M = lipschitz_bound(p, R);

  struct Node {
    Arc arc;
    detail::ArcEnclosure enc;
    std::size_t seq;
  };
  auto cmp = [](const Node& a, const Node& b) {
    if (a.enc.lower_sq != b.enc.lower_sq) return a.enc.lower_sq > b.enc.lower_sq;
    return a.seq > b.seq;
  };
  std::priority_queue<Node, std::vector<Node>, decltype(cmp)> heap(cmp);

  MinModulusResult res;
  std::size_t seq = 0;
  std::optional<Rational> smallest_sample;
  auto evaluate = [&](const Arc& arc) -> bool {
    const ComplexRational mid = circle_point(R, arc.chart, arc.mid());
    auto enc = detail::enclose(p, M, arc_reach(R, arc), mid);
    ++res.evaluations;
    if (enc.mid_abs2 == 0) {
      res.status = MinModulusResult::Status::zero_on_circle;
      res.bound = 0;
      res.witness = mid;
      return false;
    }
    if (!smallest_sample || enc.mid_abs2 < *smallest_sample) smallest_sample = enc.mid_abs2;
    heap.push(Node{arc, std::move(enc), seq++});
    return true;
  };

  for (const Arc& a : initial_arcs())
    if (!evaluate(a)) return res;

  const Rational keep = 1 - opts.tolerance;
  for (;;) {
    const Node& worst = heap.top();
    const bool positive = worst.enc.lower > 0 || worst.enc.lower_sq > 0;
    if (positive && worst.enc.lower_sq >= keep * *smallest_sample) break;
    if (res.evaluations + 2 > opts.budget) {
      if (!positive) {
        res.status = MinModulusResult::Status::exhausted;
        res.arcs = heap.size();
        return res;
      }
      break;
    }
    const Node node = heap.top();
    heap.pop();
    auto [left, right] = node.arc.split();
    if (!evaluate(left) || !evaluate(right)) return res;
  }
  res.status = MinModulusResult::Status::certified;
  res.bound = heap.top().enc.lower_sq;
  res.arcs = heap.size();
  return res;
}

struct DominanceCertificate {
  Poly dominant;
  Poly dominated;
  Rational radius;
  std::size_t subdivision_count = 0;  ///< leaf arcs covering the circle
  std::size_t evaluations = 0;
  /// min over arcs of (certified min |dominant|^2 - certified max |dominated|^2)
  Rational margin;
  Rational narrowest_arc;  ///< smallest parameter width among the leaves
};

struct DominanceResult {
  enum class Status { certified, refuted, exhausted };
  Status status = Status::exhausted;
  std::optional<DominanceCertificate> certificate;
  std::optional<ComplexRational> counterexample;  ///< exact point with |dominated| >= |dominant|
  std::size_t evaluations = 0;

  [[nodiscard]] bool ok() const { return status == Status::certified; }
};

inline const char* to_string(DominanceResult::Status s) {
  switch (s) {
    case DominanceResult::Status::certified: return "certified";
    case DominanceResult::Status::refuted: return "refuted";
    case DominanceResult::Status::exhausted: return "exhausted";
  }
  return "unknown";
}

/// Certifies |dominated| < |dominant| on the whole circle, arc by arc, or
/// returns an exact refuting point, or reports budget exhaustion. Arcs are
/// processed breadth first, so the outcome is a function of the inputs.
inline DominanceResult certify_dominance(const Poly& dominant, const Poly& dominated,
                                         const CircleSpec& circle,
                                         std::size_t budget = kDefaultBudget) {
  if (dominant.is_zero() || dominated.is_zero())
    throw std::invalid_argument("dominance certificate needs two nonzero polynomials");
  const Rational& R = circle.radius;
  const Rational MA = lipschitz_bound(dominant, R);
  const Rational MB = lipschitz_bound(dominated, R);

  DominanceResult res;
  DominanceCertificate cert{dominant, dominated, R, 0, 0, Rational(0), Rational(2)};
  std::optional<Rational> margin;
  std::deque<Arc> work;
  for (const Arc& a : initial_arcs()) work.push_back(a);

  while (!work.empty()) {
    if (res.evaluations >= budget) {
      res.status = DominanceResult::Status::exhausted;
      return res;
    }
    const Arc arc = work.front();
    work.pop_front();
    ++res.evaluations;
    const ComplexRational mid = circle_point(R, arc.chart, arc.mid());
    const Rational reach = arc_reach(R, arc);
    const auto a = detail::enclose(dominant, MA, reach, mid);
    const auto b = detail::enclose(dominated, MB, reach, mid);
    if (b.mid_abs2 >= a.mid_abs2) {
      res.status = DominanceResult::Status::refuted;
      res.counterexample = mid;
      return res;
    }
    if (a.lower > 0 && a.lower > b.upper) {
      const Rational m = a.lower_sq - b.upper * b.upper;
      if (!margin || m < *margin) margin = m;
      ++cert.subdivision_count;
      const Rational width = arc.t1 - arc.t0;
      if (width < cert.narrowest_arc) cert.narrowest_arc = width;
      continue;
    }
    auto [left, right] = arc.split();
    work.push_back(std::move(left));
    work.push_back(std::move(right));
  }
  cert.margin = *margin;
  cert.evaluations = res.evaluations;
  res.status = DominanceResult::Status::certified;
  res.certificate = std::move(cert);
  return res;
}

inline nlohmann::json dominance_to_json(const DominanceCertificate& c, bool with_polys = false) {
  nlohmann::json j{{"radius", to_string(c.radius)},
                   {"subdivision_count", c.subdivision_count},
                   {"evaluations", c.evaluations},
                   {"margin", to_string(c.margin)},
                   {"narrowest_arc", to_string(c.narrowest_arc)},
                   {"dominant_degree", c.dominant.degree()},
                   {"dominated_degree", c.dominated.degree()}};
  if (with_polys) {
    j["dominant"] = c.dominant;
    j["dominated"] = c.dominated;
  }
  return j;
}

}  // namespace noricert
