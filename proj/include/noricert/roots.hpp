#pragma once

// Root counting in an open disk |lambda| < R by explicit Rouché splits.
//
// p is written as A - B with |B| < |A| certified on |lambda| = R, and A is
// a product whose root count is known exactly: a monomial c * lambda^m, or
// a product of factors that carry their own count certificates. No
// argument-principle integration is done anywhere.

#include <json.hpp>

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "noricert/circle.hpp"
#include "noricert/poly.hpp"

namespace noricert {

/// p equals its dominant product exactly: roots at the origin plus the
/// certified roots of the factors.
struct ExactFactorEvidence {
  long multiplicity_at_zero = 0;
  long factor_roots = 0;
};

struct DominanceEvidence {
  DominanceCertificate dominance;
  long dominant_count = 0;
  std::string split;  ///< "monomial" or "factored"
};

struct RootCountCertificate {
  Poly poly;
  Rational radius;
  long count = 0;
  std::variant<ExactFactorEvidence, DominanceEvidence> evidence;

  /// All roots lie strictly inside the disk.
  [[nodiscard]] bool all_inside() const { return count == poly.degree(); }
};

/// Split on the single monomial that can dominate on the circle.
struct MonomialSplit {};

/// Split with dominant part scalar * lambda^lambda_power * prod F_j^e_j,
/// where each F_j has a certificate placing all its roots inside a disk no
/// larger than the one being counted.
struct FactorSplit {
  struct Use {
    std::reference_wrapper<const RootCountCertificate> factor;
    long multiplicity = 1;
  };
  Rational scalar{1};
  long lambda_power = 0;
  std::vector<Use> factors;
};

using RootCountHint = std::variant<MonomialSplit, FactorSplit>;

struct RootCountResult {
  enum class Status {
    certified,
    inapplicable,  ///< the split does not dominate (a refuting point may be attached)
    exhausted,     ///< subdivision budget ran out
  };
  Status status = Status::inapplicable;
  std::optional<RootCountCertificate> certificate;
  std::optional<ComplexRational> counterexample;
  std::string reason;
  std::size_t evaluations = 0;

  [[nodiscard]] bool ok() const { return status == Status::certified; }
};

namespace detail {

inline RootCountResult count_with_dominant(const Poly& p, const Rational& radius, Poly dominant,
                                           long dominant_count, long at_zero, const char* split,
                                           std::size_t budget) {
  RootCountResult res;
  const Poly dominated = dominant - p;
  if (dominated.is_zero()) {
    // p is the dominant product itself, whose roots are known exactly
    res.status = RootCountResult::Status::certified;
    res.certificate = RootCountCertificate{
        p, radius, dominant_count,
        ExactFactorEvidence{at_zero, dominant_count - at_zero}};
    return res;
  }
  auto dom = certify_dominance(dominant, dominated, CircleSpec(radius), budget);
  res.evaluations = dom.evaluations;
  switch (dom.status) {
    case DominanceResult::Status::certified:
      res.status = RootCountResult::Status::certified;
      res.certificate = RootCountCertificate{
          p, radius, dominant_count,
          DominanceEvidence{std::move(*dom.certificate), dominant_count, split}};
      break;
    case DominanceResult::Status::refuted:
      res.status = RootCountResult::Status::inapplicable;
      res.counterexample = dom.counterexample;
      res.reason = "dominated part reaches the dominant part on the circle";
      break;
    case DominanceResult::Status::exhausted:
      res.status = RootCountResult::Status::exhausted;
      res.reason = "subdivision budget exhausted";
      break;
  }
  return res;
}

}  // namespace detail

/// Exact number of roots (with multiplicity) of p in |lambda| < radius.
inline RootCountResult count_roots_in_disk(const Poly& p, const Rational& radius,
                                           const RootCountHint& hint = MonomialSplit{},
                                           std::size_t budget = kDefaultBudget) {
  if (p.is_zero()) throw std::invalid_argument("root count of the zero polynomial");
  if (radius <= 0) throw std::invalid_argument("root count needs a positive radius");

  if (const auto* fs = std::get_if<FactorSplit>(&hint)) {
    if (fs->scalar == 0 || fs->lambda_power < 0) {
      RootCountResult res;
      res.reason = "degenerate factored split";
      return res;
    }
    Poly dominant = Poly::monomial(fs->scalar, static_cast<std::size_t>(fs->lambda_power));
    long count = fs->lambda_power;
    for (const auto& use : fs->factors) {
      const RootCountCertificate& f = use.factor.get();
      if (!(f.radius <= radius) || !f.all_inside() || use.multiplicity < 0) {
        RootCountResult res;
        res.reason = "factor certificate does not place all roots inside the disk";
        return res;
      }
      dominant *= pow(f.poly, static_cast<unsigned long>(use.multiplicity));
      count += use.multiplicity * f.count;
    }
    return detail::count_with_dominant(p, radius, std::move(dominant), count, fs->lambda_power,
                                       "factored", budget);
  }

  // Parseval: on the circle, mean |p - a_m lambda^m|^2 = sum_{j != m} |a_j|^2 R^{2j},
  // so only an index whose term outweighs all others together can dominate.
  const auto c = p.coefficients();
  std::vector<Rational> w(c.size());
  Rational total(0);
  Rational r2 = radius * radius;
  Rational rpow(1);
  for (std::size_t j = 0; j < c.size(); ++j) {
    w[j] = c[j] * c[j] * rpow;
    total += w[j];
    rpow *= r2;
  }
  for (std::size_t m = 0; m < c.size(); ++m) {
    if (c[m] == 0 || !(2 * w[m] > total)) continue;
    return detail::count_with_dominant(p, radius, Poly::monomial(c[m], m), static_cast<long>(m),
                                       static_cast<long>(m), "monomial", budget);
  }
  RootCountResult res;
  res.reason = "no monomial carries more than half of the mean square on the circle";
  return res;
}

inline nlohmann::json root_count_to_json(const RootCountCertificate& c) {
  nlohmann::json j{{"radius", to_string(c.radius)}, {"count", c.count}, {"degree", c.poly.degree()}};
  if (const auto* ex = std::get_if<ExactFactorEvidence>(&c.evidence)) {
    j["evidence"] = {{"kind", "exact_factor"},
                     {"multiplicity_at_zero", ex->multiplicity_at_zero},
                     {"factor_roots", ex->factor_roots}};
  } else {
    const auto& dom = std::get<DominanceEvidence>(c.evidence);
    j["evidence"] = {{"kind", "dominance"},
                     {"split", dom.split},
                     {"dominant_count", dom.dominant_count},
                     {"dominance", dominance_to_json(dom.dominance)}};
  }
  return j;
}

}  // namespace noricert
