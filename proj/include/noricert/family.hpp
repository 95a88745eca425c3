#pragma once

// The counterexample data for one disk index n: integer constants, the
// parameter eps, the polynomials P_1..P_{n-1} and the disk components f1, f2.

#include <json.hpp>

#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "noricert/certificate.hpp"
#include "noricert/poly.hpp"
#include "noricert/rational.hpp"

namespace noricert {

struct FamilyConstants {
  std::vector<long> c;  ///< c_1..c_{n-1}
  std::vector<long> d;  ///< d_1..d_{n-1}
  long N = 0;
};

/// c forward from c_1 = 1, d backward from d_{n-1} = 1.
inline FamilyConstants make_constants(int n) {
  if (n < 2) throw std::invalid_argument("family index n must be at least 2");
  const auto m = static_cast<std::size_t>(n - 1);
  FamilyConstants k;
  k.c.resize(m);
  k.d.resize(m);
  // c_k = 2k - 1 + (k-1) c_1 + (k-2) c_2 + ... + c_{k-1}
  for (std::size_t idx = 1; idx <= m; ++idx) {
    long v = 2 * static_cast<long>(idx) - 1;
    for (std::size_t j = 1; j < idx; ++j) v += static_cast<long>(idx - j) * k.c[j - 1];
    k.c[idx - 1] = v;
  }
  // d_k = d_{k+1} + 2 d_{k+2} + ... + (n-k-1) d_{n-1} + n - k
  for (std::size_t idx = m; idx >= 1; --idx) {
    long v = n - static_cast<long>(idx);
    for (std::size_t j = idx + 1; j <= m; ++j) v += static_cast<long>(j - idx) * k.d[j - 1];
    k.d[idx - 1] = v;
  }
  k.N = 2L * n * (std::accumulate(k.d.begin(), k.d.end(), 0L) + 1);
  return k;
}

/// (1/6)^N * r / (n + 2); eps must lie strictly below it.
inline Rational epsilon_bound(int n, const Rational& r) {
  const long N = make_constants(n).N;
  return pow(make_rational(1, 6), static_cast<unsigned long>(N)) * r / Rational(n + 2);
}

/// 10^-m for the smallest m meeting the strict eps bound.
inline Rational choose_epsilon(int n, const Rational& r) {
  if (r <= 0 || r >= 1) throw std::invalid_argument("r must lie in (0,1)");
  const Rational bound = epsilon_bound(n, r);
  Rational eps(1);
  const Rational tenth = make_rational(1, 10);
  while (!(eps < bound)) eps *= tenth;
  return eps;
}

struct FamilyParams {
  int n = 2;
  Rational r;
  Rational rho;
  Rational eps;
  std::vector<long> c;
  std::vector<long> d;
  long N = 0;

  [[nodiscard]] long c_at(int k) const { return c.at(static_cast<std::size_t>(k - 1)); }
  [[nodiscard]] long d_at(int k) const { return d.at(static_cast<std::size_t>(k - 1)); }
  [[nodiscard]] long d_sum() const { return std::accumulate(d.begin(), d.end(), 0L); }
  /// sum_k k * d_k
  [[nodiscard]] long d_weighted_sum() const {
    long s = 0;
    for (std::size_t i = 0; i < d.size(); ++i) s += static_cast<long>(i + 1) * d[i];
    return s;
  }
};

/// Default radii: r = 1/5, rho = 1/2 meet r <= (rho/2)(1-r) with equality.
inline Rational default_r() { return make_rational(1, 5); }
inline Rational default_rho() { return make_rational(1, 2); }

inline FamilyParams make_params(int n, Rational r = default_r(), Rational rho = default_rho(),
                                std::optional<Rational> eps = std::nullopt) {
  auto k = make_constants(n);
  FamilyParams p;
  p.n = n;
  p.eps = eps ? *eps : choose_epsilon(n, r);
  p.r = std::move(r);
  p.rho = std::move(rho);
  p.c = std::move(k.c);
  p.d = std::move(k.d);
  p.N = k.N;
  return p;
}

/// Every violated parameter invariant, by name. Empty means valid.
inline std::vector<std::string> param_violations(const FamilyParams& p) {
  std::vector<std::string> out;
  if (p.n < 2) {
    out.emplace_back("n >= 2");
    return out;
  }
  if (!(p.r > 0 && p.r < 1)) out.emplace_back("r in (0,1)");
  if (!(p.rho > 0 && p.rho < 1)) out.emplace_back("rho in (0,1)");
  if (!(p.r <= p.rho / 2 * (1 - p.r))) out.emplace_back("r <= (rho/2)(1-r)");
  if (!(p.eps > 0)) out.emplace_back("eps > 0");
  if (p.r > 0 && !(p.eps < epsilon_bound(p.n, p.r))) out.emplace_back("eps < (1/6)^N r/(n+2)");
  const auto k = make_constants(p.n);
  if (p.c.empty() || p.c.front() != 1) out.emplace_back("c_1 = 1");
  if (p.d.empty() || p.d.back() != 1) out.emplace_back("d_{n-1} = 1");
  if (p.c != k.c) out.emplace_back("c recursion");
  if (p.d != k.d) out.emplace_back("d recursion");
  if (p.N != 2L * p.n * (p.d_sum() + 1)) out.emplace_back("N = 2n(d_1+...+d_{n-1}+1)");
  return out;
}

class ParamViolation : public std::invalid_argument {
 public:
  explicit ParamViolation(std::vector<std::string> names)
      : std::invalid_argument("family parameter invariant violated: " + join(names)),
        names_(std::move(names)) {}
  [[nodiscard]] const std::vector<std::string>& names() const { return names_; }

 private:
  static std::string join(const std::vector<std::string>& v) {
    std::string s;
    for (const auto& e : v) s += (s.empty() ? "" : ", ") + e;
    return s;
  }
  std::vector<std::string> names_;
};

struct Family {
  FamilyParams params;
  std::vector<Poly> P;  ///< P[0] is P_1
  Poly f1;
  Poly f2;

  [[nodiscard]] int n() const { return params.n; }
  [[nodiscard]] const Poly& P_at(int k) const { return P.at(static_cast<std::size_t>(k - 1)); }
  [[nodiscard]] Rational eps_pow(long e) const {
    return pow(params.eps, static_cast<unsigned long>(e));
  }
};

/// scalar * prod_k P_k^{exponents[k-1]} * lambda^lambda_power. Empty
/// products are the constant 1.
inline Poly factor_product(const Family& fam, std::span<const long> exponents,
                           long lambda_power, const Rational& scalar = Rational(1)) {
  Poly out = Poly::monomial(scalar, static_cast<std::size_t>(lambda_power));
  for (std::size_t i = 0; i < exponents.size(); ++i)
    if (exponents[i] > 0) out *= pow(fam.P[i], static_cast<unsigned long>(exponents[i]));
  return out;
}

/// Exponent vector for P_{k+1} P_{k+2}^2 ... P_{n-1}^{n-k-1}.
inline std::vector<long> tail_exponents(int n, int k) {
  std::vector<long> e(static_cast<std::size_t>(n - 1), 0);
  for (int j = k + 1; j <= n - 1; ++j) e[static_cast<std::size_t>(j - 1)] = j - k;
  return e;
}

/// Exponent vector for P_1^{m-1} P_2^{m-2} ... P_{m-1}.
inline std::vector<long> head_exponents(int n, int m) {
  std::vector<long> e(static_cast<std::size_t>(n - 1), 0);
  for (int j = 1; j < m && j <= n - 1; ++j) e[static_cast<std::size_t>(j - 1)] = m - j;
  return e;
}

struct BuildOptions {
  /// Build even if eps breaks its bound; used to exercise refutation paths.
  bool allow_eps_violation = false;
};

inline Family build_family(const FamilyParams& params, BuildOptions opts = {}) {
  auto bad = param_violations(params);
  if (opts.allow_eps_violation)
    std::erase(bad, std::string("eps < (1/6)^N r/(n+2)"));
  if (!bad.empty()) throw ParamViolation(std::move(bad));

  Family fam;
  fam.params = params;
  const int n = params.n;
  fam.P.resize(static_cast<std::size_t>(n - 1));
  // P_{n-1} = eps^{c_{n-1}} - lambda, then backwards
  // P_k = eps^{c_k} - P_{k+1} P_{k+2}^2 ... P_{n-1}^{n-k-1} lambda^{n-k}
  for (int k = n - 1; k >= 1; --k) {
    const Poly tail = factor_product(fam, tail_exponents(n, k), n - k);
    fam.P[static_cast<std::size_t>(k - 1)] = Poly::constant(fam.eps_pow(params.c_at(k))) - tail;
  }
  std::vector<long> ones(static_cast<std::size_t>(n - 1), 1);
  std::vector<long> ramp(static_cast<std::size_t>(n - 1));
  std::iota(ramp.begin(), ramp.end(), 1L);
  fam.f1 = factor_product(fam, ramp, n, params.eps);
  fam.f2 = factor_product(fam, ones, 1, params.eps * params.eps);
  return fam;
}

inline Family build_family(int n) { return build_family(make_params(n)); }

/// Monicity, degrees, constant terms, pairwise coprimality and the degree
/// formulas for f1 and f2.
inline CheckReport structural_checks(const Family& fam) {
  CheckReport rep("structural");
  const auto& p = fam.params;
  const int n = p.n;
  for (const auto& v : param_violations(p)) rep.check("parameter " + v, false);
  for (int k = 1; k <= n - 1; ++k) {
    const Poly& Pk = fam.P_at(k);
    const std::string tag = "P_" + std::to_string(k);
    rep.check(tag + " monic up to sign", Pk.is_unit_leading());
    rep.check(tag + " degree d_" + std::to_string(k), Pk.degree() == p.d_at(k),
              "degree " + std::to_string(Pk.degree()));
    rep.check(tag + "(0) = eps^c_" + std::to_string(k), Pk.coeff(0) == fam.eps_pow(p.c_at(k)));
    rep.check(tag + "(0) != 0", Pk.coeff(0) != 0);
  }
  for (int j = 1; j <= n - 1; ++j)
    for (int k = j + 1; k <= n - 1; ++k) {
      const long g = gcd(fam.P_at(j), fam.P_at(k)).degree();
      rep.check("gcd(P_" + std::to_string(j) + ", P_" + std::to_string(k) + ") = 1", g == 0,
                "gcd degree " + std::to_string(g));
    }
  rep.check("deg f2 = d_1+...+d_{n-1}+1", fam.f2.degree() == p.d_sum() + 1,
            "degree " + std::to_string(fam.f2.degree()));
  rep.check("deg f1 = d_1+2d_2+...+(n-1)d_{n-1}+n", fam.f1.degree() == p.d_weighted_sum() + n,
            "degree " + std::to_string(fam.f1.degree()));
  return rep;
}

inline nlohmann::json family_to_json(const Family& fam) {
  const auto& p = fam.params;
  return nlohmann::json{{"n", p.n},
                        {"r", to_string(p.r)},
                        {"rho", to_string(p.rho)},
                        {"eps", to_string(p.eps)},
                        {"c", p.c},
                        {"d", p.d},
                        {"N", p.N},
                        {"P", fam.P},
                        {"f1", fam.f1},
                        {"f2", fam.f2}};
}

/// Reads the serialized form back. Parameters are revalidated; the stored
/// polynomials are taken as given so a tampered file can be checked.
inline Family family_from_json(const nlohmann::json& j) {
  Family fam;
  auto& p = fam.params;
  p.n = j.at("n").get<int>();
  p.r = parse_rational(j.at("r").get<std::string>());
  p.rho = parse_rational(j.at("rho").get<std::string>());
  p.eps = parse_rational(j.at("eps").get<std::string>());
  p.c = j.at("c").get<std::vector<long>>();
  p.d = j.at("d").get<std::vector<long>>();
  p.N = j.at("N").get<long>();
  fam.P = j.at("P").get<std::vector<Poly>>();
  fam.f1 = j.at("f1").get<Poly>();
  fam.f2 = j.at("f2").get<Poly>();
  if (fam.P.size() != static_cast<std::size_t>(p.n - 1))
    throw std::invalid_argument("family file: P must hold n-1 polynomials");
  return fam;
}

}  // namespace noricert
