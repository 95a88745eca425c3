#pragma once

// Shared test fixtures: cached families and the symbolic oracle data.

#include <json.hpp>

#include <fstream>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "noricert/noricert.hpp"

namespace noricert::testing {

/// Families are costly at n = 4; build each once per process.
inline const Family& family(int n) {
  static std::map<int, Family> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_family(n)).first;
  return it->second;
}

inline const RootLocalization& roots(int n) {
  static std::map<int, RootLocalization> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, localize_roots(family(n))).first;
  return it->second;
}

inline const Certificate& ineq(int n) {
  static std::map<int, Certificate> cache;
  auto it = cache.find(n);
  if (it == cache.end())
    it = cache.emplace(n, corollary_ineq_certificate(family(n), annulus_bounds_certificate(family(n), roots(n))))
             .first;
  return it->second;
}

/// Polynomials computed independently with sympy (tests/oracle/sympy_fixtures.py).
inline const nlohmann::json& oracle() {
  static const nlohmann::json data = [] {
    std::ifstream in(NORICERT_FIXTURE);
    if (!in) throw std::runtime_error("missing fixture " NORICERT_FIXTURE);
    return nlohmann::json::parse(in);
  }();
  return data;
}

inline const nlohmann::json& oracle(int n) { return oracle().at(std::to_string(n)); }

inline Poly oracle_poly(int n, const std::string& key) { return oracle(n).at(key).get<Poly>(); }

inline Poly oracle_poly(int n, const std::string& key, std::size_t index) {
  return oracle(n).at(key).at(index).get<Poly>();
}

inline Poly poly_of(std::initializer_list<long> coeffs) {
  std::vector<Rational> v;
  for (long c : coeffs) v.emplace_back(c);
  return Poly(std::move(v));
}

}  // namespace noricert::testing
