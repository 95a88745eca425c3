#pragma once

// Dense univariate polynomials over Q.

#include <json.hpp>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "noricert/rational.hpp"

namespace noricert {

/// Coefficient i multiplies lambda^i. Trailing zeros are never stored, so
/// the zero polynomial has an empty coefficient list and degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

  static Poly constant(Rational c) { return Poly(std::vector<Rational>{std::move(c)}); }
  static Poly monomial(Rational c, std::size_t degree) {
    std::vector<Rational> v(degree + 1);
    v[degree] = std::move(c);
    return Poly(std::move(v));
  }
  /// The indeterminate lambda.
  static Poly x() { return monomial(Rational(1), 1); }

  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  [[nodiscard]] std::span<const Rational> coefficients() const { return coeffs_; }
  [[nodiscard]] std::size_t size() const { return coeffs_.size(); }

  [[nodiscard]] Rational coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Rational(0);
  }
  [[nodiscard]] const Rational& leading() const {
    if (is_zero()) throw std::domain_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
  }
  [[nodiscard]] bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }
  /// Leading coefficient +1 or -1: |p| is then the product of root distances.
  [[nodiscard]] bool is_unit_leading() const {
    return !is_zero() && (coeffs_.back() == 1 || coeffs_.back() == -1);
  }

  /// Index of the first nonzero coefficient: the vanishing order at 0.
  [[nodiscard]] std::size_t order_at_zero() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) return i;
    throw std::domain_error("vanishing order of the zero polynomial");
  }

  /// True when the polynomial is c * lambda^m for a single m.
  [[nodiscard]] bool is_monomial() const {
    if (is_zero()) return false;
    for (std::size_t i = 0; i + 1 < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) return false;
    return true;
  }

  [[nodiscard]] Poly monic() const {
    const Rational lead = leading();
    std::vector<Rational> v(coeffs_);
    for (auto& c : v) c /= lead;
    return Poly(std::move(v));
  }

  /// p(-lambda).
  [[nodiscard]] Poly reflected() const {
    std::vector<Rational> v(coeffs_);
    for (std::size_t i = 1; i < v.size(); i += 2) v[i] = -v[i];
    return Poly(std::move(v));
  }

  /// Exact evaluation. The argument is brought to a common denominator and
  /// Horner runs over Gaussian integers, so only the final value is reduced.
  [[nodiscard]] ComplexRational eval(const ComplexRational& z) const;
  [[nodiscard]] Rational eval(const Rational& x) const { return eval(ComplexRational(x)).re; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  Poly& operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const Rational& s) {
    if (s == 0) {
      coeffs_.clear();
      return *this;
    }
    for (auto& c : coeffs_) c *= s;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        if (b.coeffs_[j] == 0) continue;
        v[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return Poly(std::move(v));
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

/// Integer-scaled copy of a polynomial for repeated evaluation. The
/// argument is brought to a common denominator and Horner runs over
/// Gaussian integers; the value comes back unreduced.
class Evaluator {
 public:
  explicit Evaluator(const Poly& p) {
    const auto c = p.coefficients();
    for (const auto& x : c)
      if (x.get_den() != 1) mpz_lcm(scale_.get_mpz_t(), scale_.get_mpz_t(), x.get_den_mpz_t());
    coeffs_.reserve(c.size());
    for (const auto& x : c) coeffs_.emplace_back(x.get_num() * (scale_ / x.get_den()));
  }

  [[nodiscard]] ComplexFraction operator()(const ComplexFraction& z) const {
    if (coeffs_.empty()) return {};
    // sum_j c_j (a+ib)^j q^(d-j)
    const Integer& a = z.re;
    const Integer& b = z.im;
    Integer x = coeffs_.back();
    Integer y = 0;
    Integer qpow = 1;
    Integer t;
    for (std::size_t j = coeffs_.size() - 1; j-- > 0;) {
      qpow *= z.den;
      t = x * a - y * b;
      y = x * b + y * a;
      x = t;
      if (coeffs_[j] != 0) x += coeffs_[j] * qpow;
    }
    return {std::move(x), std::move(y), Integer(qpow * scale_)};
  }

 private:
  std::vector<Integer> coeffs_;
  Integer scale_{1};
};

inline ComplexRational Poly::eval(const ComplexRational& z) const {
  if (is_zero()) return {};
  return Evaluator(*this)(ComplexFraction(z)).reduced();
}

inline Poly pow(const Poly& p, unsigned long e) {
  Poly out = Poly::constant(Rational(1));
  Poly base = p;
  while (e != 0) {
    if (e & 1UL) out *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return out;
}

enum class PolyOp { add, sub, mul };

inline Poly poly_arith(const Poly& a, const Poly& b, PolyOp op) {
  switch (op) {
    case PolyOp::add: return a + b;
    case PolyOp::sub: return a - b;
    case PolyOp::mul: return a * b;
  }
  throw std::invalid_argument("unknown polynomial operation");
}

struct DivRem {
  Poly quotient;
  Poly remainder;
};

/// Long division over Q: a = quotient * b + remainder, deg remainder < deg b.
inline DivRem divrem(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const long db = b.degree();
  std::vector<Rational> rem(a.coefficients().begin(), a.coefficients().end());
  if (static_cast<long>(rem.size()) - 1 < db) return {Poly{}, a};
  std::vector<Rational> quot(rem.size() - static_cast<std::size_t>(db));
  const Rational& lead = b.leading();
  const auto bc = b.coefficients();
  for (std::size_t i = rem.size(); i-- > static_cast<std::size_t>(db);) {
    if (rem[i] == 0) continue;
    Rational f = rem[i] / lead;
    const std::size_t shift = i - static_cast<std::size_t>(db);
    for (std::size_t j = 0; j < bc.size(); ++j)
      if (bc[j] != 0) rem[shift + j] -= f * bc[j];
    quot[shift] = std::move(f);
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

/// Monic greatest common divisor by the Euclidean algorithm. A degree-0
/// result certifies that a and b are coprime.
inline Poly gcd(Poly a, Poly b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd of two zero polynomials");
  while (!b.is_zero()) {
    Poly r = divrem(a, b).remainder;
    a = std::move(b);
    b = r.is_zero() ? std::move(r) : r.monic();
  }
  return a.monic();
}

/// Text form: one "num/den" string per coefficient, index = degree.
inline void to_json(nlohmann::json& j, const Poly& p) {
  j = nlohmann::json::array();
  for (const auto& c : p.coefficients()) j.push_back(to_string(c));
}

inline void from_json(const nlohmann::json& j, Poly& p) {
  if (!j.is_array()) throw std::invalid_argument("polynomial text form must be a JSON array");
  std::vector<Rational> v;
  v.reserve(j.size());
  for (const auto& e : j) v.push_back(parse_rational(e.get<std::string>()));
  p = Poly(std::move(v));
}

}  // namespace noricert
