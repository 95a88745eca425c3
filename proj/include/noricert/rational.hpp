#pragma once

// Exact scalar arithmetic: GMP-backed rationals and Gaussian rationals.
//
// Every modulus comparison in the library is done on squared moduli, so
// nothing here ever rounds. The only inexact helpers are sqrt_lower and
// sqrt_upper, which round in a known direction and are used solely to
// build sound Lipschitz enclosures.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace noricert {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(long num, long den = 1) {
  return make_rational(Integer(num), Integer(den));
}

inline Integer ipow(const Integer& base, unsigned long e) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

inline Rational pow(const Rational& base, unsigned long e) {
  // numerator and denominator stay coprime under powering
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), e);
  return out;
}

inline Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

/// Parses "num/den" or a bare integer. Decimal notation is rejected so a
/// command-line value can never be rounded silently.
inline Rational parse_rational(std::string_view text) {
  auto valid_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  auto strip_plus = [](std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return std::string(s);
  };
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den.front() == '-' || den.front() == '+')
    throw std::invalid_argument("not a rational of the form num/den: '" + std::string(text) + "'");
  const Integer d(strip_plus(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return make_rational(Integer(strip_plus(num), 10), d);
}

/// Canonical text form, always "num/den" (integers carry "/1").
inline std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// floor(log2 |q|) up to one unit; q must be nonzero. Used only for
/// choosing sampling scales and precisions.
inline long approx_log2(const Rational& q) {
  return static_cast<long>(mpz_sizeinbase(q.get_num_mpz_t(), 2)) -
         static_cast<long>(mpz_sizeinbase(q.get_den_mpz_t(), 2));
}

namespace detail {

// sqrt(s) = sqrt(num*den)/den; scale by 4^shift so the integer square root
// carries at least `bits` significant bits.
inline void sqrt_scaled(const Rational& s, unsigned bits, Integer& root, Integer& den_out,
                        bool& exact) {
  if (s < 0) throw std::domain_error("square root of a negative rational");
  const Integer prod = s.get_num() * s.get_den();
  const long have = static_cast<long>(mpz_sizeinbase(prod.get_mpz_t(), 2));
  const long shift = std::max(0L, static_cast<long>(bits) - have / 2 + 1);
  Integer scaled = prod << static_cast<mp_bitcnt_t>(2 * shift);
  Integer rem;
  mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), scaled.get_mpz_t());
  exact = rem == 0;
  den_out = s.get_den() << static_cast<mp_bitcnt_t>(shift);
}

}  // namespace detail

/// A rational lower bound for sqrt(s), relative error about 2^-bits.
inline Rational sqrt_lower(const Rational& s, unsigned bits = 64) {
  Integer root, den;
  bool exact = false;
  detail::sqrt_scaled(s, bits, root, den, exact);
  return make_rational(root, den);
}

/// A rational upper bound for sqrt(s), relative error about 2^-bits.
inline Rational sqrt_upper(const Rational& s, unsigned bits = 64) {
  Integer root, den;
  bool exact = false;
  detail::sqrt_scaled(s, bits, root, den, exact);
  if (!exact) root += 1;
  return make_rational(root, den);
}

/// Gaussian rational re + i*im.
struct ComplexRational {
  Rational re;
  Rational im;

  ComplexRational() = default;
  ComplexRational(Rational real) : re(std::move(real)) {}  // NOLINT(implicit)
  ComplexRational(Rational real, Rational imag) : re(std::move(real)), im(std::move(imag)) {}

  friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
    return a.re == b.re && a.im == b.im;
  }

  ComplexRational& operator+=(const ComplexRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  ComplexRational& operator-=(const ComplexRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  ComplexRational& operator*=(const ComplexRational& o) {
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }

  friend ComplexRational operator+(ComplexRational a, const ComplexRational& b) { return a += b; }
  friend ComplexRational operator-(ComplexRational a, const ComplexRational& b) { return a -= b; }
  friend ComplexRational operator*(ComplexRational a, const ComplexRational& b) { return a *= b; }
  friend ComplexRational operator-(const ComplexRational& a) {
    return {Rational(-a.re), Rational(-a.im)};
  }

  [[nodiscard]] bool is_zero() const { return re == 0 && im == 0; }
};

inline ComplexRational conj(const ComplexRational& z) { return {z.re, Rational(-z.im)}; }

/// Squared modulus, exact.
inline Rational abs2(const ComplexRational& z) { return z.re * z.re + z.im * z.im; }

inline ComplexRational pow(const ComplexRational& z, unsigned long e) {
  ComplexRational out(Rational(1));
  ComplexRational base = z;
  while (e != 0) {
    if (e & 1UL) out *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return out;
}

inline std::string to_string(const ComplexRational& z) {
  return to_string(z.re) + " + i*" + to_string(z.im);
}

/// Unreduced fraction num/den with den > 0. Products and comparisons skip
/// the gcd that mpq_class runs after every operation, which dominates the
/// cost once numerators reach tens of thousands of bits. Only comparisons
/// are ever needed, and cross-multiplication decides them exactly.
struct Fraction {
  Integer num{0};
  Integer den{1};

  Fraction() = default;
  Fraction(Integer n, Integer d) : num(std::move(n)), den(std::move(d)) {
    if (den == 0) throw std::domain_error("fraction with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
  }
  Fraction(const Rational& q) : num(q.get_num()), den(q.get_den()) {}  // NOLINT(implicit)

  [[nodiscard]] Rational reduced() const { return make_rational(num, den); }
  [[nodiscard]] bool is_zero() const { return num == 0; }
  [[nodiscard]] int sign() const { return sgn(num); }

  friend Fraction operator*(const Fraction& a, const Fraction& b) {
    return {Integer(a.num * b.num), Integer(a.den * b.den)};
  }
  friend Fraction operator+(const Fraction& a, const Fraction& b) {
    if (a.den == b.den) return {Integer(a.num + b.num), a.den};
    return {Integer(a.num * b.den + b.num * a.den), Integer(a.den * b.den)};
  }
  friend Fraction operator-(const Fraction& a, const Fraction& b) {
    if (a.den == b.den) return {Integer(a.num - b.num), a.den};
    return {Integer(a.num * b.den - b.num * a.den), Integer(a.den * b.den)};
  }
  /// Sign of a - b.
  friend int compare(const Fraction& a, const Fraction& b) {
    if (a.den == b.den) return cmp(a.num, b.num);
    const Integer l = a.num * b.den;
    const Integer r = b.num * a.den;
    return cmp(l, r);
  }
  friend bool operator<(const Fraction& a, const Fraction& b) { return compare(a, b) < 0; }
  friend bool operator<=(const Fraction& a, const Fraction& b) { return compare(a, b) <= 0; }
  friend bool operator>(const Fraction& a, const Fraction& b) { return compare(a, b) > 0; }
  friend bool operator>=(const Fraction& a, const Fraction& b) { return compare(a, b) >= 0; }
  friend bool operator==(const Fraction& a, const Fraction& b) { return compare(a, b) == 0; }
};

inline Fraction pow(const Fraction& f, unsigned long e) { return {ipow(f.num, e), ipow(f.den, e)}; }

/// Gaussian rational (re + i*im)/den with den > 0, unreduced.
struct ComplexFraction {
  Integer re{0};
  Integer im{0};
  Integer den{1};

  ComplexFraction() = default;
  ComplexFraction(Integer r, Integer i, Integer d) : re(std::move(r)), im(std::move(i)), den(std::move(d)) {
    if (den <= 0) throw std::domain_error("complex fraction needs a positive denominator");
  }
  ComplexFraction(const ComplexRational& z) : den(lcm(z.re.get_den(), z.im.get_den())) {  // NOLINT
    re = z.re.get_num() * (den / z.re.get_den());
    im = z.im.get_num() * (den / z.im.get_den());
  }

  [[nodiscard]] bool is_zero() const { return re == 0 && im == 0; }
  [[nodiscard]] ComplexRational reduced() const {
    return {make_rational(re, den), make_rational(im, den)};
  }

  friend ComplexFraction operator*(const ComplexFraction& a, const ComplexFraction& b) {
    return {Integer(a.re * b.re - a.im * b.im), Integer(a.re * b.im + a.im * b.re),
            Integer(a.den * b.den)};
  }
  friend ComplexFraction operator-(const ComplexFraction& a, const ComplexFraction& b) {
    if (a.den == b.den) return {Integer(a.re - b.re), Integer(a.im - b.im), a.den};
    return {Integer(a.re * b.den - b.re * a.den), Integer(a.im * b.den - b.im * a.den),
            Integer(a.den * b.den)};
  }
  friend ComplexFraction operator+(const ComplexFraction& a, const ComplexFraction& b) {
    if (a.den == b.den) return {Integer(a.re + b.re), Integer(a.im + b.im), a.den};
    return {Integer(a.re * b.den + b.re * a.den), Integer(a.im * b.den + b.im * a.den),
            Integer(a.den * b.den)};
  }
};

inline Fraction abs2(const ComplexFraction& z) {
  return {Integer(z.re * z.re + z.im * z.im), Integer(z.den * z.den)};
}

inline ComplexFraction pow(const ComplexFraction& z, unsigned long e) {
  ComplexFraction out(Integer(1), Integer(0), Integer(1));
  ComplexFraction base = z;
  while (e != 0) {
    if (e & 1UL) out = out * base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return out;
}

}  // namespace noricert
