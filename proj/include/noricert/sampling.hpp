#pragma once

// Seeded generator of exact rational sample points. All moduli are chosen
// first and directions are rational points of the unit circle, so the
// modulus of every sample is known exactly.

#include <cstdint>
#include <random>

#include "noricert/rational.hpp"

namespace noricert {

class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed) : rng_(seed) {}

  /// Uniform on the grid lo + (hi - lo) * j / 2^bits, 0 < j < 2^bits.
  Rational uniform_open(const Rational& lo, const Rational& hi, unsigned bits = 16) {
    const long top = 1L << bits;
    std::uniform_int_distribution<long> pick(1, top - 1);
    return lo + (hi - lo) * make_rational(pick(rng_), top);
  }

  /// A rational point on the unit circle from a Pythagorean parametrization.
  ComplexRational unit_direction() {
    std::uniform_int_distribution<long> pick(-64, 64);
    long a = 0, b = 0;
    while (a == 0 && b == 0) {
      a = pick(rng_);
      b = pick(rng_);
    }
    const Rational den(a * a + b * b);
    return {Rational(a * a - b * b) / den, Rational(2 * a * b) / den};
  }

  ComplexRational with_modulus(const Rational& modulus) {
    ComplexRational u = unit_direction();
    return {u.re * modulus, u.im * modulus};
  }

  /// Modulus uniform in (0, radius).
  ComplexRational in_disk(const Rational& radius) {
    return with_modulus(uniform_open(Rational(0), radius));
  }

  /// Modulus m * 2^-e with e uniform in [e_lo, e_hi] and m in (1, 2).
  ComplexRational log_scale(long e_lo, long e_hi) { return with_modulus(log_modulus(e_lo, e_hi)); }

  Rational log_modulus(long e_lo, long e_hi) {
    std::uniform_int_distribution<long> pick(e_lo, e_hi);
    const long e = pick(rng_);
    const Rational scale = e >= 0 ? pow(make_rational(1, 2), static_cast<unsigned long>(e))
                                  : pow(Rational(2), static_cast<unsigned long>(-e));
    return scale * uniform_open(Rational(1), Rational(2), 12);
  }

  bool coin() { return std::uniform_int_distribution<int>(0, 1)(rng_) == 1; }
  std::size_t index(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_);
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace noricert
