#pragma once

// Exact values with a cheap enclosure in front of them.
//
// Deep in the disk the images (f1, f2) are rationals with tens of thousands
// of bits, and the chart predicates raise them to powers. A FilteredReal
// carries an MPFR interval (endpoints rounded outward) next to a lazily
// evaluated exact Fraction. A comparison is settled by the intervals when
// they are disjoint and by exact arithmetic otherwise, so every answer is
// the exact answer.

#include <mpfr.h>

#include <functional>
#include <memory>
#include <optional>
#include <utility>

#include "noricert/rational.hpp"

namespace noricert {

/// Closed interval [lo, hi] with MPFR endpoints.
class Interval {
 public:
  static constexpr mpfr_prec_t kPrecision = 192;

  Interval() {
    init();
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
  }
  Interval(const Interval& o) {
    init();
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }
  Interval(Interval&& o) noexcept : Interval() {
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
  }
  Interval& operator=(Interval o) noexcept {
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    return *this;
  }
  ~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
  }

  explicit Interval(const Fraction& f) {
    init();
    // num/den with den > 0: round the numerator and denominator apart
    mpfr_t n, d;
    mpfr_inits2(kPrecision, n, d, static_cast<mpfr_ptr>(nullptr));
    const bool neg = f.num < 0;
    mpfr_set_z(n, f.num.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(d, f.den.get_mpz_t(), neg ? MPFR_RNDD : MPFR_RNDU);
    mpfr_div(lo_, n, d, MPFR_RNDD);
    mpfr_set_z(n, f.num.get_mpz_t(), MPFR_RNDU);
    mpfr_set_z(d, f.den.get_mpz_t(), neg ? MPFR_RNDU : MPFR_RNDD);
    mpfr_div(hi_, n, d, MPFR_RNDU);
    mpfr_clears(n, d, static_cast<mpfr_ptr>(nullptr));
  }
  explicit Interval(const Integer& z) {
    init();
    mpfr_set_z(lo_, z.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(hi_, z.get_mpz_t(), MPFR_RNDU);
  }

  [[nodiscard]] bool contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }
  [[nodiscard]] bool certainly_less(const Interval& o) const { return mpfr_less_p(hi_, o.lo_) != 0; }
  [[nodiscard]] bool certainly_geq(const Interval& o) const { return mpfr_greaterequal_p(lo_, o.hi_) != 0; }
  [[nodiscard]] bool certainly_leq(const Interval& o) const { return mpfr_lessequal_p(hi_, o.lo_) != 0; }
  [[nodiscard]] bool certainly_greater(const Interval& o) const { return mpfr_greater_p(lo_, o.hi_) != 0; }

  friend Interval operator+(const Interval& a, const Interval& b) {
    Interval r;
    mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
  }
  friend Interval operator-(const Interval& a, const Interval& b) {
    Interval r;
    mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
    return r;
  }
  friend Interval operator*(const Interval& a, const Interval& b) {
    Interval r;
    if (mpfr_sgn(a.lo_) >= 0 && mpfr_sgn(b.lo_) >= 0) {
      mpfr_mul(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
      mpfr_mul(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
      return r;
    }
    // general case: extremes among the four endpoint products
    mpfr_t t;
    mpfr_init2(t, kPrecision);
    mpfr_srcptr xs[2] = {a.lo_, a.hi_};
    mpfr_srcptr ys[2] = {b.lo_, b.hi_};
    mpfr_set_inf(r.lo_, 1);
    mpfr_set_inf(r.hi_, -1);
    for (auto x : xs)
      for (auto y : ys) {
        mpfr_mul(t, x, y, MPFR_RNDD);
        mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
        mpfr_mul(t, x, y, MPFR_RNDU);
        mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
      }
    mpfr_clear(t);
    return r;
  }
  /// x^2, which is nonnegative even when the interval straddles 0.
  [[nodiscard]] Interval square() const {
    Interval r = *this * *this;
    if (contains_zero()) mpfr_set_zero(r.lo_, 1);
    return r;
  }

 private:
  void init() {
    static const bool widened = [] {
      mpfr_set_emin(mpfr_get_emin_min());
      mpfr_set_emax(mpfr_get_emax_max());
      return true;
    }();
    (void)widened;
    mpfr_init2(lo_, kPrecision);
    mpfr_init2(hi_, kPrecision);
  }

  mpfr_t lo_;
  mpfr_t hi_;
};

namespace detail {

/// A value computed on first use and then kept.
template <class T>
class Lazy {
 public:
  explicit Lazy(T value) : value_(std::move(value)) {}
  explicit Lazy(std::function<T()> f) : make_(std::move(f)) {}
  const T& get() {
    if (!value_) {
      value_ = make_();
      make_ = nullptr;
    }
    return *value_;
  }

 private:
  std::optional<T> value_;
  std::function<T()> make_;
};

}  // namespace detail

class FilteredReal {
 public:
  FilteredReal() : FilteredReal(Fraction()) {}
  explicit FilteredReal(const Fraction& f)
      : approx_(f), exact_(std::make_shared<detail::Lazy<Fraction>>(f)) {}
  explicit FilteredReal(const Rational& q) : FilteredReal(Fraction(q)) {}
  FilteredReal(Interval approx, std::function<Fraction()> exact)
      : approx_(std::move(approx)), exact_(std::make_shared<detail::Lazy<Fraction>>(std::move(exact))) {}

  [[nodiscard]] const Interval& approx() const { return approx_; }
  [[nodiscard]] const Fraction& exact() const { return exact_->get(); }
  [[nodiscard]] bool is_zero() const { return !approx_.contains_zero() ? false : exact().is_zero(); }

  friend FilteredReal operator*(const FilteredReal& a, const FilteredReal& b) {
    return {a.approx_ * b.approx_, [x = a.exact_, y = b.exact_] { return x->get() * y->get(); }};
  }
  friend FilteredReal operator+(const FilteredReal& a, const FilteredReal& b) {
    return {a.approx_ + b.approx_, [x = a.exact_, y = b.exact_] { return x->get() + y->get(); }};
  }
  friend FilteredReal operator-(const FilteredReal& a, const FilteredReal& b) {
    return {a.approx_ - b.approx_, [x = a.exact_, y = b.exact_] { return x->get() - y->get(); }};
  }

  friend bool operator<(const FilteredReal& a, const FilteredReal& b) {
    if (a.approx_.certainly_less(b.approx_)) return true;
    if (a.approx_.certainly_geq(b.approx_)) return false;
    return a.exact() < b.exact();
  }
  friend bool operator<=(const FilteredReal& a, const FilteredReal& b) {
    if (a.approx_.certainly_leq(b.approx_)) return true;
    if (a.approx_.certainly_greater(b.approx_)) return false;
    return a.exact() <= b.exact();
  }
  friend bool operator>(const FilteredReal& a, const FilteredReal& b) { return b < a; }
  friend bool operator>=(const FilteredReal& a, const FilteredReal& b) { return b <= a; }

 private:
  Interval approx_;
  std::shared_ptr<detail::Lazy<Fraction>> exact_;
};

inline FilteredReal pow(const FilteredReal& x, unsigned long e) {
  FilteredReal out(Rational(1));
  FilteredReal base = x;
  while (e != 0) {
    if (e & 1UL) out = out * base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return out;
}

class FilteredComplex {
 public:
  FilteredComplex() : FilteredComplex(ComplexFraction()) {}
  explicit FilteredComplex(const ComplexFraction& z)
      : re_(Fraction(z.re, z.den)),
        im_(Fraction(z.im, z.den)),
        exact_(std::make_shared<detail::Lazy<ComplexFraction>>(z)) {}
  FilteredComplex(Interval re, Interval im, std::function<ComplexFraction()> exact)
      : re_(std::move(re)),
        im_(std::move(im)),
        exact_(std::make_shared<detail::Lazy<ComplexFraction>>(std::move(exact))) {}

  [[nodiscard]] const ComplexFraction& exact() const { return exact_->get(); }
  [[nodiscard]] bool is_zero() const {
    if (!re_.contains_zero() || !im_.contains_zero()) return false;
    return exact().is_zero();
  }

  friend FilteredComplex operator*(const FilteredComplex& a, const FilteredComplex& b) {
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_,
            [x = a.exact_, y = b.exact_] { return x->get() * y->get(); }};
  }
  friend FilteredComplex operator-(const FilteredComplex& a, const FilteredComplex& b) {
    return {a.re_ - b.re_, a.im_ - b.im_, [x = a.exact_, y = b.exact_] { return x->get() - y->get(); }};
  }
  friend FilteredComplex operator+(const FilteredComplex& a, const FilteredComplex& b) {
    return {a.re_ + b.re_, a.im_ + b.im_, [x = a.exact_, y = b.exact_] { return x->get() + y->get(); }};
  }
  friend FilteredReal abs2(const FilteredComplex& z) {
    return {z.re_.square() + z.im_.square(), [x = z.exact_] { return abs2(x->get()); }};
  }

 private:
  Interval re_;
  Interval im_;
  std::shared_ptr<detail::Lazy<ComplexFraction>> exact_;
};

inline FilteredComplex pow(const FilteredComplex& z, unsigned long e) {
  FilteredComplex out(ComplexFraction(Integer(1), Integer(0), Integer(1)));
  FilteredComplex base = z;
  while (e != 0) {
    if (e & 1UL) out = out * base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return out;
}

}  // namespace noricert
