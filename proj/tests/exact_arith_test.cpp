#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

namespace noricert {
namespace {

using testing::poly_of;

ComplexRational I() { return {Rational(0), Rational(1)}; }

TEST(Rational, ParsesAndPrintsNumDen) {
  EXPECT_EQ(parse_rational("3/6"), make_rational(1, 2));
  EXPECT_EQ(parse_rational("-7"), Rational(-7));
  EXPECT_EQ(to_string(make_rational(-2, 4)), "-1/2");
  EXPECT_EQ(to_string(Rational(5)), "5/1");
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("0.5"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
}

TEST(Rational, SqrtBoundsBracket) {
  for (long s : {2L, 3L, 10L, 1000003L}) {
    const Rational q(s);
    const Rational lo = sqrt_lower(q), hi = sqrt_upper(q);
    EXPECT_LE(lo * lo, q);
    EXPECT_GE(hi * hi, q);
    EXPECT_LT(hi - lo, make_rational(1, 1L << 40));
  }
  EXPECT_EQ(sqrt_lower(make_rational(9, 4)), make_rational(3, 2));
}

TEST(PolyArith, DifferenceOfSquares) {
  const Poly a = poly_of({1, 1}), b = poly_of({-1, 1});
  EXPECT_EQ(poly_arith(a, b, PolyOp::mul), poly_of({-1, 0, 1}));
}

TEST(PolyArith, AddZeroIsIdentity) {
  const Poly p = poly_of({3, 0, -2, 5});
  EXPECT_EQ(poly_arith(p, Poly{}, PolyOp::add), p);
  EXPECT_EQ(poly_arith(p, p, PolyOp::sub), Poly{});
  EXPECT_EQ(Poly{}.degree(), -1);
}

TEST(PolyArith, SquareOfP2ForNEquals3) {
  const auto& fam = testing::family(3);
  const Rational e = fam.params.eps;
  const Poly expected{pow(e, 8), Rational(-2 * pow(e, 4)), Rational(1)};
  EXPECT_EQ(poly_arith(fam.P_at(2), fam.P_at(2), PolyOp::mul), expected);
}

TEST(PolyDivrem, ExactFactor) {
  const auto [q, r] = divrem(poly_of({-1, 0, 1}), poly_of({-1, 1}));
  EXPECT_EQ(q, poly_of({1, 1}));
  EXPECT_TRUE(r.is_zero());
}

TEST(PolyDivrem, RemainderIsConstantTerm) {
  const auto [q, r] = divrem(poly_of({1, 0, 1}), Poly::x());
  EXPECT_EQ(q, Poly::x());
  EXPECT_EQ(r, poly_of({1}));
}

TEST(PolyDivrem, LemmaDivShapeForNEquals3) {
  const auto& fam = testing::family(3);
  const Rational e3 = pow(fam.params.eps, 3);
  const Poly dividend = e3 * fam.P_at(1) - Poly::x();
  const auto [q, r] = divrem(dividend, fam.P_at(2));
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(q, (Poly{Rational(1), Rational(0), Rational(-e3)}));
  EXPECT_EQ(q, testing::oracle_poly(3, "div_quotients", 1));
}

TEST(PolyDivrem, RejectsZeroDivisor) { EXPECT_THROW(divrem(poly_of({1, 2}), Poly{}), std::domain_error); }

TEST(PolyEval, Examples) {
  EXPECT_EQ(poly_of({-1, 0, 1}).eval(I()), ComplexRational(Rational(-2)));
  EXPECT_EQ(Poly{}.eval(ComplexRational{make_rational(3, 7), Rational(2)}), ComplexRational());
  const auto& fam = testing::family(2);
  EXPECT_EQ(fam.P_at(1).eval(ComplexRational(fam.params.eps)), ComplexRational());
}

TEST(Abs2, Examples) {
  EXPECT_EQ(abs2(ComplexRational{make_rational(3, 5), make_rational(4, 5)}), Rational(1));
  EXPECT_EQ(abs2(ComplexRational()), Rational(0));
  EXPECT_EQ(abs2(ComplexRational{Rational(1), Rational(1)}), Rational(2));
}

TEST(PolyGcd, Examples) {
  EXPECT_EQ(gcd(poly_of({-1, 0, 1}), poly_of({-1, 1})), poly_of({-1, 1}));
  const auto& fam = testing::family(3);
  EXPECT_EQ(gcd(fam.P_at(1), fam.P_at(2)).degree(), 0);
  const Poly p = poly_of({4, -2, 6});
  const Poly g = gcd(p, p);
  EXPECT_TRUE(g.is_monic());
  EXPECT_EQ(g * Rational(6), p);
  EXPECT_THROW(gcd(Poly{}, Poly{}), std::domain_error);
}

TEST(PolyJson, TextFormRoundTrip) {
  const nlohmann::json j = Poly::x();
  EXPECT_EQ(j, nlohmann::json::parse(R"(["0/1","1/1"])"));
  const Poly p{make_rational(-3, 4), Rational(0), make_rational(5, 9)};
  EXPECT_EQ(nlohmann::json(p).get<Poly>(), p);
}

class RandomPolys : public ::testing::Test {
 protected:
  std::mt19937_64 rng{20240611};
  Rational coeff() {
    std::uniform_int_distribution<long> num(-50, 50), den(1, 30);
    return make_rational(num(rng), den(rng));
  }
  Poly poly(int max_degree = 6) {
    std::uniform_int_distribution<int> deg(-1, max_degree);
    std::vector<Rational> v(static_cast<std::size_t>(deg(rng) + 1));
    for (auto& c : v) c = coeff();
    return Poly(std::move(v));
  }
  ComplexRational point() { return {coeff(), coeff()}; }
};

TEST_F(RandomPolys, RingAxioms) {
  for (int t = 0; t < 200; ++t) {
    const Poly a = poly(), b = poly(), c = poly();
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    if (!a.is_zero() && !b.is_zero()) {
      EXPECT_EQ((a * b).degree(), a.degree() + b.degree());
    }
  }
}

TEST_F(RandomPolys, DivremRoundTrip) {
  for (int t = 0; t < 200; ++t) {
    const Poly a = poly(9);
    Poly b = poly(5);
    if (b.is_zero()) b = poly_of({1});
    const auto [q, r] = divrem(a, b);
    EXPECT_EQ(q * b + r, a);
    EXPECT_LT(r.degree(), b.degree());
  }
}

TEST_F(RandomPolys, Abs2IsMultiplicative) {
  for (int t = 0; t < 500; ++t) {
    const ComplexRational z = point(), w = point();
    EXPECT_EQ(abs2(z * w), abs2(z) * abs2(w));
    EXPECT_EQ(conj(conj(z)), z);
  }
}

TEST_F(RandomPolys, HornerMatchesMonomialSum) {
  for (int t = 0; t < 300; ++t) {
    const Poly p = poly(8);
    const ComplexRational z = point();
    ComplexRational naive;
    for (std::size_t i = 0; i < p.size(); ++i) naive = naive + ComplexRational(p.coeff(i)) * pow(z, i);
    EXPECT_EQ(p.eval(z), naive);
  }
}

TEST_F(RandomPolys, UnreducedAndFilteredAgreeWithReduced) {
  for (int t = 0; t < 300; ++t) {
    const Poly p = poly(8), q = poly(8);
    const ComplexRational z = point();
    const Evaluator ep(p), eq(q);
    const ComplexFraction u = ep(ComplexFraction(z)), v = eq(ComplexFraction(z));
    EXPECT_EQ(u.reduced(), p.eval(z));
    const Rational a = abs2(p.eval(z)), b = abs2(q.eval(z));
    EXPECT_EQ(abs2(u) < abs2(v), a < b);
    EXPECT_EQ(abs2(u) <= abs2(v), a <= b);
    const FilteredReal fa = abs2(FilteredComplex(u)), fb = abs2(FilteredComplex(v));
    EXPECT_EQ(fa < fb, a < b);
    EXPECT_EQ(fa <= fb, a <= b);
    EXPECT_EQ(fa.is_zero(), a == 0);
    EXPECT_EQ((fa * fb).exact().reduced(), a * b);
    EXPECT_EQ((fa - fb).exact().reduced(), a - b);
  }
}

TEST(Filtered, TiesFallBackToExact) {
  // equal values with different unreduced forms: intervals overlap
  const Fraction x(Integer(1), Integer(3)), y(Integer(2), Integer(6));
  EXPECT_FALSE(FilteredReal(x) < FilteredReal(y));
  EXPECT_TRUE(FilteredReal(x) <= FilteredReal(y));
  const Rational tiny = pow(make_rational(1, 10), 3000);
  EXPECT_TRUE(FilteredReal(Rational(tiny)) < FilteredReal(Rational(tiny + pow(tiny, 2))));
}

}  // namespace
}  // namespace noricert
