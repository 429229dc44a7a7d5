// Copyright 2026 The invset Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "invset/exact_arith.hpp"

#include <cmath>
#include <numeric>
#include <random>

#include "gtest/gtest.h"
#include "support/oracles.hpp"

namespace invset {
namespace {

IntPolynomial poly(std::initializer_list<int> leading_first) {
  std::vector<BigInt> c;
  for (int v : leading_first) c.emplace_back(v);
  return IntPolynomial(std::move(c));
}

const IrrationalCos& irrational(const CosClass& c) { return std::get<IrrationalCos>(c); }

TEST(RationalTest, ParseAndPrintRoundTrip) {
  EXPECT_EQ(to_string(parse_rational("6/-4")), "-3/2");
  EXPECT_EQ(to_string(parse_rational("-1")), "-1/1");
  EXPECT_EQ(parse_rational(to_string(Rational(-22, 7))), Rational(-22, 7));
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
}

TEST(PiAngleTest, CanonicalForm) {
  EXPECT_EQ(PiAngle(5, 2), PiAngle(1, 2));
  EXPECT_EQ(PiAngle(-1, 4), PiAngle(7, 4));
  EXPECT_EQ(PiAngle(2, 4).b(), 2);
  EXPECT_EQ(PiAngle(4, 2), PiAngle(0, 1));
  EXPECT_THROW(PiAngle(1, 0), std::invalid_argument);
  EXPECT_EQ(relative_angle(PiAngle(0, 1), PiAngle(7, 4)), PiAngle(1, 4));
  EXPECT_EQ(parse_pi_angle("-1/4"), PiAngle(7, 4));
  EXPECT_THROW(parse_pi_angle("1/x"), std::invalid_argument);
}

TEST(NivenClassifyTest, RationalCases) {
  EXPECT_EQ(rational_value(niven_classify(PiAngle(1, 3))), Rational(1, 2));
  EXPECT_EQ(rational_value(niven_classify(PiAngle(1, 1))), Rational(-1));
  EXPECT_EQ(rational_value(niven_classify(PiAngle(0, 1))), Rational(1));
  EXPECT_EQ(rational_value(niven_classify(PiAngle(3, 2))), Rational(0));
  EXPECT_EQ(rational_value(niven_classify(PiAngle(2, 3))), Rational(-1, 2));
  EXPECT_EQ(rational_value(niven_classify(PiAngle(4, 3))), Rational(-1, 2));
  EXPECT_EQ(rational_value(niven_classify(PiAngle(5, 3))), Rational(1, 2));
}

TEST(NivenClassifyTest, QuarterPiIsIrrationalWithWitness) {
  const auto c = niven_classify(PiAngle(1, 4));
  ASSERT_FALSE(is_rational(c));
  EXPECT_EQ(irrational(c).degree, 2);
  EXPECT_EQ(*irrational(c).min_poly, poly({2, 0, -1}));
  EXPECT_FALSE(irrational(c).min_poly->has_rational_root());
}

TEST(MinimalPolynomialTest, KnownSmallCases) {
  EXPECT_EQ(cos_minimal_polynomial(PiAngle(2, 5)), poly({4, 2, -1}));
  EXPECT_EQ(cos_minimal_polynomial(PiAngle(1, 3)), poly({2, -1}));
  EXPECT_EQ(cos_minimal_polynomial(PiAngle(1, 2)), poly({1, 0}));
  EXPECT_EQ(cos_minimal_polynomial(PiAngle(1, 9)), poly({8, 0, -6, -1}));
  EXPECT_EQ(cos_minimal_polynomial(PiAngle(0, 1)), poly({1, -1}));
  EXPECT_EQ(cos_minimal_polynomial(PiAngle(1, 1)), poly({1, 1}));
}

TEST(MinimalPolynomialTest, TwoPiOverFiveRootCheck) {
  // 2cos(2pi/5) = (sqrt5 - 1)/2 is a root of x^2 + x - 1, so cos(2pi/5) is a
  // root of 4x^2 + 2x - 1; check exactly in Q(sqrt5) and numerically.
  const QuadraticValue c(Rational(-1, 4), Rational(1, 4), BigInt(5));
  EXPECT_EQ(cos_as_quadratic(PiAngle(2, 5)), c);
  EXPECT_EQ(cos_minimal_polynomial(PiAngle(2, 5)), c.minimal_polynomial());
  const long double v = std::cos(2.0L * std::numbers::pi_v<long double> / 5.0L);
  EXPECT_NEAR(static_cast<double>(cos_minimal_polynomial(PiAngle(2, 5)).evaluate(v)), 0.0, 1e-12);
}

TEST(MinimalPolynomialTest, DegreeIsHalfTotientAndRootIsCos) {
  for (std::int64_t b = 4; b <= 60; ++b) {
    for (std::int64_t a = 1; a < 2 * b; ++a) {
      if (std::gcd(a, b) != 1) continue;
      const PiAngle phi(a, b);
      const IntPolynomial p = cos_minimal_polynomial(phi);
      const std::int64_t n = phi.root_of_unity_order();
      ASSERT_EQ(p.degree(), euler_totient(n) / 2) << a << "/" << b;
      // Evaluate in quad precision relative to the coefficient scale.
      oracle::Quad x = oracle::cos_pi_fraction(a, b);
      oracle::Quad acc = 0;
      oracle::Quad scale = 0;
      for (const auto& c : p.coefficients()) {
        acc = acc * x + oracle::Quad(c);
        scale = scale * abs(x) + abs(oracle::Quad(c));
      }
      EXPECT_LT(static_cast<double>(abs(acc) / scale), 1e-25) << a << "/" << b;
    }
  }
}

TEST(MinimalPolynomialTest, CapBehaviour) {
  const PiAngle big(1, 1'000'003);  // order 2'000'006 > cap
  EXPECT_THROW(cos_minimal_polynomial(big), std::length_error);
  const auto c = niven_classify(big);
  ASSERT_FALSE(is_rational(c));
  EXPECT_FALSE(irrational(c).min_poly.has_value());
  EXPECT_EQ(irrational(c).degree, euler_totient(2'000'006) / 2);
}

TEST(NivenClassifyTest, ConsistentWithPolynomialDegree) {
  for (std::int64_t b = 1; b <= 90; ++b) {
    for (std::int64_t a = 0; a < 2 * b; ++a) {
      if (std::gcd(a, b) != 1) continue;
      const PiAngle phi(a, b);
      EXPECT_EQ(is_rational(niven_classify(phi)), cos_minimal_polynomial(phi).degree() == 1)
          << a << "/" << b;
    }
  }
}

TEST(ChebyshevDoubleTest, Examples) {
  EXPECT_EQ(chebyshev_double(Rational(1)), Rational(-1));
  EXPECT_EQ(chebyshev_double(Rational(2)), Rational(2));
  EXPECT_EQ(chebyshev_double(Rational(1, 2)), Rational(-7, 4));
}

TEST(ChebyshevDoubleTest, DenominatorSquares) {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<std::int64_t> num(-1'000'000, 1'000'000);
  std::uniform_int_distribution<std::int64_t> den(2, 1'000'000);
  for (int i = 0; i < 2000; ++i) {
    const Rational c(num(rng), den(rng));
    if (denominator_of(c) == 1) continue;
    const BigInt b = denominator_of(c);
    EXPECT_EQ(denominator_of(chebyshev_double(c)), b * b) << to_string(c);
  }
}

TEST(DoublingOrbitTest, BoundedByTwoB) {
  for (std::int64_t b = 1; b <= 120; ++b) {
    for (std::int64_t a = 0; a < 2 * b; ++a) {
      if (std::gcd(a, b) != 1) continue;
      const auto orbit = doubling_orbit(PiAngle(a, b));
      EXPECT_LE(static_cast<std::int64_t>(orbit.size()), 2 * b);
    }
  }
}

TEST(SqrtClassifyTest, Examples) {
  EXPECT_EQ(std::get<Rational>(sqrt_classify(Rational(4, 9))), Rational(2, 3));
  EXPECT_EQ(std::get<Rational>(sqrt_classify(Rational(0))), Rational(0));
  EXPECT_EQ(std::get<QuadraticValue>(sqrt_classify(Rational(1, 2))),
            QuadraticValue(Rational(0), Rational(1, 2), BigInt(2)));
  EXPECT_EQ(std::get<QuadraticValue>(sqrt_classify(Rational(72, 5))),
            QuadraticValue(Rational(0), Rational(6, 5), BigInt(10)));
  EXPECT_THROW(sqrt_classify(Rational(-1, 4)), std::domain_error);
}

TEST(SqrtClassifyTest, SquareOfResultRecoversInput) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> dist(1, 5'000'000);
  for (int i = 0; i < 500; ++i) {
    const Rational r(dist(rng), dist(rng));
    const auto root = sqrt_classify(r);
    if (const auto* q = std::get_if<Rational>(&root)) {
      EXPECT_EQ(*q * *q, r);
    } else {
      const auto& v = std::get<QuadraticValue>(root);
      EXPECT_GT(v.surd_coefficient(), 0);
      EXPECT_EQ(v.surd_coefficient() * v.surd_coefficient() * Rational(v.radicand()), r);
      EXPECT_EQ(square_free_split(v.radicand()).root, 1);
    }
  }
}

TEST(SquareFreeSplitTest, LargeCofactors) {
  // 1000003^2 * 999983 * 2
  const BigInt n = BigInt(1000003) * 1000003 * 999983 * 2;
  const auto s = square_free_split(n);
  EXPECT_EQ(s.root, 1000003);
  EXPECT_EQ(s.core, BigInt(999983) * 2);
}

TEST(ClassifyThirdSideTest, CoplanarPythagorean) {
  const auto c = classify_third_side(Rational(3, 5), Rational(4, 5), PiAngle(1, 1));
  EXPECT_EQ(rational_value(c), Rational(0));
}

TEST(ClassifyThirdSideTest, AllVanishing) {
  const auto c = classify_third_side(Rational(0), Rational(0), PiAngle(1, 2));
  EXPECT_EQ(rational_value(c), Rational(0));
}

TEST(ClassifyThirdSideTest, FifthOfPiIsIrrational) {
  const auto c = classify_third_side(Rational(3, 5), Rational(4, 5), PiAngle(1, 5));
  ASSERT_FALSE(is_rational(c));
  const auto& irr = irrational(c);
  EXPECT_EQ(irr.degree, 2);
  ASSERT_TRUE(irr.min_poly);
  EXPECT_FALSE(irr.min_poly->has_rational_root());
  const double numeric = 12.0 / 25 + 12.0 / 25 * std::cos(std::numbers::pi / 5);
  EXPECT_NEAR(static_cast<double>(irr.min_poly->evaluate(static_cast<long double>(numeric))),
              0.0, 1e-9);
  EXPECT_NEAR(static_cast<double>(oracle::third_side_cos(oracle::Quad(3) / 5, oracle::Quad(4) / 5, 1, 5)),
              numeric, 1e-12);
}

TEST(ClassifyThirdSideTest, DegenerateSideGivesOtherSide) {
  EXPECT_EQ(rational_value(classify_third_side(Rational(1), Rational(1, 2), PiAngle(1, 7))),
            Rational(1, 2));
  EXPECT_EQ(rational_value(classify_third_side(Rational(-1), Rational(1, 3), PiAngle(2, 9))),
            Rational(-1, 3));
}

TEST(ClassifyThirdSideTest, CaseTwoThroughFour) {
  // sqrt(r) irrational: r = (3/4)(8/9) = 2/3.
  const Rational a(1, 2), b(1, 3);
  EXPECT_EQ(rational_value(classify_third_side(a, b, PiAngle(1, 2))), Rational(1, 6));
  EXPECT_EQ(irrational(classify_third_side(a, b, PiAngle(1, 3))).degree, 2);
  // cos(pi/4) = sqrt2/2: u = 0 but rD = 4/3 is not a square.
  EXPECT_EQ(irrational(classify_third_side(a, b, PiAngle(1, 4))).degree, 2);
  // cos(pi/5) = (1 + sqrt5)/4: u != 0, d = 6 != D = 5, degree 4.
  const auto deg4 = classify_third_side(a, b, PiAngle(1, 5));
  EXPECT_EQ(irrational(deg4).degree, 4);
  EXPECT_EQ(irrational(deg4).min_poly->degree(), 4);
  const double numeric =
      static_cast<double>(oracle::third_side_cos(oracle::Quad(1) / 2, oracle::Quad(1) / 3, 1, 5));
  EXPECT_NEAR(static_cast<double>(irrational(deg4).min_poly->evaluate(static_cast<long double>(numeric))),
              0.0, 1e-9);
  // Degree > 2: only a bound.
  const auto deg_bound = irrational(classify_third_side(a, b, PiAngle(1, 7)));
  EXPECT_TRUE(deg_bound.degree_is_bound);
  EXPECT_EQ(deg_bound.degree, 6);
}

TEST(ClassifyThirdSideTest, CaseFourCoincidenceIsRational) {
  // cosA = 1/3, cosB = 0 gives r = 8/9, sqrt(r) = (2/3)sqrt2; cos(pi/4) = sqrt2/2 has u = 0 and
  // rD = 16/9 is a square, so the third side is 0 + (2/3)(1/2)*2 = 2/3.
  const auto c = classify_third_side(Rational(1, 3), Rational(0), PiAngle(1, 4));
  ASSERT_TRUE(is_rational(c));
  EXPECT_EQ(rational_value(c), Rational(2, 3));
  EXPECT_NEAR(static_cast<double>(oracle::third_side_cos(oracle::Quad(1) / 3, 0, 1, 4)), 2.0 / 3,
              1e-12);
}

TEST(ClassifyThirdSideTest, RejectsOutOfRange) {
  EXPECT_THROW(classify_third_side(Rational(3, 2), Rational(0), PiAngle(1, 1)),
               std::invalid_argument);
}

TEST(ClassifyThirdSideTest, SymmetricAndAgreesWithNumericOracle) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::int64_t> den(1, 40);
  std::uniform_int_distribution<std::int64_t> gden(1, 12);
  for (int i = 0; i < 1500; ++i) {
    const std::int64_t da = den(rng), db = den(rng);
    const Rational a(std::uniform_int_distribution<std::int64_t>(-da, da)(rng), da);
    const Rational b(std::uniform_int_distribution<std::int64_t>(-db, db)(rng), db);
    const std::int64_t gb = gden(rng);
    const PiAngle gamma(std::uniform_int_distribution<std::int64_t>(0, 2 * gb - 1)(rng), gb);
    const auto c1 = classify_third_side(a, b, gamma);
    const auto c2 = classify_third_side(b, a, gamma);
    ASSERT_EQ(is_rational(c1), is_rational(c2));
    const oracle::Quad numeric = oracle::third_side_cos(
        oracle::Quad(numerator_of(a).str()) / oracle::Quad(denominator_of(a).str()),
        oracle::Quad(numerator_of(b).str()) / oracle::Quad(denominator_of(b).str()), gamma.a(),
        gamma.b());
    ASSERT_EQ(is_rational(c1), oracle::looks_rational(numeric))
        << to_string(a) << " " << to_string(b) << " " << gamma.to_string();
    if (is_rational(c1)) {
      EXPECT_EQ(rational_value(c1), rational_value(c2));
      EXPECT_NEAR(to_double(rational_value(c1)), static_cast<double>(numeric), 1e-15);
    }
  }
}

}  // namespace
}  // namespace invset
