// Copyright 2026 The latsec Authors
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

#include "latsec/conjecture.hpp"

#include <chrono>

#include <gtest/gtest.h>

#include "latsec/error.hpp"
#include "latsec/secrecy.hpp"

namespace latsec {
namespace {

using P = RationalPolynomial;

TEST(VerifyConjectureTest, HoldsForEveryTabulatedLattice) {
  const auto start = std::chrono::steady_clock::now();
  for (const auto& e : known_extremal_table()) {
    const ConjectureCertificate cert = verify_conjecture(e.poly);
    EXPECT_TRUE(cert.holds) << e.dimension;
    EXPECT_EQ(cert.p_at_zero, Rational(1));
    EXPECT_EQ(cert.p_at_quarter, e.poly(Rational(1, 4)));
    ASSERT_TRUE(std::holds_alternative<Rational>(cert.min_location));
    EXPECT_EQ(std::get<Rational>(cert.min_location), Rational(1, 4));
    EXPECT_FALSE(cert.method.empty());
  }
  EXPECT_LT(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(), 5.0);
}

TEST(VerifyConjectureTest, DecreasingLinearPolynomial) {
  const auto cert = verify_conjecture(P{1, -1});
  EXPECT_TRUE(cert.holds);
  EXPECT_TRUE(cert.critical_points.empty());
}

TEST(VerifyConjectureTest, FailsWhenInteriorMinimumIsLower) {
  // P' vanishes at 1/8 where P = 3/4 < P(1/4) = 1.
  const auto cert = verify_conjecture(P{1, -4, 16});
  EXPECT_FALSE(cert.holds);
  ASSERT_EQ(cert.critical_points.size(), 1u);
  EXPECT_LE(cert.critical_points[0].lo, Rational(1, 8));
  EXPECT_GE(cert.critical_points[0].hi, Rational(1, 8));
  EXPECT_EQ(cert.p_at_quarter, Rational(1));
}

TEST(VerifyConjectureTest, IrrationalCriticalPointIsCertified) {
  // P = 1 - z + c z^3 has P' = 0 at z = 1/sqrt(3c); c = 30 puts it near 0.105.
  const P poly{1, -1, 0, 30};
  const auto cert = verify_conjecture(poly);
  ASSERT_EQ(cert.critical_points.size(), 1u);
  EXPECT_LE(cert.critical_points[0].width(), kCriticalIntervalWidth);
  // P(0.105) ~ 0.930 and P(1/4) = 1.21875, so the minimum is interior.
  EXPECT_FALSE(cert.holds);
  EXPECT_TRUE(std::holds_alternative<RationalInterval>(cert.min_location));
}

TEST(VerifyConjectureTest, TieWithEndpointIsNotAHold) {
  // P(0) = P(1/4) for a parabola symmetric about 1/8.
  const auto cert = verify_conjecture(P{1, -8, 32});
  EXPECT_FALSE(cert.holds);
}

TEST(VerifyConjectureTest, RejectsConstants) {
  EXPECT_THROW(verify_conjecture(P{1}), DomainError);
  EXPECT_THROW(verify_conjecture(P{}), DomainError);
}

TEST(VerifyConjectureTest, JsonCarriesExactValues) {
  const std::string json = certificate_to_json(verify_conjecture(extremal_polynomial(24)), 24);
  EXPECT_NE(json.find("\"dimension\":24"), std::string::npos) << json;
  EXPECT_NE(json.find("\"holds\":true"), std::string::npos) << json;
  EXPECT_NE(json.find("63/256"), std::string::npos) << json;
}

}  // namespace
}  // namespace latsec
