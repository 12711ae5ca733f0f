/* Copyright 2026 The gsb Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#include <gtest/gtest.h>

#include <random>

#include "gsb/random.hpp"
#include "test_util.hpp"

using namespace gsb;
using gsb::test::abc;
using gsb::test::p;
using gsb::test::w;

namespace {

const Alphabet kAB = abc("a b");
const Alphabet kABC = abc("a b c");

TEST(Leading, Examples) {
  const auto [lw, lc] = leading(p(kAB, "2 a*b - b*a"));
  EXPECT_EQ(lw, w(kAB, "a*b"));
  EXPECT_EQ(lc, 2);
  EXPECT_EQ(leading(p(kAB, "a")).first, w(kAB, "a"));
  EXPECT_EQ(leading(p(kAB, "b + a*a")).first, w(kAB, "a*a"));
  EXPECT_THROW(leading(NcPolynomial{}), std::domain_error);
}

TEST(Leading, LexOrderOnSamePolynomial) {
  const NcPolynomial f = p(kAB, "a*b + a");
  EXPECT_EQ(f.leading_word(OrderKind::DegLex), w(kAB, "a*b"));
  EXPECT_EQ(f.leading_word(OrderKind::Lex), w(kAB, "a"));
}

TEST(MakeMonic, Examples) {
  EXPECT_EQ(make_monic(p(kAB, "2 a*b - b*a")), p(kAB, "a*b - 1/2 b*a"));
  EXPECT_EQ(make_monic(p(kAB, "a*b - b*a")), p(kAB, "a*b - b*a"));
  EXPECT_EQ(make_monic(p(kAB, "-3 a")), p(kAB, "a"));
  EXPECT_THROW(make_monic(NcPolynomial{}), std::domain_error);
}

TEST(RingOps, Examples) {
  EXPECT_EQ(add(p(kAB, "a*b - b*a"), p(kAB, "b*a")), p(kAB, "a*b"));
  EXPECT_EQ(concat_product(p(kABC, "a + b"), p(kABC, "c")), p(kABC, "a*c + b*c"));
  EXPECT_TRUE(scale(p(kAB, "a"), 0).is_zero());
  EXPECT_EQ(p(kAB, "a*b - a*b"), NcPolynomial{});
}

TEST(RingOps, Text) {
  EXPECT_EQ(to_string(p(kAB, "a*b - 1/2 b*a + 3"), kAB), "a*b - 1/2 b*a + 3");
  EXPECT_EQ(to_string(NcPolynomial{}, kAB), "0");
  EXPECT_EQ(parse_rational("-6/4"), Rational(-3, 2));
}

TEST(Properties, RingAxioms) {
  std::mt19937_64 rng(21);
  const NcPolynomial one = NcPolynomial::monomial(Word{});
  for (int i = 0; i < 300; ++i) {
    const NcPolynomial f = random_polynomial(rng, 3, 3, 4);
    const NcPolynomial g = random_polynomial(rng, 3, 3, 4);
    const NcPolynomial h = random_polynomial(rng, 3, 3, 4);
    ASSERT_EQ((f * g) * h, f * (g * h));
    ASSERT_EQ(f * (g + h), f * g + f * h);
    ASSERT_EQ((f + g) * h, f * h + g * h);
    ASSERT_EQ(one * f, f);
    ASSERT_EQ(f * one, f);
    ASSERT_EQ(f - f, NcPolynomial{});
  }
}

TEST(Properties, LeadingIsMultiplicative) {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 500; ++i) {
    const NcPolynomial f = random_polynomial(rng, 3, 4, 5);
    const NcPolynomial g = random_polynomial(rng, 3, 4, 5);
    if (f.is_zero() || g.is_zero()) continue;
    const auto [fw, fc] = leading(f);
    const auto [gw, gc] = leading(g);
    const auto [pw, pc] = leading(concat_product(f, g));
    ASSERT_EQ(pw, fw * gw);
    ASSERT_EQ(pc, fc * gc);
  }
}

TEST(Properties, MakeMonicIdempotent) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 500; ++i) {
    const NcPolynomial f = random_polynomial(rng, 2, 4, 4);
    if (f.is_zero()) continue;
    const NcPolynomial m = make_monic(f);
    ASSERT_EQ(m.leading().coeff, 1);
    ASSERT_EQ(make_monic(m), m);
    ASSERT_EQ(m.size(), f.size());
  }
}

}  // namespace
