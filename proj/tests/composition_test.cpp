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

#include "test_util.hpp"

using namespace gsb;
using gsb::test::abc;
using gsb::test::p;
using gsb::test::w;

namespace {

const Alphabet kXYZ = abc("x y z");
const Alphabet kABC = abc("a b c");

TEST(Intersection, Commutators) {
  const auto cs = intersection_compositions(p(kXYZ, "x*y - y*x"), p(kXYZ, "y*z - z*y"));
  ASSERT_EQ(cs.size(), 1u);
  EXPECT_EQ(cs[0].kind, CompositionKind::Intersection);
  EXPECT_EQ(cs[0].w, w(kXYZ, "x*y*z"));
  EXPECT_EQ(cs[0].position, 1u);
  EXPECT_EQ(cs[0].value, p(kXYZ, "x*z*y - y*x*z"));
  const RewriteSystem s({p(kXYZ, "x*y - y*x"), p(kXYZ, "x*z - z*x"), p(kXYZ, "y*z - z*y")}, 3);
  EXPECT_TRUE(is_trivial(cs[0], s));
}

TEST(Intersection, NoSelfOverlap) {
  const Alphabet ab = abc("a b");
  EXPECT_TRUE(intersection_compositions(p(ab, "a*b - b*a"), p(ab, "a*b - b*a")).empty());
}

TEST(Intersection, SelfOverlap) {
  const Alphabet ab = abc("a b");
  const auto cs = intersection_compositions(p(ab, "a*b*a - b"), p(ab, "a*b*a - b"));
  ASSERT_EQ(cs.size(), 1u);
  EXPECT_EQ(cs[0].w, w(ab, "a*b*a*b*a"));
  EXPECT_EQ(cs[0].value, p(ab, "a*b*b - b*b*a"));
}

TEST(Inclusion, Examples) {
  const auto cs = inclusion_compositions(p(kABC, "a*b*a*b - b"), p(kABC, "b*a - c"));
  ASSERT_EQ(cs.size(), 1u);
  EXPECT_EQ(cs[0].kind, CompositionKind::Inclusion);
  EXPECT_EQ(cs[0].w, w(kABC, "a*b*a*b"));
  EXPECT_EQ(cs[0].position, 1u);
  EXPECT_EQ(cs[0].value, p(kABC, "a*c*b - b"));

  EXPECT_TRUE(inclusion_compositions(p(kABC, "a*b - c"), p(kABC, "c*a - b")).empty());

  const auto two = inclusion_compositions(p(kABC, "a*a - 1"), p(kABC, "a"));
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[0].position, 0u);
  EXPECT_EQ(two[1].position, 1u);
}

TEST(Inclusion, IdentitySkipped) {
  const NcPolynomial f = p(kABC, "a*b - c");
  EXPECT_TRUE(inclusion_compositions(f, f, 0, 0).empty());
}

TEST(Compositions, NonMonicRejected) {
  EXPECT_THROW(intersection_compositions(p(kXYZ, "2 x*y"), p(kXYZ, "y*z")), std::invalid_argument);
  EXPECT_THROW(inclusion_compositions(p(kXYZ, "x*y"), p(kXYZ, "2 y")), std::invalid_argument);
}

TEST(IsTrivial, Examples) {
  const Alphabet ab = abc("a b c");
  const RewriteSystem s({p(ab, "a*b - b*a")}, 3);
  const Composition zero{CompositionKind::Inclusion, 0, 0, Word{}, 0, NcPolynomial{}};
  EXPECT_TRUE(is_trivial(zero, s));
  const Composition c{CompositionKind::Inclusion, 0, 0, w(ab, "a*b*a*b"), 1, p(ab, "a*c*b - b")};
  EXPECT_FALSE(is_trivial(c, s));
}

TEST(Properties, ValuesBelowAmbiguity) {
  const Alphabet ab = abc("a b");
  const RewriteSystem s({p(ab, "a*b*a - b"), p(ab, "b*a*b - a*a"), p(ab, "a*a*b - b*b"), p(ab, "b*b")}, 2);
  const std::vector<Composition> cs = all_compositions(s);
  ASSERT_FALSE(cs.empty());
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const Composition& c = cs[i];
    for (const Term& t : c.value.terms()) ASSERT_TRUE(deglex_compare(t.word, c.w) < 0);
    const Word& f = s.leading_word(c.f_id);
    const Word& g = s.leading_word(c.g_id);
    ASSERT_EQ(c.w.prefix(f.size()), f);
    ASSERT_TRUE(c.w.matches_at(g, c.position));
    if (c.kind == CompositionKind::Intersection) {
      ASSERT_LT(c.w.size(), f.size() + g.size());
      ASSERT_EQ(c.position + g.size(), c.w.size());
    } else {
      ASSERT_EQ(c.w, f);
    }
    ASSERT_EQ(composition_value(c.kind, s.relation(c.f_id), s.relation(c.g_id), c.position), c.value);
    if (i > 0) {
      ASSERT_FALSE(composition_key_less(c, cs[i - 1]));
    }
  }
  EXPECT_TRUE(all_compositions(s, 3).size() < cs.size());
}

}  // namespace
