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

#include "gsb/catalog.hpp"
#include "gsb/random.hpp"
#include "test_util.hpp"

using namespace gsb;
using gsb::test::abc;
using gsb::test::p;
using gsb::test::w;

namespace {

const Alphabet kAB = abc("a b");
const Alphabet kXYZ = abc("x y z");

RewriteSystem system_of(const Alphabet& a, std::initializer_list<const char*> rels) {
  std::vector<NcPolynomial> out;
  for (const char* r : rels) out.push_back(p(a, r));
  return RewriteSystem(std::move(out), a.size());
}

TEST(ReduceStep, SingleRewrite) {
  const RewriteSystem s = system_of(kAB, {"a*b - b*a"});
  const auto r = reduce_step(p(kAB, "a*b"), s);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->value, p(kAB, "b*a"));
  EXPECT_EQ(r->step.relation, 0u);
  EXPECT_FALSE(reduce_step(p(kAB, "b*a"), s));
  EXPECT_THROW(reduce_step(NcPolynomial{}, s), std::domain_error);
}

TEST(ReduceStep, UnitRelation) {
  const Alphabet g = abc("x x^-1");
  const RewriteSystem s = system_of(g, {"x*x^-1 - 1", "x^-1*x - 1"});
  EXPECT_EQ(normal_form(p(g, "x*x^-1*x"), s).value, p(g, "x"));
}

TEST(NormalForm, Examples) {
  EXPECT_EQ(normal_form(p(kAB, "a*b*a"), system_of(kAB, {"a*b - b*a"})).value, p(kAB, "b*a*a"));
  EXPECT_TRUE(normal_form(NcPolynomial{}, system_of(kAB, {"a*b - b*a"})).value.is_zero());
  const RewriteSystem comm = system_of(kXYZ, {"x*y - y*x", "x*z - z*x", "y*z - z*y"});
  EXPECT_EQ(normal_form(p(kXYZ, "x*y*z"), comm).value, p(kXYZ, "z*y*x"));
}

TEST(NormalForm, Plactic3) {
  const Presentation pl = plactic_standard(3);
  const CompletionResult c = complete(pl.relations, 3);
  ASSERT_EQ(c.status, CompletionStatus::Complete);
  const RewriteSystem s = interreduce(c.system);
  EXPECT_EQ(normal_form(p(pl.alphabet, "3212"), s).value, p(pl.alphabet, "2321"));
}

TEST(IrrWords, Examples) {
  const std::vector<Word> got = irr_words(system_of(kAB, {"a*b - b*a"}), 2);
  const std::vector<Word> want = {Word{}, w(kAB, "a"), w(kAB, "b"), w(kAB, "a*a"), w(kAB, "b*a"), w(kAB, "b*b")};
  EXPECT_EQ(got.size(), 6u);
  for (const Word& x : want) EXPECT_NE(std::find(got.begin(), got.end(), x), got.end());
  for (std::size_t i = 1; i < got.size(); ++i) EXPECT_TRUE(deglex_compare(got[i - 1], got[i]) < 0);

  EXPECT_EQ(irr_words(RewriteSystem({}, 2), 2).size(), 7u);
  EXPECT_THROW(irr_words(RewriteSystem({}, 2), 13), std::invalid_argument);
  EXPECT_EQ(irr_counts(system_of(kAB, {"a*b - b*a"}), 3), (std::vector<std::size_t>{1, 2, 3, 4}));
}

TEST(IrrWords, SymmetricGroupS3) {
  const Presentation s3 = symmetric_group(2);
  const CompletionResult c = complete(s3.relations, s3.alphabet.size());
  ASSERT_EQ(c.status, CompletionStatus::Complete);
  const std::vector<Word> irr = irr_words(c.system, 4);
  EXPECT_EQ(irr.size(), 6u);
  for (const Word& x : irr) {
    std::vector<int> idx;
    for (Letter l : x) idx.push_back(static_cast<int>(s3.alphabet.size() - l));
    EXPECT_TRUE(matches_bokut_shiao(idx)) << s3.alphabet.render(x);
  }
}

TEST(Properties, IdempotenceAndTraceSoundness) {
  const RewriteSystem s = system_of(kXYZ, {"x*y - y*x", "x*z - 2 z*x + y", "y*y*z - z"});
  std::mt19937_64 rng(31);
  for (int i = 0; i < 1000; ++i) {
    const NcPolynomial f = random_polynomial(rng, 3, 5, 5);
    const NormalForm nf = normal_form(f, s);
    ASSERT_EQ(normal_form(nf.value, s).value, nf.value);
    ASSERT_EQ(nf.value + replay(nf.trace, s.relations()), f);
    ASSERT_EQ(reduce(f, s), nf.value);
    for (const Term& t : nf.value.terms()) {
      for (const NcPolynomial& r : s.relations()) ASSERT_TRUE(find_subwords(t.word, r.leading_word()).empty());
    }
  }
}

TEST(Properties, LinearOnGsb) {
  const RewriteSystem s = system_of(kXYZ, {"x*y - y*x", "x*z - z*x", "y*z - z*y"});
  std::mt19937_64 rng(32);
  for (int i = 0; i < 300; ++i) {
    const NcPolynomial f = random_polynomial(rng, 3, 4, 5);
    const NcPolynomial g = random_polynomial(rng, 3, 4, 5);
    ASSERT_EQ(reduce(f + g, s), reduce(f, s) + reduce(g, s));
  }
}

TEST(RewriteSystem, Invariants) {
  const RewriteSystem s = system_of(kAB, {"2 a*b - b*a", "a*b - 1/2 b*a", "0", "a - a"});
  ASSERT_EQ(s.size(), 1u);
  EXPECT_TRUE(s.relation(0).is_monic());
  EXPECT_THROW(RewriteSystem({p(kAB, "a")}, 2, OrderKind::Lex), std::invalid_argument);
}

}  // namespace
