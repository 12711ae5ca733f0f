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
using gsb::test::w;

namespace {

const Alphabet kAB = abc("a b");
const Alphabet kXYZ = abc("x y z");

LieMonomial L(Letter x) { return LieMonomial::leaf(x); }
LieMonomial B(const LieMonomial& l, const LieMonomial& r) { return LieMonomial::bracket(l, r); }
LiePolynomial lp(const Alphabet& a, std::string_view text) { return parse_lie_polynomial(text, a); }

TEST(Alsw, Examples) {
  EXPECT_TRUE(is_alsw(w(kAB, "a*b")));
  EXPECT_FALSE(is_alsw(w(kAB, "a*a")));
  EXPECT_TRUE(is_alsw(w(kAB, "a*a*b")));
  EXPECT_FALSE(is_alsw(w(kAB, "b*a")));
  EXPECT_THROW(is_alsw(Word{}), std::invalid_argument);
}

TEST(Alsw, Factorization) {
  const Word u = w(kAB, "b*a*b*a*a*b");
  const std::vector<Word> f = alsw_factorization(u);
  Word joined;
  for (std::size_t i = 0; i < f.size(); ++i) {
    EXPECT_TRUE(is_alsw(f[i]));
    if (i > 0) {
      EXPECT_TRUE(lex_compare(f[i - 1], f[i]) <= 0);
    }
    joined.append(f[i]);
  }
  EXPECT_EQ(joined, u);
}

TEST(ShirshovBracket, Examples) {
  EXPECT_EQ(shirshov_bracket(w(kAB, "a")), L(0));
  EXPECT_EQ(shirshov_bracket(w(kAB, "a*a*b")), B(L(0), B(L(0), L(1))));
  EXPECT_EQ(shirshov_bracket(w(kAB, "a*a*b*b")), B(L(0), B(B(L(0), L(1)), L(1))));
  EXPECT_EQ(to_string(shirshov_bracket(w(kAB, "a*a*b*b")), kAB), "[a,[[a,b],b]]");
  EXPECT_THROW(shirshov_bracket(w(kAB, "b*a")), std::invalid_argument);
  EXPECT_TRUE(is_nlsw(B(L(0), B(L(0), L(1)))));
  EXPECT_FALSE(is_nlsw(B(B(L(0), L(1)), L(0))));
  EXPECT_FALSE(Nlsw::from_tree(B(L(1), L(0))));
}

TEST(Expand, Examples) {
  const Alphabet& a = kAB;
  EXPECT_EQ(lie_expand(L(0)), gsb::test::p(a, "a"));
  EXPECT_EQ(lie_expand(B(L(0), L(1))), gsb::test::p(a, "a*b - b*a"));
  EXPECT_EQ(lie_expand(B(L(0), B(L(0), L(1)))), gsb::test::p(a, "a*a*b - 2 a*b*a + b*a*a"));
}

TEST(NlswBasis, Examples) {
  EXPECT_EQ(to_nlsw_basis(B(L(1), L(0))), Rational(-1) * LiePolynomial::basis(w(kAB, "a*b")));
  EXPECT_EQ(to_nlsw_basis(B(B(L(0), L(1)), L(0))), Rational(-1) * LiePolynomial::basis(w(kAB, "a*a*b")));
  EXPECT_TRUE(to_nlsw_basis(B(L(0), L(0))).is_zero());
  EXPECT_THROW(LiePolynomial({Term{w(kAB, "b*a"), 1}}), std::invalid_argument);
}

TEST(SpecialBracket, Examples) {
  const LiePolynomial s = lp(kXYZ, "[x,y] + 2 [x,z]");
  EXPECT_EQ(special_bracket(Word{}, s, Word{}), s);
  EXPECT_EQ(special_bracket(Word{}, s, w(kXYZ, "y")), lie_bracket(s, LiePolynomial::basis(w(kXYZ, "y"))));
  EXPECT_EQ(special_bracket(w(kXYZ, "x"), s, Word{}), lie_bracket(LiePolynomial::basis(w(kXYZ, "x")), s));
  EXPECT_THROW(special_bracket(w(kXYZ, "y"), s, Word{}), std::invalid_argument);
}

TEST(SpecialBracket, LeadingWordProperty) {
  std::mt19937_64 rng(51);
  std::uniform_int_distribution<std::size_t> deg(1, 3);
  std::size_t tested = 0;
  for (int i = 0; i < 3000 && tested < 500; ++i) {
    const Word a = random_word(rng, 3, deg(rng) - 1);
    const Word b = random_word(rng, 3, deg(rng) - 1);
    const Word u = random_word(rng, 3, deg(rng));
    if (!is_alsw(u) || !is_alsw(a * u * b)) continue;
    LiePolynomial s = LiePolynomial::basis(u);
    if (u.size() > 1) s = s + LiePolynomial::basis(Word{2});
    const NcPolynomial e = lie_expand(special_bracket(a, s, b));
    ASSERT_EQ(e.leading_word(), a * u * b);
    ASSERT_EQ(e.leading().coeff, 1);
    ++tested;
  }
  EXPECT_GT(tested, 100u);
}

TEST(Compositions, Intersection) {
  const auto cs = lie_compositions(lp(kXYZ, "[x,y]"), lp(kXYZ, "[y,z]"));
  ASSERT_EQ(cs.size(), 1u);
  EXPECT_EQ(cs[0].kind, CompositionKind::Intersection);
  EXPECT_EQ(cs[0].w, w(kXYZ, "x*y*z"));
  EXPECT_EQ(cs[0].value, to_nlsw_basis(B(B(L(0), L(1)), L(2))) - to_nlsw_basis(B(L(0), B(L(1), L(2)))));
  EXPECT_TRUE(lie_compositions(lp(kXYZ, "[x,y]"), lp(kXYZ, "[x,z]")).empty());
  EXPECT_THROW(lie_compositions(lp(kXYZ, "2 [x,y]"), lp(kXYZ, "[x,z]")), std::invalid_argument);
}

TEST(Compositions, Inclusion) {
  const auto cs = lie_compositions(lp(kXYZ, "[x [x,y]] - [x,z]"), lp(kXYZ, "[x,y]"));
  ASSERT_EQ(cs.size(), 1u);
  EXPECT_EQ(cs[0].kind, CompositionKind::Inclusion);
  EXPECT_EQ(cs[0].value, lp(kXYZ, "-[x,z]"));
}

TEST(NormalForm, Examples) {
  const LieSystem s({lp(kXYZ, "[x,y]")}, 3);
  EXPECT_TRUE(lie_normal_form(lp(kXYZ, "[x,y]"), s).is_zero());
  EXPECT_TRUE(lie_normal_form(to_nlsw_basis(B(B(L(0), L(1)), L(2))), s).is_zero());
  const LiePolynomial other = to_nlsw_basis(B(B(L(0), L(2)), L(1)));
  const LiePolynomial nf = lie_normal_form(other, s);
  EXPECT_FALSE(nf.is_zero());
  EXPECT_EQ(nf.leading_word(), w(kXYZ, "x*z*y"));
}

TEST(Enumerate, WittCounts) {
  const std::vector<std::size_t> two = {2, 1, 2, 3, 6, 9};
  const std::vector<std::size_t> three = {3, 3, 8, 18, 48, 116};
  for (std::size_t n = 1; n <= 6; ++n) {
    EXPECT_EQ(nlsw_enumerate(2, n).size(), two[n - 1]);
    EXPECT_EQ(witt_number(2, n), two[n - 1]);
    EXPECT_EQ(nlsw_enumerate(3, n).size(), three[n - 1]);
    EXPECT_EQ(witt_number(3, n), three[n - 1]);
  }
  const auto one = nlsw_enumerate(2, 1);
  ASSERT_EQ(one.size(), 2u);
  EXPECT_EQ(one[0].word(), w(kAB, "b"));
  EXPECT_EQ(one[1].word(), w(kAB, "a"));
}

TEST(Enumerate, MatchesBruteForce) {
  for (std::size_t n = 1; n <= 7; ++n) {
    std::vector<Word> brute;
    std::vector<Letter> digits(n, 0);
    while (true) {
      const Word u(digits);
      if (is_alsw(u)) brute.push_back(u);
      std::size_t i = n;
      while (i > 0 && digits[i - 1] == 1) digits[--i] = 0;
      if (i == 0) break;
      ++digits[i - 1];
    }
    const auto got = nlsw_enumerate(2, n);
    ASSERT_EQ(got.size(), brute.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
      ASSERT_TRUE(is_nlsw(got[i].tree()));
      ASSERT_EQ(got[i].tree().word(), got[i].word());
      if (i > 0) {
        ASSERT_TRUE(lex_compare(got[i - 1].word(), got[i].word()) < 0);
      }
    }
  }
}

TEST(Properties, ShirshovLeadingWord) {
  for (std::size_t n = 1; n <= 7; ++n) {
    for (const Nlsw& u : nlsw_enumerate(3, n)) {
      const NcPolynomial e = lie_expand(u.tree());
      ASSERT_EQ(e.leading_word(), u.word());
      ASSERT_EQ(e.leading().coeff, 1);
    }
  }
}

TEST(Properties, ExpansionIsGroundTruth) {
  std::mt19937_64 rng(52);
  std::uniform_int_distribution<std::size_t> deg(1, 7);
  for (int i = 0; i < 1000; ++i) {
    const LieMonomial m = random_lie_monomial(rng, 3, deg(rng));
    ASSERT_EQ(lie_expand(to_nlsw_basis(m)), lie_expand(m)) << to_string(m, kXYZ);
  }
}

TEST(Properties, JacobiAndAntisymmetry) {
  std::mt19937_64 rng(53);
  std::uniform_int_distribution<std::size_t> deg(1, 3);
  for (int i = 0; i < 300; ++i) {
    const LieMonomial a = random_lie_monomial(rng, 3, deg(rng));
    const LieMonomial b = random_lie_monomial(rng, 3, deg(rng));
    const LieMonomial c = random_lie_monomial(rng, 3, deg(rng));
    ASSERT_TRUE(lie_expand(B(a, a)).is_zero());
    ASSERT_EQ(lie_expand(B(a, b)), -lie_expand(B(b, a)));
    ASSERT_TRUE((lie_expand(B(B(a, b), c)) + lie_expand(B(B(b, c), a)) + lie_expand(B(B(c, a), b))).is_zero());
    ASSERT_TRUE((to_nlsw_basis(B(B(a, b), c)) + to_nlsw_basis(B(B(b, c), a)) + to_nlsw_basis(B(B(c, a), b)))
                    .is_zero());
  }
}

TEST(Gsb, FullyCommutingPartiallyCommutative) {
  const Presentation pc = pc_family({"x", "y", "z"}, CommutationGraph::complete(3), PcKind::Lie, 4);
  const LieSystem s = lie_system(pc);
  const LieGsbReport r = lie_is_gsb(s, 4);
  EXPECT_TRUE(r.is_gsb);
  EXPECT_GT(r.checked, 0u);
  const std::vector<Word> irr = lie_irr_words(s, 4);
  EXPECT_EQ(irr.size(), 3u);
}

TEST(Gsb, NotGsb) {
  const LieSystem s({lp(kXYZ, "[x,y] - z"), lp(kXYZ, "[y,z] - x")}, 3);
  const LieGsbReport r = lie_is_gsb(s, 0, 2);
  EXPECT_FALSE(r.is_gsb);
  ASSERT_EQ(r.failures.size(), 1u);
  EXPECT_EQ(r.failures[0].w, w(kXYZ, "x*y*z"));
}

TEST(Gsb, ThreadsAgree) {
  const LieSystem s({lp(kXYZ, "[x,y] - [y,z]"), lp(kXYZ, "[x,z] + [y z z]")}, 3);
  const LieGsbReport a = lie_is_gsb(s, 6, 1);
  const LieGsbReport b = lie_is_gsb(s, 6, 4);
  EXPECT_EQ(a.checked, b.checked);
  ASSERT_EQ(a.failures.size(), b.failures.size());
  for (std::size_t i = 0; i < a.failures.size(); ++i) EXPECT_EQ(a.failures[i].value, b.failures[i].value);
}

TEST(Properties, AgreesWithAssociativeEngine) {
  // A Lie GSB: its expansions generate the associative ideal, so Lie and
  // associative normal forms vanish together on ideal elements.
  const Presentation pc = pc_family({"x", "y", "z"}, CommutationGraph::complete(3), PcKind::Lie, 5);
  const LieSystem s = lie_system(pc);
  std::vector<NcPolynomial> expansions;
  for (std::size_t i = 0; i < s.size(); ++i) expansions.push_back(s.expansion(i));
  const RewriteSystem assoc = interreduce(complete(expansions, 3).system);
  std::mt19937_64 rng(54);
  std::uniform_int_distribution<std::size_t> pick(0, s.size() - 1);
  std::uniform_int_distribution<std::size_t> deg(1, 2);
  for (int i = 0; i < 100; ++i) {
    const LiePolynomial r = s.relation(pick(rng));
    const LiePolynomial m = to_nlsw_basis(random_lie_monomial(rng, 3, deg(rng)));
    const LiePolynomial ideal = lie_bracket(r, m);
    if (ideal.degree() > 5) continue;
    ASSERT_TRUE(lie_normal_form(ideal, s).is_zero());
    ASSERT_TRUE(reduce(lie_expand(ideal), assoc).is_zero());
    const LiePolynomial outside = to_nlsw_basis(random_lie_monomial(rng, 3, 1));
    ASSERT_EQ(lie_normal_form(outside, s).is_zero(), reduce(lie_expand(outside), assoc).is_zero());
  }
}

TEST(Complete, Finite) {
  const LieCompletionResult r = lie_complete({lp(kXYZ, "[x,y]"), lp(kXYZ, "[x,z]"), lp(kXYZ, "[y,z]")}, 3);
  EXPECT_EQ(r.status, CompletionStatus::Complete);
  EXPECT_EQ(r.system.size(), 3u);
  EXPECT_TRUE(lie_is_gsb(r.system).is_gsb);
}

TEST(Complete, PartiallyCommutativeTruncates) {
  // y commutes with x and z: the basis contains [x z^k y] for every k.
  CompletionBudget budget;
  budget.max_deg = 6;
  const LieCompletionResult r = lie_complete({lp(kXYZ, "[x,y]"), lp(kXYZ, "[y,z]")}, 3, budget);
  EXPECT_NE(r.status, CompletionStatus::Complete);
  const Presentation fam = pc_family({"x", "y", "z"}, CommutationGraph(3, {{0, 1}, {1, 2}}), PcKind::Lie, 5);
  for (const LiePolynomial& f : fam.lie_relations) EXPECT_TRUE(lie_normal_form(f, r.system).is_zero());
}

}  // namespace
