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

#pragma once

#include <optional>
#include <vector>

#include "gsb/ncpoly.hpp"
#include "gsb/subword_index.hpp"

namespace gsb {

/// One rewrite: the input lost coeff * prefix * s_relation * suffix.
struct ReductionStep {
  std::size_t relation;
  Occurrence where;
  Rational coeff;
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
};

/// Sum of coeff * a * s * b over the trace, with s looked up by relation id.
NcPolynomial replay(const ReductionTrace& trace, std::span<const NcPolynomial> relations);

/// A monic subset S of k<X> with a subword index over its leading words.
/// Immutable after construction; queries may run concurrently.
class RewriteSystem {
 public:
  RewriteSystem() : RewriteSystem(std::vector<NcPolynomial>{}, 0) {}

  /// Makes every relation monic, drops zeros and duplicate polynomials,
  /// keeps first-seen order. `alphabet_size` bounds the letters (0 = infer).
  /// Only the deg-lex order is admitted (lex is not a well-order on X*).
  explicit RewriteSystem(std::vector<NcPolynomial> relations, std::size_t alphabet_size = 0,
                         OrderKind order = OrderKind::DegLex);

  std::size_t size() const noexcept { return relations_.size(); }
  bool empty() const noexcept { return relations_.empty(); }
  OrderKind order() const noexcept { return order_; }
  std::size_t alphabet_size() const noexcept { return alphabet_size_; }
  const std::vector<NcPolynomial>& relations() const noexcept { return relations_; }
  const NcPolynomial& relation(std::size_t id) const { return relations_.at(id); }
  const Word& leading_word(std::size_t id) const { return relations_.at(id).leading_word(); }
  const SubwordIndex& index() const noexcept { return index_; }

  /// Smallest relation id whose leading word occurs in w; leftmost occurrence.
  std::optional<SubwordIndex::Match> find_reducer(const Word& w) const { return index_.first_match(w); }
  bool reducible(const Word& w) const { return index_.matches_any(w); }

 private:
  std::vector<NcPolynomial> relations_;
  std::size_t alphabet_size_;
  OrderKind order_;
  SubwordIndex index_;
};

struct ReduceStepResult {
  NcPolynomial value;
  ReductionStep step;
};

/// One rewrite of the deg-lex-largest reducible term of f (smallest relation
/// id, then leftmost occurrence). nullopt when every term is irreducible.
/// Throws std::domain_error on the zero polynomial.
std::optional<ReduceStepResult> reduce_step(const NcPolynomial& f, const RewriteSystem& system);

struct NormalForm {
  NcPolynomial value;
  ReductionTrace trace;
};

/// Full reduction: no term of the result contains a leading word of S and
/// input == value + replay(trace).
NormalForm normal_form(const NcPolynomial& f, const RewriteSystem& system);

/// Same, without recording the trace.
NcPolynomial reduce(const NcPolynomial& f, const RewriteSystem& system);

/// Lower-level entry used by completion, where relation ids index a growing
/// record table and the index covers only live records.
NcPolynomial reduce_with(const NcPolynomial& f, const SubwordIndex& index,
                         std::span<const NcPolynomial> relations, ReductionTrace* trace);

inline constexpr std::size_t kDefaultIrrDegreeCap = 12;

/// All words of length <= max_deg containing no leading word of S, deg-lex
/// ascending. Refuses max_deg above `cap`.
std::vector<Word> irr_words(const RewriteSystem& system, std::size_t max_deg,
                            std::size_t cap = kDefaultIrrDegreeCap);

/// Number of irreducible words of each length 0..max_deg, without listing.
std::vector<std::size_t> irr_counts(const RewriteSystem& system, std::size_t max_deg);

}  // namespace gsb
