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
#include <string>
#include <vector>

#include "gsb/composition.hpp"

namespace gsb {

struct GsbReport {
  bool is_gsb = true;
  std::size_t checked = 0;
  /// Nontrivial compositions, canonical order (by w).
  std::vector<Composition> failures;
};

/// Checks every composition of S with |w| <= max_deg (0 = unbounded).
/// OpenMP over first parents; results merged in canonical order.
GsbReport is_gsb(const RewriteSystem& system, std::size_t max_deg = 0, int threads = 0);

/// Single-threaded reference for is_gsb.
GsbReport is_gsb_serial(const RewriteSystem& system, std::size_t max_deg = 0);

struct CompletionBudget {
  std::size_t max_deg = 10;
  std::size_t max_relations = 5000;
  std::size_t max_steps = 1'000'000;
};

enum class CompletionStatus { Complete, TruncatedAtDegree, BudgetExhausted };

struct Provenance {
  enum class Source { Input, Composition, Rereduction };
  Source source = Source::Input;
  std::size_t input_index = 0;  // Source::Input
  CompositionKind kind = CompositionKind::Intersection;  // Source::Composition
  std::size_t f_id = 0;
  std::size_t g_id = 0;
  Word w;
  std::size_t position = 0;
  std::size_t from_id = 0;  // Source::Rereduction
  /// Record = scale * (base - replay(trace)).
  ReductionTrace trace;
  Rational scale = 1;
};

struct RelationRecord {
  std::size_t id = 0;
  NcPolynomial polynomial;
  Provenance provenance;
  bool alive = true;
};

struct CompletionResult {
  RewriteSystem system;
  CompletionStatus status = CompletionStatus::Complete;
  std::size_t truncated_degree = 0;
  /// Every relation ever created, by id; `system` holds the live ones.
  std::vector<RelationRecord> records;
  /// Record id of each relation of `system`.
  std::vector<std::size_t> system_ids;
  /// Input relations that reduced to zero.
  std::vector<std::size_t> dropped_inputs;
  std::size_t steps = 0;
};

std::string to_string(CompletionStatus status, std::size_t truncated_degree = 0);

/// Shirshov completion. Ambiguities are processed smallest w first, in
/// batches of equal |w|: each batch is reduced in parallel against a
/// snapshot, then merged serially in canonical order, so the result does
/// not depend on the worker count.
CompletionResult complete(const std::vector<NcPolynomial>& relations, std::size_t alphabet_size,
                          const CompletionBudget& budget = {}, int threads = 0);
CompletionResult complete(const RewriteSystem& system, const CompletionBudget& budget = {}, int threads = 0);

/// Reference completion: one ambiguity at a time, no threads.
CompletionResult complete_serial(const std::vector<NcPolynomial>& relations, std::size_t alphabet_size,
                                 const CompletionBudget& budget = {});

/// Checks every record against its provenance; returns ids that fail replay.
std::vector<std::size_t> verify_provenance(const CompletionResult& result,
                                           const std::vector<NcPolynomial>& inputs);

/// Reduced basis: monic, no leading word contains another, tails irreducible,
/// sorted by ascending leading word.
RewriteSystem interreduce(const RewriteSystem& system);

/// Sorted canonical copy of the relations, for set comparison.
std::vector<NcPolynomial> canonical_relations(const RewriteSystem& system);

}  // namespace gsb
