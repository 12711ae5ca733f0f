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

#include <vector>

#include "gsb/rewrite.hpp"

namespace gsb {

enum class CompositionKind { Inclusion, Intersection };

const char* to_string(CompositionKind kind);

/// Ambiguity of two relations and the polynomial it produces.
///
/// Both kinds are described by the ambiguity word w, the leading word of f
/// sitting at the start of w, and the leading word of g starting at
/// `position`: inclusion has w = lead(f) = a lead(g) b, intersection has
/// w = lead(f) b = a lead(g) with |a| = position.
struct Composition {
  CompositionKind kind;
  std::size_t f_id;
  std::size_t g_id;
  Word w;
  std::size_t position;
  NcPolynomial value;
};

/// Canonical processing order: deg-lex on w, then kind, parents, position.
bool composition_key_less(const Composition& x, const Composition& y);

/// f*b - a*g for every proper overlap of lead(f) and lead(g). Throws
/// std::invalid_argument on non-monic input.
std::vector<Composition> intersection_compositions(const NcPolynomial& f, const NcPolynomial& g,
                                                   std::size_t f_id = 0, std::size_t g_id = 1);

/// f - a*g*b for every occurrence of lead(g) inside lead(f). The identity
/// case (same relation, empty context) is skipped.
std::vector<Composition> inclusion_compositions(const NcPolynomial& f, const NcPolynomial& g,
                                                std::size_t f_id = 0, std::size_t g_id = 1);

/// Rebuilds the composition value from its parents (used by provenance replay).
NcPolynomial composition_value(CompositionKind kind, const NcPolynomial& f, const NcPolynomial& g,
                               std::size_t position);

/// Normal form modulo S is zero.
bool is_trivial(const Composition& c, const RewriteSystem& system);

/// Every composition of every ordered pair (including self-pairs) of S with
/// |w| <= max_deg (0 = unbounded), in canonical order.
std::vector<Composition> all_compositions(const RewriteSystem& system, std::size_t max_deg = 0);

}  // namespace gsb
