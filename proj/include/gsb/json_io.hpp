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

#include <json.hpp>

#include "gsb/catalog.hpp"

namespace gsb {

using Json = nlohmann::ordered_json;

Json to_json(const Word& w, const Alphabet& alphabet);
Json to_json(const NcPolynomial& f, const Alphabet& alphabet);
Json to_json(const LiePolynomial& f, const Alphabet& alphabet);
Json to_json(const ReductionTrace& trace, const Alphabet& alphabet);
Json to_json(const Composition& c, const Alphabet& alphabet);
Json to_json(const LieComposition& c, const Alphabet& alphabet);
Json to_json(const Provenance& p, const Alphabet& alphabet);

Json to_json(const GsbReport& report, const RewriteSystem& system, const Alphabet& alphabet);
Json to_json(const LieGsbReport& report, const LieSystem& system, const Alphabet& alphabet);

/// Status, the live relations, and (optionally) every record with its
/// provenance. Output depends only on the result, not on the worker count.
Json to_json(const CompletionResult& result, const Alphabet& alphabet, bool with_records = true);
Json to_json(const LieCompletionResult& result, const Alphabet& alphabet);

}  // namespace gsb
