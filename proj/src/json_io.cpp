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

#include "gsb/json_io.hpp"

namespace gsb {

namespace {

const char* source_name(Provenance::Source s) {
  switch (s) {
    case Provenance::Source::Input:
      return "input";
    case Provenance::Source::Composition:
      return "composition";
    case Provenance::Source::Rereduction:
      return "rereduction";
  }
  return "?";
}

}  // namespace

Json to_json(const Word& w, const Alphabet& alphabet) { return alphabet.render(w); }

Json to_json(const NcPolynomial& f, const Alphabet& alphabet) {
  Json terms = Json::array();
  for (const Term& t : f.terms()) terms.push_back({{"coeff", to_string(t.coeff)}, {"word", alphabet.render(t.word)}});
  return terms;
}

// Terms keyed by the NLSW bracketing; "word" is the underlying ALSW.
Json to_json(const LiePolynomial& f, const Alphabet& alphabet) {
  Json terms = Json::array();
  for (const Term& t : f.terms()) {
    terms.push_back({{"coeff", to_string(t.coeff)},
                     {"word", alphabet.render(t.word)},
                     {"bracket", to_string(shirshov_bracket(t.word), alphabet)}});
  }
  return terms;
}

Json to_json(const ReductionTrace& trace, const Alphabet& alphabet) {
  Json steps = Json::array();
  for (const ReductionStep& s : trace.steps) {
    steps.push_back({{"relation", s.relation},
                     {"prefix", to_json(s.where.prefix, alphabet)},
                     {"suffix", to_json(s.where.suffix, alphabet)},
                     {"coeff", to_string(s.coeff)}});
  }
  return steps;
}

Json to_json(const Composition& c, const Alphabet& alphabet) {
  return {{"kind", to_string(c.kind)},
          {"f", c.f_id},
          {"g", c.g_id},
          {"w", to_json(c.w, alphabet)},
          {"position", c.position},
          {"value", to_json(c.value, alphabet)}};
}

Json to_json(const LieComposition& c, const Alphabet& alphabet) {
  return {{"kind", to_string(c.kind)},
          {"f", c.f_id},
          {"g", c.g_id},
          {"w", to_json(c.w, alphabet)},
          {"position", c.position},
          {"value", to_json(c.value, alphabet)}};
}

Json to_json(const Provenance& p, const Alphabet& alphabet) {
  Json j = {{"source", source_name(p.source)}};
  switch (p.source) {
    case Provenance::Source::Input:
      j["input"] = p.input_index;
      break;
    case Provenance::Source::Composition:
      j["kind"] = to_string(p.kind);
      j["f"] = p.f_id;
      j["g"] = p.g_id;
      j["w"] = to_json(p.w, alphabet);
      j["position"] = p.position;
      break;
    case Provenance::Source::Rereduction:
      j["from"] = p.from_id;
      break;
  }
  j["trace"] = to_json(p.trace, alphabet);
  j["scale"] = to_string(p.scale);
  return j;
}

Json to_json(const GsbReport& report, const RewriteSystem& system, const Alphabet& alphabet) {
  Json failures = Json::array();
  for (const Composition& c : report.failures) {
    Json j = to_json(c, alphabet);
    j["normal_form"] = to_json(reduce(c.value, system), alphabet);
    failures.push_back(std::move(j));
  }
  return {{"is_gsb", report.is_gsb},
          {"relations", system.size()},
          {"checked", report.checked},
          {"failures", std::move(failures)}};
}

Json to_json(const LieGsbReport& report, const LieSystem& system, const Alphabet& alphabet) {
  Json failures = Json::array();
  for (const LieComposition& c : report.failures) {
    Json j = to_json(c, alphabet);
    j["normal_form"] = to_json(lie_normal_form(c.value, system), alphabet);
    failures.push_back(std::move(j));
  }
  return {{"is_gsb", report.is_gsb},
          {"relations", system.size()},
          {"checked", report.checked},
          {"failures", std::move(failures)}};
}

Json to_json(const CompletionResult& result, const Alphabet& alphabet, bool with_records) {
  Json relations = Json::array();
  for (const NcPolynomial& f : result.system.relations()) relations.push_back(to_json(f, alphabet));
  Json j = {{"status", to_string(result.status, result.truncated_degree)},
            {"relations", std::move(relations)},
            {"system_ids", result.system_ids},
            {"dropped_inputs", result.dropped_inputs},
            {"steps", result.steps}};
  if (with_records) {
    Json records = Json::array();
    for (const RelationRecord& r : result.records) {
      records.push_back({{"id", r.id},
                         {"polynomial", to_json(r.polynomial, alphabet)},
                         {"alive", r.alive},
                         {"provenance", to_json(r.provenance, alphabet)}});
    }
    j["records"] = std::move(records);
  }
  return j;
}

Json to_json(const LieCompletionResult& result, const Alphabet& alphabet) {
  Json relations = Json::array();
  for (const LiePolynomial& f : result.system.relations()) relations.push_back(to_json(f, alphabet));
  return {{"status", to_string(result.status, result.truncated_degree)},
          {"relations", std::move(relations)},
          {"steps", result.steps}};
}

}  // namespace gsb
