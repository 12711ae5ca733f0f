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

#include "gsb/composition.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace gsb {

const char* to_string(CompositionKind kind) {
  return kind == CompositionKind::Inclusion ? "inclusion" : "intersection";
}

bool composition_key_less(const Composition& x, const Composition& y) {
  if (auto c = deglex_compare(x.w, y.w); c != 0) return c < 0;
  return std::tie(x.kind, x.f_id, x.g_id, x.position) < std::tie(y.kind, y.f_id, y.g_id, y.position);
}

namespace {

void require_monic(const NcPolynomial& f) {
  if (!f.is_monic()) throw std::invalid_argument("compositions need monic relations");
}

}  // namespace

NcPolynomial composition_value(CompositionKind kind, const NcPolynomial& f, const NcPolynomial& g,
                               std::size_t position) {
  const Word& fw = f.leading_word();
  const Word& gw = g.leading_word();
  if (kind == CompositionKind::Inclusion) {
    const Word a = fw.prefix(position);
    const Word b = fw.suffix(fw.size() - position - gw.size());
    return f - g.in_context(a, b);
  }
  const std::size_t k = fw.size() - position;
  const Word a = fw.prefix(position);
  const Word b = gw.suffix(gw.size() - k);
  return f.in_context(Word{}, b) - g.in_context(a, Word{});
}

std::vector<Composition> intersection_compositions(const NcPolynomial& f, const NcPolynomial& g,
                                                   std::size_t f_id, std::size_t g_id) {
  require_monic(f);
  require_monic(g);
  const Word& fw = f.leading_word();
  const Word& gw = g.leading_word();
  std::vector<Composition> out;
  for (std::size_t k : find_overlaps(fw, gw)) {
    const std::size_t position = fw.size() - k;
    Word w = fw * gw.suffix(gw.size() - k);
    out.push_back({CompositionKind::Intersection, f_id, g_id, std::move(w), position,
                   composition_value(CompositionKind::Intersection, f, g, position)});
  }
  return out;
}

std::vector<Composition> inclusion_compositions(const NcPolynomial& f, const NcPolynomial& g,
                                                std::size_t f_id, std::size_t g_id) {
  require_monic(f);
  require_monic(g);
  const Word& fw = f.leading_word();
  const Word& gw = g.leading_word();
  std::vector<Composition> out;
  if (gw.size() > fw.size()) return out;
  for (std::size_t p : subword_positions(fw, gw)) {
    if (f_id == g_id && gw.size() == fw.size()) continue;
    out.push_back({CompositionKind::Inclusion, f_id, g_id, fw, p,
                   composition_value(CompositionKind::Inclusion, f, g, p)});
  }
  return out;
}

bool is_trivial(const Composition& c, const RewriteSystem& system) {
  return c.value.is_zero() || reduce(c.value, system).is_zero();
}

std::vector<Composition> all_compositions(const RewriteSystem& system, std::size_t max_deg) {
  std::vector<Composition> out;
  const auto& rel = system.relations();
  for (std::size_t i = 0; i < rel.size(); ++i) {
    for (std::size_t j = 0; j < rel.size(); ++j) {
      for (auto& c : intersection_compositions(rel[i], rel[j], i, j))
        if (max_deg == 0 || c.w.size() <= max_deg) out.push_back(std::move(c));
      for (auto& c : inclusion_compositions(rel[i], rel[j], i, j))
        if (max_deg == 0 || c.w.size() <= max_deg) out.push_back(std::move(c));
    }
  }
  std::sort(out.begin(), out.end(), composition_key_less);
  return out;
}

}  // namespace gsb
