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

#include "gsb/rewrite.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace gsb {

NcPolynomial replay(const ReductionTrace& trace, std::span<const NcPolynomial> relations) {
  std::vector<Term> terms;
  for (const auto& step : trace.steps) {
    for (const auto& t : relations[step.relation].terms())
      terms.push_back({step.where.prefix * t.word * step.where.suffix, t.coeff * step.coeff});
  }
  return NcPolynomial(std::move(terms));
}

RewriteSystem::RewriteSystem(std::vector<NcPolynomial> relations, std::size_t alphabet_size, OrderKind order)
    : alphabet_size_(alphabet_size), order_(order) {
  if (order != OrderKind::DegLex)
    throw std::invalid_argument("rewrite systems need a monomial well-order; only deg-lex is supported");
  for (auto& f : relations) {
    if (f.is_zero()) continue;
    auto g = make_monic(f);
    if (std::find(relations_.begin(), relations_.end(), g) != relations_.end()) continue;
    for (const auto& t : g.terms())
      for (Letter x : t.word) alphabet_size_ = std::max<std::size_t>(alphabet_size_, x + 1u);
    relations_.push_back(std::move(g));
  }
  index_ = SubwordIndex(alphabet_size_);
  for (std::size_t i = 0; i < relations_.size(); ++i) {
    if (relations_[i].leading_word().empty())
      throw std::invalid_argument("relation with constant leading term generates the whole algebra");
    index_.insert(relations_[i].leading_word(), i);
  }
  index_.prepare();
}

std::optional<ReduceStepResult> reduce_step(const NcPolynomial& f, const RewriteSystem& system) {
  if (f.is_zero()) throw std::domain_error("reduce_step on the zero polynomial");
  for (const auto& t : f.terms()) {
    if (auto m = system.find_reducer(t.word)) {
      const auto& s = system.relation(m->id);
      const std::size_t len = s.leading_word().size();
      Occurrence where{t.word.prefix(m->position), t.word.suffix(t.word.size() - m->position - len)};
      NcPolynomial value = f - s.in_context(where.prefix, where.suffix, t.coeff);
      return ReduceStepResult{std::move(value), ReductionStep{m->id, std::move(where), t.coeff}};
    }
  }
  return std::nullopt;
}

NcPolynomial reduce_with(const NcPolynomial& f, const SubwordIndex& index,
                         std::span<const NcPolynomial> relations, ReductionTrace* trace) {
  // Work list keyed by descending deg-lex; the head is always the largest
  // remaining term, and every rewrite only introduces strictly smaller words.
  std::map<Word, Rational, DegLexGreater> work;
  for (const auto& t : f.terms()) work.emplace(t.word, t.coeff);
  std::vector<Term> done;
  while (!work.empty()) {
    auto head = work.begin();
    auto m = index.first_match(head->first);
    if (!m) {
      done.push_back({head->first, head->second});
      work.erase(head);
      continue;
    }
    const Word w = head->first;
    const Rational c = head->second;
    work.erase(head);
    const auto& s = relations[m->id];
    const std::size_t len = s.leading_word().size();
    Word a = w.prefix(m->position);
    Word b = w.suffix(w.size() - m->position - len);
    for (const auto& t : s.terms().subspan(1)) {
      Word u = a * t.word * b;
      auto [it, inserted] = work.try_emplace(std::move(u), 0);
      it->second -= c * t.coeff;
      if (it->second == 0) work.erase(it);
    }
    if (trace) trace->steps.push_back({m->id, {std::move(a), std::move(b)}, c});
  }
  // `done` is already in descending order.
  NcPolynomial out(std::move(done));
  return out;
}

NormalForm normal_form(const NcPolynomial& f, const RewriteSystem& system) {
  NormalForm nf;
  nf.value = reduce_with(f, system.index(), system.relations(), &nf.trace);
  return nf;
}

NcPolynomial reduce(const NcPolynomial& f, const RewriteSystem& system) {
  return reduce_with(f, system.index(), system.relations(), nullptr);
}

std::vector<Word> irr_words(const RewriteSystem& system, std::size_t max_deg, std::size_t cap) {
  if (max_deg > cap)
    throw std::invalid_argument("irr_words: max_deg " + std::to_string(max_deg) + " exceeds the cap " +
                                std::to_string(cap));
  const auto& index = system.index();
  const std::size_t sigma = system.alphabet_size();
  std::vector<Word> out;
  // Breadth-first by length; each level is generated from the previous one
  // in ascending deg-lex order, so appending letters from least to greatest
  // keeps the level sorted.
  std::vector<std::pair<Word, std::uint32_t>> level{{Word{}, index.root()}};
  out.push_back(Word{});
  for (std::size_t d = 1; d <= max_deg && !level.empty(); ++d) {
    std::vector<std::pair<Word, std::uint32_t>> next;
    for (const auto& [w, state] : level) {
      for (std::size_t k = sigma; k-- > 0;) {
        const auto x = static_cast<Letter>(k);
        const std::uint32_t s = index.next(state, x);
        if (index.accepting(s)) continue;
        Word u = w;
        u.push_back(x);
        next.emplace_back(std::move(u), s);
      }
    }
    for (const auto& [w, s] : next) out.push_back(w);
    level = std::move(next);
  }
  return out;
}

std::vector<std::size_t> irr_counts(const RewriteSystem& system, std::size_t max_deg) {
  // Dynamic programming over automaton states.
  const auto& index = system.index();
  const std::size_t sigma = system.alphabet_size();
  std::map<std::uint32_t, std::size_t> level{{index.root(), 1}};
  std::vector<std::size_t> counts{1};
  for (std::size_t d = 1; d <= max_deg; ++d) {
    std::map<std::uint32_t, std::size_t> next;
    std::size_t total = 0;
    for (const auto& [state, n] : level) {
      for (std::size_t x = 0; x < sigma; ++x) {
        const std::uint32_t s = index.next(state, static_cast<Letter>(x));
        if (index.accepting(s)) continue;
        next[s] += n;
        total += n;
      }
    }
    counts.push_back(total);
    level = std::move(next);
  }
  return counts;
}

}  // namespace gsb
