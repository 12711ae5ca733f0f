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

#include "gsb/completion.hpp"

#include <omp.h>

#include <algorithm>
#include <deque>
#include <set>
#include <tuple>

#include "gsb/parallel.hpp"

namespace gsb {

namespace {

bool failures_only(const Composition& c, const RewriteSystem& system) { return !is_trivial(c, system); }

}  // namespace

GsbReport is_gsb_serial(const RewriteSystem& system, std::size_t max_deg) {
  GsbReport report;
  for (auto& c : all_compositions(system, max_deg)) {
    ++report.checked;
    if (failures_only(c, system)) report.failures.push_back(std::move(c));
  }
  report.is_gsb = report.failures.empty();
  return report;
}

GsbReport is_gsb(const RewriteSystem& system, std::size_t max_deg, int threads) {
  const auto& rel = system.relations();
  const auto n = static_cast<std::ptrdiff_t>(rel.size());
  std::vector<std::vector<Composition>> failures(rel.size());
  std::vector<std::size_t> checked(rel.size(), 0);
#pragma omp parallel for schedule(dynamic) num_threads(resolve_threads(threads))
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto fi = static_cast<std::size_t>(i);
    for (std::size_t j = 0; j < rel.size(); ++j) {
      auto handle = [&](std::vector<Composition> cs) {
        for (auto& c : cs) {
          if (max_deg != 0 && c.w.size() > max_deg) continue;
          ++checked[fi];
          if (failures_only(c, system)) failures[fi].push_back(std::move(c));
        }
      };
      handle(intersection_compositions(rel[fi], rel[j], fi, j));
      handle(inclusion_compositions(rel[fi], rel[j], fi, j));
    }
  }
  GsbReport report;
  for (std::size_t i = 0; i < rel.size(); ++i) {
    report.checked += checked[i];
    for (auto& c : failures[i]) report.failures.push_back(std::move(c));
  }
  std::sort(report.failures.begin(), report.failures.end(), composition_key_less);
  report.is_gsb = report.failures.empty();
  return report;
}

std::string to_string(CompletionStatus status, std::size_t truncated_degree) {
  switch (status) {
    case CompletionStatus::Complete:
      return "complete";
    case CompletionStatus::TruncatedAtDegree:
      return "truncated_at_degree " + std::to_string(truncated_degree);
    case CompletionStatus::BudgetExhausted:
      return "budget_exhausted";
  }
  return "unknown";
}

namespace {

struct Ambiguity {
  Word w;
  CompositionKind kind;
  std::size_t f_id;
  std::size_t g_id;
  std::size_t position;
};

struct AmbiguityLess {
  bool operator()(const Ambiguity& x, const Ambiguity& y) const {
    if (auto c = deglex_compare(x.w, y.w); c != 0) return c < 0;
    return std::tie(x.kind, x.f_id, x.g_id, x.position) < std::tie(y.kind, y.f_id, y.g_id, y.position);
  }
};

class Completer {
 public:
  Completer(std::size_t alphabet_size, const CompletionBudget& budget, int threads, bool batched)
      : index_(alphabet_size), alphabet_size_(alphabet_size), budget_(budget), threads_(threads),
        batched_(batched) {}

  CompletionResult run(const std::vector<NcPolynomial>& inputs) {
    // Smaller relations first keeps the early system small.
    std::vector<std::size_t> order(inputs.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      if (inputs[a].is_zero() || inputs[b].is_zero()) return !inputs[a].is_zero() && inputs[b].is_zero();
      return deglex_compare(inputs[a].leading_word(), inputs[b].leading_word()) < 0;
    });
    for (std::size_t i : order) {
      Provenance p;
      p.source = Provenance::Source::Input;
      p.input_index = i;
      if (!add(inputs[i], std::move(p))) dropped_inputs_.push_back(i);
      if (exhausted_) break;
    }
    std::sort(dropped_inputs_.begin(), dropped_inputs_.end());

    while (!exhausted_) {
      drain();
      if (exhausted_ || truncated()) break;
      // Certify: every composition of the live system must now be trivial.
      auto system = snapshot();
      auto report = is_gsb(system.first, 0, threads_);
      if (report.is_gsb) break;
      for (const auto& c : report.failures) {
        pending_.insert({c.w, c.kind, system.second[c.f_id], system.second[c.g_id], c.position});
      }
    }
    return finish();
  }

 private:
  bool alive(std::size_t id) const { return records_[id].alive; }
  std::size_t live_count() const { return live_; }

  std::pair<RewriteSystem, std::vector<std::size_t>> snapshot() const {
    std::vector<NcPolynomial> rel;
    std::vector<std::size_t> ids;
    for (const auto& r : records_) {
      if (!r.alive) continue;
      rel.push_back(r.polynomial);
      ids.push_back(r.id);
    }
    return {RewriteSystem(std::move(rel), alphabet_size_), std::move(ids)};
  }

  bool truncated() const {
    return std::any_of(skipped_.begin(), skipped_.end(),
                       [&](const Ambiguity& a) { return alive(a.f_id) && alive(a.g_id); });
  }

  NcPolynomial reduce_now(const NcPolynomial& f, ReductionTrace* trace) const {
    return reduce_with(f, index_, polys_, trace);
  }

  void schedule(const Ambiguity& a) {
    if (budget_.max_deg != 0 && a.w.size() > budget_.max_deg) {
      skipped_.push_back(a);
    } else {
      pending_.insert(a);
    }
  }

  void schedule_pairs(std::size_t n) {
    const Word& nw = polys_[n].leading_word();
    for (const auto& r : records_) {
      if (!r.alive) continue;
      const Word& rw = polys_[r.id].leading_word();
      for (std::size_t k : find_overlaps(nw, rw))
        schedule({nw * rw.suffix(rw.size() - k), CompositionKind::Intersection, n, r.id, nw.size() - k});
      if (r.id == n) continue;
      for (std::size_t k : find_overlaps(rw, nw))
        schedule({rw * nw.suffix(nw.size() - k), CompositionKind::Intersection, r.id, n, rw.size() - k});
      if (rw.size() <= nw.size())
        for (std::size_t p : subword_positions(nw, rw)) schedule({nw, CompositionKind::Inclusion, n, r.id, p});
      if (nw.size() <= rw.size())
        for (std::size_t p : subword_positions(rw, nw)) schedule({rw, CompositionKind::Inclusion, r.id, n, p});
    }
  }

  void kill(std::size_t id) {
    records_[id].alive = false;
    index_.erase(polys_[id].leading_word(), id);
    --live_;
  }

  /// Reduces f, adds it when nonzero, and interreduces the live set against
  /// it. Returns whether the first polynomial survived reduction.
  bool add(const NcPolynomial& f, Provenance prov) {
    struct Item {
      NcPolynomial poly;
      Provenance prov;
    };
    std::deque<Item> work;
    work.push_back({f, std::move(prov)});
    bool first_survived = false;
    bool first = true;
    while (!work.empty() && !exhausted_) {
      Item item = std::move(work.front());
      work.pop_front();
      NcPolynomial h = reduce_now(item.poly, &item.prov.trace);
      const bool was_first = first;
      first = false;
      if (h.is_zero()) continue;
      if (was_first) first_survived = true;
      const Rational lc = h.leading().coeff;
      item.prov.scale = 1 / lc;
      const std::size_t n = records_.size();
      records_.push_back({n, make_monic(h), std::move(item.prov), true});
      polys_.push_back(records_.back().polynomial);
      ++live_;
      index_.insert(polys_[n].leading_word(), n);
      index_.prepare();

      // Older relations whose leading word or tail the new one rewrites.
      std::vector<std::size_t> stale;
      for (const auto& r : records_) {
        if (!r.alive || r.id == n) continue;
        const auto& terms = polys_[r.id].terms();
        const Word& nw = polys_[n].leading_word();
        if (std::any_of(terms.begin(), terms.end(), [&](const Term& t) { return contains_subword(t.word, nw); }))
          stale.push_back(r.id);
      }
      for (std::size_t id : stale) {
        kill(id);
        Provenance p;
        p.source = Provenance::Source::Rereduction;
        p.from_id = id;
        work.push_back({polys_[id], std::move(p)});
      }
      if (!stale.empty()) index_.prepare();
      schedule_pairs(n);
      if (live_count() > budget_.max_relations) exhausted_ = true;
    }
    return first_survived;
  }

  /// Processes pending ambiguities until none are left or the budget trips.
  void drain() {
    while (!pending_.empty() && !exhausted_) {
      std::vector<Ambiguity> batch;
      const std::size_t d = pending_.begin()->w.size();
      while (!pending_.empty() && pending_.begin()->w.size() == d) {
        auto node = pending_.extract(pending_.begin());
        if (alive(node.value().f_id) && alive(node.value().g_id)) batch.push_back(std::move(node.value()));
        if (!batched_ && !batch.empty()) break;
      }
      if (batch.empty()) continue;

      struct Reduced {
        NcPolynomial value;
        ReductionTrace trace;
      };
      std::vector<Reduced> reduced(batch.size());
      const std::size_t records_before = records_.size();
      const auto m = static_cast<std::ptrdiff_t>(batch.size());
      // Pure phase: compositions reduced against the current snapshot.
#pragma omp parallel for schedule(dynamic) num_threads(resolve_threads(threads_)) if (batched_ && m > 1)
      for (std::ptrdiff_t i = 0; i < m; ++i) {
        const auto& a = batch[static_cast<std::size_t>(i)];
        const NcPolynomial value = composition_value(a.kind, polys_[a.f_id], polys_[a.g_id], a.position);
        auto& out = reduced[static_cast<std::size_t>(i)];
        out.value = reduce_now(value, &out.trace);
      }
      // Merge phase: canonical order; re-reduce if the system moved.
      for (std::size_t i = 0; i < batch.size() && !exhausted_; ++i) {
        const auto& a = batch[i];
        if (!alive(a.f_id) || !alive(a.g_id)) continue;
        if (++steps_ > budget_.max_steps) {
          exhausted_ = true;
          break;
        }
        auto& r = reduced[i];
        if (records_.size() != records_before && !r.value.is_zero()) r.value = reduce_now(r.value, &r.trace);
        if (r.value.is_zero()) continue;
        Provenance p;
        p.source = Provenance::Source::Composition;
        p.kind = a.kind;
        p.f_id = a.f_id;
        p.g_id = a.g_id;
        p.w = a.w;
        p.position = a.position;
        p.trace = std::move(r.trace);
        add(r.value, std::move(p));
      }
    }
  }

  CompletionResult finish() {
    CompletionResult result;
    auto [system, ids] = snapshot();
    result.system = std::move(system);
    result.system_ids = std::move(ids);
    result.records = std::move(records_);
    result.dropped_inputs = std::move(dropped_inputs_);
    result.steps = steps_;
    if (exhausted_) {
      result.status = CompletionStatus::BudgetExhausted;
    } else if (std::any_of(skipped_.begin(), skipped_.end(), [&](const Ambiguity& a) {
                 return result.records[a.f_id].alive && result.records[a.g_id].alive;
               })) {
      result.status = CompletionStatus::TruncatedAtDegree;
      result.truncated_degree = budget_.max_deg;
    }
    return result;
  }

  std::vector<RelationRecord> records_;
  std::vector<NcPolynomial> polys_;
  SubwordIndex index_;
  std::set<Ambiguity, AmbiguityLess> pending_;
  std::vector<Ambiguity> skipped_;
  std::vector<std::size_t> dropped_inputs_;
  std::size_t alphabet_size_;
  CompletionBudget budget_;
  int threads_;
  bool batched_;
  std::size_t live_ = 0;
  std::size_t steps_ = 0;
  bool exhausted_ = false;
};

std::size_t infer_alphabet(const std::vector<NcPolynomial>& relations, std::size_t given) {
  for (const auto& f : relations)
    for (const auto& t : f.terms())
      for (Letter x : t.word) given = std::max<std::size_t>(given, x + 1u);
  return given;
}

}  // namespace

CompletionResult complete(const std::vector<NcPolynomial>& relations, std::size_t alphabet_size,
                          const CompletionBudget& budget, int threads) {
  Completer c(infer_alphabet(relations, alphabet_size), budget, threads, true);
  return c.run(relations);
}

CompletionResult complete(const RewriteSystem& system, const CompletionBudget& budget, int threads) {
  return complete(system.relations(), system.alphabet_size(), budget, threads);
}

CompletionResult complete_serial(const std::vector<NcPolynomial>& relations, std::size_t alphabet_size,
                                 const CompletionBudget& budget) {
  Completer c(infer_alphabet(relations, alphabet_size), budget, 1, false);
  return c.run(relations);
}

std::vector<std::size_t> verify_provenance(const CompletionResult& result,
                                           const std::vector<NcPolynomial>& inputs) {
  std::vector<NcPolynomial> polys;
  for (const auto& r : result.records) polys.push_back(r.polynomial);
  std::vector<std::size_t> bad;
  for (const auto& r : result.records) {
    const auto& p = r.provenance;
    NcPolynomial base;
    switch (p.source) {
      case Provenance::Source::Input:
        base = inputs.at(p.input_index);
        break;
      case Provenance::Source::Composition:
        if (p.f_id >= r.id || p.g_id >= r.id) {
          bad.push_back(r.id);
          continue;
        }
        base = composition_value(p.kind, polys[p.f_id], polys[p.g_id], p.position);
        break;
      case Provenance::Source::Rereduction:
        if (p.from_id >= r.id) {
          bad.push_back(r.id);
          continue;
        }
        base = polys[p.from_id];
        break;
    }
    for (const auto& s : p.trace.steps) {
      if (s.relation >= r.id) {
        bad.push_back(r.id);
        goto next;
      }
    }
    if (p.scale * (base - replay(p.trace, polys)) != r.polynomial) bad.push_back(r.id);
  next:;
  }
  return bad;
}

RewriteSystem interreduce(const RewriteSystem& system) {
  std::vector<NcPolynomial> rel = system.relations();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < rel.size(); ++i) {
      std::vector<NcPolynomial> others;
      for (std::size_t j = 0; j < rel.size(); ++j)
        if (j != i) others.push_back(rel[j]);
      RewriteSystem rest(std::move(others), system.alphabet_size());
      NcPolynomial h = reduce(rel[i], rest);
      if (h == rel[i]) continue;
      changed = true;
      if (h.is_zero()) {
        rel.erase(rel.begin() + static_cast<std::ptrdiff_t>(i));
      } else {
        rel[i] = make_monic(h);
      }
      break;
    }
  }
  std::sort(rel.begin(), rel.end(), canonical_less);
  return RewriteSystem(std::move(rel), system.alphabet_size());
}

std::vector<NcPolynomial> canonical_relations(const RewriteSystem& system) {
  std::vector<NcPolynomial> rel = system.relations();
  std::sort(rel.begin(), rel.end(), canonical_less);
  return rel;
}

}  // namespace gsb
