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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "gsb/catalog.hpp"
#include "gsb/json_io.hpp"
#include "gsb/random.hpp"

using namespace gsb;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Criterion body; `limit` is the wall-time bound in seconds (0 = none).
int run_criterion(int id, const std::string& title, double limit, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit > 0 && secs >= limit) {
    o.pass = false;
    o.detail += "; over the time limit";
  }
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.3f s", secs);
  std::cout << (o.pass ? "PASS" : "FAIL") << " " << id << " " << title << " [" << timing;
  if (limit > 0) std::cout << " / limit " << limit << " s";
  std::cout << "] " << o.detail << std::endl;
  return o.pass ? 0 : 1;
}

// Presets are exercised through their text form, as the command line tool would.
Presentation reload(const Presentation& p) { return parse_presentation(emit_presentation(p)); }

std::string expect_value(const Presentation& p, const char* key) {
  const std::string* v = find_expect(p, key);
  return v ? *v : "";
}

std::vector<NcPolynomial> plactic3_basis(const Alphabet& a) {
  std::vector<NcPolynomial> out;
  for (const char* r : {"332-323", "322-232", "331-313", "311-131", "221-212", "211-121", "231-213", "312-132",
                        "3212-2321", "32131-31321", "32321-32132"}) {
    out.push_back(parse_polynomial(r, a));
  }
  return out;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (int x : v) s += std::to_string(x);
  return s;
}

Outcome plactic3_is_gsb() {
  const Alphabet a = plactic_standard(3).alphabet;
  const RewriteSystem s(plactic3_basis(a), 3);
  const GsbReport r = is_gsb(s);
  std::ostringstream d;
  d << s.size() << " relations, " << r.checked << " compositions, " << r.failures.size() << " failing";
  return {r.is_gsb && r.failures.empty() && s.size() == 11, d.str()};
}

Outcome plactic3_completion() {
  const Presentation p = reload(plactic_standard(3));
  const CompletionResult c = complete(p.relations, p.alphabet.size());
  const RewriteSystem reduced = interreduce(c.system);
  const bool equal = canonical_relations(reduced) == canonical_relations(RewriteSystem(plactic3_basis(p.alphabet), 3));
  std::ostringstream d;
  d << "status " << to_string(c.status, c.truncated_degree) << ", " << reduced.size()
    << " interreduced relations (expected " << expect_value(p, "completed_relations") << "), set equality "
    << (equal ? "holds" : "fails");
  return {c.status == CompletionStatus::Complete && equal &&
              std::to_string(reduced.size()) == expect_value(p, "completed_relations"),
          d.str()};
}

Outcome plactic4_infinite() {
  const Presentation p = reload(plactic_standard(4));
  CompletionBudget budget;
  budget.max_deg = 7;
  const CompletionResult c = complete(p.relations, p.alphabet.size(), budget);
  std::size_t longest = 0, long_new = 0;
  for (std::size_t i = 0; i < c.system.size(); ++i) {
    const std::size_t len = c.system.leading_word(i).size();
    longest = std::max(longest, len);
    if (len >= 5 && c.records[c.system_ids[i]].provenance.source != Provenance::Source::Input) ++long_new;
  }
  std::ostringstream d;
  d << "status " << to_string(c.status, c.truncated_degree) << ", " << c.system.size() << " relations, " << long_new
    << " new with leading word length >= 5 (longest " << longest << ")";
  return {c.status != CompletionStatus::Complete && long_new > 0, d.str()};
}

Outcome symmetric_groups() {
  Outcome o;
  std::ostringstream d;
  for (std::size_t n : {2, 3}) {
    const Presentation p = reload(symmetric_group(n));
    const CompletionResult c = complete(p.relations, p.alphabet.size());
    const std::size_t order = all_permutations(n + 1).size();
    const std::size_t max_len = n * (n + 1) / 2;
    const std::vector<Word> irr = irr_words(c.system, max_len + 1);
    std::size_t pattern = 0;
    std::set<std::vector<int>> irr_set;
    for (const Word& w : irr) {
      std::vector<int> idx;
      for (Letter x : w) idx.push_back(static_cast<int>(n - x));
      pattern += matches_bokut_shiao(idx);
      irr_set.insert(idx);
    }
    const auto bs = bokut_shiao_words(n);
    const bool same_set = irr_set == std::set<std::vector<int>>(bs.begin(), bs.end());
    const bool ok = c.status == CompletionStatus::Complete && irr.size() == order && pattern == irr.size() &&
                    same_set && std::to_string(irr.size()) == expect_value(p, "irr_total");
    o.pass = o.pass && ok;
    d << "n=" << n << ": |Irr|=" << irr.size() << " (|S_" << n + 1 << "|=" << order << "), " << pattern
      << " match the pattern; ";
  }
  o.detail = d.str();
  return o;
}

Outcome adyan_thurston() {
  const Presentation pos = reload(adyan_thurston_pos(2));
  const GsbReport r = is_gsb(rewrite_system(pos));
  const Presentation grp = reload(adyan_thurston_group(2));
  const RewriteSystem gs = rewrite_system(grp);
  const GsbReport rg = is_gsb(gs);
  auto nf = [&](std::vector<int> sigma) {
    return reduce(NcPolynomial::monomial(braid_to_adyan_thurston(sigma, grp)), gs);
  };
  const NcPolynomial a = nf({1, 2, 1});
  const NcPolynomial b = nf({2, 1, 2});
  std::ostringstream d;
  d << "positive: " << pos.relations.size() << " relations, is_gsb=" << (r.is_gsb ? "true" : "false")
    << "; group: is_gsb=" << (rg.is_gsb ? "true" : "false") << ", nf(s1 s2 s1)=" << to_string(a, grp.alphabet)
    << ", nf(s2 s1 s2)=" << to_string(b, grp.alphabet);
  return {r.is_gsb && expect_value(pos, "is_gsb") == "true" && a == b, d.str()};
}

Outcome row_assoc() {
  const RowAssocReport r = row_associativity(4, 200, 4, 20260101);
  std::ostringstream d;
  d << r.agreed << "/" << r.trials << " triples agree, " << r.tableau_agreed << "/" << r.trials
    << " equal the rows of P(RST)";
  if (!r.failures.empty()) d << "; first: " << r.failures.front();
  return {r.passed() && r.trials == 200, d.str()};
}

Outcome schensted() {
  const Presentation p = plactic_standard(3);
  const RewriteSystem gsb = interreduce(complete(p.relations, 3).system);
  const SchenstedReport r = schensted_equivalence(3, 6, gsb);
  std::ostringstream d;
  d << r.words << " words: nf(w) = reading(P(w)) for " << r.literal_matches;
  if (!r.first_mismatch.empty()) {
    const Word nf = reduce(NcPolynomial::monomial(plactic_word(r.first_mismatch, 3)), gsb).leading_word();
    d << "; first mismatch w=" << join(r.first_mismatch) << " nf=" << join(plactic_values(nf, 3))
      << " reading=" << join(row_reading(insertion_tableau(r.first_mismatch)));
  }
  d << ". Oracle equivalence: nf(w) = nf(reading(P(w))) for " << r.reading_consistent << ", P(nf(w)) = P(w) for "
    << r.tableau_preserved << ", " << r.tableaux << " tableaux vs " << r.normal_forms << " normal forms ("
    << (r.equivalent() ? "holds" : "fails") << ")";
  return {r.literal(), d.str()};
}

// Independent of the library: (1/n) sum_{d|n} mu(d) k^(n/d).
long long necklace(long long k, long long n) {
  auto mu = [](long long d) {
    int m = 1;
    for (long long q = 2; q * q <= d; ++q) {
      if (d % q) continue;
      d /= q;
      if (d % q == 0) return 0;
      m = -m;
    }
    return d > 1 ? -m : m;
  };
  long long s = 0;
  for (long long d = 1; d <= n; ++d) {
    if (n % d) continue;
    long long pw = 1;
    for (long long i = 0; i < n / d; ++i) pw *= k;
    s += mu(d) * pw;
  }
  return s / n;
}

Outcome witt() {
  const std::vector<std::size_t> two = {2, 1, 2, 3, 6, 9};
  const std::vector<std::size_t> three = {3, 3, 8, 18};
  Outcome o;
  std::ostringstream d;
  auto check = [&](std::size_t k, const std::vector<std::size_t>& want) {
    d << "k=" << k << ":";
    for (std::size_t n = 1; n <= want.size(); ++n) {
      const std::size_t got = nlsw_enumerate(k, n).size();
      o.pass = o.pass && got == want[n - 1] && static_cast<long long>(got) == necklace(k, n);
      d << " " << got;
    }
    d << "; ";
  };
  check(2, two);
  check(3, three);
  o.detail = d.str();
  return o;
}

Outcome lie_expand_truth() {
  std::mt19937_64 rng(909);
  std::uniform_int_distribution<std::size_t> deg(1, 6);
  std::size_t basis_ok = 0, jacobi_ok = 0, anti_ok = 0;
  const std::size_t trials = 500;
  for (std::size_t i = 0; i < trials; ++i) {
    const LieMonomial m = random_lie_monomial(rng, 3, deg(rng));
    basis_ok += lie_expand(to_nlsw_basis(m)) == lie_expand(m);
    const LieMonomial a = random_lie_monomial(rng, 3, deg(rng) / 2 + 1);
    const LieMonomial b = random_lie_monomial(rng, 3, deg(rng) / 2 + 1);
    const LieMonomial c = random_lie_monomial(rng, 3, deg(rng) / 2 + 1);
    auto br = LieMonomial::bracket;
    jacobi_ok += (lie_expand(br(br(a, b), c)) + lie_expand(br(br(b, c), a)) + lie_expand(br(br(c, a), b))).is_zero();
    anti_ok += lie_expand(br(m, m)).is_zero() && lie_expand(br(a, b)) == -lie_expand(br(b, a));
  }
  std::ostringstream d;
  d << "basis " << basis_ok << "/" << trials << ", Jacobi " << jacobi_ok << "/" << trials << ", anti-symmetry "
    << anti_ok << "/" << trials;
  return {basis_ok == trials && jacobi_ok == trials && anti_ok == trials, d.str()};
}

Outcome partially_commutative() {
  std::mt19937_64 rng(4242);
  const std::vector<std::string> all_names = {"a", "b", "c", "d"};
  Outcome o;
  std::ostringstream d;
  for (int g = 0; g < 5; ++g) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(3, 4)(rng);
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (std::bernoulli_distribution(0.6)(rng)) edges.emplace_back(i, j);
      }
    }
    const std::vector<std::string> names(all_names.begin(), all_names.begin() + static_cast<long>(n));
    const Presentation p = reload(pc_family(names, CommutationGraph(n, edges), PcKind::Assoc, 6));
    const GsbReport r = is_gsb(rewrite_system(p), 6);
    o.pass = o.pass && r.is_gsb;
    d << "graph " << g << " (" << n << " gens, " << edges.size() << " edges): " << p.relations.size()
      << " relations " << (r.is_gsb ? "GSB" : "NOT GSB") << "; ";
  }
  const Presentation lie = reload(pc_family({"x", "y", "z"}, CommutationGraph::complete(3), PcKind::Lie, 4));
  const LieGsbReport lr = lie_is_gsb(lie_system(lie), 4);
  o.pass = o.pass && lr.is_gsb;
  d << "Lie fully commuting: " << lie.lie_relations.size() << " relations " << (lr.is_gsb ? "GSB" : "NOT GSB");
  o.detail = d.str();
  return o;
}

Outcome property_suite() {
  std::mt19937_64 rng(777);
  std::uniform_int_distribution<std::size_t> len(0, 6);
  std::size_t mono_ok = 0, mono_total = 0;
  for (int i = 0; i < 10000; ++i) {
    Word u = random_word(rng, 3, len(rng));
    Word v = random_word(rng, 3, len(rng));
    const Word a = random_word(rng, 3, len(rng));
    const Word b = random_word(rng, 3, len(rng));
    if (u == v) v.push_back(0);
    if (deglex_compare(u, v) < 0) std::swap(u, v);
    ++mono_total;
    mono_ok += deglex_compare(a * u * b, a * v * b) > 0;
  }

  const Presentation pl = plactic_standard(3);
  const RewriteSystem s = interreduce(complete(pl.relations, 3).system);
  std::size_t idem_ok = 0, trace_ok = 0;
  for (int i = 0; i < 1000; ++i) {
    const NcPolynomial f = random_polynomial(rng, 3, 6, 5);
    const NormalForm nf = normal_form(f, s);
    idem_ok += normal_form(nf.value, s).value == nf.value;
    trace_ok += nf.value + replay(nf.trace, s.relations()) == f;
  }

  const Presentation k4 = plactic_standard(4);
  CompletionBudget budget;
  budget.max_deg = 7;
  const std::string one = to_json(complete(k4.relations, 4, budget, 1), k4.alphabet).dump();
  const std::string four = to_json(complete(k4.relations, 4, budget, 4), k4.alphabet).dump();
  const bool same = one == four;

  std::ostringstream d;
  d << "monomiality " << mono_ok << "/" << mono_total << ", idempotence " << idem_ok << "/1000, trace " << trace_ok
    << "/1000, 1 vs 4 workers JSON " << (same ? "byte-identical" : "DIFFERS") << " (" << one.size() << " bytes)";
  return {mono_ok == mono_total && idem_ok == 1000 && trace_ok == 1000 && same, d.str()};
}

}  // namespace

int main() {
  int failed = 0;
  failed += run_criterion(1, "plactic-3 eleven relations form a GSB", 1, plactic3_is_gsb);
  failed += run_criterion(2, "plactic-3 completion gives the eleven relations", 10, plactic3_completion);
  failed += run_criterion(3, "plactic-4 completion keeps growing", 300, plactic4_infinite);
  failed += run_criterion(4, "symmetric groups S3, S4", 30, symmetric_groups);
  failed += run_criterion(5, "Adyan-Thurston B3", 60, adyan_thurston);
  failed += run_criterion(6, "row associativity n=4", 30, row_assoc);
  failed += run_criterion(7, "GSB normal form equals tableau row reading (n=3, |w|<=6)", 60, schensted);
  failed += run_criterion(8, "Witt counts", 0, witt);
  failed += run_criterion(9, "Lie expansion ground truth", 0, lie_expand_truth);
  failed += run_criterion(10, "partially commutative families", 0, partially_commutative);
  failed += run_criterion(11, "property suite", 0, property_suite);
  std::cout << (11 - failed) << "/11 criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
