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

#include "gsb/catalog.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace gsb {

namespace {

NcPolynomial word_poly(const Word& w) { return NcPolynomial::monomial(w); }

// Monic under deg-lex, deduplicated, first-seen order.
class RelationSet {
 public:
  void add(const NcPolynomial& f) {
    if (f.is_zero()) return;
    NcPolynomial m = make_monic(f);
    if (seen_.insert(m).second) out_.push_back(std::move(m));
  }
  std::vector<NcPolynomial> take() { return std::move(out_); }

 private:
  struct Less {
    bool operator()(const NcPolynomial& a, const NcPolynomial& b) const { return canonical_less(a, b); }
  };
  std::set<NcPolynomial, Less> seen_;
  std::vector<NcPolynomial> out_;
};

std::size_t factorial(std::size_t m) {
  std::size_t f = 1;
  for (std::size_t i = 2; i <= m; ++i) f *= i;
  return f;
}

}  // namespace

// ---- permutations -----------------------------------------------------------

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  if (images_.empty()) throw std::invalid_argument("permutation must be nonempty");
  std::vector<bool> seen(images_.size() + 1, false);
  for (int v : images_) {
    if (v < 1 || static_cast<std::size_t>(v) > images_.size() || seen[v]) {
      throw std::invalid_argument("not a permutation of 1..m");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t m) {
  std::vector<int> v(m);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::transposition(std::size_t m, std::size_t i) {
  if (i < 1 || i >= m) throw std::invalid_argument("transposition index out of range");
  std::vector<int> v(m);
  std::iota(v.begin(), v.end(), 1);
  std::swap(v[i - 1], v[i]);
  return Permutation(std::move(v));
}

bool Permutation::is_identity() const {
  for (std::size_t k = 0; k < images_.size(); ++k) {
    if (images_[k] != static_cast<int>(k + 1)) return false;
  }
  return true;
}

std::size_t perm_length(const Permutation& a) {
  std::size_t inv = 0;
  const auto& v = a.images();
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) inv += v[i] > v[j];
  }
  return inv;
}

Permutation perm_mul(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("perm_mul: size mismatch");
  std::vector<int> v(a.size());
  for (std::size_t k = 1; k <= a.size(); ++k) v[k - 1] = a(static_cast<std::size_t>(b(k)));
  return Permutation(std::move(v));
}

bool perp(const Permutation& a, const Permutation& b) {
  return perm_length(perm_mul(a, b)) == perm_length(a) + perm_length(b);
}

Permutation perm_of_word(const std::vector<int>& s_indices, std::size_t n) {
  Permutation p = Permutation::identity(n + 1);
  for (int i : s_indices) {
    if (i < 1 || static_cast<std::size_t>(i) > n) throw std::invalid_argument("perm_of_word: index out of range");
    p = perm_mul(p, Permutation::transposition(n + 1, static_cast<std::size_t>(i)));
  }
  return p;
}

std::vector<Permutation> all_permutations(std::size_t m) {
  std::vector<int> v(m);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::vector<std::vector<int>> bokut_shiao_words(std::size_t n) {
  std::vector<std::vector<int>> out{{}};
  for (std::size_t j = 1; j <= n; ++j) {
    std::vector<std::vector<int>> next;
    for (const auto& prefix : out) {
      for (std::size_t i = j + 1; i >= 1; --i) {
        std::vector<int> w = prefix;
        for (std::size_t k = j; k >= i && k >= 1; --k) w.push_back(static_cast<int>(k));
        next.push_back(std::move(w));
      }
    }
    out = std::move(next);
  }
  return out;
}

std::vector<int> bokut_shiao_normal_form(const Permutation& a) {
  const std::size_t n = a.size() - 1;
  for (auto& w : bokut_shiao_words(n)) {
    if (perm_of_word(w, n) == a) return w;
  }
  throw std::logic_error("bokut_shiao_normal_form: no word found");
}

bool matches_bokut_shiao(const std::vector<int>& s) {
  int prev = 0;
  std::size_t i = 0;
  while (i < s.size()) {
    const int start = s[i];
    if (start < 1 || start <= prev) return false;
    std::size_t j = i + 1;
    while (j < s.size() && s[j] == s[j - 1] - 1) ++j;
    if (s[j - 1] < 1) return false;
    prev = start;
    i = j;
  }
  return true;
}

Presentation symmetric_group(std::size_t n) {
  if (n == 0) throw std::invalid_argument("symmetric_group: n must be >= 1");
  std::vector<std::string> names;
  for (std::size_t k = n; k >= 1; --k) names.push_back("s" + std::to_string(k));
  auto s = [n](std::size_t i) { return static_cast<Letter>(n - i); };
  RelationSet rels;
  for (std::size_t i = 1; i <= n; ++i) rels.add(word_poly(Word{s(i), s(i)}) - word_poly(Word{}));
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 2; j <= n; ++j) rels.add(word_poly(Word{s(j), s(i)}) - word_poly(Word{s(i), s(j)}));
  }
  for (std::size_t i = 1; i < n; ++i) {
    rels.add(word_poly(Word{s(i + 1), s(i), s(i + 1)}) - word_poly(Word{s(i), s(i + 1), s(i)}));
  }
  Presentation p;
  p.alphabet = Alphabet(std::move(names));
  p.relations = rels.take();
  p.expect.emplace_back("irr_total", std::to_string(factorial(n + 1)));
  return p;
}

// ---- Adyan-Thurston ----------------------------------------------------------

std::string adyan_thurston_name(const std::vector<int>& s_indices) {
  std::string out = "r";
  for (int i : s_indices) out += std::to_string(i);
  return out;
}

namespace {

struct AtData {
  std::size_t n;
  std::vector<Permutation> elems;        // nonidentity, generator order
  std::map<Permutation, Letter> letter;  // r(a)
  std::map<Permutation, std::vector<int>> word;
  Permutation w0;
  std::vector<std::string> names;
};

AtData adyan_thurston_data(std::size_t n) {
  if (n == 0 || n >= 5) throw std::invalid_argument("adyan_thurston: n must be in 1..4");
  const std::size_t m = n + 1;
  std::map<Permutation, std::vector<int>> word;
  for (auto& w : bokut_shiao_words(n)) word.emplace(perm_of_word(w, n), w);
  std::vector<Permutation> elems;
  for (const auto& [p, w] : word) {
    if (!p.is_identity()) elems.push_back(p);
  }
  // Greatest first: shorter, then lex-greater index word (s_1 < ... < s_n).
  std::sort(elems.begin(), elems.end(), [&](const Permutation& a, const Permutation& b) {
    const auto& wa = word.at(a);
    const auto& wb = word.at(b);
    if (wa.size() != wb.size()) return wa.size() < wb.size();
    return wa > wb;
  });
  AtData d{n, elems, {}, word, Permutation::identity(m), {}};
  for (std::size_t k = 0; k < elems.size(); ++k) {
    d.letter.emplace(elems[k], static_cast<Letter>(k));
    d.names.push_back(adyan_thurston_name(word.at(elems[k])));
  }
  std::vector<int> rev(m);
  for (std::size_t k = 0; k < m; ++k) rev[k] = static_cast<int>(m - k);
  d.w0 = Permutation(rev);
  return d;
}

// r(a) as a word (empty for the identity).
Word at_word(const AtData& d, const Permutation& a) {
  if (a.is_identity()) return {};
  return Word{d.letter.at(a)};
}

void at_positive_relations(const AtData& d, RelationSet& rels) {
  for (const auto& a : d.elems) {
    for (const auto& b : d.elems) {
      if (!perp(a, b)) continue;
      rels.add(word_poly(at_word(d, a) * at_word(d, b)) - word_poly(at_word(d, perm_mul(a, b))));
    }
  }
  for (const auto& a : d.elems) {
    for (const auto& b : d.elems) {
      if (!perp(a, b)) continue;
      const Permutation ab = perm_mul(a, b);
      for (const auto& c : d.elems) {
        if (!perp(b, c)) continue;
        rels.add(word_poly(at_word(d, a) * at_word(d, perm_mul(b, c))) - word_poly(at_word(d, ab) * at_word(d, c)));
      }
    }
  }
}

}  // namespace

Presentation adyan_thurston_pos(std::size_t n) {
  const AtData d = adyan_thurston_data(n);
  RelationSet rels;
  at_positive_relations(d, rels);
  Presentation p;
  p.alphabet = Alphabet(d.names);
  p.relations = rels.take();
  p.expect.emplace_back("is_gsb", "true");
  return p;
}

Presentation adyan_thurston_group(std::size_t n) {
  const AtData d = adyan_thurston_data(n);
  RelationSet rels;
  at_positive_relations(d, rels);
  std::vector<std::string> names = d.names;
  const Letter delta = d.letter.at(d.w0);
  const auto delta_inv = static_cast<Letter>(names.size());
  names.push_back(names[delta] + "^-1");

  // a' = w0 a w0 (s_i -> s_{n+1-i}).
  auto flip = [&](const Permutation& a) { return perm_mul(perm_mul(d.w0, a), d.w0); };
  for (const auto& a : d.elems) {
    if (a == d.w0) continue;
    for (Letter e : {delta, delta_inv}) {
      rels.add(word_poly(at_word(d, a) * Word{e}) - word_poly(Word{e} * at_word(d, flip(a))));
    }
  }
  std::vector<Permutation> with_one = d.elems;
  with_one.push_back(Permutation::identity(n + 1));
  for (const auto& b : d.elems) {
    for (const auto& c : d.elems) {
      if (perm_mul(b, c) != d.w0 || !perp(b, c)) continue;
      for (const auto& a : with_one) {
        if (!a.is_identity() && !perp(a, b)) continue;
        for (const auto& mu : with_one) {
          if (!mu.is_identity() && !perp(c, mu)) continue;
          const Word lhs = at_word(d, perm_mul(a, b)) * at_word(d, perm_mul(c, mu));
          const Word rhs = Word{delta} * at_word(d, flip(a)) * at_word(d, mu);
          rels.add(word_poly(lhs) - word_poly(rhs));
        }
      }
    }
  }
  rels.add(word_poly(Word{delta, delta_inv}) - word_poly(Word{}));
  rels.add(word_poly(Word{delta_inv, delta}) - word_poly(Word{}));

  Presentation p;
  p.alphabet = Alphabet(std::move(names));
  p.relations = rels.take();
  return p;
}

Word braid_to_adyan_thurston(const std::vector<int>& sigma, const Presentation& at) {
  Word out;
  for (int i : sigma) out.push_back(at.alphabet.letter("r" + std::to_string(i)));
  return out;
}

// ---- plactic -------------------------------------------------------------------

bool is_row(const Row& r) { return !r.empty() && std::is_sorted(r.begin(), r.end()); }

InsertResult schensted_insert(const Row& r, int x) {
  InsertResult out{std::nullopt, r};
  auto it = std::upper_bound(out.row.begin(), out.row.end(), x);
  if (it == out.row.end()) {
    out.row.push_back(x);
  } else {
    out.bumped = *it;
    *it = x;
  }
  return out;
}

RowProduct row_product(const Row& r, const Row& s) {
  RowProduct out{{}, r};
  for (int x : s) {
    InsertResult step = schensted_insert(out.lower, x);
    out.lower = std::move(step.row);
    if (step.bumped) out.upper.push_back(*step.bumped);
  }
  return out;
}

bool dominates(const Row& r, const Row& s) {
  if (r.size() > s.size()) return false;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i] <= s[i]) return false;
  }
  return true;
}

Tableau insertion_tableau(const std::vector<int>& w) {
  Tableau t;
  for (int x : w) {
    std::optional<int> carry = x;
    for (std::size_t k = 0; carry; ++k) {
      if (k == t.size()) {
        t.push_back({*carry});
        break;
      }
      InsertResult step = schensted_insert(t[k], *carry);
      t[k] = std::move(step.row);
      carry = step.bumped;
    }
  }
  return t;
}

std::vector<int> row_reading(const Tableau& t) {
  std::vector<int> out;
  for (auto it = t.rbegin(); it != t.rend(); ++it) out.insert(out.end(), it->begin(), it->end());
  return out;
}

Word plactic_word(const std::vector<int>& values, std::size_t n) {
  Word w;
  for (int v : values) {
    if (v < 1 || static_cast<std::size_t>(v) > n) throw std::invalid_argument("plactic letter out of range");
    w.push_back(static_cast<Letter>(n - static_cast<std::size_t>(v)));
  }
  return w;
}

std::vector<int> plactic_values(const Word& w, std::size_t n) {
  std::vector<int> out;
  for (Letter x : w) out.push_back(static_cast<int>(n - x));
  return out;
}

Presentation plactic_standard(std::size_t n) {
  if (n < 2 || n > 9) throw std::invalid_argument("plactic_standard: n must be in 2..9");
  std::vector<std::string> names;
  for (std::size_t v = n; v >= 1; --v) names.push_back(std::to_string(v));
  auto w = [n](std::vector<int> v) { return word_poly(plactic_word(v, n)); };
  RelationSet rels;
  const int m = static_cast<int>(n);
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= m; ++j) {
      for (int k = 1; k <= m; ++k) {
        if (i <= j && j < k) rels.add(w({i, k, j}) - w({k, i, j}));
        if (i < j && j <= k) rels.add(w({j, i, k}) - w({j, k, i}));
      }
    }
  }
  Presentation p;
  p.alphabet = Alphabet(std::move(names));
  p.relations = rels.take();
  if (n == 3) p.expect.emplace_back("completed_relations", "11");
  if (n >= 4) p.expect.emplace_back("completion", "infinite");
  return p;
}

namespace {

std::string row_name(const Row& r) {
  std::string out = "R";
  for (int v : r) out += std::to_string(v);
  return out;
}

}  // namespace

std::vector<Row> plactic_rows_generators(std::size_t n, std::size_t max_len) {
  if (n < 1 || n > 9 || max_len < 1) throw std::invalid_argument("plactic_rows: need 1 <= n <= 9 and max_len >= 1");
  std::vector<Row> rows;
  std::vector<Row> level{{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Row> next;
    for (const Row& r : level) {
      for (int v = r.empty() ? 1 : r.back(); v <= static_cast<int>(n); ++v) {
        Row x = r;
        x.push_back(v);
        next.push_back(x);
      }
    }
    rows.insert(rows.end(), next.begin(), next.end());
    level = std::move(next);
  }
  std::sort(rows.begin(), rows.end(), [n](const Row& a, const Row& b) {
    return deglex_compare(plactic_word(a, n), plactic_word(b, n)) > 0;
  });
  return rows;
}

Presentation plactic_rows(std::size_t n, std::size_t max_len) {
  const std::vector<Row> rows = plactic_rows_generators(n, max_len);
  std::map<Row, Letter> letter;
  std::vector<std::string> names;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    letter.emplace(rows[k], static_cast<Letter>(k));
    names.push_back(row_name(rows[k]));
  }
  auto gen = [&](const Row& r) { return letter.at(r); };
  RelationSet rels;
  for (const Row& r : rows) {
    for (const Row& s : rows) {
      if (dominates(r, s)) continue;
      const RowProduct rp = row_product(r, s);
      if (rp.lower.size() > max_len) continue;
      const Word lhs{gen(r), gen(s)};
      const Word rhs = rp.upper.empty() ? Word{gen(rp.lower)} : Word{gen(rp.upper), gen(rp.lower)};
      rels.add(word_poly(lhs) - word_poly(rhs));
    }
  }
  Presentation p;
  p.alphabet = Alphabet(std::move(names));
  p.relations = rels.take();
  p.expect.emplace_back("bounded_certificate", "pass");
  return p;
}

RowsCertificate plactic_rows_certificate(std::size_t n, std::size_t max_len, int threads) {
  const std::vector<Row> rows = plactic_rows_generators(n, max_len);
  const RewriteSystem system = rewrite_system(plactic_rows(n, max_len));
  RowsCertificate cert;
  cert.relations = system.size();
  GsbReport report = is_gsb(system, 0, threads);
  cert.checked = report.checked;
  for (Composition& c : report.failures) {
    const NcPolynomial residue = reduce(c.value, system);
    bool bounded = false;
    for (const Term& t : residue.terms()) {
      for (std::size_t i = 0; i + 1 < t.word.size(); ++i) {
        if (!dominates(rows[t.word[i]], rows[t.word[i + 1]])) bounded = true;
      }
    }
    if (bounded) {
      ++cert.out_of_bounds;
    } else {
      ++cert.genuine;
      cert.genuine_failures.push_back(std::move(c));
    }
  }
  return cert;
}

std::vector<Row> row_normal_form(std::vector<Row> rows, std::size_t first, std::size_t max_steps) {
  auto reducible = [&](std::size_t i) { return !dominates(rows[i], rows[i + 1]); };
  bool use_first = first + 1 < rows.size() && reducible(first);
  for (std::size_t step = 0;; ++step) {
    std::size_t p = rows.size();
    if (use_first) {
      p = first;
      use_first = false;
    } else {
      for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
        if (reducible(i)) {
          p = i;
          break;
        }
      }
    }
    if (p == rows.size()) return rows;
    if (step >= max_steps) throw std::runtime_error("row_normal_form: step limit reached");
    RowProduct rp = row_product(rows[p], rows[p + 1]);
    if (rp.upper.empty()) {
      rows[p] = std::move(rp.lower);
      rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(p) + 1);
    } else {
      rows[p] = std::move(rp.upper);
      rows[p + 1] = std::move(rp.lower);
    }
  }
}

RowAssocReport row_associativity(std::size_t n, std::size_t trials, std::size_t max_len, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> len(1, max_len);
  std::uniform_int_distribution<int> letter(1, static_cast<int>(n));
  auto random_row = [&] {
    Row r(len(rng));
    for (int& x : r) x = letter(rng);
    std::sort(r.begin(), r.end());
    return r;
  };
  auto show = [](const std::vector<Row>& rows) {
    std::string s;
    for (const Row& r : rows) {
      s += s.empty() ? "" : "|";
      for (int v : r) s += std::to_string(v);
    }
    return s;
  };
  RowAssocReport report;
  for (std::size_t t = 0; t < trials; ++t) {
    const Row r = random_row(), s = random_row(), u = random_row();
    const std::vector<Row> left = row_normal_form({r, s, u}, 0);
    const std::vector<Row> right = row_normal_form({r, s, u}, 1);
    std::vector<int> w = r;
    w.insert(w.end(), s.begin(), s.end());
    w.insert(w.end(), u.begin(), u.end());
    const Tableau p = insertion_tableau(w);
    const std::vector<Row> expected(p.rbegin(), p.rend());
    ++report.trials;
    if (left == right) {
      ++report.agreed;
      if (left == expected) ++report.tableau_agreed;
    }
    if (left != right || left != expected) {
      report.failures.push_back(show({r, s, u}) + ": (RS)T=" + show(left) + " R(ST)=" + show(right) +
                                " P=" + show(expected));
    }
  }
  return report;
}

SchenstedReport schensted_equivalence(std::size_t n, std::size_t max_len, const RewriteSystem& gsb) {
  SchenstedReport report;
  std::set<Tableau> tableaux;
  std::set<Word, DegLexLess> nfs;
  auto nf_word = [&](const Word& w) {
    const NcPolynomial r = reduce(NcPolynomial::monomial(w), gsb);
    if (r.size() != 1 || r.terms()[0].coeff != 1) throw std::logic_error("plactic normal form is not a word");
    return r.terms()[0].word;
  };
  std::vector<int> w;
  auto visit = [&] {
    ++report.words;
    const Tableau p = insertion_tableau(w);
    const Word nf = nf_word(plactic_word(w, n));
    const Word reading = plactic_word(row_reading(p), n);
    if (nf == reading) {
      ++report.literal_matches;
    } else if (report.first_mismatch.empty()) {
      report.first_mismatch = w;
    }
    if (nf == nf_word(reading)) ++report.reading_consistent;
    if (insertion_tableau(plactic_values(nf, n)) == p) ++report.tableau_preserved;
    tableaux.insert(p);
    nfs.insert(nf);
  };
  // Odometer over all words of each length.
  for (std::size_t len = 1; len <= max_len; ++len) {
    w.assign(len, 1);
    while (true) {
      visit();
      std::size_t i = len;
      while (i > 0 && w[i - 1] == static_cast<int>(n)) w[--i] = 1;
      if (i == 0) break;
      ++w[i - 1];
    }
  }
  report.tableaux = tableaux.size();
  report.normal_forms = nfs.size();
  return report;
}

// ---- partially commutative --------------------------------------------------

CommutationGraph::CommutationGraph(std::size_t vertices, std::vector<std::pair<std::size_t, std::size_t>> edges)
    : n_(vertices), adj_(vertices * vertices, false) {
  for (auto [a, b] : edges) {
    if (a >= n_ || b >= n_) throw std::invalid_argument("commutation graph: vertex out of range");
    if (a == b) throw std::invalid_argument("commutation graph: loops are not allowed");
    if (a > b) std::swap(a, b);
    edges_.emplace_back(a, b);
    adj_[a * n_ + b] = adj_[b * n_ + a] = true;
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

CommutationGraph CommutationGraph::complete(std::size_t vertices) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t a = 0; a < vertices; ++a) {
    for (std::size_t b = a + 1; b < vertices; ++b) e.emplace_back(a, b);
  }
  return CommutationGraph(vertices, std::move(e));
}

bool CommutationGraph::commute(std::size_t a, std::size_t b) const {
  return a < n_ && b < n_ && adj_[a * n_ + b];
}

namespace {

// Letters of the working alphabet with their base generator; index order is
// the precedence order (0 greatest).
struct PcAlphabet {
  std::vector<std::string> names;
  std::vector<std::size_t> base;
};

PcAlphabet pc_alphabet(const std::vector<std::string>& names, const CommutationGraph& graph, PcKind kind) {
  if (names.size() != graph.vertices()) throw std::invalid_argument("pc: names and graph size differ");
  PcAlphabet a;
  for (std::size_t i = 0; i < names.size(); ++i) {
    a.names.push_back(names[i]);
    a.base.push_back(i);
    if (kind == PcKind::Group) {
      a.names.push_back(names[i] + "^-1");
      a.base.push_back(i);
    }
  }
  return a;
}

// x |> y: x greater (smaller index) and the bases commute.
bool triangle(const PcAlphabet& a, const CommutationGraph& g, Letter x, Letter y) {
  return x < y && g.commute(a.base[x], a.base[y]);
}

PresentationKind presentation_kind(PcKind k) {
  switch (k) {
    case PcKind::Assoc:
      return PresentationKind::Monoid;
    case PcKind::Lie:
      return PresentationKind::Lie;
    case PcKind::Group:
      return PresentationKind::Group;
  }
  return PresentationKind::Monoid;
}

}  // namespace

Presentation pc_defining(const std::vector<std::string>& names, const CommutationGraph& graph, PcKind kind) {
  const PcAlphabet a = pc_alphabet(names, graph, kind);
  Presentation p;
  p.kind = presentation_kind(kind);
  p.alphabet = Alphabet(a.names);
  RelationSet rels;
  for (Letter x = 0; x < a.names.size(); ++x) {
    for (Letter y = x + 1; y < a.names.size(); ++y) {
      if (!triangle(a, graph, x, y)) continue;
      if (kind == PcKind::Lie) {
        p.lie_relations.push_back(LiePolynomial::basis(Word{x, y}));
      } else {
        rels.add(word_poly(Word{x, y}) - word_poly(Word{y, x}));
      }
    }
  }
  p.relations = rels.take();
  return p;
}

Presentation pc_family(const std::vector<std::string>& names, const CommutationGraph& graph, PcKind kind,
                       std::size_t bound) {
  const PcAlphabet a = pc_alphabet(names, graph, kind);
  const auto sigma = static_cast<Letter>(a.names.size());
  Presentation p;
  p.kind = presentation_kind(kind);
  p.alphabet = Alphabet(a.names);
  RelationSet rels;
  for (Letter x = 0; x < sigma; ++x) {
    for (Letter y = x + 1; y < sigma; ++y) {
      if (!triangle(a, graph, x, y)) continue;
      std::vector<Letter> allowed;
      for (Letter z = y + 1; z < sigma; ++z) {
        if (triangle(a, graph, y, z)) allowed.push_back(z);
      }
      // Every u over `allowed` with |x u y| <= bound, shortest first.
      std::vector<Word> level{Word{}};
      for (std::size_t len = 0; len + 2 <= bound; ++len) {
        std::vector<Word> next;
        for (const Word& u : level) {
          const Word lhs = Word{x} * u * Word{y};
          if (kind == PcKind::Lie) {
            p.lie_relations.push_back(LiePolynomial::basis(lhs));
          } else {
            rels.add(word_poly(lhs) - word_poly(Word{y, x} * u));
          }
          for (Letter z : allowed) next.push_back(u * Word{z});
        }
        level = std::move(next);
      }
    }
  }
  p.relations = rels.take();
  p.expect.emplace_back("is_gsb", "true");
  return p;
}

}  // namespace gsb
