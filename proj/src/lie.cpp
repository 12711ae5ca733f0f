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

#include "gsb/lie.hpp"

#include <omp.h>

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "gsb/parallel.hpp"

namespace gsb {

namespace {

// Letters from position pos to the end.
Word tail(const Word& w, std::size_t pos) { return w.subword(pos, w.size() - pos); }

}  // namespace

// ---- LieMonomial -----------------------------------------------------------

LieMonomial LieMonomial::leaf(Letter x) {
  auto node = std::make_shared<Node>();
  node->letter = x;
  return LieMonomial(std::move(node));
}

LieMonomial LieMonomial::bracket(const LieMonomial& left, const LieMonomial& right) {
  auto node = std::make_shared<Node>();
  node->left = left.node_;
  node->right = right.node_;
  node->degree = left.degree() + right.degree();
  return LieMonomial(std::move(node));
}

LieMonomial LieMonomial::left_normed(const std::vector<LieMonomial>& items) {
  if (items.empty()) throw std::invalid_argument("left_normed: empty bracket");
  LieMonomial acc = items.front();
  for (std::size_t i = 1; i < items.size(); ++i) acc = bracket(acc, items[i]);
  return acc;
}

Word LieMonomial::word() const {
  Word out;
  std::vector<const Node*> stack{node_.get()};
  while (!stack.empty()) {
    const Node* n = stack.back();
    stack.pop_back();
    if (!n->left) {
      out.push_back(n->letter);
    } else {
      stack.push_back(n->right.get());
      stack.push_back(n->left.get());
    }
  }
  return out;
}

bool operator==(const LieMonomial& a, const LieMonomial& b) {
  if (a.node_ == b.node_) return true;
  if (a.is_leaf() != b.is_leaf() || a.degree() != b.degree()) return false;
  if (a.is_leaf()) return a.letter() == b.letter();
  return a.left() == b.left() && a.right() == b.right();
}

std::string to_string(const LieMonomial& m, const Alphabet& alphabet) {
  if (m.is_leaf()) return alphabet.name(m.letter());
  return "[" + to_string(m.left(), alphabet) + "," + to_string(m.right(), alphabet) + "]";
}

// ---- ALSW words ------------------------------------------------------------

bool is_alsw(const Word& u) {
  if (u.empty()) throw std::invalid_argument("is_alsw: empty word");
  const std::size_t n = u.size();
  for (std::size_t i = 1; i < n; ++i) {
    // Compare u with the rotation u[i..] u[..i] letter by letter.
    for (std::size_t k = 0; k < n; ++k) {
      const Letter x = u[k];
      const Letter y = u[(i + k) % n];
      if (x == y) {
        if (k + 1 == n) return false;
        continue;
      }
      if (x > y) return false;  // larger index is the smaller letter
      break;
    }
  }
  return true;
}

std::vector<Word> alsw_factorization(const Word& u) {
  // Duval on raw indices: a smaller index is a greater letter, so standard
  // Lyndon factors l1 >= l2 >= ... are ALSWs with c1 <= c2 <= ...
  std::vector<Word> out;
  const std::size_t n = u.size();
  std::size_t k = 0;
  while (k < n) {
    std::size_t i = k;
    std::size_t j = k + 1;
    while (j < n && u[i] <= u[j]) {
      i = u[i] < u[j] ? k : i + 1;
      ++j;
    }
    while (k <= i) {
      out.push_back(u.subword(k, j - i));
      k += j - i;
    }
  }
  return out;
}

namespace {

// Length of the left factor in the standard bracketing of an ALSW of length >= 2.
std::size_t shirshov_split(const Word& u) {
  thread_local std::unordered_map<Word, std::size_t, WordHash> cache;
  if (auto it = cache.find(u); it != cache.end()) return it->second;
  std::size_t split = u.size() - 1;
  for (std::size_t k = 1; k < u.size(); ++k) {
    if (is_alsw(tail(u, k))) {
      split = k;
      break;
    }
  }
  cache.emplace(u, split);
  return split;
}

LieMonomial bracket_alsw(const Word& u) {
  if (u.size() == 1) return LieMonomial::leaf(u[0]);
  const std::size_t k = shirshov_split(u);
  return LieMonomial::bracket(bracket_alsw(u.prefix(k)), bracket_alsw(tail(u, k)));
}

}  // namespace

LieMonomial shirshov_bracket(const Word& u) {
  if (!is_alsw(u)) throw std::invalid_argument("shirshov_bracket: word is not an ALSW");
  return bracket_alsw(u);
}

bool is_nlsw(const LieMonomial& m) {
  if (m.is_leaf()) return true;
  if (!is_alsw(m.word())) return false;
  const LieMonomial l = m.left();
  const LieMonomial r = m.right();
  if (!is_nlsw(l) || !is_nlsw(r)) return false;
  if (lex_compare(l.word(), r.word()) != std::strong_ordering::greater) return false;
  if (!l.is_leaf() && lex_compare(l.right().word(), r.word()) == std::strong_ordering::greater) return false;
  return true;
}

std::optional<Nlsw> Nlsw::from_tree(const LieMonomial& m) {
  if (!is_nlsw(m)) return std::nullopt;
  return Nlsw(m, m.word());
}

NcPolynomial lie_expand(const LieMonomial& m) {
  if (m.is_leaf()) return NcPolynomial::monomial(Word{m.letter()});
  const NcPolynomial l = lie_expand(m.left());
  const NcPolynomial r = lie_expand(m.right());
  return l * r - r * l;
}

// ---- LiePolynomial ---------------------------------------------------------

LiePolynomial::LiePolynomial(std::vector<Term> terms) : coords_(std::move(terms)) {
  for (const Term& t : coords_.terms()) {
    if (!is_alsw(t.word)) throw std::invalid_argument("LiePolynomial: coordinate word is not an ALSW");
  }
}

LiePolynomial LiePolynomial::basis(const Word& alsw, Rational c) {
  if (!is_alsw(alsw)) throw std::invalid_argument("LiePolynomial::basis: word is not an ALSW");
  return LiePolynomial(NcPolynomial::monomial(alsw, std::move(c)));
}

LiePolynomial operator+(const LiePolynomial& f, const LiePolynomial& g) { return LiePolynomial(f.coords_ + g.coords_); }
LiePolynomial operator-(const LiePolynomial& f, const LiePolynomial& g) { return LiePolynomial(f.coords_ - g.coords_); }
LiePolynomial operator*(const Rational& c, const LiePolynomial& f) { return LiePolynomial(c * f.coords_); }

LiePolynomial make_monic(const LiePolynomial& f) {
  const Rational c = f.leading().coeff;
  return Rational(1 / c) * f;
}

namespace {

struct WordPairHash {
  std::size_t operator()(const std::pair<Word, Word>& p) const noexcept {
    const WordHash h;
    return h(p.first) * 0x9e3779b97f4a7c15ULL ^ h(p.second);
  }
};

NcPolynomial basis_bracket(const Word& u, const Word& v);

// [f, g] on coordinate polynomials.
NcPolynomial bracket_coords(const NcPolynomial& f, const NcPolynomial& g) {
  std::vector<Term> acc;
  for (const Term& s : f.terms()) {
    for (const Term& t : g.terms()) {
      const Rational c = s.coeff * t.coeff;
      const NcPolynomial b = basis_bracket(s.word, t.word);
      for (const Term& r : b.terms()) acc.push_back({r.word, c * r.coeff});
    }
  }
  return NcPolynomial(std::move(acc));
}

// [[u],[v]] in the NLSW basis, for ALSWs u, v.
NcPolynomial basis_bracket(const Word& u, const Word& v) {
  if (u == v) return {};
  if (lex_compare(u, v) == std::strong_ordering::less) return -basis_bracket(v, u);
  thread_local std::unordered_map<std::pair<Word, Word>, NcPolynomial, WordPairHash> cache;
  auto key = std::make_pair(u, v);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  NcPolynomial out;
  if (u.size() == 1) {
    out = NcPolynomial::monomial(u * v);
  } else {
    const std::size_t k = shirshov_split(u);
    const Word u1 = u.prefix(k);
    const Word u2 = tail(u, k);
    if (lex_compare(u2, v) != std::strong_ordering::greater) {
      out = NcPolynomial::monomial(u * v);
    } else {
      // [[u1 u2] v] = [u1 [u2 v]] + [[u1 v] u2]
      const NcPolynomial one = NcPolynomial::monomial(u1);
      const NcPolynomial two = NcPolynomial::monomial(u2);
      out = bracket_coords(one, basis_bracket(u2, v)) + bracket_coords(basis_bracket(u1, v), two);
    }
  }
  cache.emplace(std::move(key), out);
  return out;
}

const NcPolynomial& basis_expansion(const Word& u) {
  thread_local std::unordered_map<Word, NcPolynomial, WordHash> cache;
  if (auto it = cache.find(u); it != cache.end()) return it->second;
  return cache.emplace(u, lie_expand(bracket_alsw(u))).first->second;
}

}  // namespace

LiePolynomial lie_bracket(const LiePolynomial& f, const LiePolynomial& g) {
  return LiePolynomial(bracket_coords(f.coords_, g.coords_));
}

LiePolynomial to_nlsw_basis(const LieMonomial& m) {
  if (m.is_leaf()) return LiePolynomial::basis(Word{m.letter()});
  return lie_bracket(to_nlsw_basis(m.left()), to_nlsw_basis(m.right()));
}

NcPolynomial lie_expand(const LiePolynomial& f) {
  std::vector<Term> acc;
  for (const Term& t : f.terms()) {
    for (const Term& r : basis_expansion(t.word).terms()) acc.push_back({r.word, t.coeff * r.coeff});
  }
  return NcPolynomial(std::move(acc));
}

std::string to_string(const LiePolynomial& f, const Alphabet& alphabet) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const Term& t : f.terms()) {
    const Rational& c = t.coeff;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const Rational a = abs(c);
    if (a != 1) out += (alphabet.digit_mode() ? "(" + to_string(a) + ")" : to_string(a)) + " ";
    out += to_string(bracket_alsw(t.word), alphabet);
    first = false;
  }
  return out;
}

// ---- special bracketing ----------------------------------------------------

namespace {

struct SpanNode {
  std::size_t start;
  std::size_t len;
  int left = -1;
  int right = -1;
};

int build_spans(const Word& w, std::size_t start, std::size_t len, std::vector<SpanNode>& nodes) {
  const int id = static_cast<int>(nodes.size());
  nodes.push_back({start, len});
  if (len > 1) {
    const std::size_t k = shirshov_split(w.subword(start, len));
    const int l = build_spans(w, start, k, nodes);
    const int r = build_spans(w, start + k, len - k, nodes);
    nodes[id].left = l;
    nodes[id].right = r;
  }
  return id;
}

bool covers(const SpanNode& n, std::size_t lo, std::size_t hi) { return n.start <= lo && hi <= n.start + n.len; }

}  // namespace

LiePolynomial special_bracket(const Word& a, const LiePolynomial& s, const Word& b) {
  if (s.is_zero()) return {};
  const Word& u = s.leading_word();
  const Word w = a * u * b;
  if (!is_alsw(w)) throw std::invalid_argument("special_bracket: a*lead(s)*b is not an ALSW");
  if (a.empty() && b.empty()) return s;

  std::vector<SpanNode> nodes;
  build_spans(w, 0, w.size(), nodes);
  const std::size_t lo = a.size();
  const std::size_t hi = a.size() + u.size();

  // Path from the root down to the smallest subtree covering lead(s); the
  // target is the deepest node on it that starts exactly at |a|.
  std::vector<int> path{0};
  while (true) {
    const SpanNode& n = nodes[path.back()];
    if (n.left < 0) break;
    if (covers(nodes[n.left], lo, hi)) {
      path.push_back(n.left);
    } else if (covers(nodes[n.right], lo, hi)) {
      path.push_back(n.right);
    } else {
      break;
    }
  }
  std::size_t depth = path.size();
  while (depth > 0 && nodes[path[depth - 1]].start != lo) --depth;
  if (depth == 0) throw std::logic_error("special_bracket: no subtree starts at lead(s)");
  const SpanNode& target = nodes[path[depth - 1]];

  LiePolynomial value = s;
  const Word c = w.subword(hi, target.start + target.len - hi);
  for (const Word& ci : alsw_factorization(c)) value = lie_bracket(value, LiePolynomial::basis(ci));

  for (std::size_t i = depth - 1; i-- > 0;) {
    const SpanNode& n = nodes[path[i]];
    const int child = path[i + 1];
    if (child == n.left) {
      const SpanNode& r = nodes[n.right];
      value = lie_bracket(value, LiePolynomial::basis(w.subword(r.start, r.len)));
    } else {
      const SpanNode& l = nodes[n.left];
      value = lie_bracket(LiePolynomial::basis(w.subword(l.start, l.len)), value);
    }
  }
  if (value.is_zero() || value.leading_word() != w || value.leading().coeff != s.leading().coeff) {
    throw std::logic_error("special_bracket: leading word is not a*lead(s)*b");
  }
  return value;
}

// ---- systems and normal forms ----------------------------------------------

LieSystem::LieSystem(std::vector<LiePolynomial> relations, std::size_t alphabet_size)
    : alphabet_size_(alphabet_size) {
  for (LiePolynomial& f : relations) {
    if (f.is_zero()) continue;
    LiePolynomial m = make_monic(f);
    if (std::find(relations_.begin(), relations_.end(), m) != relations_.end()) continue;
    relations_.push_back(std::move(m));
  }
  for (const LiePolynomial& f : relations_) {
    for (const Term& t : f.terms()) {
      for (Letter x : t.word) alphabet_size_ = std::max<std::size_t>(alphabet_size_, x + 1);
    }
  }
  index_ = SubwordIndex(alphabet_size_);
  expansions_.reserve(relations_.size());
  for (std::size_t i = 0; i < relations_.size(); ++i) {
    index_.insert(relations_[i].leading_word(), i);
    expansions_.push_back(lie_expand(relations_[i]));
  }
  index_.prepare();
}

LiePolynomial lie_normal_form(const LiePolynomial& f, const LieSystem& system) {
  if (system.size() == 0 || f.is_zero()) return f;
  std::map<Word, Rational, DegLexGreater> work;
  for (const Term& t : f.terms()) work.emplace(t.word, t.coeff);
  auto it = work.begin();
  while (it != work.end()) {
    if (it->second == 0) {
      it = work.erase(it);
      continue;
    }
    const auto match = system.index().first_match(it->first);
    if (!match) {
      ++it;
      continue;
    }
    const Word head = it->first;
    const LiePolynomial& s = system.relation(match->id);
    const std::size_t p = match->position;
    const LiePolynomial sb =
        special_bracket(head.prefix(p), s, tail(head, p + s.leading_word().size()));
    const Rational factor = it->second / sb.leading().coeff;
    for (const Term& t : sb.terms()) work[t.word] -= factor * t.coeff;
    work.erase(head);
    it = work.upper_bound(head);
  }
  std::vector<Term> out;
  out.reserve(work.size());
  for (auto& [word, c] : work) {
    if (c != 0) out.push_back({word, c});
  }
  return LiePolynomial(std::move(out));
}

std::vector<LieComposition> lie_compositions(const LiePolynomial& f, const LiePolynomial& g, std::size_t f_id,
                                             std::size_t g_id) {
  if (f.is_zero() || g.is_zero() || !f.is_monic() || !g.is_monic()) {
    throw std::invalid_argument("lie_compositions: relations must be monic");
  }
  std::vector<LieComposition> out;
  const Word& fw = f.leading_word();
  const Word& gw = g.leading_word();
  for (std::size_t p : subword_positions(fw, gw)) {
    if (f_id == g_id && fw.size() == gw.size()) continue;
    const LiePolynomial value = f - special_bracket(fw.prefix(p), g, tail(fw, p + gw.size()));
    out.push_back({CompositionKind::Inclusion, f_id, g_id, fw, p, value});
  }
  for (std::size_t k : find_overlaps(fw, gw)) {
    const Word b = tail(gw, k);
    const Word a = fw.prefix(fw.size() - k);
    const LiePolynomial value = special_bracket(Word{}, f, b) - special_bracket(a, g, Word{});
    out.push_back({CompositionKind::Intersection, f_id, g_id, fw * b, a.size(), value});
  }
  return out;
}

namespace {

bool lie_key_less(const LieComposition& x, const LieComposition& y) {
  if (auto c = deglex_compare(x.w, y.w); c != 0) return c < 0;
  if (x.kind != y.kind) return x.kind < y.kind;
  if (x.f_id != y.f_id) return x.f_id < y.f_id;
  if (x.g_id != y.g_id) return x.g_id < y.g_id;
  return x.position < y.position;
}

std::vector<LieComposition> pair_compositions(const LieSystem& system, std::size_t i, std::size_t j,
                                              std::size_t max_deg) {
  std::vector<LieComposition> all = lie_compositions(system.relation(i), system.relation(j), i, j);
  if (max_deg > 0) std::erase_if(all, [&](const LieComposition& c) { return c.w.size() > max_deg; });
  return all;
}

}  // namespace

LieGsbReport lie_is_gsb(const LieSystem& system, std::size_t max_deg, int threads) {
  const std::size_t n = system.size();
  std::vector<std::vector<LieComposition>> failures(n);
  std::vector<std::size_t> checked(n, 0);
  std::string error;
#pragma omp parallel for schedule(dynamic) num_threads(resolve_threads(threads))
  for (std::ptrdiff_t ii = 0; ii < static_cast<std::ptrdiff_t>(n); ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    try {
      for (std::size_t j = 0; j < n; ++j) {
        for (LieComposition& c : pair_compositions(system, i, j, max_deg)) {
          ++checked[i];
          if (!lie_normal_form(c.value, system).is_zero()) failures[i].push_back(std::move(c));
        }
      }
    } catch (const std::exception& e) {
#pragma omp critical(gsb_lie_error)
      if (error.empty()) error = e.what();
    }
  }
  if (!error.empty()) throw std::runtime_error(error);
  LieGsbReport report;
  for (std::size_t i = 0; i < n; ++i) {
    report.checked += checked[i];
    for (LieComposition& c : failures[i]) report.failures.push_back(std::move(c));
  }
  std::sort(report.failures.begin(), report.failures.end(), lie_key_less);
  report.is_gsb = report.failures.empty();
  return report;
}

std::vector<Nlsw> nlsw_enumerate(std::size_t alphabet_size, std::size_t n) {
  std::vector<Nlsw> out;
  if (alphabet_size == 0 || n == 0) return out;
  // Fredricksen-Kessler-Maiorana over raw indices: standard Lyndon words in
  // increasing standard order, i.e. ALSWs from the greatest down.
  const auto k = static_cast<Letter>(alphabet_size);
  std::vector<Letter> w{0};
  while (!w.empty()) {
    if (w.size() == n) out.push_back(Nlsw::from_word(Word(w)));
    const std::size_t m = w.size();
    while (w.size() < n) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() + 1 == k) w.pop_back();
    if (!w.empty()) ++w.back();
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::size_t witt_number(std::size_t k, std::size_t n) {
  if (n == 0) return 0;
  auto mobius = [](std::size_t d) {
    int mu = 1;
    for (std::size_t p = 2; p * p <= d; ++p) {
      if (d % p != 0) continue;
      d /= p;
      if (d % p == 0) return 0;
      mu = -mu;
    }
    return d > 1 ? -mu : mu;
  };
  long long sum = 0;
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    long long power = 1;
    for (std::size_t i = 0; i < n / d; ++i) power *= static_cast<long long>(k);
    sum += mobius(d) * power;
  }
  return static_cast<std::size_t>(sum / static_cast<long long>(n));
}

std::vector<Word> lie_irr_words(const LieSystem& system, std::size_t max_deg, std::size_t cap) {
  if (max_deg > cap) throw std::invalid_argument("lie_irr_words: degree above cap");
  std::vector<Word> out;
  for (std::size_t d = 1; d <= max_deg; ++d) {
    for (const Nlsw& u : nlsw_enumerate(system.alphabet_size(), d)) {
      if (system.size() == 0 || !system.index().matches_any(u.word())) out.push_back(u.word());
    }
  }
  return out;
}

LieCompletionResult lie_complete(const std::vector<LiePolynomial>& relations, std::size_t alphabet_size,
                                 const CompletionBudget& budget) {
  std::vector<LiePolynomial> current;
  LieSystem system(relations, alphabet_size);
  // Inputs are first reduced against each other, largest leading word last.
  {
    std::vector<LiePolynomial> sorted = system.relations();
    std::sort(sorted.begin(), sorted.end(), [](const LiePolynomial& x, const LiePolynomial& y) {
      return deglex_compare(x.leading_word(), y.leading_word()) < 0;
    });
    for (const LiePolynomial& f : sorted) {
      LiePolynomial r = lie_normal_form(f, LieSystem(current, system.alphabet_size()));
      if (!r.is_zero()) current.push_back(make_monic(r));
    }
  }
  system = LieSystem(current, system.alphabet_size());

  LieCompletionResult result;
  auto cmp = [](const LieComposition& x, const LieComposition& y) { return lie_key_less(y, x); };
  std::vector<LieComposition> heap;
  auto schedule = [&](std::size_t id) {
    for (std::size_t j = 0; j <= id; ++j) {
      for (LieComposition& c : lie_compositions(system.relation(id), system.relation(j), id, j)) heap.push_back(c);
      if (j != id) {
        for (LieComposition& c : lie_compositions(system.relation(j), system.relation(id), j, id)) heap.push_back(c);
      }
    }
    std::make_heap(heap.begin(), heap.end(), cmp);
  };
  for (std::size_t i = 0; i < system.size(); ++i) schedule(i);

  bool truncated = false;
  while (!heap.empty()) {
    std::pop_heap(heap.begin(), heap.end(), cmp);
    LieComposition c = std::move(heap.back());
    heap.pop_back();
    if (c.w.size() > budget.max_deg) {
      truncated = true;
      continue;
    }
    if (++result.steps > budget.max_steps) {
      result.status = CompletionStatus::BudgetExhausted;
      result.system = system;
      return result;
    }
    LiePolynomial r = lie_normal_form(c.value, system);
    if (r.is_zero()) continue;
    if (system.size() >= budget.max_relations) {
      result.status = CompletionStatus::BudgetExhausted;
      result.system = system;
      return result;
    }
    current.push_back(make_monic(r));
    system = LieSystem(current, system.alphabet_size());
    schedule(system.size() - 1);
  }
  result.system = system;
  if (truncated) {
    result.status = CompletionStatus::TruncatedAtDegree;
    result.truncated_degree = budget.max_deg;
  }
  return result;
}

}  // namespace gsb
