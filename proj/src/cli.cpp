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

#include "gsb/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "gsb/json_io.hpp"
#include "gsb/parallel.hpp"
#include "gsb/random.hpp"

namespace gsb::cli {

namespace {

// Reported to the user with exit code 3.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int threads = 0;
  bool json = false;
  bool time = false;
  std::string file;
  std::size_t max_deg = 0;
  std::size_t max_relations = CompletionBudget{}.max_relations;
  std::size_t max_steps = CompletionBudget{}.max_steps;
  std::string out_file;
  std::string expr;
  bool count = false;
  bool complete_first = false;
  std::string name;
  std::vector<std::string> args;
  bool completed = false;
  bool group = false;
  bool defining = false;
  std::size_t bound = 6;
  std::size_t trials = 200;
  std::uint64_t seed = 1;
  std::size_t max_len = 4;
};

Presentation load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_presentation(buf.str());
  } catch (const ParseError& e) {
    throw InputError(path + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": " +
                     e.message());
  }
}

void write_text(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out_file.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out_file, std::ios::binary);
  if (!f) throw InputError("cannot write '" + o.out_file + "'");
  f << text;
}

std::size_t parse_count(const std::string& text, const char* what) {
  try {
    std::size_t used = 0;
    const unsigned long v = std::stoul(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw InputError(std::string("expected a number for ") + what + ", got '" + text + "'");
  }
}

// Compares an expect key against the computed value; prints a line.
bool check_expect(const Presentation& p, const std::string& key, const std::string& actual, std::ostream& out,
                  bool json) {
  const std::string* want = find_expect(p, key);
  if (!want) return true;
  const bool ok = *want == actual;
  if (!json) out << "expect " << key << "=" << *want << ": " << (ok ? "ok" : "MISMATCH (got " + actual + ")") << "\n";
  return ok;
}

// Total number of irreducible words if finite (some degree has none), else nullopt.
std::optional<std::size_t> irr_total(const RewriteSystem& s, std::size_t cap = 40) {
  const std::vector<std::size_t> counts = irr_counts(s, cap);
  std::size_t total = 0;
  for (std::size_t c : counts) {
    if (c == 0) return total;
    total += c;
  }
  return std::nullopt;
}

// ---- commands ------------------------------------------------------------------

int cmd_check(const Options& o, std::ostream& out) {
  const Presentation p = load(o.file);
  bool gsb;
  std::size_t relations, failures;
  if (p.kind == PresentationKind::Lie) {
    const LieSystem s = lie_system(p);
    const LieGsbReport r = lie_is_gsb(s, o.max_deg, o.threads);
    gsb = r.is_gsb;
    relations = s.size();
    failures = r.failures.size();
    const Json j = to_json(r, s, p.alphabet);
    if (o.json) {
      out << j.dump(2) << "\n";
    } else {
      out << "GSB: " << (gsb ? "yes" : "no") << " (" << relations << " relations, " << failures << " failures)\n";
      if (!gsb) out << j["failures"].dump(2) << "\n";
    }
  } else {
    const RewriteSystem s = rewrite_system(p);
    const GsbReport r = is_gsb(s, o.max_deg, o.threads);
    gsb = r.is_gsb;
    relations = s.size();
    failures = r.failures.size();
    const Json j = to_json(r, s, p.alphabet);
    if (o.json) {
      out << j.dump(2) << "\n";
    } else {
      out << "GSB: " << (gsb ? "yes" : "no") << " (" << relations << " relations, " << failures << " failures)\n";
      if (!gsb) out << j["failures"].dump(2) << "\n";
    }
  }
  bool expect_ok = check_expect(p, "is_gsb", gsb ? "true" : "false", out, o.json);
  expect_ok = check_expect(p, "relations", std::to_string(relations), out, o.json) && expect_ok;
  return gsb && expect_ok ? kOk : kPropertyFalse;
}

int cmd_complete(const Options& o, std::ostream& out) {
  Presentation p = load(o.file);
  CompletionBudget budget;
  if (o.max_deg) budget.max_deg = o.max_deg;
  budget.max_relations = o.max_relations;
  budget.max_steps = o.max_steps;

  std::string status;
  bool complete_ok;
  Json j;
  Presentation done = p;
  done.expect.clear();
  std::optional<RewriteSystem> reduced;
  if (p.kind == PresentationKind::Lie) {
    const LieCompletionResult r = lie_complete(p.lie_relations, p.alphabet.size(), budget);
    status = to_string(r.status, r.truncated_degree);
    complete_ok = r.status == CompletionStatus::Complete;
    done.lie_relations = r.system.relations();
    j = to_json(r, p.alphabet);
  } else {
    const CompletionResult r = complete(associative_relations(p), p.alphabet.size(), budget, o.threads);
    status = to_string(r.status, r.truncated_degree);
    complete_ok = r.status == CompletionStatus::Complete;
    reduced = interreduce(r.system);
    done.relations = reduced->relations();
    if (p.kind == PresentationKind::Group) {
      // Inverse relations are implied by the kind; keep the file minimal.
      Presentation bare = p;
      bare.relations.clear();
      const RewriteSystem implied(associative_relations(bare), p.alphabet.size());
      std::erase_if(done.relations, [&](const NcPolynomial& f) {
        return std::ranges::find(implied.relations(), f) != implied.relations().end();
      });
    }
    j = to_json(r, p.alphabet, true);
    Json inter = Json::array();
    for (const NcPolynomial& f : reduced->relations()) inter.push_back(to_json(f, p.alphabet));
    j["interreduced"] = std::move(inter);
  }
  if (complete_ok) done.expect.emplace_back("is_gsb", "true");
  const std::size_t count = p.kind == PresentationKind::Lie ? done.lie_relations.size() : reduced->size();

  if (o.json) {
    out << j.dump(2) << "\n";
  } else {
    out << "status: " << status << "\n";
    out << "relations: " << count << "\n";
    if (p.kind == PresentationKind::Lie) {
      for (const LiePolynomial& f : done.lie_relations) out << "  " << to_string(f, p.alphabet) << "\n";
    } else {
      for (const NcPolynomial& f : reduced->relations()) out << "  " << to_string(f, p.alphabet) << "\n";
    }
  }
  if (!o.out_file.empty()) write_text(o, emit_presentation(done), out);

  bool expect_ok = check_expect(p, "completed_relations", std::to_string(count), out, o.json);
  if (reduced && find_expect(p, "irr_total")) {
    const auto total = irr_total(*reduced);
    expect_ok = check_expect(p, "irr_total", total ? std::to_string(*total) : "infinite", out, o.json) && expect_ok;
  }
  if (!complete_ok) return kBudget;
  return expect_ok ? kOk : kPropertyFalse;
}

RewriteSystem nf_system(const Presentation& p, const Options& o, bool& complete_ok) {
  complete_ok = true;
  if (!o.complete_first) return rewrite_system(p);
  CompletionBudget budget;
  if (o.max_deg) budget.max_deg = o.max_deg;
  const CompletionResult r = complete(associative_relations(p), p.alphabet.size(), budget, o.threads);
  complete_ok = r.status == CompletionStatus::Complete;
  return interreduce(r.system);
}

int cmd_nf(const Options& o, std::ostream& out, std::ostream& err) {
  const Presentation p = load(o.file);
  auto parse_error = [&](const ParseError& e) {
    return InputError("expression, column " + std::to_string(e.column()) + ": " + e.message());
  };
  if (p.kind == PresentationKind::Lie) {
    LiePolynomial f;
    try {
      f = parse_lie_polynomial(o.expr, p.alphabet);
    } catch (const ParseError& e) {
      throw parse_error(e);
    }
    LieSystem s = lie_system(p);
    bool complete_ok = true;
    if (o.complete_first) {
      CompletionBudget budget;
      if (o.max_deg) budget.max_deg = o.max_deg;
      LieCompletionResult r = lie_complete(p.lie_relations, p.alphabet.size(), budget);
      complete_ok = r.status == CompletionStatus::Complete;
      s = r.system;
    }
    const LiePolynomial nf = lie_normal_form(f, s);
    if (o.json) {
      out << Json{{"input", to_json(f, p.alphabet)}, {"normal_form", to_json(nf, p.alphabet)}}.dump(2) << "\n";
    } else {
      out << to_string(nf, p.alphabet) << "\n";
    }
    if (!complete_ok) err << "warning: completion did not finish; normal form is relative to a partial basis\n";
    return complete_ok ? kOk : kBudget;
  }
  NcPolynomial f;
  try {
    f = parse_polynomial(o.expr, p.alphabet);
  } catch (const ParseError& e) {
    throw parse_error(e);
  }
  bool complete_ok = true;
  const RewriteSystem s = nf_system(p, o, complete_ok);
  const NormalForm nf = normal_form(f, s);
  if (o.json) {
    out << Json{{"input", to_json(f, p.alphabet)},
                {"normal_form", to_json(nf.value, p.alphabet)},
                {"trace", to_json(nf.trace, p.alphabet)}}
                   .dump(2)
        << "\n";
  } else {
    out << to_string(nf.value, p.alphabet) << "\n";
  }
  if (!complete_ok) err << "warning: completion did not finish; normal form is relative to a partial basis\n";
  return complete_ok ? kOk : kBudget;
}

int cmd_irr(const Options& o, std::ostream& out) {
  const Presentation p = load(o.file);
  if (p.kind == PresentationKind::Lie) {
    const LieSystem s = lie_system(p);
    if (o.max_deg > kDefaultIrrDegreeCap && !o.count) {
      throw InputError("refusing to list beyond degree " + std::to_string(kDefaultIrrDegreeCap) + "; use --count");
    }
    const std::vector<Word> words = lie_irr_words(s, o.max_deg, o.count ? o.max_deg : kDefaultIrrDegreeCap);
    if (o.count) {
      std::vector<std::size_t> counts(o.max_deg + 1, 0);
      for (const Word& w : words) ++counts[w.size()];
      if (o.json) {
        out << Json(counts).dump() << "\n";
      } else {
        for (std::size_t d = 1; d <= o.max_deg; ++d) out << "degree " << d << ": " << counts[d] << "\n";
      }
      return kOk;
    }
    Json arr = Json::array();
    for (const Word& w : words) {
      const std::string t = to_string(shirshov_bracket(w), p.alphabet);
      if (o.json) {
        arr.push_back(t);
      } else {
        out << t << "\n";
      }
    }
    if (o.json) out << arr.dump(2) << "\n";
    return kOk;
  }
  const RewriteSystem s = rewrite_system(p);
  if (o.count) {
    const std::vector<std::size_t> counts = irr_counts(s, o.max_deg);
    if (o.json) {
      out << Json(counts).dump() << "\n";
    } else {
      for (std::size_t d = 0; d < counts.size(); ++d) out << "degree " << d << ": " << counts[d] << "\n";
    }
    return kOk;
  }
  if (o.max_deg > kDefaultIrrDegreeCap) {
    throw InputError("refusing to list beyond degree " + std::to_string(kDefaultIrrDegreeCap) + "; use --count");
  }
  const std::vector<Word> words = irr_words(s, o.max_deg);
  if (o.json) {
    Json arr = Json::array();
    for (const Word& w : words) arr.push_back(to_json(w, p.alphabet));
    out << arr.dump(2) << "\n";
  } else {
    for (const Word& w : words) out << p.alphabet.render(w) << "\n";
  }
  return kOk;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',' || c == ' ') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

Presentation pc_preset(const Options& o, PcKind kind) {
  if (o.args.size() != 2) throw InputError("usage: preset pc-* GENERATORS EDGES (e.g. x,y,z x-y,y-z)");
  const std::vector<std::string> names = split_list(o.args[0]);
  if (names.empty()) throw InputError("no generators");
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const std::string& e : split_list(o.args[1])) {
    const auto dash = e.find('-');
    if (dash == std::string::npos) throw InputError("edge '" + e + "' is not of the form a-b");
    auto index = [&](const std::string& n) {
      const auto it = std::find(names.begin(), names.end(), n);
      if (it == names.end()) throw InputError("unknown generator '" + n + "' in edge '" + e + "'");
      return static_cast<std::size_t>(it - names.begin());
    };
    edges.emplace_back(index(e.substr(0, dash)), index(e.substr(dash + 1)));
  }
  try {
    const CommutationGraph graph(names.size(), edges);
    return o.defining ? pc_defining(names, graph, kind) : pc_family(names, graph, kind, o.bound);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

int cmd_preset(const Options& o, std::ostream& out) {
  auto arg = [&](std::size_t i, const char* what) {
    if (i >= o.args.size()) throw InputError(std::string("missing argument ") + what + " for preset " + o.name);
    return parse_count(o.args[i], what);
  };
  Presentation p;
  int code = kOk;
  try {
    if (o.name == "sym") {
      p = symmetric_group(arg(0, "N"));
    } else if (o.name == "plactic-std") {
      p = plactic_standard(arg(0, "N"));
      if (o.completed) {
        CompletionBudget budget;
        if (o.max_deg) budget.max_deg = o.max_deg;
        const CompletionResult r = complete(p.relations, p.alphabet.size(), budget, o.threads);
        p.relations = interreduce(r.system).relations();
        p.expect.clear();
        if (r.status == CompletionStatus::Complete) {
          p.expect.emplace_back("is_gsb", "true");
          p.expect.emplace_back("relations", std::to_string(p.relations.size()));
        } else {
          code = kBudget;
        }
      }
    } else if (o.name == "plactic-rows") {
      p = plactic_rows(arg(0, "N"), arg(1, "L"));
    } else if (o.name == "braid-at") {
      p = o.group ? adyan_thurston_group(arg(0, "N")) : adyan_thurston_pos(arg(0, "N"));
    } else if (o.name == "pc-assoc") {
      p = pc_preset(o, PcKind::Assoc);
    } else if (o.name == "pc-lie") {
      p = pc_preset(o, PcKind::Lie);
    } else if (o.name == "pc-group") {
      p = pc_preset(o, PcKind::Group);
    } else {
      throw InputError("unknown preset '" + o.name +
                       "' (sym, plactic-std, plactic-rows, braid-at, pc-assoc, pc-lie, pc-group)");
    }
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  write_text(o, emit_presentation(p), out);
  return code;
}

int cmd_prop(const Options& o, std::ostream& out) {
  auto arg = [&](std::size_t i, const char* what, std::size_t fallback) {
    return i < o.args.size() ? parse_count(o.args[i], what) : fallback;
  };
  if (o.name == "row-assoc") {
    const std::size_t n = arg(0, "N", 4);
    const RowAssocReport r = row_associativity(n, o.trials, o.max_len, o.seed);
    out << "row-assoc n=" << n << ": " << r.agreed << "/" << r.trials << " agree, " << r.tableau_agreed << "/"
        << r.trials << " match the tableau\n";
    for (const std::string& f : r.failures) out << "  " << f << "\n";
    return r.passed() ? kOk : kPropertyFalse;
  }
  if (o.name == "schensted") {
    const std::size_t n = arg(0, "N", 3);
    const std::size_t len = arg(1, "L", 6);
    const Presentation p = plactic_standard(n);
    const CompletionResult c = complete(p.relations, p.alphabet.size(), {}, o.threads);
    if (c.status != CompletionStatus::Complete) throw InputError("plactic completion did not finish for n=" + std::to_string(n));
    const SchenstedReport r = schensted_equivalence(n, len, interreduce(c.system));
    out << "schensted n=" << n << " len<=" << len << ": words=" << r.words << " nf=reading=" << r.literal_matches
        << " nf(w)=nf(reading)=" << r.reading_consistent << " P(nf)=P=" << r.tableau_preserved
        << " tableaux=" << r.tableaux << " normal_forms=" << r.normal_forms << "\n";
    return r.equivalent() ? kOk : kPropertyFalse;
  }
  if (o.name == "witt") {
    const std::size_t k = arg(0, "K", 2);
    const std::size_t n = arg(1, "N", 6);
    bool ok = true;
    for (std::size_t d = 1; d <= n; ++d) {
      const std::size_t got = nlsw_enumerate(k, d).size();
      const std::size_t want = witt_number(k, d);
      ok = ok && got == want;
      out << "degree " << d << ": " << got << " (necklace " << want << ")\n";
    }
    return ok ? kOk : kPropertyFalse;
  }
  if (o.name == "lie-expand") {
    const std::size_t k = arg(0, "K", 3);
    std::mt19937_64 rng(o.seed);
    std::uniform_int_distribution<std::size_t> deg(1, o.max_len);
    std::size_t ok = 0;
    for (std::size_t t = 0; t < o.trials; ++t) {
      const LieMonomial m = random_lie_monomial(rng, k, deg(rng));
      ok += lie_expand(to_nlsw_basis(m)) == lie_expand(m);
    }
    out << "lie-expand: " << ok << "/" << o.trials << " bracketings agree\n";
    return ok == o.trials ? kOk : kPropertyFalse;
  }
  if (o.name == "rows-cert") {
    const RowsCertificate c = plactic_rows_certificate(arg(0, "N", 3), arg(1, "L", 3), o.threads);
    out << "rows-cert: " << c.relations << " relations, " << c.checked << " compositions, " << c.out_of_bounds
        << " beyond the length bound, " << c.genuine << " genuine failures\n";
    return c.passed() ? kOk : kPropertyFalse;
  }
  throw InputError("unknown property '" + o.name + "' (row-assoc, schensted, witt, lie-expand, rows-cert)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Groebner-Shirshov bases: verification and completion for presented algebras", "gsb"};
  app.require_subcommand(1, 1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--threads", o.threads, "Worker threads (default: GSB_THREADS or all cores)")
        ->check(CLI::NonNegativeNumber);
    sub->add_flag("--json", o.json, "Machine-readable output");
    sub->add_flag("--time", o.time, "Print wall time to stderr");
  };

  CLI::App* check = app.add_subcommand("check", "Verify that the relations form a GSB");
  check->add_option("file", o.file, "Presentation file")->required();
  check->add_option("--max-deg", o.max_deg, "Only compositions with |w| <= D (0 = all)");
  common(check);

  CLI::App* comp = app.add_subcommand("complete", "Run Shirshov completion");
  comp->add_option("file", o.file, "Presentation file")->required();
  comp->add_option("--max-deg", o.max_deg, "Ambiguity degree bound");
  comp->add_option("--max-relations", o.max_relations, "Relation budget");
  comp->add_option("--max-steps", o.max_steps, "Reduction step budget");
  comp->add_option("--out", o.out_file, "Write the completed presentation here");
  common(comp);

  CLI::App* nf = app.add_subcommand("nf", "Normal form of an expression");
  nf->add_option("file", o.file, "Presentation file")->required();
  nf->add_option("expr", o.expr, "Word or polynomial")->required();
  nf->add_flag("--complete", o.complete_first, "Complete the relations first");
  nf->add_option("--max-deg", o.max_deg, "Degree bound for --complete");
  common(nf);

  CLI::App* irr = app.add_subcommand("irr", "Irreducible words up to a degree");
  irr->add_option("file", o.file, "Presentation file")->required();
  irr->add_option("--max-deg", o.max_deg, "Largest degree")->required();
  irr->add_flag("--count", o.count, "Counts per degree instead of words");
  common(irr);

  CLI::App* preset = app.add_subcommand("preset", "Write a catalog presentation");
  preset->add_option("name", o.name, "sym | plactic-std | plactic-rows | braid-at | pc-assoc | pc-lie | pc-group")
      ->required();
  preset->add_option("args", o.args, "Preset arguments");
  preset->add_option("--out", o.out_file, "Output file (default stdout)");
  preset->add_flag("--completed", o.completed, "plactic-std: write the completed basis");
  preset->add_option("--max-deg", o.max_deg, "plactic-std --completed: degree bound");
  preset->add_flag("--group", o.group, "braid-at: group version");
  preset->add_option("--bound", o.bound, "pc-*: degree bound of the GSB family");
  preset->add_flag("--defining", o.defining, "pc-*: defining relations only");
  common(preset);

  CLI::App* prop = app.add_subcommand("prop", "Randomized and exhaustive property checks");
  prop->add_option("name", o.name, "row-assoc | schensted | witt | lie-expand | rows-cert")->required();
  prop->add_option("args", o.args, "Property arguments");
  prop->add_option("--trials", o.trials, "Number of random trials");
  prop->add_option("--seed", o.seed, "Random seed");
  prop->add_option("--max-len", o.max_len, "Row length / bracket degree bound");
  common(prop);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  const auto start = std::chrono::steady_clock::now();
  int code = kOk;
  try {
    if (o.threads <= 0) o.threads = default_threads();
    if (check->parsed()) {
      code = cmd_check(o, out);
    } else if (comp->parsed()) {
      code = cmd_complete(o, out);
    } else if (nf->parsed()) {
      code = cmd_nf(o, out, err);
    } else if (irr->parsed()) {
      code = cmd_irr(o, out);
    } else if (preset->parsed()) {
      code = cmd_preset(o, out);
    } else if (prop->parsed()) {
      code = cmd_prop(o, out);
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  if (o.time) {
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
    err << "time: " << dt.count() << " s\n";
  }
  return code;
}

}  // namespace gsb::cli
