#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "largesub/catalog.hpp"
#include "largesub/corpus.hpp"
#include "largesub/group_spec.hpp"
#include "largesub/radicals.hpp"
#include "largesub/report.hpp"

using namespace largesub;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitInput = 2;

struct Options {
  std::string target;
  std::string theorem;
  std::string class_key;
  std::string pi;
  std::size_t c = 0;
  std::size_t d = 0;
  std::string format = "text";
  unsigned threads = 1;
  bool all = false;
};

bool json_mode(const Options& o) { return o.format == "json"; }

// A target naming an existing file is a corpus; anything else is a spec.
std::vector<FiniteGroup> load_target(const std::string& target) {
  if (std::filesystem::is_regular_file(target)) return corpus_groups(load_corpus(target));
  return {parse_group_spec(target)};
}

// Runs fn over every index on `threads` workers; results keep input order.
template <typename T>
std::vector<T> parallel_map(std::size_t n, unsigned threads,
                            const std::function<T(std::size_t)>& fn) {
  std::vector<T> out(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) out[i] = fn(i);
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return out;
}

// -- verify -----------------------------------------------------------------

enum class Verdict { Pass, Skip, Counterexample, Error };

struct VerifyResult {
  Verdict verdict = Verdict::Skip;
  std::string output;
};

struct Selector {
  std::string name;
  std::string arg;
};

Selector parse_selector(const Options& o) {
  Selector s;
  const auto colon = o.theorem.find(':');
  s.name = o.theorem.substr(0, colon);
  if (colon != std::string::npos) s.arg = o.theorem.substr(colon + 1);
  static const std::vector<std::string> known{"A", "C", "D", "E", "F", "G", "Gd", "H", "B"};
  if (std::find(known.begin(), known.end(), s.name) == known.end())
    throw Error(ErrorKind::ParseError, "unknown theorem selector '" + o.theorem +
                                           "' (expected A, C, D, E, F, G, Gd, H or B)");
  if (!s.arg.empty()) return s;
  if (s.name == "A" || s.name == "C") s.arg = o.class_key;
  if (s.name == "F") s.arg = o.pi;
  if (s.name == "G" && o.c) s.arg = std::to_string(o.c);
  if (s.name == "Gd" && o.d) s.arg = std::to_string(o.d);
  if (s.arg.empty() && s.name != "D" && s.name != "E" && s.name != "H" && s.name != "B")
    throw Error(ErrorKind::ParseError, "selector " + s.name + " needs an argument");
  return s;
}

std::size_t parse_bound(const std::string& text) {
  try {
    std::size_t used = 0;
    const auto v = std::stoul(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorKind::ParseError, "bad bound '" + text + "'");
}

std::string skip_output(const Options& o, const Selector& s, const FiniteGroup& g,
                        const Error& e) {
  if (json_mode(o)) {
    Json j;
    j["record"] = "verification";
    j["theorem"] = s.name;
    j["group"] = g.name();
    j["order"] = g.order();
    j["outcome"] = "hypotheses_failed";
    j["reason"] = e.what();
    return j.dump() + "\n";
  }
  return s.name + " on " + g.name() + " (order " + std::to_string(g.order()) +
         "): skip (" + e.what() + ")\n";
}

VerifyResult verify_one(const Options& o, const Selector& s, const FiniteGroup& g) {
  VerifyResult r;
  try {
    if (s.name == "B") {
      const Subgroup z = center(g);
      if (z.is_trivial())
        throw Error(ErrorKind::HypothesisFailed, "centre of " + g.name() + " is trivial");
      const auto w = prop_b_witness(g, z);
      r.verdict = w.all_passed() ? Verdict::Pass : Verdict::Counterexample;
      r.output = json_mode(o) ? to_json(w).dump() + "\n" : render(w);
      return r;
    }
    VerificationReport report;
    if (s.name == "A") report = verify_theorem_A(g, builtin_class(s.arg));
    else if (s.name == "C") report = verify_theorem_C(g, builtin_class(s.arg));
    else if (s.name == "D") report = verify_corollary(g, Corollary::D);
    else if (s.name == "E") report = verify_corollary(g, Corollary::E);
    else if (s.name == "F") report = verify_corollary(g, Corollary::F, parse_prime_set(s.arg));
    else if (s.name == "G") report = verify_prop_G(g, parse_bound(s.arg));
    else if (s.name == "Gd") report = verify_derived_length_variant(g, parse_bound(s.arg));
    else report = verify_prop_H(g);
    switch (report.outcome()) {
      case Outcome::Passed: r.verdict = Verdict::Pass; break;
      case Outcome::HypothesesFailed: r.verdict = Verdict::Skip; break;
      case Outcome::Counterexample: r.verdict = Verdict::Counterexample; break;
    }
    r.output = json_mode(o) ? to_json(g, report).dump() + "\n" : render(report);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::HypothesisFailed || e.kind() == ErrorKind::NotSoluble) {
      r.verdict = Verdict::Skip;
      r.output = skip_output(o, s, g, e);
    } else {
      r.verdict = Verdict::Error;
      r.output = json_mode(o) ? Json{{"record", "error"}, {"group", g.name()}, {"error", e.what()}}
                                        .dump() + "\n"
                              : g.name() + ": error: " + e.what() + "\n";
    }
  }
  return r;
}

int cmd_verify(const Options& o) {
  const Selector sel = parse_selector(o);
  if (sel.name == "A" || sel.name == "C") builtin_class(sel.arg);  // fail fast on bad keys
  const auto groups = load_target(o.target);
  const auto results = parallel_map<VerifyResult>(
      groups.size(), o.threads, [&](std::size_t i) { return verify_one(o, sel, groups[i]); });
  std::size_t pass = 0, skip = 0, bad = 0, err = 0;
  for (const auto& r : results) {
    std::cout << r.output;
    switch (r.verdict) {
      case Verdict::Pass: ++pass; break;
      case Verdict::Skip: ++skip; break;
      case Verdict::Counterexample: ++bad; break;
      case Verdict::Error: ++err; break;
    }
  }
  if (json_mode(o)) {
    std::cout << Json{{"record", "summary"}, {"theorem", o.theorem}, {"groups", groups.size()},
                      {"passed", pass}, {"skipped", skip}, {"counterexamples", bad},
                      {"errors", err}}
                     .dump()
              << "\n";
  } else {
    std::cout << "summary: " << groups.size() << " groups, " << pass << " passed, " << skip
              << " skipped, " << bad << " counterexamples, " << err << " errors\n";
  }
  if (bad) return kExitCounterexample;
  return err ? kExitInput : kExitOk;
}

// -- other verbs ----------------------------------------------------------------

int cmd_info(const Options& o) {
  const auto groups = load_target(o.target);
  const auto out = parallel_map<std::string>(groups.size(), o.threads, [&](std::size_t i) {
    const Json info = group_info(groups[i]);
    return json_mode(o) ? info.dump() + "\n" : render_info(info);
  });
  for (const auto& s : out) std::cout << s;
  return kExitOk;
}

int cmd_scan(const Options& o) {
  const auto groups = corpus_groups(load_corpus(o.target));
  const auto entries = scan_open_question(groups, o.threads);
  struct Tally {
    std::size_t groups = 0, findings = 0, skipped = 0;
  };
  std::map<std::size_t, Tally> per_order;
  std::size_t findings = 0;
  for (const auto& e : entries) {
    auto& t = per_order[e.order];
    ++t.groups;
    if (e.status == ScanStatus::Finding) ++t.findings, ++findings;
    if (e.status == ScanStatus::Skipped) ++t.skipped;
    if (e.status != ScanStatus::Finding && !o.all) continue;
    std::cout << (json_mode(o) ? to_json(e).dump() + "\n" : render(e));
  }
  for (const auto& [order, t] : per_order) {
    if (json_mode(o))
      std::cout << Json{{"record", "order_summary"}, {"order", order}, {"groups", t.groups},
                        {"findings", t.findings}, {"skipped", t.skipped}}
                       .dump()
                << "\n";
    else
      std::cout << "order " << order << ": " << t.groups << " groups, " << t.findings
                << " findings, " << t.skipped << " skipped\n";
  }
  if (json_mode(o))
    std::cout << Json{{"record", "summary"}, {"groups", entries.size()}, {"findings", findings}}.dump()
              << "\n";
  else
    std::cout << "total: " << entries.size() << " groups, " << findings << " findings\n";
  return kExitOk;
}

int cmd_construct(const Options& o) {
  std::cout << to_corpus_record(parse_group_spec(o.target)) << "\n";
  return kExitOk;
}

int cmd_corpus_check(const Options& o) {
  const auto records = load_corpus(o.target);
  std::size_t failed = 0;
  for (const auto& r : records) {
    if (!r.ok()) ++failed;
    if (json_mode(o)) {
      Json j;
      j["record"] = "corpus_check";
      j["line"] = r.line;
      j["name"] = r.name;
      j["ok"] = r.ok();
      if (r.ok()) {
        j["order"] = r.group->order();
      } else {
        j["error_kind"] = std::string(to_string(r.error->kind()));
        j["error"] = r.error->what();
        j["witness"] = r.error->witness() ? Json(*r.error->witness()) : Json();
      }
      std::cout << j.dump() << "\n";
    } else if (r.ok()) {
      std::cout << "line " << r.line << " " << r.name << ": ok (order " << r.group->order()
                << ")\n";
    } else {
      std::cout << "line " << r.line << " " << r.name << ": FAIL " << r.error->what();
      if (const auto& w = r.error->witness())
        std::cout << " [witness (" << (*w)[0] << ", " << (*w)[1] << ", " << (*w)[2] << ")]";
      std::cout << "\n";
    }
  }
  if (json_mode(o))
    std::cout << Json{{"record", "summary"}, {"records", records.size()}, {"failed", failed}}.dump()
              << "\n";
  else
    std::cout << "summary: " << records.size() << " records, " << failed << " failed\n";
  return failed ? kExitInput : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Large normal subgroups of finite groups"};
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  std::optional<std::size_t> order_cap;
  app.add_option("--order-cap", order_cap,
                 "Largest group order accepted (default 2000, or LARGESUB_ORDER_CAP)");
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--threads", o.threads, "Worker threads for corpus targets")
      ->check(CLI::Range(1u, 256u));

  auto* info = app.add_subcommand("info", "Structure report for a group spec or corpus");
  info->add_option("target", o.target, "Group spec or corpus path")->required();

  auto* verify = app.add_subcommand("verify", "Run a theorem verifier");
  verify->add_option("target", o.target, "Group spec or corpus path")->required();
  verify->add_option("--theorem,-t", o.theorem,
                     "Selector: A:class, C:class, D, E, F:pi, G:c, Gd:d, H, B")
      ->required();
  verify->add_option("--class", o.class_key, "Class key for A and C");
  verify->add_option("--pi", o.pi, "Prime set for F, e.g. 2,3");
  verify->add_option("--c", o.c, "Nilpotency class bound for G");
  verify->add_option("--d", o.d, "Derived length bound for Gd");

  auto* scan = app.add_subcommand("scan", "Search a corpus for soluble groups outside X0 "
                                          "whose maximal abelian normal subgroups are large");
  scan->add_option("corpus", o.target, "Corpus path")->required()->check(CLI::ExistingFile);
  scan->add_flag("--all", o.all, "Print every entry, not only findings");

  auto* construct = app.add_subcommand("construct", "Print a group spec as a corpus record");
  construct->add_option("spec", o.target, "Group spec")->required();

  auto* check = app.add_subcommand("corpus-check", "Validate every corpus record");
  check->add_option("corpus", o.target, "Corpus path")->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (order_cap) {
      set_order_cap(*order_cap);
    } else if (const char* env = std::getenv("LARGESUB_ORDER_CAP")) {
      set_order_cap(parse_bound(env));
    }
    if (*info) return cmd_info(o);
    if (*verify) return cmd_verify(o);
    if (*scan) return cmd_scan(o);
    if (*construct) return cmd_construct(o);
    if (*check) return cmd_corpus_check(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
