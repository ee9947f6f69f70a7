// Copyright 2026 The degseq Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Exit codes: 0 = affirmative or constructed,
// 1 = checked and negative, 2 = usage or internal error.

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "degseq/battery.hpp"
#include "degseq/graphic.hpp"
#include "degseq/hfactor.hpp"
#include "degseq/io.hpp"
#include "degseq/mplus.hpp"
#include "degseq/packing.hpp"
#include "degseq/preorder.hpp"
#include "degseq/switches.hpp"

namespace {

using namespace degseq;
using nlohmann::json;

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kError = 2;

struct Options {
  bool json = false;
  std::uint64_t seed = kDefaultSeed;
};

// Raised when a constructed object fails its re-verification before output.
struct AuditFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void audit(const LabeledGraph& g, const DegreeSequence& seq, std::span<const Edge> required,
           const char* what) {
  if (!has_degrees(g, seq.entries())) throw AuditFailure(std::string(what) + ": degree audit failed");
  if (!contains_all(g, required)) throw AuditFailure(std::string(what) + ": containment audit failed");
}

std::string summary(const CheckReport& r) {
  if (r.verdict) return "passes";
  std::vector<std::string> reasons;
  if (!r.parity_ok) reasons.push_back("degree sum is odd");
  if (!r.structural_ok)
    reasons.push_back(r.family == InequalityFamily::kDoubleStar
                          ? "h+1 = " + std::to_string(r.h + 1) + " does not divide n"
                          : "n is odd");
  if (r.first_fail_k) {
    const CheckRow& row = r.row(*r.first_fail_k);
    reasons.push_back("fails at k=" + std::to_string(row.k) + ": " + std::to_string(row.lhs) + " > " +
                      std::to_string(row.rhs));
  }
  std::string out;
  for (const auto& s : reasons) out += (out.empty() ? "" : "; ") + s;
  return out;
}

int emit_check(const CheckReport& r, const Options& opt) {
  if (opt.json) {
    std::cout << to_json(r).dump(2) << '\n';
  } else {
    std::cout << to_string(r.family) << " check of " << to_string(DegreeSequence(r.sequence)) << ": "
              << summary(r) << '\n';
    for (const CheckRow& row : r.rows)
      std::cout << "  k=" << row.k << " lhs=" << row.lhs << " rhs=" << row.rhs << " slack=" << row.slack()
                << '\n';
  }
  return r.verdict ? kYes : kNo;
}

int emit_graph(const LabeledGraph& g, const Options& opt, json extra = json::object()) {
  if (opt.json) {
    extra["graph"] = to_json(g);
    std::cout << extra.dump(2) << '\n';
  } else {
    std::cout << format_edges_inline(g) << '\n';
  }
  return kYes;
}

int cmd_check_pm(const DegreeSequence& seq, const Options& opt) {
  const bool ok = lovasz_pm_check(seq);
  if (opt.json) {
    std::cout << json{{"sequence", std::vector<int>(seq.entries().begin(), seq.entries().end())},
                      {"perfect_matching", ok}}
                     .dump(2)
              << '\n';
    return ok ? kYes : kNo;
  }
  std::cout << "perfect matching realizable for " << to_string(seq) << ": " << (ok ? "yes" : "no");
  if (!ok) {
    std::vector<int> reduced(seq.entries().begin(), seq.entries().end());
    for (int& d : reduced) --d;
    if (seq.n() % 2 != 0)
      std::cout << " (n is odd)";
    else if (!eg_check(seq).verdict)
      std::cout << " (sequence is not graphic)";
    else
      std::cout << " (d - 1 is not graphic: " << summary(eg_check(reduced)) << ")";
  }
  std::cout << '\n';
  return ok ? kYes : kNo;
}

int cmd_realize_mplus(const DegreeSequence& seq, const Options& opt) {
  const CheckReport r = star_check(seq);
  if (!r.verdict) {
    std::cout << "cannot realize M+: " << summary(r) << '\n';
    return kNo;
  }
  MplusTrace trace;
  const LabeledGraph g = realize_mplus(seq, &trace);
  audit(g, seq, canonical_matching(seq.n(), Canonical::kPlus).edges(), "realize-mplus");
  return emit_graph(g, opt, {{"reductions", trace.reductions}, {"exchanges", trace.exchanges}});
}

int cmd_realize(const std::string& matching_text, const DegreeSequence& seq, bool oracle,
                const Options& opt) {
  const Matching m = parse_matching(matching_text, seq.n());
  if (!m.is_perfect()) throw std::invalid_argument("matching " + to_string(m) + " is not perfect");
  if (oracle) {
    auto g = realize_matching_oracle(seq, m);
    if (!g) {
      std::cout << to_string(seq) << " cannot realize " << to_string(m) << '\n';
      return kNo;
    }
    audit(*g, seq, m.edges(), "realize");
    return emit_graph(*g, opt, {{"route", "oracle"}});
  }
  const CheckReport r = star_check(seq);
  if (!r.verdict) {
    std::cout << "switchwise route needs M+ to be realizable (" << summary(r)
              << "); rerun with --oracle\n";
    return kNo;
  }
  SwitchPath path;
  const LabeledGraph g = realize_matching_switchwise(seq, m, &path);
  audit(g, seq, m.edges(), "realize");
  return emit_graph(g, opt, {{"route", "switchwise"}, {"switches", path.moves.size()}});
}

int cmd_switch_path(const std::string& matching_text, const std::string& to, const Options& opt) {
  const Matching m = parse_matching(matching_text);
  const SwitchPath path = switch_path(m, to == "plus" ? Canonical::kPlus : Canonical::kMinus);
  if (opt.json) {
    json moves = json::array();
    Matching current = m;
    for (const SwitchMove& mv : path.moves) {
      const bool down = to == "minus";
      current = down ? apply_down(current, mv) : apply_up(current, mv);
      moves.push_back({{"move", to_string(mv)}, {"type", static_cast<int>(mv.kind)}, {"result", to_string(current)}});
    }
    std::cout << json{{"start", to_string(m)}, {"end", to_string(path.end)}, {"moves", moves},
                      {"exceeded_guard", path.exceeded_guard}}
                     .dump(2)
              << '\n';
    return kYes;
  }
  Matching current = m;
  std::cout << to_string(m) << '\n';
  for (const SwitchMove& mv : path.moves) {
    current = to == "minus" ? apply_down(current, mv) : apply_up(current, mv);
    std::cout << "  " << to_string(mv) << " -> " << to_string(current) << '\n';
  }
  std::cout << path.moves.size() << " switches" << (path.exceeded_guard ? " (beyond n^2 guard)" : "") << '\n';
  return kYes;
}

int cmd_preorder(int n, const std::string& dot_file, bool conjectures, unsigned threads, const Options& opt) {
  const PreorderTable table = build_preorder(n, threads);
  if (!dot_file.empty()) {
    std::ofstream out(dot_file);
    if (!out) throw std::invalid_argument("cannot write " + dot_file);
    out << hasse_dot(table);
  }
  std::optional<ConjectureReport> report;
  if (conjectures) report = check_conjectures(table);
  const HasseDiagram diagram = hasse_diagram(table);
  if (opt.json) {
    json j = to_json(table);
    json classes = json::array();
    for (const auto& c : diagram.classes) {
      json members = json::array();
      for (int i : c) members.push_back(to_string(table.matchings[static_cast<std::size_t>(i)]));
      classes.push_back(members);
    }
    j["classes"] = classes;
    j["covers"] = diagram.covers;
    if (report) j["conjectures"] = to_json(*report, table);
    std::cout << j.dump(2) << '\n';
    return kYes;
  }
  std::cout << "n=" << n << ": " << table.matchings.size() << " perfect matchings, " << table.sequences.size()
            << " PM-realizable sequences, " << diagram.classes.size() << " classes\n";
  for (std::size_t c = 0; c < diagram.classes.size(); ++c) {
    std::cout << "  class " << c << ":";
    for (int i : diagram.classes[c]) std::cout << ' ' << to_string(table.matchings[static_cast<std::size_t>(i)]);
    std::cout << '\n';
  }
  for (auto [a, b] : diagram.covers) std::cout << "  class " << a << " < class " << b << '\n';
  if (report) {
    std::cout << "antisymmetry: " << report->antisymmetry_violations.size() << " violations\n"
              << "switch converse: " << report->switch_path_violations.size() << " violations\n"
              << "comparable pairs: " << report->comparable_pairs
              << ", incomparable pairs: " << report->incomparable_pairs << '\n';
    for (auto [a, b] : report->antisymmetry_violations)
      std::cout << "  mutually comparable: " << to_string(table.matchings[static_cast<std::size_t>(a)]) << " and "
                << to_string(table.matchings[static_cast<std::size_t>(b)]) << '\n';
    for (auto [lo, hi] : report->switch_path_violations)
      std::cout << "  no switch path from " << to_string(table.matchings[static_cast<std::size_t>(hi)]) << " down to "
                << to_string(table.matchings[static_cast<std::size_t>(lo)]) << '\n';
  }
  return kYes;
}

int cmd_tightness(int n, const Options& opt) {
  const TightnessExample t = tightness_instance(n);
  const CheckRow& row = t.star.row(t.k_star);
  if (opt.json) {
    std::cout << json{{"n", n},
                      {"d_star", t.d_star},
                      {"k_star", t.k_star},
                      {"sequence", t.sequence},
                      {"sum_parity_even", t.sum_parity_even},
                      {"graphic", t.is_graphic},
                      {"fails_star_at_k_star", t.fails_star_at_k_star},
                      {"star_verdict", t.star_verdict},
                      {"alpha", t.alpha},
                      {"alpha_at_most_quarter", t.alpha_at_most_quarter},
                      {"eg", to_json(t.eg)},
                      {"star", to_json(t.star)}}
                     .dump(2)
              << '\n';
    return kYes;
  }
  std::cout << "sequence: " << to_string(DegreeSequence(t.sequence)) << '\n'
            << "d*=" << t.d_star << " k*=" << t.k_star << " alpha=" << t.alpha
            << (t.alpha_at_most_quarter ? " (<= 1/4)" : " (> 1/4)") << '\n'
            << "degree sum " << (t.sum_parity_even ? "even" : "odd") << ", graphic: " << (t.is_graphic ? "yes" : "no")
            << '\n'
            << "star row k*: lhs=" << row.lhs << " rhs=" << row.rhs
            << (t.fails_star_at_k_star ? " (fails)" : " (holds)") << '\n'
            << "star check: " << summary(t.star) << '\n';
  return kYes;
}

int cmd_bound(const DegreeSequence& seq, const Options& opt) {
  const bool holds = corollary_bound_holds(seq);
  const bool star = star_check(seq).verdict;
  if (opt.json) {
    std::cout << json{{"sequence", std::vector<int>(seq.entries().begin(), seq.entries().end())},
                      {"bound_holds", holds},
                      {"star_verdict", star}}
                     .dump(2)
              << '\n';
  } else {
    std::cout << "half-sum bound " << (holds ? "holds" : "does not hold") << "; star check "
              << (star ? "passes" : "fails") << '\n';
  }
  return holds ? kYes : kNo;
}

int cmd_hfactor_realize(int h, const DegreeSequence& seq, const Options& opt) {
  auto g = hfactor_oracle(seq, h);
  if (!g) {
    std::cout << to_string(seq) << " cannot realize the canonical " << h << "-factor\n";
    return kNo;
  }
  audit(*g, seq, canonical_h_factor(seq.n(), h).edges(), "hfactor-realize");
  if (opt.json) return emit_graph(*g, opt, {{"h", h}});
  std::cout << format_edges_inline(*g) << '\n';
  return kYes;
}

int cmd_disjoint_pms(int h, const DegreeSequence& seq, const Options& opt) {
  auto r = disjoint_pms(seq, h);
  if (!r) {
    std::cout << "no construction: " << summary(doublestar_check(seq, h)) << '\n';
    return kNo;
  }
  audit(r->graph, seq, {}, "disjoint-pms");
  for (const Matching& m : r->matchings) audit(r->graph, seq, m.edges(), "disjoint-pms");
  if (opt.json) {
    json ms = json::array();
    for (const Matching& m : r->matchings) ms.push_back(to_json(m));
    return emit_graph(r->graph, opt, {{"h", h}, {"matchings", ms}});
  }
  std::cout << format_edges_inline(r->graph) << '\n';
  for (const Matching& m : r->matchings) std::cout << "  " << to_string(m) << '\n';
  return kYes;
}

int cmd_pack(const DegreeSequence& p1, const DegreeSequence& p2, const Options& opt) {
  const auto r = pack(p1, p2);
  if (r) {
    audit(r->first, p1, {}, "pack");
    audit(r->second, p2, {}, "pack");
    for (const Edge& e : r->second.edges())
      if (r->first.has_edge(e.u, e.v)) throw AuditFailure("pack: halves share an edge");
  }
  const bool hyp = packing_hypothesis(p1, p2);
  if (opt.json) {
    std::cout << packing_json(p1, p2, r).dump(2) << '\n';
  } else if (r) {
    std::cout << "first:  " << format_edges_inline(r->first) << '\n'
              << "second: " << format_edges_inline(r->second) << '\n';
  } else {
    std::cout << "no packing found for the Havel-Hakimi realization"
              << (hyp ? "" : " (hypothesis not met, absence is inconclusive)") << '\n';
  }
  return r ? kYes : kNo;
}

int cmd_verify(const Options& opt) {
  const auto results = run_battery(opt.seed);
  bool all = true;
  json arr = json::array();
  for (const auto& r : results) {
    all = all && r.passed;
    if (opt.json)
      arr.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}, {"seconds", r.seconds}});
    else
      std::cout << format_result(r) << std::endl;
  }
  if (opt.json) std::cout << json{{"seed", opt.seed}, {"all_passed", all}, {"criteria", arr}}.dump(2) << '\n';
  return all ? kYes : kNo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Degree sequences, labelled perfect matchings and factors"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json, "Machine-readable output");
  app.add_option("--seed", opt.seed, "Seed for randomized audits");

  std::function<int()> action;
  std::string seq_text, seq2_text, matching_text, to = "plus", dot_file;
  int n = 0, h = 0;
  bool oracle = false, conjectures = false;
  unsigned threads = 0;

  auto seq_command = [&](const char* name, const char* help, std::function<int(const DegreeSequence&)> run) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("SEQ", seq_text, "Degree sequence, e.g. 3,2,2,1")->required();
    sub->callback([&, run] { action = [&, run] { return run(parse_sequence(seq_text)); }; });
  };
  seq_command("check-graphic", "Erdos-Gallai test", [&](const DegreeSequence& s) { return emit_check(eg_check(s), opt); });
  seq_command("check-pm", "Is some perfect matching realizable", [&](const DegreeSequence& s) { return cmd_check_pm(s, opt); });
  seq_command("check-mplus", "Can the sequence realize M+", [&](const DegreeSequence& s) { return emit_check(star_check(s), opt); });
  seq_command("realize-mplus", "Realization containing M+", [&](const DegreeSequence& s) { return cmd_realize_mplus(s, opt); });
  seq_command("bound", "Half-sum sufficient condition", [&](const DegreeSequence& s) { return cmd_bound(s, opt); });

  auto* realize = app.add_subcommand("realize", "Realization containing a given perfect matching");
  realize->add_option("MATCHING", matching_text, "e.g. 1-4,2-3")->required();
  realize->add_option("SEQ", seq_text)->required();
  realize->add_flag("--oracle", oracle, "Use the f-factor oracle instead of the switch walk");
  realize->callback([&] { action = [&] { return cmd_realize(matching_text, parse_sequence(seq_text), oracle, opt); }; });

  auto* path = app.add_subcommand("switch-path", "Switch walk to M+ or M-");
  path->add_option("MATCHING", matching_text)->required();
  path->add_option("--to", to, "plus or minus")->check(CLI::IsMember({"plus", "minus"}));
  path->callback([&] { action = [&] { return cmd_switch_path(matching_text, to, opt); }; });

  auto* pre = app.add_subcommand("preorder", "Realizability preorder on perfect matchings");
  pre->add_option("N", n)->required();
  pre->add_option("--dot", dot_file, "Write the Hasse diagram as DOT");
  pre->add_flag("--check-conjectures", conjectures, "Check antisymmetry and switch reachability");
  pre->add_option("--threads", threads, "Worker threads (0 = all cores)");
  pre->callback([&] { action = [&] { return cmd_preorder(n, dot_file, conjectures, threads, opt); }; });

  auto* tight = app.add_subcommand("tightness", "Near-extremal instance for even n");
  tight->add_option("N", n)->required();
  tight->callback([&] { action = [&] { return cmd_tightness(n, opt); }; });

  auto h_command = [&](const char* name, const char* help, std::function<int(int, const DegreeSequence&)> run) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("H", h)->required();
    sub->add_option("SEQ", seq_text)->required();
    sub->callback([&, run] { action = [&, run] { return run(h, parse_sequence(seq_text)); }; });
  };
  h_command("hfactor-check", "Double-star test for the canonical h-factor",
            [&](int hh, const DegreeSequence& s) { return emit_check(doublestar_check(s, hh), opt); });
  h_command("hfactor-realize", "Realization containing the canonical h-factor",
            [&](int hh, const DegreeSequence& s) { return cmd_hfactor_realize(hh, s, opt); });
  h_command("disjoint-pms", "h disjoint perfect matchings in one realization",
            [&](int hh, const DegreeSequence& s) { return cmd_disjoint_pms(hh, s, opt); });

  auto* packc = app.add_subcommand("pack", "Edge-disjoint realizations of two sequences");
  packc->add_option("SEQ1", seq_text)->required();
  packc->add_option("SEQ2", seq2_text)->required();
  packc->callback([&] { action = [&] { return cmd_pack(parse_sequence(seq_text), parse_sequence(seq2_text), opt); }; });

  auto* verify = app.add_subcommand("verify-paper", "Run the full verification battery");
  verify->callback([&] { action = [&] { return cmd_verify(opt); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kYes : kError;
  }
  try {
    return action();
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const AuditFailure& e) {
    std::cerr << "audit failure: " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
  }
  return kError;
}
