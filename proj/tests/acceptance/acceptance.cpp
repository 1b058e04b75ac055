// Acceptance gate: one PASS/FAIL line per criterion.
// usage: pcmtk_acceptance <path-to-pcmtk-cli> <work-dir>

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "pcmtk/compliance.hpp"
#include "pcmtk/io.hpp"
#include "pcmtk/pcmtk.hpp"

using namespace pcmtk;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

struct Run {
  int status;
  std::string out;
};

std::string g_cli;

Run run_cli(const std::string& args) {
  const std::string cmd = "\"" + g_cli + "\" " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {-1, {}};
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  const int raw = pclose(p);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

Outcome jaccard_table() {
  const Run r = run_cli("jaccard");
  if (r.status != 0) return {false, "jaccard exited " + std::to_string(r.status)};
  // Reference values, row-major over KS, KU, BF, CS.
  const double ref[4][4] = {{1, 0.1429, 0.25, 0.1111},
                            {0.1429, 1, 0.3333, 0.2},
                            {0.25, 0.3333, 1, 0.0909},
                            {0.1111, 0.2, 0.0909, 1}};
  const char* names[] = {"KS", "KU", "BF", "CS"};
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  std::size_t matched = 0;
  for (int i = 0; i < 4; ++i) {
    if (!std::getline(in, line)) return {false, "table has fewer than 4 rows"};
    std::istringstream row(line);
    std::string label;
    row >> label;
    if (label != names[i]) return {false, "row " + std::to_string(i) + " labelled " + label};
    for (int j = 0; j < 4; ++j) {
      double v;
      if (!(row >> v)) return {false, "short row " + label};
      if (std::abs(v - ref[i][j]) > 5e-5) return {false, label + " column " + names[j] + " = " + std::to_string(v)};
      ++matched;
    }
  }
  return {matched == 16, std::to_string(matched) + "/16 entries within 5e-5"};
}

Outcome table_agreement() {
  const ComplianceMatrix m = run_compliance(
      [] {
        std::vector<std::string> v;
        for (const auto& h : registry()) v.push_back(h.name);
        return v;
      }(),
      default_axiom_ids(), CheckConfig{});
  const DiffReport r = diff_report(m);
  std::string bad;
  std::size_t disagree = 0;
  for (const auto& d : r.cells) {
    if (d.cell->axiom == "bf_a5") continue;
    if (d.agreement == Agreement::Disagree) {
      ++disagree;
      bad += " " + d.cell->index + "/" + d.cell->axiom;
    }
  }
  auto kind = [&](std::string_view idx, std::string_view ax) {
    for (const auto& c : m.cells)
      if (c.index == idx && c.axiom == ax) return c.verdict.kind;
    return VerdictKind::Inapplicable;
  };
  const std::pair<const char*, const char*> must_falsify[] = {{"hci", "bf_a3"}, {"gw", "bf_a3"},  {"re", "bf_a4"},
                                                              {"ci", "ku_a2"},  {"ci", "ku_a4"}, {"ci", "mz_bounded"}};
  for (const auto& [i, a] : must_falsify)
    if (kind(i, a) != VerdictKind::Falsified) bad += std::string(" ") + i + "/" + a + ":not-falsified";
  std::string ki_bad;
  for (const auto& c : m.cells)
    if (c.index == "ki" && c.verdict.kind == VerdictKind::Falsified) ki_bad += " ki/" + c.axiom;
  bad += ki_bad;
  const bool pass = disagree == 0 && bad.empty();
  return {pass, std::to_string(disagree) + " DISAGREE outside A5" + (bad.empty() ? "" : ";" + bad)};
}

Outcome ladders() {
  std::string detail;
  bool pass = true;
  for (const char* name : {"ci", "gci", "ci_star"}) {
    const IndexHandle& h = lookup(name);
    bool hit = false;
    double best = 0.0;
    for (std::size_t n = 3; n <= 6 && !hit; ++n) {
      bool increasing = true;
      double prev = -INFINITY, top = 0.0;
      for (int e = 1; e <= 12; ++e) {
        const double v = h(corner_matrix(n, std::pow(10.0, e)));
        increasing = increasing && v > prev;
        prev = v;
        top = std::max(top, v);
      }
      best = std::max(best, top);
      hit = increasing && top > 1e6;
    }
    if (!hit) pass = false;
    char buf[96];
    std::snprintf(buf, sizeof buf, " %s:%s(max %.4g)", name, hit ? "ok" : "below-1e6", best);
    detail += buf;
  }
  for (std::size_t n = 3; n <= 6; ++n)
    for (int e = 1; e <= 12; ++e)
      if (!(ki_koczkodaj(corner_matrix(n, std::pow(10.0, e))) < 1.0)) {
        pass = false;
        detail += " ki>=1";
      }
  return {pass, detail.substr(1)};
}

Outcome equivalences() {
  Rng rng(42);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 3 + static_cast<std::size_t>(t) % 5;
    const EquivalenceReport r = verify_equivalences(random_consistent(n, rng), 1e-9);
    if (!r.all_true() || r.lambda_deviation > 1e-6 || r.max_ratio_deviation > 1e-6)
      return {false, "matrix " + std::to_string(t) + " (n=" + std::to_string(n) + ") failed"};
  }
  return {true, "1000/1000 consistent matrices"};
}

Outcome search_ci5(const fs::path& work) {
  const std::string w1 = (work / "search1.json").string(), w2 = (work / "search2.json").string();
  const Run a = run_cli("search --kind triad-worsening --index ci --n 5 --witness-out \"" + w1 + "\"");
  const Run b = run_cli("search --kind triad-worsening --index ci --n 5 --witness-out \"" + w2 + "\"");
  if (a.status != 0) return {false, "search exited " + std::to_string(a.status)};
  if (a.out.rfind("none found", 0) == 0) return {false, "none found"};
  if (a.out != b.out) return {false, "two runs printed different witnesses"};
  const Witness w = witness_from_json(Json::parse(read_text_file(w1)));
  if (!replay(w, lookup("ci"))) return {false, "witness does not replay"};
  return {true, "witness found and replays"};
}

Outcome axiom7() {
  const AxiomVerdict v = check_axiom7(lookup("ci"), CheckConfig{});
  const bool pass = v.kind == VerdictKind::Falsified && v.witness && replay(*v.witness, lookup("ci"));
  return {pass, std::string(to_string(v.kind)) + " after " + std::to_string(v.trials_run) + " trials"};
}

Outcome triad_framework() {
  const TriadGenerator g{[](double x) { return std::min(std::abs(1.0 - x), std::abs(1.0 - 1.0 / x)); }, aggregators::max};
  const IndexHandle h = build_triad_index(g, "ki_triads");
  Rng rng(42);
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const Pcm a = random_pcm(3 + static_cast<std::size_t>(t) % 4, rng);
    worst = std::max(worst, std::abs(h(a) - ki_koczkodaj(a)));
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "max |difference| %.3g", worst);
  return {worst <= 1e-12, buf};
}

Outcome ri_stability() {
  double worst = 0.0;
  for (std::size_t n = 3; n <= 7; ++n)
    worst = std::max(worst, std::abs(random_index(n, 100'000, 42) - random_index(n, 100'000, 4242)));
  double cr_worst = 0.0;
  Rng rng(7);
  for (int t = 0; t < 1000; ++t)
    cr_worst = std::max(cr_worst, std::abs(cr_saaty(random_consistent(3 + static_cast<std::size_t>(t) % 8, rng), default_ri_table())));
  char buf[96];
  std::snprintf(buf, sizeof buf, "max |dRI| %.4g, max |cr| on consistent %.3g", worst, cr_worst);
  return {worst < 0.01 && cr_worst <= 1e-8, buf};
}

Outcome determinism(const fs::path& work) {
  std::string files[2][2];
  for (int k = 0; k < 2; ++k) {
    const fs::path md = work / ("report" + std::to_string(k) + ".md"), js = work / ("report" + std::to_string(k) + ".json");
    const Run r = run_cli("report --out \"" + md.string() + "\" --json \"" + js.string() + "\"");
    if (r.status != 0 && r.status != 3) return {false, "report exited " + std::to_string(r.status)};
    files[k][0] = read_text_file(md);
    files[k][1] = read_text_file(js);
  }
  const bool same_md = files[0][0] == files[1][0], same_js = files[0][1] == files[1][1];
  return {same_md && same_js, std::string("markdown ") + (same_md ? "identical" : "differs") + ", machine record " +
                                  (same_js ? "identical" : "differs")};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: pcmtk_acceptance <pcmtk-cli> <work-dir>\n";
    return 2;
  }
  g_cli = argv[1];
  const fs::path work = argv[2];
  fs::create_directories(work);

  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"similarity matrix", jaccard_table},
      {"compliance table agreement", table_agreement},
      {"unboundedness ladders", ladders},
      {"consistency equivalences", equivalences},
      {"order-5 triad worsening search", [&] { return search_ci5(work); }},
      {"axiom 7 falsified for ci", axiom7},
      {"triad framework reproduces ki", triad_framework},
      {"random index stability", ri_stability},
      {"report determinism", [&] { return determinism(work); }},
  };
  int failed = 0, k = 0;
  for (const auto& [name, fn] : criteria) {
    ++k;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.pass) ++failed;
    std::printf("%s %d %s: %s [%.2fs]\n", o.pass ? "PASS" : "FAIL", k, name, o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d/%d criteria passed\n", k - failed, k);
  return failed ? 1 : 0;
}
