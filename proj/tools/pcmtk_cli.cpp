// pcmtk: command-line front end.
//
// Exit codes: 0 success, 2 invalid input, 3 report with a DISAGREE cell.
// Every subcommand that samples uses seed 42 unless --seed is given.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pcmtk/compliance.hpp"
#include "pcmtk/io.hpp"
#include "pcmtk/pcmtk.hpp"

namespace {

using namespace pcmtk;

constexpr int kExitInvalid = 2;
constexpr int kExitDisagree = 3;

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::string axiom_id_for(const std::string& system, int axiom) {
  if (system == "mz") return "mz_bounded";
  if (system == "a7") return "a7";
  if (system == "bf") return axiom == 6 ? "bf6_transpose" : "bf_a" + std::to_string(axiom);
  if (system == "ku" || system == "ks") return system + "_a" + std::to_string(axiom);
  if (system == "cs") return "cs_" + std::to_string(axiom);
  throw PcmError(ErrorCode::UnknownSystem, "unknown system '" + system + "' (expected ks, bf, ku, cs, mz or a7)");
}

std::vector<std::string> axioms_for_systems(const std::string& list) {
  if (list == "all") return default_axiom_ids();
  std::vector<std::string> ids;
  for (const auto& sys : split_list(list)) {
    bool known = sys == "a7";
    if (sys == "a7") ids.emplace_back("a7");
    for (const auto& a : default_axioms()) {
      const bool match = (sys == "bf" && a.system == "BF") || (sys == "mz" && a.system == "MZ") ||
                         (sys == "ku" && a.system == "KU") || (sys == "ks" && a.system == "KS") ||
                         (sys == "cs" && a.system == "CS");
      if (match) {
        ids.emplace_back(a.id);
        known = true;
      }
    }
    if (!known) throw PcmError(ErrorCode::UnknownSystem, "unknown system '" + sys + "'");
  }
  return ids;
}

std::vector<std::string> indices_for(const std::string& list) {
  std::vector<std::string> out;
  if (list == "all") {
    for (const auto& h : registry()) out.push_back(h.name);
    return out;
  }
  for (const auto& name : split_list(list)) out.push_back(lookup(name).name);
  return out;
}

/// "3..7" or "5"
std::pair<std::size_t, std::size_t> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      const auto n = std::stoul(s);
      return {n, n};
    }
    return {std::stoul(s.substr(0, dots)), std::stoul(s.substr(dots + 2))};
  } catch (const std::exception&) {
    throw PcmError(ErrorCode::InvalidArgument, "bad range '" + s + "' (expected A..B)");
  }
}

void print_verdict(const AxiomVerdict& v) {
  std::cout << "verdict: " << to_string(v.kind) << "\n";
  std::cout << "trials: " << v.trials_run << "\n";
  if (!v.note.empty()) std::cout << "note: " << v.note << "\n";
  if (v.witness) std::cout << "relation: " << v.witness->relation << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pairwise comparison matrix inconsistency toolkit"};
  app.require_subcommand(1);

  std::string index_name, matrix_path;
  auto* eval = app.add_subcommand("eval", "Evaluate an index on a matrix file (JSON or .csv)");
  eval->add_option("--index", index_name, "Index name")->required();
  eval->add_option("--matrix", matrix_path, "Matrix file")->required();

  std::string system;
  int axiom = 1;
  std::size_t trials = 10'000;
  std::uint64_t seed = 42;
  std::string witness_out;
  auto* check = app.add_subcommand("check", "Run one axiom checker");
  check->add_option("--index", index_name)->required();
  check->add_option("--system", system, "ks, bf, ku, cs, mz or a7")->required();
  check->add_option("--axiom", axiom, "Axiom number within the system (bf 6 = transpose)");
  check->add_option("--trials", trials);
  check->add_option("--seed", seed);
  check->add_option("--witness-out", witness_out, "Where to write a witness (default witness-<index>-<axiom>.json)");

  std::string indices = "all", systems = "all", out_md, out_json;
  auto* report = app.add_subcommand("report", "Run the compliance grid and write both reports");
  report->add_option("--indices", indices, "Comma-separated index names or all");
  report->add_option("--systems", systems, "Comma-separated systems (ks,bf,ku,cs,mz,a7) or all");
  report->add_option("--seed", seed);
  report->add_option("--trials", trials);
  report->add_option("--out", out_md, "Markdown report")->required();
  report->add_option("--json", out_json, "Machine record")->required();

  bool jaccard_json = false, set_union = false;
  auto* jac = app.add_subcommand("jaccard", "Print the similarity matrix of the axiomatic systems");
  jac->add_flag("--json", jaccard_json, "Print as JSON");
  jac->add_flag("--set-union", set_union, "Use |A u B| as denominator instead of |A| + |B|");

  std::string kind, out_path;
  std::size_t n = 0;
  double x = 0.0;
  auto* gen = app.add_subcommand("gen", "Write a generated matrix document");
  gen->add_option("--kind", kind, "consistent, random or corner")->required();
  gen->add_option("--n", n)->required();
  gen->add_option("--x", x, "Corner value (kind corner)");
  gen->add_option("--seed", seed);
  gen->add_option("--out", out_path)->required();

  std::size_t budget = CheckConfig{}.search_budget;
  auto* search = app.add_subcommand("search", "Counterexample search");
  search->add_option("--kind", kind, "triad-worsening")->required();
  search->add_option("--index", index_name)->required();
  search->add_option("--n", n)->required();
  search->add_option("--budget", budget);
  search->add_option("--seed", seed);
  search->add_option("--witness-out", witness_out);

  std::string range;
  std::size_t samples = 100'000;
  auto* ri = app.add_subcommand("ri", "Monte Carlo random index");
  ri->add_option("--n", range, "Orders A..B")->required();
  ri->add_option("--samples", samples);
  ri->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalid;
  }

  try {
    if (*eval) {
      const IndexHandle& h = lookup(index_name);
      const MatrixDocument doc = read_matrix_file(matrix_path);
      std::printf("%.17g\n", h(doc.matrix));
      return 0;
    }
    if (*check) {
      const IndexHandle& h = lookup(index_name);
      const std::string id = axiom_id_for(system, axiom);
      CheckConfig cfg;
      cfg.trials = trials;
      cfg.seed = seed;
      const AxiomVerdict v = run_check(h, id, cfg);
      print_verdict(v);
      if (v.witness) {
        const std::string path = witness_out.empty() ? "witness-" + h.name + "-" + id + ".json" : witness_out;
        write_file_atomic(path, witness_to_json(*v.witness).dump(2) + "\n");
        std::cout << "witness: " << path << "\n";
      }
      return 0;
    }
    if (*report) {
      CheckConfig cfg;
      cfg.trials = trials;
      cfg.seed = seed;
      const ComplianceMatrix m = run_compliance(indices_for(indices), axioms_for_systems(systems), cfg);
      const DiffReport r = diff_report(m);
      const std::string md = markdown_report(m, r), js = machine_record(m, r);
      write_file_atomic(out_md, md);
      write_file_atomic(out_json, js);
      for (const auto& [a, count] : r.counts) std::cout << to_string(a) << " " << count << "\n";
      return r.has_disagree() ? kExitDisagree : 0;
    }
    if (*jac) {
      const auto f = set_union ? jaccard_set_union : jaccard;
      if (jaccard_json) {
        Json j;
        j["order"] = Json::array();
        for (const auto& s : kAxiomSystems) j["order"].push_back(s.name);
        j["denominator"] = set_union ? "set_union" : "sum_of_sizes";
        Json rows = Json::array();
        for (const auto& a : kAxiomSystems) {
          Json row = Json::array();
          for (const auto& b : kAxiomSystems) row.push_back(f(a.name, b.name));
          rows.push_back(row);
        }
        j["matrix"] = rows;
        std::cout << j.dump(2) << "\n";
      } else {
        std::printf("%4s", "");
        for (const auto& s : kAxiomSystems) std::printf("  %6.*s", static_cast<int>(s.name.size()), s.name.data());
        std::printf("\n");
        for (const auto& a : kAxiomSystems) {
          std::printf("%-4.*s", static_cast<int>(a.name.size()), a.name.data());
          for (const auto& b : kAxiomSystems) std::printf("  %6.4f", f(a.name, b.name));
          std::printf("\n");
        }
      }
      return 0;
    }
    if (*gen) {
      std::optional<Pcm> a;
      std::string name;
      if (kind == "consistent") {
        a = random_consistent(n, seed);
        name = "consistent n=" + std::to_string(n) + " seed=" + std::to_string(seed);
      } else if (kind == "random") {
        a = random_pcm(n, seed);
        name = "random n=" + std::to_string(n) + " seed=" + std::to_string(seed);
      } else if (kind == "corner") {
        if (gen->count("--x") == 0) throw PcmError(ErrorCode::InvalidArgument, "--kind corner needs --x");
        a = corner_matrix(n, x);
        char buf[64];
        std::snprintf(buf, sizeof buf, "corner n=%zu x=%.17g", n, x);
        name = buf;
      } else {
        throw PcmError(ErrorCode::InvalidArgument, "unknown --kind '" + kind + "'");
      }
      write_file_atomic(out_path, matrix_to_json(*a, name).dump(2) + "\n");
      return 0;
    }
    if (*search) {
      if (kind != "triad-worsening") throw PcmError(ErrorCode::InvalidArgument, "unknown --kind '" + kind + "'");
      const IndexHandle& h = lookup(index_name);
      CheckConfig cfg;
      cfg.seed = seed;
      cfg.search_budget = budget;
      const auto w = search_triad_worsening(h, n, cfg);
      if (!w) {
        std::cout << "none found\n";
        return 0;
      }
      const std::string text = witness_to_json(*w).dump(2) + "\n";
      std::cout << text;
      if (!witness_out.empty()) write_file_atomic(witness_out, text);
      return 0;
    }
    if (*ri) {
      const auto [lo, hi] = parse_range(range);
      if (lo < 3 || hi < lo) throw PcmError(ErrorCode::InvalidArgument, "--n needs 3 <= A <= B");
      for (std::size_t k = lo; k <= hi; ++k) std::printf("%zu %.17g\n", k, random_index(k, samples, seed));
      return 0;
    }
  } catch (const PcmError& e) {
    std::cerr << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}
