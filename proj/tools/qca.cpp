// qca: scenario runner and small exploration commands.
//
//   qca verify <scenario|all> [--n N] [--surface NAME] [--json out.json] [--seed S] [--max-n N]
//   qca surface show [--surface NAME] [--n N] [--matrix Q|H|K|P|Pi]
//   qca seed mutate --seq "v31,v21" [--surface NAME] [--n N]

#include "qca/mutation.hpp"
#include "qca/scenarios.hpp"
#include "qca/surface.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace {

using nlohmann::json;

json to_json(const qca::ScenarioResult& r) {
  json w = json::array();
  for (auto& f : r.failures) w.push_back({{"what", f.what}, {"lhs", f.lhs}, {"rhs", f.rhs}});
  return {{"scenario", r.id},   {"certifies", r.certifies}, {"params", r.params},
          {"status", r.pass ? "pass" : "fail"}, {"checks", r.checks},
          {"witnesses", w},     {"notes", r.notes},         {"seconds", r.seconds}};
}

void print(const qca::ScenarioResult& r, bool verbose) {
  std::cout << (r.pass ? "PASS " : "FAIL ") << std::left << std::setw(17) << r.id << " " << r.params << "  "
            << r.checks << " checks, " << r.failures.size() << " failed  (" << std::fixed << std::setprecision(2)
            << r.seconds << " s)\n";
  std::cout << "     certifies: " << r.certifies << "\n";
  for (auto& f : r.failures) {
    std::cout << "     x " << f.what << "\n";
    if (verbose || r.failures.size() <= 5) {
      if (!f.lhs.empty()) std::cout << "         lhs: " << f.lhs << "\n";
      if (!f.rhs.empty()) std::cout << "         rhs: " << f.rhs << "\n";
    }
  }
  for (auto& n : r.notes)
    if (verbose || !r.pass || n.rfind("monomials", 0) == 0 || n.rfind("quadrilateral", 0) == 0)
      std::cout << "     - " << n << "\n";
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string tok; std::getline(ss, tok, ',');) {
    tok.erase(0, tok.find_first_not_of(" \t"));
    tok.erase(tok.find_last_not_of(" \t") + 1);
    if (!tok.empty()) out.push_back(tok);
  }
  return out;
}

// Q is printed undoubled; half-integers as "a/2"
std::string entry(const qca::IntMatrix& M, int i, int j, bool halve) {
  auto x = M(i, j);
  if (!halve) return std::to_string(x);
  return x % 2 ? std::to_string(x) + "/2" : std::to_string(x / 2);
}

void print_matrix(const qca::Triangulation& T, const qca::IntMatrix& M, bool halve) {
  size_t w = 4;
  for (auto& l : T.labels()) w = std::max(w, l.size() + 1);
  std::cout << std::setw(int(w)) << "";
  for (auto& l : T.labels()) std::cout << std::setw(int(w)) << l;
  std::cout << "\n";
  for (int i = 0; i < T.size(); ++i) {
    std::cout << std::setw(int(w)) << T.labels()[i];
    for (int j = 0; j < T.size(); ++j) std::cout << std::setw(int(w)) << (M(i, j) ? entry(M, i, j, halve) : ".");
    std::cout << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of quantum cluster structures on triangulated surfaces"};
  app.require_subcommand(1);

  qca::ScenarioParams p;
  std::string scenario, json_out, matrix = "Q", surface = "P3", seq;
  int n = 3;
  bool verbose = false;

  auto* verify = app.add_subcommand("verify", "run a verification scenario (or 'all')");
  verify->add_option("scenario", scenario, "scenario name or 'all'")->required();
  verify->add_option("--n", p.n, "single value of n (default: the scenario's range)");
  verify->add_option("--max-n", p.max_n, "upper bound on n for the default range");
  verify->add_option("--surface", p.surface, "restrict to one builtin surface");
  verify->add_option("--seed", p.seed, "seed for randomized scenarios");
  verify->add_option("--cases", p.cases, "number of randomized cases");
  verify->add_option("--json", json_out, "write the report as JSON");
  verify->add_flag("-v,--verbose", verbose, "print every witness and note");

  auto* surf = app.add_subcommand("surface", "inspect builtin surfaces");
  auto* show = surf->add_subcommand("show", "vertices and one matrix of the bundle");
  show->add_option("--surface", surface, "builtin surface");
  show->add_option("--n", n, "n");
  show->add_option("--matrix", matrix, "Q, H, K, P or Pi")->check(CLI::IsMember({"Q", "H", "K", "P", "Pi"}));
  surf->require_subcommand(1);

  auto* seedc = app.add_subcommand("seed", "quantum seeds");
  auto* mut = seedc->add_subcommand("mutate", "mutate the initial seed along a label sequence");
  mut->add_option("--surface", surface, "builtin surface");
  mut->add_option("--n", n, "n");
  mut->add_option("--seq", seq, "comma separated vertex labels, applied left to right")->required();
  seedc->require_subcommand(1);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) {
      std::vector<std::string> names = scenario == "all" ? qca::scenario_names() : std::vector<std::string>{scenario};
      std::vector<std::future<qca::ScenarioResult>> jobs;
      for (auto& s : names) jobs.push_back(std::async(std::launch::async, qca::run_scenario, s, p));
      std::vector<qca::ScenarioResult> results;
      for (auto& j : jobs) results.push_back(j.get());
      std::sort(results.begin(), results.end(), [](auto& a, auto& b) { return a.id < b.id; });
      bool ok = true;
      json all = json::array();
      for (auto& r : results) {
        print(r, verbose);
        ok = ok && r.pass;
        all.push_back(to_json(r));
      }
      if (!json_out.empty()) {
        std::ofstream f(json_out);
        f << (all.size() == 1 ? all[0] : all).dump(2) << "\n";
      }
      return ok ? 0 : 1;
    }
    if (*show) {
      qca::Triangulation T(qca::builtin_surface(surface, n));
      std::cout << surface << " n=" << n << ": " << T.spec().faces << " faces, " << T.size() << " vertices, "
                << T.mutable_vertices().size() << " mutable\n";
      for (int v = 0; v < T.size(); ++v) {
        auto& r = T.rep(v);
        std::cout << "  " << std::setw(8) << T.labels()[v] << "  face " << r.face << " (" << r.c[0] << "," << r.c[1]
                  << "," << r.c[2] << ")" << (T.is_mutable(v) ? "" : "  frozen") << "\n";
      }
      std::cout << matrix << ":\n";
      const qca::IntMatrix& M = matrix == "Q" ? T.D() : matrix == "H" ? T.H() : matrix == "K" ? T.K()
                                : matrix == "P" ? T.P() : T.Pi();
      print_matrix(T, M, matrix == "Q");
      return 0;
    }
    if (*mut) {
      qca::Triangulation T(qca::builtin_surface(surface, n));
      auto ks = qca::resolve(T, split_list(seq));
      for (int k : ks)
        if (!T.is_mutable(k)) throw std::invalid_argument("vertex " + T.labels()[k] + " is frozen");
      qca::QuantumSeed s = qca::QuantumSeed::initial(T).mutate(ks);
      std::cout << "Q after " << ks.size() << " mutations:\n";
      print_matrix(T, s.matrices().D, true);
      std::cout << "cluster variables in the initial torus:\n";
      for (int v = 0; v < T.size(); ++v)
        if (s.var(v) != qca::QuantumSeed::initial(T).var(v))
          std::cout << "  A'_" << T.labels()[v] << " = " << s.var(v).to_string() << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
