// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "ywall/graph.hpp"
#include "ywall/verify.hpp"
#include "ywall/youngwall.hpp"

using namespace ywall;

namespace {

struct Outcome {
  bool passed = true;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      notes.push_back("failed: " + what);
    }
  }
  void suite(const SuiteReport& r) {
    for (const auto& c : r.checks) {
      if (!c.passed) {
        passed = false;
        notes.push_back("failed: [" + r.suite + "] " + c.name + ": " + c.detail);
      }
    }
  }
};

struct Criterion {
  int id;
  std::string title;
  double budget_s;
  std::function<void(Outcome&)> run;
};

SuiteReport suite(const std::string& name, int depth = -1) {
  SuiteParams p;
  if (depth >= 0) p.depth = depth;
  p.jobs = 4;
  return run_suite(name, p);
}

void adjoint_figure(Outcome& o) {
  const auto c = AdjointCrystal::finite(4);
  const auto g = component(c, Pair{0, 0});
  o.expect(g.size() == 15, "15 nodes, got " + std::to_string(g.size()));

  using Edge = std::tuple<std::string, int, std::string>;
  std::set<Edge> got;
  for (const auto& e : g.edges()) got.insert({g.nodes()[e.source].label, e.color, g.nodes()[e.target].label});
  const std::set<Edge> expected{
      {"(1,0)", 1, "(0,1)"}, {"(2,0)", 1, "(1,1)"}, {"(1,1)", 1, "(0,2)"}, {"(3,0)", 1, "(2,1)"},
      {"(2,1)", 1, "(1,2)"}, {"(1,2)", 1, "(0,3)"}, {"(4,0)", 1, "(3,1)"}, {"(3,1)", 1, "(2,2)"},
      {"(2,2)", 1, "(1,3)"}, {"(1,3)", 1, "(0,4)"}, {"(0,0)", 0, "(1,0)"}, {"(1,0)", 0, "(2,0)"},
      {"(2,0)", 0, "(3,0)"}, {"(3,0)", 0, "(4,0)"}, {"(1,1)", 0, "(2,1)"}, {"(2,1)", 0, "(3,1)"},
      {"(0,1)", 0, "(0,0)"}, {"(0,2)", 0, "(0,1)"}, {"(0,3)", 0, "(0,2)"}, {"(0,4)", 0, "(0,3)"},
      {"(1,2)", 0, "(1,1)"}, {"(1,3)", 0, "(1,2)"},
  };
  o.expect(got == expected, "arrow set matches the figure (" + std::to_string(got.size()) + " arrows)");

  const auto mins = verify_perfect(4).minimal_vectors;
  o.expect(std::set<Pair>(mins.begin(), mins.end()) == std::set<Pair>{{0, 0}, {1, 1}, {2, 2}},
           "minimal vectors {(0,0),(1,1),(2,2)}");
}

void worked_energies(Outcome& o) {
  const ColumnModel m(4);
  const Column c{0, 4, 6};
  o.expect(m.H(c, {2, 4, 4}) == -2, "case (a) = -2");
  o.expect(m.H(c, {3, 5, 6}) == 0, "case (b) = 0");
  o.expect(m.H(c, {4, 6, 8}) == 2, "case (c) = 2");
  o.expect(m.H(c, {6, 4, 2}) == 2, "case (d) = 2");
  // Y_2 against the two candidates for Y_1 in the worked wall.
  const Column y2{0, 2, 2};
  o.expect(m.phi_inv({{0, 3}, -1}) == Column{1, 5, 8} && m.H(y2, {1, 5, 8}) == 0, "H(Y2⊗Y1') = 0");
  o.expect(m.phi_inv({{0, 4}, 0}) == Column{0, 4, 8} && m.H(y2, {0, 4, 8}) == -2, "H(Y2⊗Y1'') = -2");
}

void signatures(Outcome& o) {
  const Wall y{Lambda::finite(4, 1), {{7, 5, 6}, {3, 7, 8}}};
  auto strings = [](const std::vector<ColumnSignature>& sigs) {
    std::vector<std::string> out;
    for (const auto& s : sigs) out.push_back(to_string(s));
    return out;
  };
  const auto s0 = signature_oracle(0, y);
  const auto s1 = signature_oracle(1, y);
  o.expect(strings(s0) == std::vector<std::string>{"+++", "--++++", "+"}, "0-signatures per column");
  o.expect(strings(s1) == std::vector<std::string>{"--+", "-", "+"}, "1-signatures per column");
  o.expect(reduced_signature(s0) == "-+++++++", "reduced 0-signature -+++++++");
  o.expect(reduced_signature(s1) == "--+", "reduced 1-signature --+");
  const auto f0 = wall_f(0, y);
  o.expect(f0.wall && f0.wall->columns == std::vector<Column>{{7, 5, 6}, {4, 0, 0}}, "F0 gives ⟨4,0,0⟩ in Y1");
  const auto e1 = wall_e(1, y);
  o.expect(e1.wall && e1.wall->columns == std::vector<Column>{{7, 3, 2}, {3, 7, 8}}, "E1 gives ⟨7,3,2⟩ in Y0");
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "adjoint crystal at level 4", 1, adjoint_figure},
      {2, "energy axioms, l = 1..5", 5, [](Outcome& o) { o.suite(suite("energy-axioms")); }},
      {3, "affine energy constant along edges, l <= 3, |m| <= 8, depth 10", 30,
       [](Outcome& o) { o.suite(suite("H-constancy")); }},
      {4, "perfectness conditions (ii)-(v), l <= 4", 30,
       [](Outcome& o) {
         const auto r = suite("perfect");
         o.suite(r);
         o.notes.push_back("condition (i) is reported out of scope");
         for (int l = 1; l <= 4; ++l) {
           const auto p = verify_perfect(l);
           o.notes.push_back("l=" + std::to_string(l) + ": condition (iii) with alpha_0 " +
                             (p.alternative_iii_passed ? "passes" : "fails") + " (" + p.alternative_iii_detail + ")");
         }
       }},
      {5, "column bijection round trips", 5, [](Outcome& o) { o.suite(suite("bijection")); }},
      {6, "worked column energies", 1, worked_energies},
      {7, "worked signatures and operators", 1, signatures},
      {8, "neighbour differences, depth 6", 120, [](Outcome& o) { o.suite(suite("intertwine", 6)); }},
      {9, "walls vs paths for dominant weights, depth 6", 300,
       [](Outcome& o) {
         o.suite(suite("iso-lambda", 6));
         o.suite(suite("multiplicities", 6));
       }},
      {10, "walls vs paths at infinity, depth 7", 300, [](Outcome& o) { o.suite(suite("iso-infinity", 7)); }},
      {11, "property suite, depth 6", 300, [](Outcome& o) { o.suite(suite("properties", 6)); }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.passed = false;
      o.notes.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_s) {
      o.passed = false;
      o.notes.push_back("over the time budget of " + std::to_string(c.budget_s) + " s");
    }
    char line[256];
    std::snprintf(line, sizeof line, "%s criterion %2d: %s (%.2f s)", o.passed ? "PASS" : "FAIL", c.id,
                  c.title.c_str(), secs);
    std::cout << line << "\n";
    for (const auto& n : o.notes) std::cout << "    " << n << "\n";
    if (!o.passed) ++failed;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << "\n";
  return failed ? 1 : 0;
}
