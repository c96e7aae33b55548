#include "ywall/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "ywall/energy.hpp"
#include "ywall/error.hpp"
#include "ywall/graph.hpp"
#include "ywall/paths.hpp"
#include "ywall/youngwall.hpp"

namespace ywall {

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"energy-axioms", "H-constancy",  "perfect",        "bijection",
                                              "intertwine",    "iso-lambda",   "iso-infinity",   "multiplicities",
                                              "properties"};
  return names;
}

std::vector<Lambda> default_lambdas() {
  std::vector<Lambda> out;
  for (int l = 1; l <= 3; ++l) {
    for (int a = 0; 2 * a <= l; ++a) out.push_back(Lambda::finite(l, a));
  }
  out.push_back(Lambda::finite(4, 1));
  return out;
}

Json to_json(const SuiteReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return {{"suite", report.suite}, {"passed", report.passed()}, {"checks", checks}, {"data", report.data}};
}

namespace {

std::vector<int> levels(const SuiteParams& p, int lo, int hi) {
  if (p.level) {
    if (*p.level < 1) throw DomainError("level must be positive");
    return {*p.level};
  }
  std::vector<int> out;
  for (int l = lo; l <= hi; ++l) out.push_back(l);
  return out;
}

std::vector<Lambda> lambdas(const SuiteParams& p) { return p.lambda ? std::vector<Lambda>{*p.lambda} : default_lambdas(); }

int depth_or(const SuiteParams& p, int fallback) {
  const int d = p.depth.value_or(fallback);
  if (d < 0) throw DomainError("depth must be non-negative");
  return d;
}

ComponentOptions down_options(const SuiteParams& p, int depth) {
  ComponentOptions o;
  o.depth = depth;
  o.direction = Direction::kDown;
  o.node_cap = p.node_cap;
  o.jobs = p.jobs;
  return o;
}

std::string first_energy_violation(const EnergyReport& r) {
  if (r.ok()) return "";
  const auto& v = r.violations.front();
  return "; first violation at " + v.pair + " colour " + std::to_string(v.color) + ": " + v.detail;
}

std::string count_detail(const EnergyReport& r) {
  return std::to_string(r.pairs_checked) + " pairs, " + std::to_string(r.steps_checked) + " steps, " +
         std::to_string(r.violations.size()) + " violations" + first_energy_violation(r);
}

void add(SuiteReport& rep, std::string name, bool ok, std::string detail) {
  rep.checks.push_back({std::move(name), ok, std::move(detail)});
}

// Collects counterexamples while counting checked cases.
struct Tally {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first;

  void record(bool ok, const std::function<std::string()>& what) {
    ++cases;
    if (ok) return;
    if (failures++ == 0) first = what();
  }
  bool ok() const { return failures == 0; }
  std::string detail() const {
    std::string out = std::to_string(cases) + " cases, " + std::to_string(failures) + " failures";
    if (failures) out += "; first: " + first;
    return out;
  }
};

// ---------------------------------------------------------------------------

SuiteReport energy_axioms(const SuiteParams& p) {
  SuiteReport rep{"energy-axioms", {}, Json::object()};
  for (int l : levels(p, 1, 5)) {
    const auto r = verify_energy_axioms(l);
    add(rep, "axioms l=" + std::to_string(l), r.ok(), count_detail(r));
  }
  Tally diag;
  for (int l = 1; l <= 8; ++l) {
    for (int a = 0; 2 * a <= l; ++a) {
      diag.record(h_classical({a, a}, {a, a}) == 0, [&] { return "a=" + std::to_string(a); });
    }
  }
  add(rep, "h((a,a)⊗(a,a)) = 0 for l <= 8", diag.ok(), diag.detail());

  Tally inv;
  const int top = p.level.value_or(4);
  for (int l = 1; l <= top; ++l) {
    const auto c = AdjointCrystal::finite(l);
    const TensorProduct<AdjointCrystal> tp(c);
    for (const auto& b1 : c.elements()) {
      for (const auto& b2 : c.elements()) {
        const int h0 = h_classical(b1, b2);
        for (auto r : {tp.e(1, {b1, b2}), tp.f(1, {b1, b2})}) {
          if (r) inv.record(h_classical((*r)[0], (*r)[1]) == h0, [&] { return tp.encode({b1, b2}); });
        }
      }
    }
  }
  add(rep, "h invariant under e_1 and f_1 for l <= " + std::to_string(top), inv.ok(), inv.detail());

  const auto corrupted = verify_energy_axioms(2, [](const Pair& b1, const Pair& b2) {
    return h_classical(b1, b2) + ((b1 == Pair{1, 0} && b2 == Pair{0, 1}) ? 1 : 0);
  });
  add(rep, "corrupted h is rejected", !corrupted.ok(),
      corrupted.ok() ? "no violation found" : "flagged " + corrupted.violations.front().pair);
  return rep;
}

SuiteReport h_constancy(const SuiteParams& p) {
  SuiteReport rep{"H-constancy", {}, Json::object()};
  const int window = p.window.value_or(8);
  const int depth = depth_or(p, 10);
  if (window < 0) throw DomainError("window must be non-negative");
  for (int l : levels(p, 1, 3)) {
    const auto r = verify_H_constancy(l, window, depth, p.jobs);
    add(rep,
        "H constant along edges, l=" + std::to_string(l) + " window " + std::to_string(window) + " depth " +
            std::to_string(depth),
        r.ok(), count_detail(r));
  }
  for (int l : levels(p, 1, 3)) {
    const auto r = verify_grade_condition(l, std::min(window, 4));
    add(rep, "H = 0 iff grade drop equals the max expression, l=" + std::to_string(l), r.ok(), count_detail(r));
  }
  return rep;
}

SuiteReport perfect(const SuiteParams& p) {
  SuiteReport rep{"perfect", {}, Json::object()};
  Json levels_json = Json::array();
  for (int l : levels(p, 1, 4)) {
    const auto r = verify_perfect(l);
    Json mins = Json::array();
    for (const auto& b : r.minimal_vectors) mins.push_back(to_string(b));
    Json conds = Json::object();
    for (const auto& c : r.checks) {
      if (!c.in_scope) {
        conds[c.condition] = {{"status", "out of scope"}, {"detail", c.detail}};
        continue;
      }
      add(rep, "l=" + std::to_string(l) + " condition (" + c.condition + ")", c.passed, c.detail);
      conds[c.condition] = {{"status", c.passed ? "pass" : "fail"}, {"detail", c.detail}};
    }
    levels_json.push_back({{"level", l},
                           {"conditions", conds},
                           {"minimal_vectors", mins},
                           {"iii_with_alpha_0", {{"passed", r.alternative_iii_passed},
                                                 {"detail", r.alternative_iii_detail}}}});
  }
  rep.data["levels"] = levels_json;
  return rep;
}

SuiteReport bijection(const SuiteParams& p) {
  SuiteReport rep{"bijection", {}, Json::object()};
  constexpr int kMaxS = 10;
  for (int l : levels(p, 1, 5)) {
    const ColumnModel model(l);
    Tally round;
    std::size_t columns = 0;
    for (int s = 0; s <= kMaxS; ++s) {
      for (int sbar = -2; sbar <= 2 * l + 2; ++sbar) {
        for (int tbar = -2; tbar <= 2 * l + 2; ++tbar) {
          const Column c{s, sbar, tbar};
          if (!model.is_valid(c)) continue;
          ++columns;
          round.record(model.phi_inv(model.psi(c)) == c, [&] { return to_string(c); });
        }
      }
    }
    std::size_t images = 0;
    for (const auto& b : model.crystal().elements()) {
      for (int m = 0; m <= kMaxS; ++m) {
        const AffineElem a{b, -m};
        const auto c = model.phi_inv(a);
        if (!model.is_valid(c)) continue;
        ++images;
        round.record(model.psi(c) == a, [&] { return to_string(a); });
      }
    }
    round.record(columns == images, [&] {
      return std::to_string(columns) + " columns but " + std::to_string(images) + " affine elements with a column";
    });
    add(rep, "psi/phi_inv inverse, l=" + std::to_string(l) + ", s <= 10", round.ok(), round.detail());
  }
  if (!p.level) {
    const ColumnModel model(std::nullopt);
    Tally round;
    for (int s = 0; s <= kMaxS; ++s) {
      for (int sbar = -10; sbar <= 10; ++sbar) {
        for (int tbar = -10; tbar <= 10; ++tbar) {
          const Column c{s, sbar, tbar};
          if (!model.is_valid(c)) continue;
          round.record(model.phi_inv(model.psi(c)) == c, [&] { return to_string(c); });
          const auto a = model.psi(c);
          round.record(model.psi(model.phi_inv(a)) == a, [&] { return to_string(a); });
        }
      }
    }
    add(rep, "psi/phi_inv inverse at infinity, |sbar|, |tbar| <= 10, s <= 10", round.ok(), round.detail());
  }

  auto energy_consistency = [&](const ColumnModel& model, int smax, int range_lo, int range_hi, const std::string& name) {
    std::vector<Column> cols;
    for (int s = 0; s <= smax; ++s) {
      for (int sbar = range_lo; sbar <= range_hi; ++sbar) {
        for (int tbar = range_lo; tbar <= range_hi; ++tbar) {
          if (model.is_valid({s, sbar, tbar})) cols.push_back({s, sbar, tbar});
        }
      }
    }
    Tally t;
    for (const auto& c1 : cols) {
      for (const auto& c2 : cols) {
        t.record(model.H(c1, c2) == H_affine(model.psi(c1), model.psi(c2)),
                 [&] { return to_string(c1) + "⊗" + to_string(c2); });
      }
    }
    add(rep, name, t.ok(), t.detail());
  };
  for (int l : levels(p, 1, 4)) {
    energy_consistency(ColumnModel(l), 8, -2, 2 * l + 2,
                       "column energy table matches H(psi ⊗ psi), l=" + std::to_string(l) + ", s <= 8");
  }
  if (!p.level) {
    energy_consistency(ColumnModel(std::nullopt), 6, -6, 6,
                       "column energy table matches H(psi ⊗ psi) at infinity, |sbar|, |tbar| <= 6, s <= 6");
  }
  return rep;
}

SuiteReport intertwine(const SuiteParams& p) {
  SuiteReport rep{"intertwine", {}, Json::object()};
  const int depth = depth_or(p, 6);
  Json per = Json::array();
  for (const auto& lambda : lambdas(p)) {
    const auto walls = enumerate_walls(lambda, depth, p.node_cap);
    Tally diff;
    Tally up;
    Tally down;
    std::size_t not_wall_images = 0;
    for (const auto& w : walls) {
      const auto path = wall_to_path(w);
      const auto model = ColumnModel::of(lambda);
      auto ext = w.columns;
      ext.push_back(model.ground(lambda.a));
      for (int i : kColors) {
        const auto sigs = signature_oracle(i, w);
        const auto aff = Affinization<AdjointCrystal>(model.crystal());
        for (std::size_t k = 0; k + 1 < sigs.size(); ++k) {
          if (sigs[k + 1].saturated) continue;
          const int oracle = sigs[k + 1].plus - sigs[k].minus;
          const int tensor = aff.phi(i, model.psi(ext[k + 1])) - aff.eps(i, model.psi(ext[k]));
          diff.record(oracle == tensor, [&] {
            return encode(w) + " colour " + std::to_string(i) + " k=" + std::to_string(k) + ": oracle " +
                   std::to_string(oracle) + " vs tensor " + std::to_string(tensor);
          });
        }
        if (auto e = oracle_e(i, w)) {
          const auto pe = path_e(i, path);
          up.record(pe && wall_to_path(*e) == *pe, [&] { return encode(w) + " E" + std::to_string(i); });
        }
        if (auto f = oracle_f(i, w)) {
          const auto pf = path_f(i, path);
          down.record(pf && wall_to_path(*f) == *pf, [&] { return encode(w) + " F" + std::to_string(i); });
        }
        if (wall_f(i, w).status == WallStatus::kNotWall) ++not_wall_images;
        if (wall_e(i, w).status == WallStatus::kNotWall) ++not_wall_images;
      }
    }
    const std::string tag = to_string(lambda) + ", " + std::to_string(walls.size()) + " walls";
    add(rep, "phi(Y_k+1) - eps(Y_k) agrees with psi side, " + tag, diff.ok(), diff.detail());
    add(rep, "psi(E Y) = e psi(Y), " + tag, up.ok(), up.detail());
    add(rep, "psi(F Y) = f psi(Y), " + tag, down.ok(), down.detail());
    per.push_back({{"lambda", to_json(lambda)},
                   {"walls", walls.size()},
                   {"tensor_images_leaving_walls", not_wall_images}});
  }
  rep.data["walls"] = per;

  // Coherent family: T_lambda (x) B_l (x) T_{-lambda} -> Z x Z.
  Tally coherent;
  const auto lim = AdjointCrystal::limit();
  for (int l : levels(p, 1, 5)) {
    const auto c = AdjointCrystal::finite(l);
    for (int a = 0; 2 * a <= l; ++a) {
      const Weight lam = dominant(l, a);
      const TCrystal t_plus(lam);
      const TCrystal t_minus(-lam);
      for (const auto& b : c.elements()) {
        const auto image = coherent_map(l, a, b);
        for (int i : kColors) {
          const std::vector<FactorStats> st{factor_stats(t_plus, i, {}), factor_stats(c, i, b),
                                            factor_stats(t_minus, i, {})};
          const auto folded = fold_stats(st);
          auto what = [&] { return "l=" + std::to_string(l) + " a=" + std::to_string(a) + " " + to_string(b); };
          coherent.record(lim.eps(i, image) == c.eps(i, b) - pair(i, lam) && lim.eps(i, image) == folded.eps &&
                              lim.phi(i, image) == folded.phi,
                          what);
          coherent.record(fold_f_position(st) == std::size_t{1} && fold_e_position(st) == std::size_t{1}, what);
          if (auto fb = c.f(i, b)) coherent.record(coherent_map(l, a, *fb) == lim.f(i, image), what);
          if (auto eb = c.e(i, b)) coherent.record(coherent_map(l, a, *eb) == lim.e(i, image), what);
        }
      }
    }
  }
  add(rep, "coherent map intertwines operators and shifts eps by <h_i, lambda>", coherent.ok(), coherent.detail());
  return rep;
}

Json multiplicity_json(const std::map<Weight, std::size_t>& table) {
  Json out = Json::array();
  for (const auto& [w, n] : table) out.push_back({{"weight", to_json(w)}, {"count", n}});
  return out;
}

void isomorphism(SuiteReport& rep, const Lambda& lambda, int depth, const SuiteParams& p) {
  const auto opts = down_options(p, depth);
  const auto walls = reduced_wall_component(lambda, opts);
  const auto paths = path_component(lambda, opts);
  const auto cmp = graph_equal(walls, paths);
  const std::string tag = to_string(lambda) + " depth " + std::to_string(depth);
  add(rep, "walls ≅ paths, " + tag, cmp.equal,
      std::to_string(walls.size()) + "/" + std::to_string(paths.size()) + " nodes, " +
          std::to_string(walls.edges().size()) + "/" + std::to_string(paths.edges().size()) + " edges" +
          (cmp.equal ? "" : "; " + cmp.mismatch));
  const bool same_mult = multiplicities(walls) == multiplicities(paths);
  add(rep, "multiplicities agree, " + tag, same_mult,
      std::to_string(multiplicities(walls).size()) + " weights");
  rep.data["graphs"].push_back({{"lambda", to_json(lambda)},
                                {"depth", depth},
                                {"wall_nodes", walls.size()},
                                {"wall_edges", walls.edges().size()},
                                {"path_nodes", paths.size()},
                                {"path_edges", paths.edges().size()}});
}

SuiteReport iso_lambda(const SuiteParams& p) {
  SuiteReport rep{"iso-lambda", {}, Json::object()};
  rep.data["graphs"] = Json::array();
  const int depth = depth_or(p, 6);
  for (const auto& lambda : lambdas(p)) {
    if (lambda.is_infinity()) throw DomainError("iso-lambda needs a finite lambda; use iso-infinity");
    isomorphism(rep, lambda, depth, p);
  }
  return rep;
}

SuiteReport iso_infinity(const SuiteParams& p) {
  SuiteReport rep{"iso-infinity", {}, Json::object()};
  rep.data["graphs"] = Json::array();
  isomorphism(rep, Lambda::infinity(), depth_or(p, 7), p);
  return rep;
}

SuiteReport multiplicity_suite(const SuiteParams& p) {
  SuiteReport rep{"multiplicities", {}, Json::object()};
  const int depth = depth_or(p, 6);
  auto list = lambdas(p);
  if (!p.lambda) list.push_back(Lambda::infinity());
  Json tables = Json::array();
  for (const auto& lambda : list) {
    const auto opts = down_options(p, depth);
    const auto path_table = multiplicity_table(lambda, opts);
    const auto wall_table = multiplicities(reduced_wall_component(lambda, opts));
    const std::string tag = to_string(lambda) + " depth " + std::to_string(depth);
    add(rep, "wall and path tables agree, " + tag, path_table == wall_table,
        std::to_string(path_table.size()) + " weights");
    const auto top = path_table.find(lambda.weight());
    add(rep, "highest weight has multiplicity 1, " + tag, top != path_table.end() && top->second == 1, "");
    tables.push_back({{"lambda", to_json(lambda)}, {"depth", depth}, {"table", multiplicity_json(path_table)}});
  }
  if (!p.lambda) {
    const auto lam = Lambda::finite(4, 1);
    const auto t = multiplicity_table(lam, down_options(p, 1));
    const auto it = t.find(lam.weight() - kAlpha0);
    add(rep, "lambda - alpha_0 has multiplicity 1 for 2L0+L1", it != t.end() && it->second == 1, "");
  }
  rep.data["tables"] = tables;
  return rep;
}

SuiteReport properties(const SuiteParams& p) {
  SuiteReport rep{"properties", {}, Json::object()};
  const int depth = depth_or(p, 6);
  auto list = lambdas(p);
  if (!p.lambda) list.push_back(Lambda::infinity());

  for (const auto& lambda : list) {
    const std::string tag = to_string(lambda) + " depth " + std::to_string(depth);
    const auto walls = enumerate_walls(lambda, depth, p.node_cap);
    Tally closure;
    Tally weights;
    std::size_t reduced = 0;
    for (const auto& w : walls) {
      const bool is_reduced = wall_validate(w) == WallClass::kReducedWall;
      reduced += is_reduced;
      for (int i : kColors) {
        weights.record(pair(i, wall_wt(w)) == wall_phi(i, w) - wall_eps(i, w),
                       [&] { return encode(w) + " colour " + std::to_string(i); });
        if (!is_reduced) continue;
        for (bool up : {false, true}) {
          const auto tensor = up ? wall_e(i, w) : wall_f(i, w);
          if (tensor.wall) {
            closure.record(wall_validate(*tensor.wall) == WallClass::kReducedWall,
                           [&] { return encode(w) + (up ? " E" : " F") + std::to_string(i); });
          }
          const auto oracle = up ? oracle_e(i, w) : oracle_f(i, w);
          if (oracle) {
            closure.record(wall_validate(*oracle) == WallClass::kReducedWall,
                           [&] { return encode(w) + (up ? " oracle E" : " oracle F") + std::to_string(i); });
          }
        }
      }
    }
    add(rep, "reduced walls stay reduced, " + tag + " (" + std::to_string(reduced) + " reduced)", closure.ok(),
        closure.detail());
    add(rep, "<h_i, wt(Y)> = phi_i - eps_i, " + tag, weights.ok(), weights.detail());

    const auto opts = down_options(p, depth);
    const auto g2 = path_component(lambda, opts, 2);
    const auto g4 = path_component(lambda, opts, 4);
    const auto margin = graph_equal(g2, g4);
    add(rep, "tail margin 2 and 4 give the same graph, " + tag, margin.equal,
        std::to_string(g2.size()) + " nodes" + (margin.equal ? "" : "; " + margin.mismatch));

    const ClassicalPathCrystal classical(lambda);
    const auto cg = component(classical, classical.ground(), opts);
    const auto proj = graph_equal(classical_projection(g2), cg, WeightMode::kClassical);
    add(rep, "forgetting grades gives the classical path component, " + tag, proj.equal,
        std::to_string(cg.size()) + " nodes" + (proj.equal ? "" : "; " + proj.mismatch));

    const AffinePathCrystal affine(lambda);
    const auto elems = bfs_elements(affine, affine.ground(), opts);
    const auto axioms = axiom_check(affine, std::span<const Path>(elems));
    add(rep, "crystal axioms on the path component, " + tag, axioms.ok(),
        std::to_string(axioms.elements_checked) + " elements" +
            (axioms.ok() ? "" : "; condition " + std::to_string(axioms.violations[0].condition) + " at " +
                                    axioms.violations[0].element));
  }

  // Two tensor rules on every string of length <= 4 over B_ad, l <= 3.
  Tally rules;
  for (int l = 1; l <= 3; ++l) {
    const auto c = AdjointCrystal::finite(l);
    const auto elems = c.elements();
    const TensorProduct<AdjointCrystal> fold(c, TensorRule::kFold);
    const TensorProduct<AdjointCrystal> sig(c, TensorRule::kSignature);
    std::vector<std::vector<Pair>> strings{{}};
    for (int len = 1; len <= 4; ++len) {
      std::vector<std::vector<Pair>> next;
      for (const auto& s : strings) {
        if (static_cast<int>(s.size()) != len - 1) continue;
        for (const auto& b : elems) {
          auto t = s;
          t.push_back(b);
          next.push_back(std::move(t));
        }
      }
      for (const auto& s : next) {
        for (int i : kColors) {
          rules.record(fold.eps(i, s) == sig.eps(i, s) && fold.phi(i, s) == sig.phi(i, s) &&
                           fold.f(i, s) == sig.f(i, s) && fold.e(i, s) == sig.e(i, s),
                       [&] { return fold.encode(s) + " colour " + std::to_string(i); });
        }
      }
      strings.insert(strings.end(), next.begin(), next.end());
    }
  }
  add(rep, "fold and signature tensor rules agree on strings of length <= 4, l <= 3", rules.ok(), rules.detail());

  Tally axioms;
  for (int l = 1; l <= 5; ++l) {
    const auto c = AdjointCrystal::finite(l);
    const auto elems = c.elements();
    const auto r = axiom_check(c, std::span<const Pair>(elems));
    axioms.record(r.ok() && r.elements_checked == static_cast<std::size_t>((l + 1) * (l + 2) / 2),
                  [&] { return "B_ad l=" + std::to_string(l); });
  }
  {
    const auto c = AdjointCrystal::finite(2);
    const TensorProduct<AdjointCrystal> tp(c);
    std::vector<std::vector<Pair>> pairs;
    for (const auto& b1 : c.elements()) {
      for (const auto& b2 : c.elements()) pairs.push_back({b1, b2});
    }
    const auto r = axiom_check(tp, std::span<const std::vector<Pair>>(pairs));
    axioms.record(r.ok(), [] { return std::string("B_ad ⊗ B_ad l=2"); });
  }
  add(rep, "crystal axioms on B_ad (l <= 5) and B_ad ⊗ B_ad (l = 2)", axioms.ok(), axioms.detail());
  return rep;
}

}  // namespace

SuiteReport run_suite(const std::string& name, const SuiteParams& params) {
  static const std::map<std::string, std::function<SuiteReport(const SuiteParams&)>> table{
      {"energy-axioms", energy_axioms}, {"H-constancy", h_constancy},       {"perfect", perfect},
      {"bijection", bijection},         {"intertwine", intertwine},         {"iso-lambda", iso_lambda},
      {"iso-infinity", iso_infinity},   {"multiplicities", multiplicity_suite}, {"properties", properties}};
  const auto it = table.find(name);
  if (it == table.end()) throw DomainError("unknown suite \"" + name + "\"");
  return it->second(params);
}

}  // namespace ywall
