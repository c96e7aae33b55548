#include "ywall/paths.hpp"

#include "ywall/error.hpp"

namespace ywall {

namespace detail {

FactorStats head_stats(const Lambda& lambda, int i) {
  if (lambda.is_infinity()) return {0, 0, 0};
  const int p = pair(i, lambda.weight());
  return {0, p, p};
}

}  // namespace detail

AffineElem tail_element(const Lambda& lambda) { return {lambda.minimal(), 0}; }

Path ground_path(const Lambda& lambda) { return {lambda, {}}; }

bool satisfies_affine_conditions(const Path& p, std::string* why) {
  auto fail = [&](std::string msg) {
    if (why) *why = std::move(msg);
    return false;
  };
  const auto crystal = p.lambda.crystal();
  const auto tail = tail_element(p.lambda);
  if (!p.entries.empty() && p.entries.back() == tail) return fail("prefix ends with a tail element");
  for (std::size_t k = 0; k < p.entries.size(); ++k) {
    const auto& b = p.entries[k];
    if (!crystal.contains(b.base)) return fail("entry " + std::to_string(k) + " is not a crystal element");
    if (b.grade > 0) return fail("entry " + std::to_string(k) + " has positive grade");
    const auto& next = k + 1 < p.entries.size() ? p.entries[k + 1] : tail;
    const int H = H_affine(next, b);
    if (H != 0) {
      return fail("H(p_" + std::to_string(k + 1) + " ⊗ p_" + std::to_string(k) + ") = " + std::to_string(H));
    }
  }
  return true;
}

namespace {

std::optional<Path> act(bool raise, int i, const Path& p, int margin) {
  const Affinization<AdjointCrystal> aff(p.lambda.crystal());
  auto out = detail::act_on_tail(aff, raise, i, detail::head_stats(p.lambda, i), p.entries,
                                 tail_element(p.lambda), margin);
  if (!out) return std::nullopt;
  for (const auto& b : *out) {
    if (b.grade > 0) return std::nullopt;
  }
  return Path{p.lambda, std::move(*out)};
}

std::optional<ClassicalPath> act(bool raise, int i, const ClassicalPath& p, int margin) {
  auto out = detail::act_on_tail(p.lambda.crystal(), raise, i, detail::head_stats(p.lambda, i), p.entries,
                                 p.lambda.minimal(), margin);
  if (!out) return std::nullopt;
  return ClassicalPath{p.lambda, std::move(*out)};
}

}  // namespace

std::optional<Path> path_f(int i, const Path& p, int margin) { return act(false, i, p, margin); }
std::optional<Path> path_e(int i, const Path& p, int margin) { return act(true, i, p, margin); }

int path_eps(int i, const Path& p, int margin) {
  const Affinization<AdjointCrystal> aff(p.lambda.crystal());
  return detail::tail_stats(aff, i, detail::head_stats(p.lambda, i), p.entries, tail_element(p.lambda), margin)
      .eps;
}

int path_phi(int i, const Path& p, int margin) {
  const Affinization<AdjointCrystal> aff(p.lambda.crystal());
  return detail::tail_stats(aff, i, detail::head_stats(p.lambda, i), p.entries, tail_element(p.lambda), margin)
      .phi;
}

Weight path_wt(const Path& p) {
  const Affinization<AdjointCrystal> aff(p.lambda.crystal());
  Weight w = p.lambda.weight();
  for (const auto& b : p.entries) w += aff.wt(b);
  return w;
}

std::string encode(const Path& p) {
  if (p.entries.empty()) return "ground";
  std::string out;
  for (auto it = p.entries.rbegin(); it != p.entries.rend(); ++it) {
    if (it != p.entries.rbegin()) out += "⊗";
    out += to_string(*it);
  }
  return out;
}

std::optional<ClassicalPath> classical_path_f(int i, const ClassicalPath& p, int margin) {
  return act(false, i, p, margin);
}
std::optional<ClassicalPath> classical_path_e(int i, const ClassicalPath& p, int margin) {
  return act(true, i, p, margin);
}

ClassicalWeight classical_path_wt(const ClassicalPath& p) {
  const auto crystal = p.lambda.crystal();
  ClassicalWeight w = p.lambda.weight().classical();
  for (const auto& b : p.entries) w += crystal.wt(b);
  return w;
}

std::string encode(const ClassicalPath& p) {
  if (p.entries.empty()) return "ground";
  std::string out;
  for (auto it = p.entries.rbegin(); it != p.entries.rend(); ++it) {
    if (it != p.entries.rbegin()) out += "⊗";
    out += to_string(*it);
  }
  return out;
}

ClassicalPath forget_grades(const Path& p) {
  ClassicalPath out{p.lambda, {}};
  for (const auto& b : p.entries) out.entries.push_back(b.base);
  while (!out.entries.empty() && out.entries.back() == p.lambda.minimal()) out.entries.pop_back();
  return out;
}

int ClassicalPathCrystal::eps(int i, const ClassicalPath& p) const {
  return detail::tail_stats(p.lambda.crystal(), i, detail::head_stats(p.lambda, i), p.entries, p.lambda.minimal(),
                            margin_)
      .eps;
}

int ClassicalPathCrystal::phi(int i, const ClassicalPath& p) const {
  return detail::tail_stats(p.lambda.crystal(), i, detail::head_stats(p.lambda, i), p.entries, p.lambda.minimal(),
                            margin_)
      .phi;
}

CrystalGraph path_component(const Lambda& lambda, const ComponentOptions& options, int margin) {
  const AffinePathCrystal crystal(lambda, margin);
  const auto elems = bfs_elements(crystal, crystal.ground(), options);
  for (const auto& p : elems) {
    std::string why;
    if (!satisfies_affine_conditions(p, &why)) {
      throw InvariantError("path " + encode(p) + " violates the affine path conditions: " + why);
    }
  }
  return induced_graph(crystal, elems, 0, options.jobs);
}

std::map<Weight, std::size_t> multiplicity_table(const Lambda& lambda, const ComponentOptions& options) {
  return multiplicities(path_component(lambda, options));
}

}  // namespace ywall
