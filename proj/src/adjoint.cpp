#include "ywall/adjoint.hpp"

#include <cstdlib>
#include <deque>
#include <map>
#include <set>

#include "ywall/error.hpp"

namespace ywall {

namespace {

void check_color(int i) {
  if (i != 0 && i != 1) throw DomainError("colour must be 0 or 1, got " + std::to_string(i));
}

}  // namespace

std::string to_string(const Pair& b) { return "(" + std::to_string(b.x) + "," + std::to_string(b.y) + ")"; }

AdjointCrystal AdjointCrystal::finite(int l) {
  if (l < 1) throw DomainError("level must be positive, got " + std::to_string(l));
  return AdjointCrystal(l);
}

AdjointCrystal AdjointCrystal::limit() { return AdjointCrystal(std::nullopt); }

bool AdjointCrystal::contains(const Pair& b) const {
  if (!level_) return true;
  return b.x >= 0 && b.y >= 0 && b.x + b.y <= *level_;
}

int AdjointCrystal::eps(int i, const Pair& b) const {
  check_color(i);
  if (i == 1) return b.y;
  return bound() - 2 * b.y + std::abs(b.x - b.y);
}

int AdjointCrystal::phi(int i, const Pair& b) const {
  check_color(i);
  if (i == 1) return b.x;
  return bound() - 2 * b.x + std::abs(b.x - b.y);
}

std::optional<Pair> AdjointCrystal::e(int i, const Pair& b) const {
  check_color(i);
  Pair r = i == 1 ? Pair{b.x + 1, b.y - 1} : (b.x > b.y ? Pair{b.x - 1, b.y} : Pair{b.x, b.y + 1});
  if (!contains(r)) return std::nullopt;
  return r;
}

std::optional<Pair> AdjointCrystal::f(int i, const Pair& b) const {
  check_color(i);
  Pair r = i == 1 ? Pair{b.x - 1, b.y + 1} : (b.x >= b.y ? Pair{b.x + 1, b.y} : Pair{b.x, b.y - 1});
  if (!contains(r)) return std::nullopt;
  return r;
}

ClassicalWeight AdjointCrystal::wt(const Pair& b) const { return {2 * (b.y - b.x), b.x - b.y}; }

std::vector<Pair> AdjointCrystal::elements() const {
  if (!level_) throw DomainError("the limit crystal is infinite");
  std::vector<Pair> out;
  for (int x = 0; x <= *level_; ++x) {
    for (int y = 0; x + y <= *level_; ++y) out.push_back({x, y});
  }
  return out;
}

Pair minimal_vector(int l, int a) {
  dominant(l, a);
  return {a, a};
}

Pair coherent_map(int l, int a, const Pair& b) {
  dominant(l, a);
  return {b.x - a, b.y - a};
}

Lambda Lambda::finite(int l, int a) {
  dominant(l, a);
  return {l, a};
}

Weight Lambda::weight() const { return level ? dominant(*level, a) : Weight{}; }

AdjointCrystal Lambda::crystal() const { return level ? AdjointCrystal::finite(*level) : AdjointCrystal::limit(); }

std::string to_string(const Lambda& lambda) {
  if (!lambda.level) return "inf";
  return "l=" + std::to_string(*lambda.level) + ",a=" + std::to_string(lambda.a);
}

bool PerfectReport::passed() const {
  for (const auto& c : checks) {
    if (c.in_scope && !c.passed) return false;
  }
  return true;
}

namespace {

// Classical weights w with wt(B) contained in w - Z>=0 r and exactly one
// element of weight w.
std::vector<ClassicalWeight> extremal_weights(const std::map<ClassicalWeight, int>& mult, ClassicalWeight r) {
  std::vector<ClassicalWeight> out;
  for (const auto& [w, n] : mult) {
    if (n != 1) continue;
    bool all = true;
    for (const auto& [v, _] : mult) {
      // v = w - k r with k >= 0
      const ClassicalWeight d = w - v;
      int k = 0;
      if (r.c0 != 0) {
        k = d.c0 / r.c0;
      } else {
        k = d.c1 / r.c1;
      }
      if (k < 0 || !(k * r == d)) {
        all = false;
        break;
      }
    }
    if (all) out.push_back(w);
  }
  return out;
}

std::string weight_list(const std::vector<ClassicalWeight>& ws) {
  std::string out = "{";
  for (std::size_t k = 0; k < ws.size(); ++k) {
    if (k) out += ", ";
    out += to_string(ws[k]);
  }
  return out + "}";
}

}  // namespace

PerfectReport verify_perfect(int l) {
  const auto crystal = AdjointCrystal::finite(l);
  const auto elems = crystal.elements();
  PerfectReport report;
  report.level = l;

  report.checks.push_back({"i", false, false, "out of scope (module existence)"});

  {
    // Undirected connectivity of B (x) B.
    TensorProduct<AdjointCrystal> tp(crystal);
    std::set<std::vector<Pair>> seen{{elems[0], elems[0]}};
    std::deque<std::vector<Pair>> queue{{elems[0], elems[0]}};
    while (!queue.empty()) {
      auto cur = queue.front();
      queue.pop_front();
      for (int i : kColors) {
        for (auto next : {tp.f(i, cur), tp.e(i, cur)}) {
          if (next && seen.insert(*next).second) queue.push_back(*next);
        }
      }
    }
    const std::size_t total = elems.size() * elems.size();
    report.checks.push_back({"ii", true, seen.size() == total,
                             "component of " + to_string(elems[0]) + "⊗" + to_string(elems[0]) + " has " +
                                 std::to_string(seen.size()) + " of " + std::to_string(total) + " elements"});
  }

  {
    std::map<ClassicalWeight, int> mult;
    for (const auto& b : elems) ++mult[crystal.wt(b)];
    const auto literal = extremal_weights(mult, kAlpha1.classical());
    report.checks.push_back({"iii", true, literal.size() == 1,
                             "weights w with #B_w = 1 and wt(B) in w - Z>=0 alpha_1: " + weight_list(literal)});
    const auto alt = extremal_weights(mult, kAlpha0.classical());
    report.alternative_iii_passed = alt.size() == 1;
    report.alternative_iii_detail = "weights w with #B_w = 1 and wt(B) in w - Z>=0 alpha_0: " + weight_list(alt);
  }

  {
    bool ok = true;
    std::string detail = "read as <c, eps(b)> = eps_0(b) + 2 eps_1(b) >= l";
    int least = -1;
    for (const auto& b : elems) {
      const int v = crystal.eps(0, b) + 2 * crystal.eps(1, b);
      if (least < 0 || v < least) least = v;
      if (v < l) {
        ok = false;
        detail += "; fails at " + to_string(b);
        break;
      }
    }
    detail += "; minimum " + std::to_string(least);
    report.checks.push_back({"iv", true, ok, detail});
  }

  {
    bool ok = true;
    std::string detail;
    for (int a = 0; 2 * a <= l; ++a) {
      const int l0 = l - 2 * a;
      std::vector<Pair> top;
      std::vector<Pair> low;
      for (const auto& b : elems) {
        if (crystal.eps(0, b) == l0 && crystal.eps(1, b) == a) top.push_back(b);
        if (crystal.phi(0, b) == l0 && crystal.phi(1, b) == a) low.push_back(b);
      }
      const bool unique = top.size() == 1 && low.size() == 1;
      if (!unique) {
        ok = false;
        detail += "lambda=" + to_string(dominant(l, a)) + " has " + std::to_string(top.size()) + " b^lambda and " +
                  std::to_string(low.size()) + " b_lambda; ";
      } else {
        if (top[0] == low[0]) report.minimal_vectors.push_back(low[0]);
      }
    }
    if (ok) detail = "unique b^lambda and b_lambda for every level-" + std::to_string(l) + " dominant weight";
    report.checks.push_back({"v", true, ok, detail});
  }
  return report;
}

}  // namespace ywall
