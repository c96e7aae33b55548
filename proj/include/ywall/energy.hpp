#pragma once

// Classical energy h on B (x) B for the adjoint crystal (finite or limit) and
// the affine energy H(b1(m) (x) b2(n)) = m - n - h(b1 (x) b2).

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ywall/adjoint.hpp"
#include "ywall/crystal.hpp"

namespace ywall {

using AffineElem = Graded<Pair>;

// "(x,y)(m)"
std::string to_string(const AffineElem& b);

int h_classical(const Pair& b1, const Pair& b2);
int H_affine(const AffineElem& a1, const AffineElem& a2);

// m_k - m_{k+1} forced by H((next)(-m_{k+1}) (x) (cur)(-m_k)) = 0, written
// out as the max expression of the affine path condition.
int required_grade_drop(const Pair& next, const Pair& cur);

using EnergyFunction = std::function<int(const Pair&, const Pair&)>;

struct EnergyViolation {
  std::string pair;  // "b1⊗b2"
  int color = 0;
  std::string detail;
};

struct EnergyReport {
  std::size_t pairs_checked = 0;
  std::size_t steps_checked = 0;
  std::vector<EnergyViolation> violations;

  bool ok() const { return violations.empty(); }
};

// Exhaustive check over B_ad(l) (x) B_ad(l) that e_1 preserves h and e_0
// changes it by +1 when it acts on the left factor and by -1 on the right.
// `h` defaults to h_classical; passing another function is for negative
// controls.
EnergyReport verify_energy_axioms(int l, const EnergyFunction& h = {});

// Breadth-first walks in B_aff (x) B_aff from every pair with grades inside
// [-window, window], `depth` edges deep, over both e and f steps that stay in
// the window; asserts H never changes along an edge.
EnergyReport verify_H_constancy(int l, int window, int depth, unsigned jobs = 1);

// H = 0 <=> m_k - m_{k+1} = required_grade_drop, exhaustive over pairs with
// grades in [-window, window].
EnergyReport verify_grade_condition(int l, int window);

}  // namespace ywall
