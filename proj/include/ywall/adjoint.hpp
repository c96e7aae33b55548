#pragma once

// The level-l adjoint crystal {(x,y) : x, y >= 0, x + y <= l} and its limit
// Z x Z, plus the one-element crystals T_lambda.

#include <optional>
#include <string>
#include <vector>

#include "ywall/crystal.hpp"
#include "ywall/weight.hpp"

namespace ywall {

struct Pair {
  int x = 0;
  int y = 0;

  friend constexpr auto operator<=>(const Pair&, const Pair&) = default;
};

using AdjointElem = Pair;
using LimitElem = Pair;

// "(x,y)"
std::string to_string(const Pair& b);

class AdjointCrystal {
 public:
  using element_type = Pair;

  // Throws DomainError unless l >= 1.
  static AdjointCrystal finite(int l);
  static AdjointCrystal limit();

  bool is_limit() const { return !level_; }
  std::optional<int> level() const { return level_; }

  bool contains(const Pair& b) const;

  int eps(int i, const Pair& b) const;
  int phi(int i, const Pair& b) const;
  std::optional<Pair> e(int i, const Pair& b) const;
  std::optional<Pair> f(int i, const Pair& b) const;
  ClassicalWeight wt(const Pair& b) const;
  std::string encode(const Pair& b) const { return to_string(b); }

  // All (l+1)(l+2)/2 elements ordered by (x, y). Throws DomainError for the
  // limit crystal.
  std::vector<Pair> elements() const;

 private:
  explicit AdjointCrystal(std::optional<int> level) : level_(level) {}

  int bound() const { return level_.value_or(0); }

  std::optional<int> level_;
};

// (a,a), the element with eps = phi = cl(lambda) for lambda = dominant(l, a).
Pair minimal_vector(int l, int a);

// Highest weight of a wall or path model: a level-l dominant weight
// (l - 2a) Lambda_0 + a Lambda_1, or the B(infinity) case.
struct Lambda {
  std::optional<int> level;  // nullopt for infinity
  int a = 0;

  // Throws DomainError unless l >= 1 and 0 <= a <= floor(l/2).
  static Lambda finite(int l, int a);
  static Lambda infinity() { return {}; }

  bool is_infinity() const { return !level; }
  Weight weight() const;  // zero for infinity
  Pair minimal() const { return {a, a}; }
  AdjointCrystal crystal() const;

  friend constexpr auto operator<=>(const Lambda&, const Lambda&) = default;
};

// "l=4,a=1" or "inf"
std::string to_string(const Lambda& lambda);

// T_lambda (x) b (x) T_{-lambda} -> Z x Z, b -> b - (a,a).
Pair coherent_map(int l, int a, const Pair& b);

// T_lambda: single element t with eps = phi = -infinity and wt(t) = lambda.
class TCrystal {
 public:
  struct Elem {
    friend constexpr bool operator==(const Elem&, const Elem&) = default;
  };
  using element_type = Elem;

  explicit TCrystal(Weight lambda) : lambda_(lambda) {}

  int eps(int, const Elem&) const { return kMinusInfinity; }
  int phi(int, const Elem&) const { return kMinusInfinity; }
  std::optional<Elem> e(int, const Elem&) const { return std::nullopt; }
  std::optional<Elem> f(int, const Elem&) const { return std::nullopt; }
  Weight wt(const Elem&) const { return lambda_; }
  std::string encode(const Elem&) const { return "T[" + to_string(lambda_) + "]"; }

 private:
  Weight lambda_;
};

struct PerfectCheck {
  std::string condition;  // "i" .. "v"
  bool in_scope = true;
  bool passed = false;
  std::string detail;
};

struct PerfectReport {
  int level = 0;
  std::vector<PerfectCheck> checks;
  std::vector<Pair> minimal_vectors;
  // Condition (iii) with the root set {alpha_0} in place of {alpha_i : i != 0}.
  bool alternative_iii_passed = false;
  std::string alternative_iii_detail;

  // True iff every in-scope condition passed.
  bool passed() const;
};

// Exhaustive check of conditions (ii)-(v) of perfectness at level l; (i) is
// listed but not checked. Throws DomainError unless l >= 1.
PerfectReport verify_perfect(int l);

}  // namespace ywall
