#pragma once

// Generic crystal machinery: the CrystalOps concept, n-fold tensor products,
// affinization and the pointwise axiom checker.

#include <array>
#include <concepts>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "ywall/weight.hpp"

namespace ywall {

inline constexpr std::array<int, 2> kColors{0, 1};

// epsilon_i / phi_i may take the value -infinity (only the one-element
// crystals T_lambda do). Arithmetic on it is absorbing.
inline constexpr int kMinusInfinity = std::numeric_limits<int>::min();

constexpr int ext_add(int a, int b) {
  return (a == kMinusInfinity || b == kMinusInfinity) ? kMinusInfinity : a + b;
}

template <class C>
concept CrystalOps = requires(const C& c, const typename C::element_type& b, int i) {
  typename C::element_type;
  { c.e(i, b) } -> std::same_as<std::optional<typename C::element_type>>;
  { c.f(i, b) } -> std::same_as<std::optional<typename C::element_type>>;
  { c.eps(i, b) } -> std::convertible_to<int>;
  { c.phi(i, b) } -> std::convertible_to<int>;
  { as_weight(c.wt(b)) } -> std::same_as<Weight>;
  { c.encode(b) } -> std::convertible_to<std::string>;
};

template <CrystalOps C>
using element_t = typename C::element_type;

template <CrystalOps C>
inline constexpr bool is_classical_v =
    std::is_same_v<std::remove_cvref_t<decltype(std::declval<const C&>().wt(
                       std::declval<const element_t<C>&>()))>,
                   ClassicalWeight>;

// ---------------------------------------------------------------------------
// Tensor rule on a string of factors b_0 (x) b_1 (x) ... (x) b_{n-1}, leftmost
// first, for a fixed colour i. Only the per-factor data below matters.

struct FactorStats {
  int eps = 0;
  int phi = 0;
  int pairing = 0;  // <h_i, wt(b)>
};

struct StringStats {
  int eps = 0;
  int phi = 0;

  friend constexpr bool operator==(const StringStats&, const StringStats&) = default;
};

// epsilon/phi of the whole string by folding the two-factor max formulas
// left-associatively. The empty string has eps = phi = 0.
StringStats fold_stats(std::span<const FactorStats> factors);

// Same quantities from the signature rule: write -^eps +^phi per factor,
// cancel adjacent (+,-) pairs, count survivors. Requires finite, non-negative
// eps and phi on every factor (throws DomainError otherwise).
StringStats signature_stats(std::span<const FactorStats> factors);

// Factor on which f_i / e_i acts according to the iterated two-factor rule.
// nullopt only for the empty string; the factor-level operator may still
// vanish at the returned position.
std::optional<std::size_t> fold_f_position(std::span<const FactorStats> factors);
std::optional<std::size_t> fold_e_position(std::span<const FactorStats> factors);

// Factor holding the leftmost surviving + (resp. rightmost surviving -) after
// bracket cancellation; nullopt when none survives.
std::optional<std::size_t> signature_f_position(std::span<const FactorStats> factors);
std::optional<std::size_t> signature_e_position(std::span<const FactorStats> factors);

// Reduced signature, e.g. "-+++++++".
std::string reduced_signature(std::span<const FactorStats> factors);

enum class TensorRule { kFold, kSignature };

template <CrystalOps C>
FactorStats factor_stats(const C& c, int i, const element_t<C>& b) {
  return {c.eps(i, b), c.phi(i, b), pair(i, c.wt(b))};
}

// B^{(x) n} for a single component crystal B, strings of any length.
template <CrystalOps C>
class TensorProduct {
 public:
  using element_type = std::vector<element_t<C>>;
  using weight_type = std::remove_cvref_t<decltype(std::declval<const C&>().wt(
      std::declval<const element_t<C>&>()))>;

  explicit TensorProduct(C base, TensorRule rule = TensorRule::kFold)
      : base_(std::move(base)), rule_(rule) {}

  const C& base() const { return base_; }
  TensorRule rule() const { return rule_; }

  std::vector<FactorStats> stats(int i, const element_type& s) const {
    std::vector<FactorStats> out;
    out.reserve(s.size());
    for (const auto& b : s) out.push_back(factor_stats(base_, i, b));
    return out;
  }

  int eps(int i, const element_type& s) const {
    auto st = stats(i, s);
    return rule_ == TensorRule::kFold ? fold_stats(st).eps : signature_stats(st).eps;
  }
  int phi(int i, const element_type& s) const {
    auto st = stats(i, s);
    return rule_ == TensorRule::kFold ? fold_stats(st).phi : signature_stats(st).phi;
  }

  std::optional<element_type> f(int i, const element_type& s) const {
    auto st = stats(i, s);
    auto pos = rule_ == TensorRule::kFold ? fold_f_position(st) : signature_f_position(st);
    return act(pos, s, [&](const auto& b) { return base_.f(i, b); });
  }
  std::optional<element_type> e(int i, const element_type& s) const {
    auto st = stats(i, s);
    auto pos = rule_ == TensorRule::kFold ? fold_e_position(st) : signature_e_position(st);
    return act(pos, s, [&](const auto& b) { return base_.e(i, b); });
  }

  weight_type wt(const element_type& s) const {
    weight_type w{};
    for (const auto& b : s) w += base_.wt(b);
    return w;
  }

  std::string encode(const element_type& s) const {
    std::string out;
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (k) out += "⊗";
      out += base_.encode(s[k]);
    }
    return out;
  }

 private:
  template <class Op>
  static std::optional<element_type> act(std::optional<std::size_t> pos, const element_type& s, Op op) {
    if (!pos) return std::nullopt;
    auto moved = op(s[*pos]);
    if (!moved) return std::nullopt;
    element_type out = s;
    out[*pos] = *moved;
    return out;
  }

  C base_;
  TensorRule rule_;
};

// ---------------------------------------------------------------------------
// Affinization b(m).

template <class E>
struct Graded {
  E base{};
  int grade = 0;

  friend constexpr auto operator<=>(const Graded&, const Graded&) = default;
};

// wt(b(m)) = wt(b) + m (delta/2): e_0 raises the grade by one and alpha_0
// carries exactly one delta/2, so this is the normalization under which
// wt(e_0 x) = wt(x) + alpha_0 holds.
template <CrystalOps C>
class Affinization {
 public:
  using element_type = Graded<element_t<C>>;

  explicit Affinization(C base) : base_(std::move(base)) {}

  const C& base() const { return base_; }

  int eps(int i, const element_type& b) const { return base_.eps(i, b.base); }
  int phi(int i, const element_type& b) const { return base_.phi(i, b.base); }

  std::optional<element_type> f(int i, const element_type& b) const {
    auto r = base_.f(i, b.base);
    if (!r) return std::nullopt;
    return element_type{*r, i == 0 ? b.grade - 1 : b.grade};
  }
  std::optional<element_type> e(int i, const element_type& b) const {
    auto r = base_.e(i, b.base);
    if (!r) return std::nullopt;
    return element_type{*r, i == 0 ? b.grade + 1 : b.grade};
  }

  Weight wt(const element_type& b) const { return as_weight(base_.wt(b.base)) + b.grade * kHalfDelta; }

  std::string encode(const element_type& b) const {
    return base_.encode(b.base) + "(" + std::to_string(b.grade) + ")";
  }

 private:
  C base_;
};

// ---------------------------------------------------------------------------
// Pointwise check of the seven crystal axioms.

struct AxiomViolation {
  int condition = 0;  // 1..7
  int color = 0;
  std::string element;
  std::string detail;
};

struct AxiomReport {
  std::size_t elements_checked = 0;
  std::vector<AxiomViolation> violations;

  bool ok() const { return violations.empty(); }
};

template <CrystalOps C>
AxiomReport axiom_check(const C& c, std::span<const element_t<C>> elems) {
  AxiomReport report;
  auto root_for = [](int i) {
    if constexpr (is_classical_v<C>) {
      return simple_root(i).classical();
    } else {
      return simple_root(i);
    }
  };
  auto fail = [&](int cond, int i, const element_t<C>& b, std::string detail) {
    report.violations.push_back({cond, i, c.encode(b), std::move(detail)});
  };

  for (const auto& b : elems) {
    ++report.elements_checked;
    for (int i : kColors) {
      const int eps = c.eps(i, b);
      const int phi = c.phi(i, b);
      const auto w = c.wt(b);
      const auto up = c.e(i, b);
      const auto down = c.f(i, b);

      if (phi != kMinusInfinity && eps != kMinusInfinity && phi != eps + pair(i, w)) {
        fail(1, i, b,
             "phi=" + std::to_string(phi) + " eps=" + std::to_string(eps) +
                 " <h,wt>=" + std::to_string(pair(i, w)));
      }
      if ((phi == kMinusInfinity) != (eps == kMinusInfinity)) {
        fail(1, i, b, "exactly one of eps/phi is -infinity");
      }
      if (up) {
        if (!(c.wt(*up) == w + root_for(i))) fail(2, i, b, "wt(e b) != wt(b) + alpha");
        if (c.eps(i, *up) != ext_add(eps, -1) || c.phi(i, *up) != ext_add(phi, 1)) {
          fail(4, i, b, "eps/phi do not shift by -1/+1 under e");
        }
        auto back = c.f(i, *up);
        if (!back || !(*back == b)) fail(6, i, b, "f(e b) != b");
      }
      if (down) {
        if (!(c.wt(*down) == w - root_for(i))) fail(3, i, b, "wt(f b) != wt(b) - alpha");
        if (c.eps(i, *down) != ext_add(eps, 1) || c.phi(i, *down) != ext_add(phi, -1)) {
          fail(5, i, b, "eps/phi do not shift by +1/-1 under f");
        }
        auto back = c.e(i, *down);
        if (!back || !(*back == b)) fail(6, i, b, "e(f b) != b");
      }
      if (phi == kMinusInfinity && (up || down)) fail(7, i, b, "operator defined although phi = -infinity");
    }
  }
  return report;
}

}  // namespace ywall
