#pragma once

// Path realizations of B(lambda) and B(infinity): sequences
// ... (x) p_2 (x) p_1 (x) p_0 that agree with a constant tail beyond a finite
// prefix. Entries are stored with index 0 rightmost; the tail is implicit.
//
// Operators act on the infinite string by the tensor rule. The string is
// evaluated as  head (x) tail^margin (x) prefix,  where the head stands for
// the rest of the infinite tail: the highest weight vector u_lambda (eps = 0,
// phi = <h_i, lambda>) or, for B(infinity), a factor with eps = phi = 0.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ywall/adjoint.hpp"
#include "ywall/crystal.hpp"
#include "ywall/energy.hpp"
#include "ywall/graph.hpp"

namespace ywall {

inline constexpr int kDefaultMargin = 2;

struct Path {
  Lambda lambda;
  std::vector<AffineElem> entries;  // index 0 rightmost, trailing tail trimmed

  friend bool operator==(const Path&, const Path&) = default;
};

struct ClassicalPath {
  Lambda lambda;
  std::vector<Pair> entries;

  friend bool operator==(const ClassicalPath&, const ClassicalPath&) = default;
};

AffineElem tail_element(const Lambda& lambda);

Path ground_path(const Lambda& lambda);

// Grades non-positive, prefix trimmed, and H(p_{k+1} (x) p_k) = 0 for every
// k including the boundary with the tail. On failure `why` receives the
// reason.
bool satisfies_affine_conditions(const Path& p, std::string* why = nullptr);

std::optional<Path> path_f(int i, const Path& p, int margin = kDefaultMargin);
std::optional<Path> path_e(int i, const Path& p, int margin = kDefaultMargin);
int path_eps(int i, const Path& p, int margin = kDefaultMargin);
int path_phi(int i, const Path& p, int margin = kDefaultMargin);
// lambda + sum of entry weights (the tail has weight zero).
Weight path_wt(const Path& p);
// Entries deepest first joined by "⊗"; the empty prefix is "ground".
std::string encode(const Path& p);

std::optional<ClassicalPath> classical_path_f(int i, const ClassicalPath& p, int margin = kDefaultMargin);
std::optional<ClassicalPath> classical_path_e(int i, const ClassicalPath& p, int margin = kDefaultMargin);
ClassicalWeight classical_path_wt(const ClassicalPath& p);
std::string encode(const ClassicalPath& p);

ClassicalPath forget_grades(const Path& p);

class AffinePathCrystal {
 public:
  using element_type = Path;

  explicit AffinePathCrystal(Lambda lambda, int margin = kDefaultMargin) : lambda_(lambda), margin_(margin) {}

  const Lambda& lambda() const { return lambda_; }
  Path ground() const { return ground_path(lambda_); }

  std::optional<Path> e(int i, const Path& p) const { return path_e(i, p, margin_); }
  std::optional<Path> f(int i, const Path& p) const { return path_f(i, p, margin_); }
  int eps(int i, const Path& p) const { return path_eps(i, p, margin_); }
  int phi(int i, const Path& p) const { return path_phi(i, p, margin_); }
  Weight wt(const Path& p) const { return path_wt(p); }
  std::string encode(const Path& p) const { return ywall::encode(p); }

 private:
  Lambda lambda_;
  int margin_;
};

class ClassicalPathCrystal {
 public:
  using element_type = ClassicalPath;

  explicit ClassicalPathCrystal(Lambda lambda, int margin = kDefaultMargin) : lambda_(lambda), margin_(margin) {}

  ClassicalPath ground() const { return {lambda_, {}}; }

  std::optional<ClassicalPath> e(int i, const ClassicalPath& p) const { return classical_path_e(i, p, margin_); }
  std::optional<ClassicalPath> f(int i, const ClassicalPath& p) const { return classical_path_f(i, p, margin_); }
  int eps(int i, const ClassicalPath& p) const;
  int phi(int i, const ClassicalPath& p) const;
  ClassicalWeight wt(const ClassicalPath& p) const { return classical_path_wt(p); }
  std::string encode(const ClassicalPath& p) const { return ywall::encode(p); }

 private:
  Lambda lambda_;
  int margin_;
};

// Component of the ground path; every node is checked against the affine
// path conditions (InvariantError if one fails).
CrystalGraph path_component(const Lambda& lambda, const ComponentOptions& options, int margin = kDefaultMargin);

std::map<Weight, std::size_t> multiplicity_table(const Lambda& lambda, const ComponentOptions& options);

namespace detail {

// Factor order (leftmost first) of the evaluated string, without the head.
template <class E>
std::vector<E> factor_order(const std::vector<E>& entries, const E& tail, int margin) {
  std::vector<E> out(static_cast<std::size_t>(margin), tail);
  out.insert(out.end(), entries.rbegin(), entries.rend());
  return out;
}

template <CrystalOps C>
std::vector<FactorStats> string_stats(const C& c, int i, const FactorStats& head, const std::vector<element_t<C>>& factors) {
  std::vector<FactorStats> out{head};
  out.reserve(factors.size() + 1);
  for (const auto& b : factors) out.push_back(factor_stats(c, i, b));
  return out;
}

// Acts on the string head (x) factors. Returns the new entries (index 0
// rightmost, tail trimmed), or nullopt if the operator vanishes or would act
// on the head.
template <CrystalOps C>
std::optional<std::vector<element_t<C>>> act_on_tail(const C& c, bool raise, int i, const FactorStats& head,
                                                     const std::vector<element_t<C>>& entries,
                                                     const element_t<C>& tail, int margin) {
  auto factors = factor_order(entries, tail, margin);
  const auto st = string_stats(c, i, head, factors);
  const auto pos = raise ? fold_e_position(st) : fold_f_position(st);
  if (!pos || *pos == 0) return std::nullopt;
  auto& target = factors[*pos - 1];
  auto moved = raise ? c.e(i, target) : c.f(i, target);
  if (!moved) return std::nullopt;
  target = *moved;
  std::vector<element_t<C>> out(factors.rbegin(), factors.rend());
  while (!out.empty() && out.back() == tail) out.pop_back();
  return out;
}

template <CrystalOps C>
StringStats tail_stats(const C& c, int i, const FactorStats& head, const std::vector<element_t<C>>& entries,
                       const element_t<C>& tail, int margin) {
  return fold_stats(string_stats(c, i, head, factor_order(entries, tail, margin)));
}

FactorStats head_stats(const Lambda& lambda, int i);

}  // namespace detail

}  // namespace ywall
