#include <algorithm>
#include <vector>

#include "ywall/crystal.hpp"
#include "ywall/error.hpp"

namespace ywall {

namespace {

// Prefix folds: prefix_phi[k] = phi(b_0 (x) ... (x) b_k).
std::vector<int> prefix_phi(std::span<const FactorStats> factors) {
  std::vector<int> out(factors.size());
  for (std::size_t k = 0; k < factors.size(); ++k) {
    out[k] = k == 0 ? factors[0].phi
                    : std::max(factors[k].phi, ext_add(out[k - 1], factors[k].pairing));
  }
  return out;
}

struct Mark {
  bool plus;
  std::size_t factor;
};

// Surviving signs after cancelling every (+,-) pair, left to right.
std::vector<Mark> reduce(std::span<const FactorStats> factors) {
  std::vector<Mark> stack;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    const auto& st = factors[k];
    if (st.eps < 0 || st.phi < 0) {
      throw DomainError("signature rule needs finite non-negative eps/phi on every factor");
    }
    for (int n = 0; n < st.eps; ++n) {
      if (!stack.empty() && stack.back().plus) {
        stack.pop_back();
      } else {
        stack.push_back({false, k});
      }
    }
    for (int n = 0; n < st.phi; ++n) stack.push_back({true, k});
  }
  return stack;
}

}  // namespace

StringStats fold_stats(std::span<const FactorStats> factors) {
  if (factors.empty()) return {};
  StringStats acc{factors[0].eps, factors[0].phi};
  int pairing = factors[0].pairing;
  for (std::size_t k = 1; k < factors.size(); ++k) {
    const auto& b = factors[k];
    acc.eps = std::max(acc.eps, ext_add(b.eps, -pairing));
    acc.phi = std::max(b.phi, ext_add(acc.phi, b.pairing));
    pairing += b.pairing;
  }
  return acc;
}

StringStats signature_stats(std::span<const FactorStats> factors) {
  StringStats out;
  for (const auto& m : reduce(factors)) (m.plus ? out.phi : out.eps) += 1;
  return out;
}

std::optional<std::size_t> fold_f_position(std::span<const FactorStats> factors) {
  if (factors.empty()) return std::nullopt;
  const auto phis = prefix_phi(factors);
  std::size_t k = factors.size() - 1;
  // f(X (x) b) = f X (x) b iff phi(X) > eps(b).
  while (k > 0 && phis[k - 1] > factors[k].eps) --k;
  return k;
}

std::optional<std::size_t> fold_e_position(std::span<const FactorStats> factors) {
  if (factors.empty()) return std::nullopt;
  const auto phis = prefix_phi(factors);
  std::size_t k = factors.size() - 1;
  // e(X (x) b) = e X (x) b iff phi(X) >= eps(b).
  while (k > 0 && phis[k - 1] >= factors[k].eps) --k;
  return k;
}

std::optional<std::size_t> signature_f_position(std::span<const FactorStats> factors) {
  for (const auto& m : reduce(factors)) {
    if (m.plus) return m.factor;
  }
  return std::nullopt;
}

std::optional<std::size_t> signature_e_position(std::span<const FactorStats> factors) {
  auto marks = reduce(factors);
  for (auto it = marks.rbegin(); it != marks.rend(); ++it) {
    if (!it->plus) return it->factor;
  }
  return std::nullopt;
}

std::string reduced_signature(std::span<const FactorStats> factors) {
  std::string out;
  for (const auto& m : reduce(factors)) out += m.plus ? '+' : '-';
  return out;
}

}  // namespace ywall
