#include <doctest.h>

#include "ywall/error.hpp"
#include "ywall/paths.hpp"
#include "ywall/youngwall.hpp"

using namespace ywall;

namespace {

// Bracket rule written out on  u (x) tail^k (x) p_{N-1} (x) ... (x) p_0,
// where u is a highest weight factor (eps = 0, phi = <h_i, lambda>).
std::optional<Path> naive(bool raise, int i, const Path& p, int k) {
  const auto c = p.lambda.crystal();
  const auto tail = tail_element(p.lambda);
  std::vector<AffineElem> factors(static_cast<std::size_t>(k), tail);
  factors.insert(factors.end(), p.entries.rbegin(), p.entries.rend());

  struct Sign {
    bool plus;
    int factor;  // -1 for u
  };
  std::vector<Sign> signs;
  auto push = [&](int eps, int phi, int who) {
    for (int n = 0; n < eps; ++n) {
      if (!signs.empty() && signs.back().plus) {
        signs.pop_back();
      } else {
        signs.push_back({false, who});
      }
    }
    for (int n = 0; n < phi; ++n) signs.push_back({true, who});
  };
  push(0, pair(i, p.lambda.weight()), -1);
  for (std::size_t n = 0; n < factors.size(); ++n) {
    push(c.eps(i, factors[n].base), c.phi(i, factors[n].base), static_cast<int>(n));
  }

  int target = -2;
  if (raise) {
    for (auto it = signs.rbegin(); it != signs.rend(); ++it) {
      if (!it->plus) {
        target = it->factor;
        break;
      }
    }
  } else {
    for (const auto& s : signs) {
      if (s.plus) {
        target = s.factor;
        break;
      }
    }
  }
  if (target < 0) return std::nullopt;

  const Affinization<AdjointCrystal> aff(c);
  auto& b = factors[static_cast<std::size_t>(target)];
  const auto moved = raise ? aff.e(i, b) : aff.f(i, b);
  if (!moved || moved->grade > 0) return std::nullopt;
  b = *moved;
  Path out{p.lambda, {factors.rbegin(), factors.rend()}};
  while (!out.entries.empty() && out.entries.back() == tail) out.entries.pop_back();
  return out;
}

ComponentOptions depth(int d) {
  ComponentOptions o;
  o.depth = d;
  return o;
}

}  // namespace

TEST_CASE("ground paths") {
  CHECK(tail_element(Lambda::finite(4, 1)) == AffineElem{{1, 1}, 0});
  CHECK(tail_element(Lambda::infinity()) == AffineElem{{0, 0}, 0});
  CHECK(ground_path(Lambda::finite(4, 1)).entries.empty());
  CHECK(encode(ground_path(Lambda::finite(4, 1))) == "ground");
  CHECK(path_wt(ground_path(Lambda::finite(4, 1))) == dominant(4, 1));
  CHECK(satisfies_affine_conditions(ground_path(Lambda::infinity())));
}

TEST_CASE("first steps") {
  const auto lam = Lambda::finite(4, 0);
  const auto f = path_f(0, ground_path(lam));
  REQUIRE(f);
  CHECK(f->entries == std::vector<AffineElem>{{{1, 0}, -1}});
  CHECK(encode(*f) == "(1,0)(-1)");
  for (int l = 1; l <= 4; ++l) {
    const auto g = ground_path(Lambda::finite(l, 0));
    CHECK_FALSE(path_e(1, g));
    CHECK_FALSE(path_e(0, g));
    CHECK(path_eps(0, g) == 0);
    CHECK(path_phi(0, g) == l);
  }
}

TEST_CASE("affine path conditions") {
  const auto lam = Lambda::finite(4, 1);
  std::string why;
  CHECK_FALSE(satisfies_affine_conditions({lam, {{{1, 1}, 0}}}, &why));
  CHECK(why.find("tail") != std::string::npos);
  CHECK_FALSE(satisfies_affine_conditions({lam, {{{1, 1}, 1}, {{0, 0}, 0}}}, &why));
  CHECK_FALSE(satisfies_affine_conditions({lam, {{{0, 4}, 0}}}, &why));
  CHECK(why.find("H(") == 0);
  CHECK_FALSE(satisfies_affine_conditions({lam, {{{5, 0}, -3}}}, &why));
}

TEST_CASE("operators agree with the bracket rule on the explicit string") {
  for (const auto& lam : {Lambda::finite(1, 0), Lambda::finite(2, 1), Lambda::finite(3, 1), Lambda::finite(4, 1)}) {
    const AffinePathCrystal crystal(lam);
    for (const auto& p : bfs_elements(crystal, crystal.ground(), depth(6))) {
      for (int i : kColors) {
        CHECK(path_f(i, p) == naive(false, i, p, 3));
        CHECK(path_e(i, p) == naive(true, i, p, 3));
      }
    }
  }
}

TEST_CASE("operators do not depend on the tail margin") {
  for (const auto& lam : {Lambda::finite(2, 0), Lambda::finite(4, 1), Lambda::infinity()}) {
    const AffinePathCrystal crystal(lam);
    for (const auto& p : bfs_elements(crystal, crystal.ground(), depth(6))) {
      for (int i : kColors) {
        CHECK(path_f(i, p, 2) == path_f(i, p, 5));
        CHECK(path_e(i, p, 2) == path_e(i, p, 5));
        CHECK(path_eps(i, p, 2) == path_eps(i, p, 5));
        CHECK(pair(i, path_wt(p)) == path_phi(i, p) - path_eps(i, p));
      }
    }
  }
}

TEST_CASE("forgetting grades commutes with the operators") {
  const auto lam = Lambda::finite(3, 1);
  const AffinePathCrystal crystal(lam);
  const ClassicalPathCrystal classical(lam);
  for (const auto& p : bfs_elements(crystal, crystal.ground(), depth(6))) {
    const auto q = forget_grades(p);
    CHECK(classical_path_wt(q) == path_wt(p).classical());
    for (int i : kColors) {
      CHECK(classical.eps(i, q) == path_eps(i, p));
      if (auto f = path_f(i, p)) CHECK(classical_path_f(i, q) == forget_grades(*f));
    }
  }
}

TEST_CASE("path components") {
  CHECK(path_component(Lambda::finite(4, 1), depth(0)).size() == 1);
  const auto l1 = Lambda::finite(1, 0);
  CHECK(path_component(l1, depth(2)).size() == reduced_wall_component(l1, depth(2)).size());
  const auto g = path_component(Lambda::finite(4, 1), depth(1));
  CHECK(g.size() == 3);

  const auto table = multiplicity_table(Lambda::finite(4, 1), depth(1));
  CHECK(table.at(dominant(4, 1) - kAlpha0) == 1);
  CHECK(table.at(dominant(4, 1)) == 1);

  ComponentOptions capped = depth(40);
  capped.node_cap = 50;
  CHECK_THROWS_AS(path_component(Lambda::infinity(), capped), ResourceLimitError);
}
