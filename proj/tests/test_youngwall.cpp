#include <doctest.h>

#include <algorithm>
#include <set>

#include "ywall/error.hpp"
#include "ywall/youngwall.hpp"

using namespace ywall;

namespace {

const Lambda kLam = Lambda::finite(4, 1);

Wall example_wall() { return {kLam, {{7, 5, 6}, {3, 7, 8}}}; }

// Valid columns with s <= smax over the given model.
std::vector<Column> columns(const ColumnModel& m, int smax, int range) {
  std::vector<Column> out;
  for (int s = 0; s <= smax; ++s) {
    for (int sb = -range; sb <= range; ++sb) {
      for (int tb = -range; tb <= range; ++tb) {
        if (m.is_valid({s, sb, tb})) out.push_back({s, sb, tb});
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("column statistics") {
  const Column c{3, 5, 8};
  CHECK(c.t() == 6);
  CHECK(to_string(c) == "⟨3,5,8⟩");
  CHECK(normalize(6, 6, 4) == std::pair{2, 2});
  CHECK(normalize(8, 8, 4) == std::pair{0, 0});
  CHECK(normalize(3, 5, 4) == std::pair{3, 5});
}

TEST_CASE("psi and its inverse") {
  const auto m = ColumnModel::of(kLam);
  CHECK(m.psi({0, 2, 2}) == AffineElem{{1, 1}, 0});
  CHECK(m.psi({7, 5, 6}) == AffineElem{{1, 2}, -7});
  CHECK(m.phi_inv({{0, 0}, -4}) == Column{4, 0, 0});
  for (int a = 0; a <= 2; ++a) CHECK(m.phi_inv({{a, a}, 0}) == Column{0, 2 * a, 2 * a});
  CHECK_THROWS_AS(m.psi({1, 1, 3}), DomainError);
  CHECK_THROWS_AS(m.phi_inv({{0, 0}, 1}), DomainError);
  CHECK_THROWS_AS(m.phi_inv({{5, 0}, 0}), DomainError);

  const auto inf = ColumnModel::of(Lambda::infinity());
  CHECK(inf.psi({3, -3, -2}) == AffineElem{{1, 2}, -3});
  CHECK(inf.ground(0) == Column{0, 0, 0});
}

TEST_CASE("psi is injective and inverted by phi_inv") {
  for (std::optional<int> level : {std::optional<int>(1), std::optional<int>(2), std::optional<int>(4),
                                   std::optional<int>()}) {
    const ColumnModel m(level);
    const int range = level ? 2 * *level : 8;
    std::set<AffineElem> images;
    for (const auto& c : columns(m, 8, range)) {
      const auto p = m.psi(c);
      CHECK(images.insert(p).second);
      CHECK(m.phi_inv(p) == c);
      CHECK(m.normalize(c) == c);
    }
    if (level) {
      // The image is exactly the set of graded elements whose preimage
      // column is valid.
      std::size_t expected = 0;
      for (int g = 0; g <= 8; ++g) {
        for (const auto& b : m.crystal().elements()) expected += m.is_valid(m.phi_inv({b, -g})) ? 1 : 0;
      }
      CHECK(images.size() == expected);
    }
  }
}

TEST_CASE("column operators") {
  const auto m = ColumnModel::of(kLam);
  CHECK(m.f(0, {3, 7, 8}) == Column{4, 0, 0});
  CHECK(m.e(1, {7, 5, 6}) == Column{7, 3, 2});
  CHECK_FALSE(m.e(1, {0, 0, 0}));
  CHECK(m.e(0, {0, 0, 0}) == std::nullopt);  // would raise the grade above 0

  for (const auto& c : columns(m, 6, 8)) {
    for (int i : kColors) {
      if (auto f = m.f(i, c)) {
        CHECK(m.e(i, *f) == c);
        CHECK(f->s == c.s + (i == 0 ? 1 : 0));
      }
    }
  }
}

TEST_CASE("column energies") {
  const auto m = ColumnModel::of(kLam);
  CHECK(m.H({0, 4, 6}, {2, 4, 4}) == -2);
  CHECK(m.H({0, 4, 6}, {3, 5, 6}) == 0);
  CHECK(m.H({0, 4, 6}, {4, 6, 8}) == 2);
  CHECK(m.H({0, 4, 6}, {6, 4, 2}) == 2);

  for (std::optional<int> level : {std::optional<int>(3), std::optional<int>(4), std::optional<int>()}) {
    const ColumnModel cm(level);
    const auto cols = columns(cm, 3, level ? 2 * *level : 5);
    for (const auto& a : cols) {
      for (const auto& b : cols) CHECK(cm.H(a, b) == H_affine(cm.psi(a), cm.psi(b)));
    }
  }
}

TEST_CASE("wall validation") {
  CHECK(wall_validate(example_wall()) == WallClass::kWall);
  CHECK(wall_validate({kLam, {{2, 4, 4}, {0, 4, 6}}}) == WallClass::kNotWall);
  CHECK(wall_validate(ground_wall(kLam)) == WallClass::kReducedWall);
  CHECK(wall_energies(example_wall()) == std::vector<int>{0, 2});
  CHECK_THROWS_AS(wall_energies({kLam, {{1, 1, 3}}}), DomainError);
  CHECK(to_string(WallClass::kReducedWall) == "reduced_wall");
  CHECK(encode(example_wall()) == "⟨3,7,8⟩⊗⟨7,5,6⟩");
  CHECK(encode(ground_wall(kLam)) == "G");
  CHECK(trimmed({kLam, {{1, 2, 0}, {0, 2, 2}, {0, 2, 2}}}).columns.size() == 1);
}

TEST_CASE("crystal operators on the worked example") {
  const auto y = example_wall();
  const auto f0 = wall_f(0, y);
  REQUIRE(f0.status == WallStatus::kOk);
  CHECK(f0.wall->columns == std::vector<Column>{{7, 5, 6}, {4, 0, 0}});
  const auto e1 = wall_e(1, y);
  REQUIRE(e1.status == WallStatus::kOk);
  CHECK(e1.wall->columns == std::vector<Column>{{7, 3, 2}, {3, 7, 8}});
  CHECK(wall_eps(0, y) == 1);
  CHECK(wall_phi(0, y) == 7);
  CHECK(wall_eps(1, y) == 2);
  CHECK(wall_phi(1, y) == 1);
  CHECK(wall_wt(y) == kLam.weight() - 10 * kAlpha0 - 6 * kAlpha1);
  CHECK(pair(0, wall_wt(y)) == 6);

  CHECK(oracle_f(0, y) == f0.wall);
  CHECK(oracle_e(1, y) == e1.wall);

  CHECK(wall_e(0, ground_wall(kLam)).status == WallStatus::kNull);
  CHECK_THROWS_AS(wall_f(0, Wall{kLam, {{2, 4, 4}, {0, 4, 6}}}), DomainError);
}

TEST_CASE("signature oracle on the worked example") {
  const auto y = example_wall();
  auto text = [](const std::vector<ColumnSignature>& sigs) {
    std::vector<std::string> out;
    for (const auto& s : sigs) out.push_back(to_string(s));
    return out;
  };
  const auto s0 = signature_oracle(0, y);
  const auto s1 = signature_oracle(1, y);
  CHECK(text(s0) == std::vector<std::string>{"+++", "--++++", "+"});
  CHECK(text(s1) == std::vector<std::string>{"--+", "-", "+"});
  CHECK(reduced_signature(s0) == "-+++++++");
  CHECK(reduced_signature(s1) == "--+");
  for (const auto& s : s0) CHECK_FALSE(s.saturated);

  const auto g = signature_oracle(0, ground_wall(kLam));
  REQUIRE(g.size() == 1);
  // phi_i of the highest weight vector is <h_i, lambda>.
  CHECK(to_string(g[0]) == "++");
  CHECK(to_string(signature_oracle(1, ground_wall(kLam))[0]) == "+");
}

TEST_CASE("oracle saturates on the limit model") {
  const auto sig = signature_oracle(0, ground_wall(Lambda::infinity()), 8);
  REQUIRE_FALSE(sig.empty());
  CHECK(sig[0].saturated);
}

TEST_CASE("walls correspond to paths") {
  for (const auto& lam : {Lambda::finite(1, 0), Lambda::finite(3, 1), kLam, Lambda::infinity()}) {
    for (const auto& w : enumerate_walls(lam, 5)) {
      CHECK(wall_validate(w) != WallClass::kNotWall);
      const auto p = wall_to_path(w);
      std::string why;
      CHECK_MESSAGE(satisfies_affine_conditions(p, &why) == (wall_validate(w) == WallClass::kReducedWall), why);
      CHECK(path_to_wall(p) == w);
      CHECK(wall_wt(w) == path_wt(p));
    }
  }
}

TEST_CASE("tensor and oracle operators agree on reduced walls") {
  for (const auto& lam : {Lambda::finite(2, 0), Lambda::finite(2, 1), kLam, Lambda::infinity()}) {
    ComponentOptions o;
    o.depth = 5;
    const auto elems = bfs_elements(OracleWallCrystal(lam), ground_wall(lam), o);
    for (const auto& w : elems) {
      CHECK(wall_validate(w) == WallClass::kReducedWall);
      for (int i : kColors) {
        const auto t = wall_f(i, w);
        CHECK(t.status != WallStatus::kNotWall);
        CHECK(t.wall == oracle_f(i, w));
        CHECK(wall_e(i, w).wall == oracle_e(i, w));
        CHECK(pair(i, wall_wt(w)) == wall_phi(i, w) - wall_eps(i, w));
      }
    }
  }
}

TEST_CASE("both arrows leave the ground wall") {
  for (const auto& lam : {kLam, Lambda::infinity()}) {
    CHECK(wall_f(0, ground_wall(lam)).status == WallStatus::kOk);
    CHECK(wall_f(1, ground_wall(lam)).status == WallStatus::kOk);
  }
  CHECK(enumerate_walls(kLam, 0).size() == 1);
}

TEST_CASE("block pictures") {
  CHECK(render_ascii(Column{0, 2, 2}, kLam) == "+-G--+\n|0011|\n+--Z-+\n");

  const auto rows = render_rows({3, 5, 8}, kLam);
  const auto g = std::find(rows.begin(), rows.end(), "+-G--+");
  REQUIRE(g != rows.end());
  int zeros = 0;
  int ones = 0;
  for (auto it = rows.begin(); it != g; ++it) {
    zeros += static_cast<int>(std::count(it->begin(), it->end(), '0'));
    ones += static_cast<int>(std::count(it->begin(), it->end(), '1'));
  }
  CHECK(zeros == 3);
  CHECK(ones == 6);

  for (int l = 1; l <= 4; ++l) {
    const auto lam = Lambda::finite(l, 0);
    std::set<std::string> seen;
    const auto cols = columns(ColumnModel::of(lam), 8, 2 * l);
    for (const auto& c : cols) CHECK(seen.insert(render_ascii(c, lam)).second);
  }

  const auto pic = render_ascii(example_wall());
  CHECK(pic.find("Y1") != std::string::npos);
  CHECK(pic.find("Y0") != std::string::npos);
  CHECK_THROWS_AS(render_ascii(Column{}, Lambda::infinity()), DomainError);
}
