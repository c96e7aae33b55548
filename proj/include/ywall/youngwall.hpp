#pragma once

// Young wall columns <s, sbar, tbar>, walls built from them, and the two
// crystal structures on walls: one transported from paths through psi, and
// one computed from removable/admissible blocks (the signature rule).

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ywall/adjoint.hpp"
#include "ywall/energy.hpp"
#include "ywall/graph.hpp"
#include "ywall/paths.hpp"

namespace ywall {

struct Column {
  int s = 0;
  int sbar = 0;
  int tbar = 0;

  // Number of 1-blocks above the ground-state line.
  constexpr int t() const { return tbar + s - sbar; }

  friend constexpr auto operator<=>(const Column&, const Column&) = default;
};

// "⟨s,sbar,tbar⟩"
std::string to_string(const Column& c);

// v = sbar = tbar becomes min(v, 2l - v); other inputs pass through.
std::pair<int, int> normalize(int sbar, int tbar, int l);

// Columns over a fixed level (nullopt: the B(infinity) model).
class ColumnModel {
 public:
  explicit ColumnModel(std::optional<int> level);
  static ColumnModel of(const Lambda& lambda) { return ColumnModel(lambda.level); }

  std::optional<int> level() const { return level_; }
  const AdjointCrystal& crystal() const { return crystal_; }

  // s >= 0, tbar even, t even and non-negative; at finite level also either
  // 0 <= tbar <= sbar <= l or l <= sbar < tbar <= 2l. Valid columns are
  // normalized.
  bool is_valid(const Column& c) const;
  Column normalize(const Column& c) const;

  // Throws DomainError on invalid columns.
  AffineElem psi(const Column& c) const;
  // Throws DomainError if the grade is positive or the base is not in the
  // crystal. The result need not be valid (see is_valid).
  Column phi_inv(const AffineElem& b) const;

  // psi-conjugates of the affinized crystal operators; nullopt when the
  // operator vanishes or the image is not a valid column.
  std::optional<Column> f(int i, const Column& c) const;
  std::optional<Column> e(int i, const Column& c) const;

  // Piecewise energy tables in column coordinates and
  // H(psi(c) (x) psi(c')) = -s + s' - h(c, c').
  int h(const Column& c, const Column& c2) const;
  int H(const Column& c, const Column& c2) const;

  // Basic ground-state column <0, 2a, 2a> (<0, 0, 0> at infinity).
  Column ground(int a) const;

 private:
  std::optional<int> level_;
  AdjointCrystal crystal_;
};

struct Wall {
  Lambda lambda;
  std::vector<Column> columns;  // columns[0] rightmost, trailing ground columns trimmed

  friend bool operator==(const Wall&, const Wall&) = default;
};

Column ground_column(const Lambda& lambda);
Wall ground_wall(const Lambda& lambda);
Wall trimmed(Wall w);

// Columns deepest first joined by "⊗"; the ground wall is "G".
std::string encode(const Wall& w);

enum class WallClass { kNotWall, kWall, kReducedWall };

std::string to_string(WallClass c);

// H(C_{k+1} (x) C_k) for k = 0 .. N-1, the last one against the ground
// column. Throws DomainError if a column is invalid.
std::vector<int> wall_energies(const Wall& w);
WallClass wall_validate(const Wall& w);

Path wall_to_path(const Wall& w);
// Throws DomainError if some entry maps to an invalid column.
Wall path_to_wall(const Path& p);

enum class WallStatus { kOk, kNull, kNotWall };

struct WallResult {
  WallStatus status = WallStatus::kNull;
  std::optional<Wall> wall;
};

// Tensor-rule operators transported through psi. kNotWall when the image
// leaves the set of Young walls.
WallResult wall_f(int i, const Wall& w, int margin = kDefaultMargin);
WallResult wall_e(int i, const Wall& w, int margin = kDefaultMargin);
int wall_eps(int i, const Wall& w);
int wall_phi(int i, const Wall& w);
// lambda - k0 alpha_0 - (k1/2) alpha_1 with k0 = sum s, k1 = sum t.
Weight wall_wt(const Wall& w);

inline constexpr int kOracleCap = 64;

struct ColumnSignature {
  int minus = 0;           // removable blocks (i = 0) or pairs (i = 1)
  int plus = 0;            // admissible slots
  bool saturated = false;  // the addition count reached the cap

  friend constexpr bool operator==(const ColumnSignature&, const ColumnSignature&) = default;
};

// "--++++"
std::string to_string(const ColumnSignature& sig);

// Signatures of columns 0 .. N (column N is the first ground column; deeper
// ones contribute nothing), found by repeatedly adding or removing i-blocks
// in one column and keeping the wall a Young wall.
std::vector<ColumnSignature> signature_oracle(int i, const Wall& w, int cap = kOracleCap);

// Concatenation from the deepest column to column 0 after cancelling every
// (+,-) pair.
std::string reduced_signature(const std::vector<ColumnSignature>& sigs);

std::optional<Wall> oracle_f(int i, const Wall& w, int cap = kOracleCap);
std::optional<Wall> oracle_e(int i, const Wall& w, int cap = kOracleCap);

class WallCrystal {
 public:
  using element_type = Wall;

  explicit WallCrystal(Lambda lambda, int margin = kDefaultMargin) : lambda_(lambda), margin_(margin) {}

  Wall ground() const { return ground_wall(lambda_); }

  std::optional<Wall> e(int i, const Wall& w) const { return wall_e(i, w, margin_).wall; }
  std::optional<Wall> f(int i, const Wall& w) const { return wall_f(i, w, margin_).wall; }
  int eps(int i, const Wall& w) const { return wall_eps(i, w); }
  int phi(int i, const Wall& w) const { return wall_phi(i, w); }
  Weight wt(const Wall& w) const { return wall_wt(w); }
  std::string encode(const Wall& w) const { return ywall::encode(w); }

 private:
  Lambda lambda_;
  int margin_;
};

// Operators positioned by signature_oracle. eps/phi are the surviving counts,
// which saturate at the cap where the model has unboundedly many slots.
class OracleWallCrystal {
 public:
  using element_type = Wall;

  explicit OracleWallCrystal(Lambda lambda, int cap = kOracleCap) : lambda_(lambda), cap_(cap) {}

  Wall ground() const { return ground_wall(lambda_); }

  std::optional<Wall> e(int i, const Wall& w) const { return oracle_e(i, w, cap_); }
  std::optional<Wall> f(int i, const Wall& w) const { return oracle_f(i, w, cap_); }
  int eps(int i, const Wall& w) const;
  int phi(int i, const Wall& w) const;
  Weight wt(const Wall& w) const { return wall_wt(w); }
  std::string encode(const Wall& w) const { return ywall::encode(w); }

 private:
  Lambda lambda_;
  int cap_;
};

// Component of the ground wall under the oracle operators (reduced walls).
CrystalGraph reduced_wall_component(const Lambda& lambda, const ComponentOptions& options);

// Young walls reachable from the ground wall by at most `depth` single
// block additions (a 0-block or a pair of 1-blocks in any column) that keep
// the Young wall condition. Breadth-first order.
std::vector<Wall> enumerate_walls(const Lambda& lambda, int depth, std::size_t node_cap = 1'000'000);

// Graph on enumerate_walls with the oracle f-edges between its members.
CrystalGraph all_wall_graph(const Lambda& lambda, int depth, std::size_t node_cap = 1'000'000, unsigned jobs = 1);

// Block pictures; columns are aligned on the ground-state line. Throws
// DomainError at infinity.
std::vector<std::string> render_rows(const Column& c, const Lambda& lambda);
std::string render_ascii(const Column& c, const Lambda& lambda);
std::string render_ascii(const Wall& w);

}  // namespace ywall
