#include "ywall/youngwall.hpp"

#include <algorithm>
#include <unordered_set>

#include "ywall/error.hpp"

namespace ywall {

namespace {

bool even(int v) { return v % 2 == 0; }

}  // namespace

std::string to_string(const Column& c) {
  return "⟨" + std::to_string(c.s) + "," + std::to_string(c.sbar) + "," + std::to_string(c.tbar) + "⟩";
}

std::pair<int, int> normalize(int sbar, int tbar, int l) {
  if (sbar != tbar) return {sbar, tbar};
  const int v = std::min(sbar, 2 * l - sbar);
  return {v, v};
}

ColumnModel::ColumnModel(std::optional<int> level)
    : level_(level), crystal_(level ? AdjointCrystal::finite(*level) : AdjointCrystal::limit()) {}

bool ColumnModel::is_valid(const Column& c) const {
  if (c.s < 0 || !even(c.tbar) || !even(c.s - c.sbar) || c.t() < 0) return false;
  if (!level_) return true;
  const int l = *level_;
  if (c.sbar >= c.tbar) return c.tbar >= 0 && c.sbar <= l;
  return l <= c.sbar && c.tbar <= 2 * l;
}

Column ColumnModel::normalize(const Column& c) const {
  if (!level_) return c;
  auto [sbar, tbar] = ywall::normalize(c.sbar, c.tbar, *level_);
  return {c.s, sbar, tbar};
}

AffineElem ColumnModel::psi(const Column& c) const {
  if (!is_valid(c)) throw DomainError("invalid column " + to_string(c));
  if (c.sbar >= c.tbar) return {{c.sbar - c.tbar / 2, c.tbar / 2}, -c.s};
  const int l = level_.value_or(0);
  return {{l - c.tbar / 2, l - c.sbar + c.tbar / 2}, -c.s};
}

Column ColumnModel::phi_inv(const AffineElem& b) const {
  if (b.grade > 0) throw DomainError("positive grade in " + to_string(b));
  if (!crystal_.contains(b.base)) throw DomainError(to_string(b.base) + " is not in the crystal");
  const int m = -b.grade;
  const auto [x, y] = b.base;
  if (x >= y) return {m, x + y, 2 * y};
  const int l = level_.value_or(0);
  return {m, 2 * l - (x + y), 2 * (l - x)};
}

std::optional<Column> ColumnModel::f(int i, const Column& c) const {
  const Affinization<AdjointCrystal> aff(crystal_);
  auto r = aff.f(i, psi(c));
  if (!r) return std::nullopt;
  auto out = phi_inv(*r);
  if (!is_valid(out)) return std::nullopt;
  return out;
}

std::optional<Column> ColumnModel::e(int i, const Column& c) const {
  const Affinization<AdjointCrystal> aff(crystal_);
  auto r = aff.e(i, psi(c));
  if (!r || r->grade > 0) return std::nullopt;
  auto out = phi_inv(*r);
  if (!is_valid(out)) return std::nullopt;
  return out;
}

int ColumnModel::h(const Column& c, const Column& c2) const {
  const int L = level_.value_or(0);
  const int s = c.sbar, t = c.tbar, s2 = c2.sbar, t2 = c2.tbar;
  const bool upper = s >= t;
  const bool upper2 = s2 >= t2;
  if (upper && upper2) return std::max({s - s2, s + s2 - 2 * t2, s2 - s, s2 - 3 * s + 2 * t});
  if (upper && !upper2) {
    return std::max({s + s2 - 2 * L, 2 * L - 3 * s - s2 + 2 * t, 2 * L - s - s2, -2 * L + s + 3 * s2 - 2 * t2});
  }
  if (!upper && upper2) {
    return std::max({2 * L - s - s2, -2 * L - s + s2 + 2 * t, -2 * L + s + s2, 2 * L - s + s2 - 2 * t2});
  }
  return std::max({s - s2, -s - s2 + 2 * t, s2 - s, -s + 3 * s2 - 2 * t2});
}

int ColumnModel::H(const Column& c, const Column& c2) const { return -c.s + c2.s - h(c, c2); }

Column ColumnModel::ground(int a) const {
  if (level_) dominant(*level_, a);
  return phi_inv({{a, a}, 0});
}

// ---------------------------------------------------------------------------

Column ground_column(const Lambda& lambda) { return ColumnModel::of(lambda).ground(lambda.a); }

Wall ground_wall(const Lambda& lambda) { return {lambda, {}}; }

Wall trimmed(Wall w) {
  const auto g = ground_column(w.lambda);
  while (!w.columns.empty() && w.columns.back() == g) w.columns.pop_back();
  return w;
}

std::string encode(const Wall& w) {
  if (w.columns.empty()) return "G";
  std::string out;
  for (auto it = w.columns.rbegin(); it != w.columns.rend(); ++it) {
    if (it != w.columns.rbegin()) out += "⊗";
    out += to_string(*it);
  }
  return out;
}

std::string to_string(WallClass c) {
  switch (c) {
    case WallClass::kNotWall:
      return "not_wall";
    case WallClass::kWall:
      return "wall";
    case WallClass::kReducedWall:
      return "reduced_wall";
  }
  return "unknown";
}

std::vector<int> wall_energies(const Wall& w) {
  const auto model = ColumnModel::of(w.lambda);
  for (const auto& c : w.columns) {
    if (!model.is_valid(c)) throw DomainError("invalid column " + to_string(c));
  }
  const auto g = model.ground(w.lambda.a);
  std::vector<int> out;
  out.reserve(w.columns.size());
  for (std::size_t k = 0; k < w.columns.size(); ++k) {
    const auto& next = k + 1 < w.columns.size() ? w.columns[k + 1] : g;
    out.push_back(model.H(next, w.columns[k]));
  }
  return out;
}

WallClass wall_validate(const Wall& w) {
  const auto hs = wall_energies(w);
  if (std::any_of(hs.begin(), hs.end(), [](int v) { return v < 0; })) return WallClass::kNotWall;
  if (std::all_of(hs.begin(), hs.end(), [](int v) { return v == 0; })) return WallClass::kReducedWall;
  return WallClass::kWall;
}

Path wall_to_path(const Wall& w) {
  const auto model = ColumnModel::of(w.lambda);
  Path p{w.lambda, {}};
  for (const auto& c : w.columns) p.entries.push_back(model.psi(c));
  const auto tail = tail_element(w.lambda);
  while (!p.entries.empty() && p.entries.back() == tail) p.entries.pop_back();
  return p;
}

Wall path_to_wall(const Path& p) {
  const auto model = ColumnModel::of(p.lambda);
  Wall w{p.lambda, {}};
  for (const auto& b : p.entries) {
    auto c = model.phi_inv(b);
    if (!model.is_valid(c)) throw DomainError(to_string(b) + " has no column");
    w.columns.push_back(c);
  }
  return trimmed(std::move(w));
}

namespace {

WallResult transport(bool raise, int i, const Wall& w, int margin) {
  if (wall_validate(w) == WallClass::kNotWall) throw DomainError(encode(w) + " is not a Young wall");
  const auto p = wall_to_path(w);
  const auto r = raise ? path_e(i, p, margin) : path_f(i, p, margin);
  if (!r) return {WallStatus::kNull, std::nullopt};
  const auto model = ColumnModel::of(w.lambda);
  Wall out{w.lambda, {}};
  for (const auto& b : r->entries) {
    auto c = model.phi_inv(b);
    if (!model.is_valid(c)) return {WallStatus::kNotWall, std::nullopt};
    out.columns.push_back(c);
  }
  out = trimmed(std::move(out));
  if (wall_validate(out) == WallClass::kNotWall) return {WallStatus::kNotWall, std::nullopt};
  return {WallStatus::kOk, std::move(out)};
}

}  // namespace

WallResult wall_f(int i, const Wall& w, int margin) { return transport(false, i, w, margin); }
WallResult wall_e(int i, const Wall& w, int margin) { return transport(true, i, w, margin); }

int wall_eps(int i, const Wall& w) { return path_eps(i, wall_to_path(w)); }
int wall_phi(int i, const Wall& w) { return path_phi(i, wall_to_path(w)); }

Weight wall_wt(const Wall& w) {
  int k0 = 0;
  int k1 = 0;
  for (const auto& c : w.columns) {
    k0 += c.s;
    k1 += c.t();
  }
  return w.lambda.weight() - k0 * kAlpha0 - (k1 / 2) * kAlpha1;
}

// ---------------------------------------------------------------------------

std::string to_string(const ColumnSignature& sig) {
  return std::string(static_cast<std::size_t>(sig.minus), '-') + std::string(static_cast<std::size_t>(sig.plus), '+');
}

std::vector<ColumnSignature> signature_oracle(int i, const Wall& w, int cap) {
  if (wall_validate(w) == WallClass::kNotWall) throw DomainError(encode(w) + " is not a Young wall");
  const auto model = ColumnModel::of(w.lambda);
  auto ext = w.columns;
  ext.push_back(model.ground(w.lambda.a));

  std::vector<ColumnSignature> out(ext.size());
  for (std::size_t k = 0; k < ext.size(); ++k) {
    for (bool add : {false, true}) {
      Wall cur{w.lambda, ext};
      int count = 0;
      while (count < cap) {
        auto next = add ? model.f(i, cur.columns[k]) : model.e(i, cur.columns[k]);
        if (!next) break;
        cur.columns[k] = *next;
        if (wall_validate(cur) == WallClass::kNotWall) break;
        ++count;
      }
      if (add) {
        out[k].plus = count;
        out[k].saturated = count == cap;
      } else {
        out[k].minus = count;
      }
    }
  }
  return out;
}

namespace {

struct Mark {
  bool plus;
  std::size_t column;
};

std::vector<Mark> reduce(const std::vector<ColumnSignature>& sigs) {
  std::vector<Mark> stack;
  for (std::size_t k = sigs.size(); k-- > 0;) {
    for (int n = 0; n < sigs[k].minus; ++n) {
      if (!stack.empty() && stack.back().plus) {
        stack.pop_back();
      } else {
        stack.push_back({false, k});
      }
    }
    for (int n = 0; n < sigs[k].plus; ++n) stack.push_back({true, k});
  }
  return stack;
}

std::optional<Wall> oracle_act(bool raise, int i, const Wall& w, int cap) {
  const auto marks = reduce(signature_oracle(i, w, cap));
  std::optional<std::size_t> k;
  if (raise) {
    for (auto it = marks.rbegin(); it != marks.rend() && !k; ++it) {
      if (!it->plus) k = it->column;
    }
  } else {
    for (auto it = marks.begin(); it != marks.end() && !k; ++it) {
      if (it->plus) k = it->column;
    }
  }
  if (!k) return std::nullopt;
  const auto model = ColumnModel::of(w.lambda);
  auto cols = w.columns;
  cols.push_back(model.ground(w.lambda.a));
  auto moved = raise ? model.e(i, cols[*k]) : model.f(i, cols[*k]);
  if (!moved) throw InvariantError("signature selected a column without a slot");
  cols[*k] = *moved;
  return trimmed({w.lambda, std::move(cols)});
}

}  // namespace

std::string reduced_signature(const std::vector<ColumnSignature>& sigs) {
  std::string out;
  for (const auto& m : reduce(sigs)) out += m.plus ? '+' : '-';
  return out;
}

std::optional<Wall> oracle_f(int i, const Wall& w, int cap) { return oracle_act(false, i, w, cap); }
std::optional<Wall> oracle_e(int i, const Wall& w, int cap) { return oracle_act(true, i, w, cap); }

int OracleWallCrystal::eps(int i, const Wall& w) const {
  const auto s = reduced_signature(signature_oracle(i, w, cap_));
  return static_cast<int>(std::count(s.begin(), s.end(), '-'));
}

int OracleWallCrystal::phi(int i, const Wall& w) const {
  const auto s = reduced_signature(signature_oracle(i, w, cap_));
  return static_cast<int>(std::count(s.begin(), s.end(), '+'));
}

CrystalGraph reduced_wall_component(const Lambda& lambda, const ComponentOptions& options) {
  const OracleWallCrystal crystal(lambda);
  return component(crystal, crystal.ground(), options);
}

std::vector<Wall> enumerate_walls(const Lambda& lambda, int depth, std::size_t node_cap) {
  const auto model = ColumnModel::of(lambda);
  const auto g = model.ground(lambda.a);
  std::vector<Wall> out{ground_wall(lambda)};
  std::unordered_set<std::string> seen{encode(out[0])};
  std::size_t begin = 0;
  for (int dist = 0; dist < depth && begin < out.size(); ++dist) {
    const std::size_t end = out.size();
    for (std::size_t n = begin; n < end; ++n) {
      auto ext = out[n].columns;
      ext.push_back(g);
      for (std::size_t k = 0; k < ext.size(); ++k) {
        for (int i : kColors) {
          auto c = model.f(i, ext[k]);
          if (!c) continue;
          auto cols = ext;
          cols[k] = *c;
          Wall w = trimmed({lambda, std::move(cols)});
          if (wall_validate(w) == WallClass::kNotWall) continue;
          if (!seen.insert(encode(w)).second) continue;
          if (out.size() >= node_cap) {
            throw ResourceLimitError("wall enumeration exceeds node cap of " + std::to_string(node_cap));
          }
          out.push_back(std::move(w));
        }
      }
    }
    begin = end;
  }
  return out;
}

CrystalGraph all_wall_graph(const Lambda& lambda, int depth, std::size_t node_cap, unsigned jobs) {
  return induced_graph(OracleWallCrystal(lambda), enumerate_walls(lambda, depth, node_cap), 0, jobs);
}

}  // namespace ywall
