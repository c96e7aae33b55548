#include <algorithm>
#include <sstream>

#include "ywall/error.hpp"
#include "ywall/youngwall.hpp"

namespace ywall {

namespace {

constexpr std::size_t kWidth = 6;

struct Glyph {
  std::vector<std::string> rows;  // top first
  std::size_t ground_row = 0;     // index of the ground-state line
};

// Between the ground-state line G and the basic column line Z sit |d|
// delta-block rows, d = (s - sbar) / 2 (G is the lower line when d >= 0).
// Above the upper line each row holds one 0-block and/or one pair of
// 1-blocks.
Glyph glyph(const Column& c, const Lambda& lambda) {
  if (lambda.is_infinity()) throw DomainError("block pictures need a finite level");
  const auto model = ColumnModel::of(lambda);
  if (!model.is_valid(c)) throw DomainError("invalid column " + to_string(c));
  const int d = (c.s - c.sbar) / 2;
  const int zeros = d >= 0 ? c.sbar : c.s;
  const int pairs = (d >= 0 ? c.tbar : c.t()) / 2;

  Glyph g;
  for (int j = std::max(zeros, pairs) - 1; j >= 0; --j) {
    g.rows.push_back(std::string("|") + (j < zeros ? "0" : ".") + " " + (j < pairs ? "11" : "..") + "|");
  }
  if (d == 0) {
    g.ground_row = g.rows.size();
    g.rows.push_back("+-GZ-+");
    return g;
  }
  const bool ground_low = d > 0;
  if (!ground_low) g.ground_row = g.rows.size();
  g.rows.push_back(ground_low ? "+--Z-+" : "+-G--+");
  for (int j = 0; j < std::abs(d); ++j) g.rows.push_back("|0011|");
  if (ground_low) g.ground_row = g.rows.size();
  g.rows.push_back(ground_low ? "+-G--+" : "+--Z-+");
  return g;
}

std::string join(const std::vector<std::string>& rows) {
  std::string out;
  for (const auto& r : rows) out += r + "\n";
  return out;
}

std::string centered(const std::string& s) {
  if (s.size() >= kWidth) return s;
  const std::size_t left = (kWidth - s.size()) / 2;
  return std::string(left, ' ') + s + std::string(kWidth - s.size() - left, ' ');
}

}  // namespace

std::vector<std::string> render_rows(const Column& c, const Lambda& lambda) { return glyph(c, lambda).rows; }

std::string render_ascii(const Column& c, const Lambda& lambda) { return join(glyph(c, lambda).rows); }

std::string render_ascii(const Wall& w) {
  std::vector<Glyph> glyphs{glyph(ground_column(w.lambda), w.lambda)};
  std::vector<std::string> labels{"..."};
  for (std::size_t k = w.columns.size(); k-- > 0;) {
    glyphs.push_back(glyph(w.columns[k], w.lambda));
    labels.push_back("Y" + std::to_string(k));
  }
  std::size_t above = 0;
  std::size_t below = 0;
  for (const auto& g : glyphs) {
    above = std::max(above, g.ground_row);
    below = std::max(below, g.rows.size() - g.ground_row - 1);
  }
  std::vector<std::string> lines(above + below + 1);
  for (std::size_t n = 0; n < glyphs.size(); ++n) {
    const auto& g = glyphs[n];
    for (std::size_t r = 0; r < lines.size(); ++r) {
      const auto src = static_cast<std::ptrdiff_t>(r) - static_cast<std::ptrdiff_t>(above - g.ground_row);
      const bool inside = src >= 0 && src < static_cast<std::ptrdiff_t>(g.rows.size());
      if (n) lines[r] += ' ';
      lines[r] += inside ? g.rows[static_cast<std::size_t>(src)] : std::string(kWidth, ' ');
    }
  }
  std::string footer;
  for (std::size_t n = 0; n < labels.size(); ++n) {
    if (n) footer += ' ';
    footer += centered(labels[n]);
  }
  lines.push_back(footer);
  for (auto& l : lines) {
    while (!l.empty() && l.back() == ' ') l.pop_back();
  }
  return join(lines);
}

}  // namespace ywall
