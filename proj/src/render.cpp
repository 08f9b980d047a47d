#include "latbij/render.hpp"

#include <algorithm>
#include <vector>

namespace latbij {

namespace {

std::string join_rows(std::vector<std::string> rows) {
  std::string out;
  for (auto& r : rows) {
    while (!r.empty() && r.back() == ' ') r.pop_back();
    out += r;
    out += '\n';
  }
  return out;
}

}  // namespace

std::string render_ud(const UDPath& p, std::optional<std::size_t> mark) {
  const int hi = std::max(p.max_height(), 0);
  const int lo = std::min(p.min_height(), 0);
  const std::size_t width = p.size() + 1;

  // One row per unit cell between heights lo..hi, plus the axis row. Cell c
  // covers heights [c, c+1); an Up step at height h draws in cell h, a Down
  // step into height h-1 draws in cell h-1.
  std::vector<std::string> rows;
  auto blank = [&] { return std::string(width, ' '); };
  std::vector<std::string> cells(std::size_t(hi - lo), blank());
  auto cell_row = [&](int c) -> std::string& { return cells[std::size_t(hi - 1 - c)]; };

  int h = 0;
  for (std::size_t t = 0; t < p.size(); ++t) {
    if (p.step(t) == StepUD::Up) {
      cell_row(h)[t] = '/';
      ++h;
    } else {
      --h;
      cell_row(h)[t] = '\\';
    }
  }

  for (int c = hi - 1; c >= 0; --c) rows.push_back(cells[std::size_t(hi - 1 - c)]);
  rows.push_back(std::string(width, '-'));
  for (int c = -1; c >= lo; --c) rows.push_back(cells[std::size_t(hi - 1 - c)]);

  if (mark) {
    std::string caret(*mark, ' ');
    caret += "^ (" + std::to_string(*mark) + "," +
             std::to_string(p.height_at(*mark)) + ")";
    rows.push_back(std::move(caret));
  }
  return join_rows(std::move(rows));
}

std::string render_ne(const NEPath& p, std::optional<GridPoint> mark) {
  std::vector<GridPoint> pts;
  pts.reserve(p.size() + 1);
  GridPoint cur = p.start();
  pts.push_back(cur);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p.step(i) == StepNE::East)
      ++cur.x;
    else
      ++cur.y;
    pts.push_back(cur);
  }

  long long lo = pts[0].x, hi = pts[0].x;
  for (const auto& q : pts) {
    lo = std::min({lo, q.x, q.y});
    hi = std::max({hi, q.x, q.y});
  }
  if (mark) {
    lo = std::min({lo, mark->x, mark->y});
    hi = std::max({hi, mark->x, mark->y});
  }

  const std::size_t width = std::size_t(hi - lo + 1);
  std::vector<std::string> rows(width, std::string(width, ' '));
  auto at = [&](GridPoint q) -> char& {
    return rows[std::size_t(hi - q.y)][std::size_t(q.x - lo)];
  };

  // diagonal first, glyphs overwrite
  for (long long d = lo; d <= hi; ++d) at({d, d}) = '.';
  at(pts[0]) = 'o';
  for (std::size_t i = 0; i < p.size(); ++i)
    at(pts[i + 1]) = p.step(i) == StepNE::East ? '_' : '|';
  if (mark) at(*mark) = '*';
  return join_rows(std::move(rows));
}

std::string render_triple(const PathTriple& t) {
  std::string out;
  out += "A:\n" + render_ud(t.a);
  out += "B:\n" + render_ud(t.b);
  out += "C:\n" + render_ud(t.c);
  return out;
}

}  // namespace latbij
