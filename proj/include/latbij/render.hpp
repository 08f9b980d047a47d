#pragma once

#include <optional>
#include <string>

#include "latbij/hockey.hpp"
#include "latbij/path_core.hpp"
#include "latbij/soccer.hpp"

namespace latbij {

/// Up/down path on a height grid: '/' and '\' step glyphs, the horizontal
/// axis drawn as a row of '-', an optional '^' caret marking a lattice
/// point by index.
std::string render_ud(const UDPath& p, std::optional<std::size_t> mark = {});

/// Northeastern path on a square grid: '_' for East, '|' for North, 'o' at
/// the start, the diagonal x = y dotted with '.', an optional '*' mark.
std::string render_ne(const NEPath& p, std::optional<GridPoint> mark = {});

std::string render_triple(const PathTriple& t);
inline std::string render_marked(const MarkedPath& m) { return render_ud(m.h, m.mark); }
inline std::string render_marked_tie(const MarkedTiePath& m) {
  return render_ne(m.tie.path, GridPoint{m.mark, m.mark});
}

}  // namespace latbij
