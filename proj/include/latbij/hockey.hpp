#pragma once

#include <string>
#include <string_view>

#include "latbij/path_core.hpp"

namespace latbij {

// Up/down-path bijection machinery certifying
//   (2n+1) * C(2n,n) = sum_{i+j+k=n} C(2i,i) * C(2j,j) * C(2k,k)
// The domain T_n is the set of ordered triples of balanced paths with
// semilengths summing to n; the codomain D_n is the set of balanced paths
// of semilength n with one of their 2n+1 lattice points marked.

/// Element of T_n.
struct PathTriple {
  UDPath a, b, c;
  static PathTriple make(UDPath a, UDPath b, UDPath c);
  int semilength() const { return int((a.size() + b.size() + c.size()) / 2); }
};

/// Element of D_n: `mark` indexes one of the 2n+1 visited points of `h`.
struct MarkedPath {
  UDPath h;
  std::size_t mark = 0;
  static MarkedPath make(UDPath h, std::size_t mark);
  int mark_height() const { return h.height_at(mark); }
};

/// The four-way split of T_n driving the dispatch:
///   R        last path empty
///   U        (middle empty or ends Down) and last path climbs above the axis
///   VminusU  (middle empty or ends Up) and last path dips below, not in U
///   J*       everything else; Below/Above names the matching criterion
enum class TripleClass { R, U, VminusU, JBelow, JAbove };

std::string to_text(TripleClass c);

TripleClass classify(const PathTriple& t);

/// Membership in I_n = U_n intersect V_n: middle path empty and the last
/// path has points both strictly above and strictly below the axis.
bool is_in_i(const PathTriple& t);

/// Trivial step, c empty: concatenate a and b, mark their meeting point
/// (which lies on the axis).
MarkedPath r_map(const PathTriple& t);
/// Inverse: split at the mark, which must lie on the axis.
PathTriple r_inv(const MarkedPath& m);

/// Core step on U_n: cut c at the leftmost maximum K (height k > 0),
/// h = c1 . a . b . c2, mark where a and b meet (height k).
MarkedPath s_map(const PathTriple& t);
/// Inverse for marks strictly above the axis: K is the leftmost point of h
/// at the mark height; Z is the rightmost later point at that height
/// reached and left by Down steps (absent => b empty).
PathTriple s_inv(const MarkedPath& m);

/// Mirror of the core step on V_n: cut c at the leftmost minimum (height
/// k < 0); equals reflect_horizontal . s_map . reflect_horizontal.
MarkedPath t_map(const PathTriple& t);
/// Inverse for marks strictly below the axis (conjugated s_inv).
PathTriple t_inv(const MarkedPath& m);

/// Correction step J_n -> I_n: (a, b, c) -> (a, empty, b.c).
PathTriple z_map(const PathTriple& t);
/// Inverse: split the last path at its rightmost axis crossing.
PathTriple z_inv(const PathTriple& t);

/// The composite bijection T_n -> D_n.
MarkedPath g_map(const PathTriple& t);
/// Its inverse.
PathTriple g_inv(const MarkedPath& m);

std::string to_text(const PathTriple& t);  // "A|B|C"
std::string to_text(const MarkedPath& m);  // "H@x"
PathTriple parse_triple(std::string_view text);
MarkedPath parse_marked(std::string_view text);

}  // namespace latbij
