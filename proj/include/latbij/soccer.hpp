#pragma once

#include <string>
#include <string_view>

#include "latbij/path_core.hpp"

namespace latbij {

// Northeastern-path bijection machinery certifying
//   4^n = sum_i C(2i,i) * C(2(n-i), n-i)
// The key sets:
//   X_n          ties: (0,0) -> (n,n) in 2n steps
//   Y_n          avoiders: 2n steps from (0,0), diagonal touched only at start
//   A(n,k)       (1,0) -> (k, 2n-k) in 2n-1 steps, n <= k <= 2n
//   B(n,k)       the diagonal-avoiding subset of A(n,k)

/// Element of X_n.
struct TiePath {
  int n = 0;
  NEPath path;
  static TiePath make(NEPath p);
};

/// Element of Y_n. For n >= 1 the path lies entirely strictly below the
/// diagonal (first step East) or strictly above it (first step North).
struct AvoidPath {
  int n = 0;
  NEPath path;
  static AvoidPath make(NEPath p);
};

/// Element of A(n,k).
struct AnkPath {
  int n = 0;
  int k = 0;
  NEPath path;
  static AnkPath make(int n, int k, NEPath p);
  /// Membership in B(n,k): no visited point lies on x = y.
  bool in_b() const { return !first_diagonal_touch(path).has_value(); }
};

/// Tie path marked at a diagonal point (i,i) it visits.
struct MarkedTiePath {
  TiePath tie;
  int mark = 0;  // the path visits (mark, mark), i.e. at step index 2*mark
  static MarkedTiePath make(TiePath t, int mark);
};

/// Result of one reflection step: either the input was already in B(n,k)
/// (advanced == false, same k) or it was pushed into A(n,k+1).
struct FStepResult {
  bool advanced = false;
  AnkPath path;
};

/// One step of the bijection A(n,k) -> B(n,k) u A(n,k+1): paths already
/// avoiding the diagonal are fixed; otherwise the prefix up to the first
/// diagonal point is reflected through x = y and the whole path is
/// translated by (1,-1).
FStepResult f_step(const AnkPath& p);

/// Inverse of the advancing branch: A(n,k) -> A(n,k-1) for k > n.
AnkPath f_step_inv(const AnkPath& q);

/// The iterated map X_n -> Y_n: strip the predetermined first step, apply
/// f_step until the image avoids the diagonal, reattach the first step.
/// North-start inputs are handled by conjugating with reflect_diagonal.
/// Performs at most n advances; the count is reported via `advances`.
AvoidPath big_f(const TiePath& p, int* advances = nullptr);

/// Inverse of big_f.
TiePath big_f_inv(const AvoidPath& u);

/// The composite bijection from all 2n-step paths out of (0,0) onto marked
/// tie paths: split at the last diagonal point (i,i), pull the tail back
/// through big_f_inv, mark the joint.
MarkedTiePath soccer_forward(const NEPath& free_path);

/// Inverse of soccer_forward.
NEPath soccer_inverse(const MarkedTiePath& m);

std::string to_text(const AnkPath& p);        // "n=4,k=5 (1,0):NEENNEE"
std::string to_text(const MarkedTiePath& m);  // "(0,0):EN@0"
MarkedTiePath parse_marked_tie(std::string_view text);

}  // namespace latbij
