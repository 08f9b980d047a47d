#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace latbij {

/// Thrown when text input violates a serialization grammar.
/// `index` points at the first offending character.
struct parse_error : std::runtime_error {
  std::size_t index = 0;
  explicit parse_error(const std::string& what, std::size_t at = 0)
      : std::runtime_error(what), index(at) {}
};

/// Thrown when a caller violates a documented precondition or a value
/// would violate a type invariant.
struct precondition_error : std::logic_error {
  using std::logic_error::logic_error;
};

// ---------------------------------------------------------------------------
// Steps
// ---------------------------------------------------------------------------

/// One move of an up/down path: Up = (1,1), Down = (1,-1).
enum class StepUD : char { Up = 'U', Down = 'D' };

/// One move of a northeastern path: East = (1,0), North = (0,1).
enum class StepNE : char { East = 'E', North = 'N' };

constexpr StepUD reflected(StepUD s) {
  return s == StepUD::Up ? StepUD::Down : StepUD::Up;
}
constexpr StepNE reflected(StepNE s) {
  return s == StepNE::East ? StepNE::North : StepNE::East;
}
constexpr int rise(StepUD s) { return s == StepUD::Up ? 1 : -1; }

struct GridPoint {
  long long x = 0;
  long long y = 0;
  friend constexpr bool operator==(const GridPoint&, const GridPoint&) = default;
  constexpr GridPoint operator+(GridPoint o) const { return {x + o.x, y + o.y}; }
  constexpr GridPoint operator-() const { return {-x, -y}; }
  constexpr bool on_diagonal() const { return x == y; }
};

std::string to_text(GridPoint p);  // "(x,y)"

// ---------------------------------------------------------------------------
// Up/down paths
// ---------------------------------------------------------------------------

/// A path of Up/Down steps. The start height is fixed at 0; only relative
/// heights are meaningful. Immutable after construction.
class UDPath {
 public:
  UDPath() = default;
  /// Validates that `steps` matches [UD]*.
  explicit UDPath(std::string steps);

  std::size_t size() const { return steps_.size(); }
  bool empty() const { return steps_.empty(); }
  StepUD step(std::size_t t) const { return StepUD(steps_[t]); }
  const std::string& text() const { return steps_; }

  bool balanced() const { return final_height() == 0; }
  int final_height() const;
  /// Height after the first `t` steps, 0 <= t <= size().
  int height_at(std::size_t t) const;
  int max_height() const;
  int min_height() const;

  friend bool operator==(const UDPath&, const UDPath&) = default;

 private:
  std::string steps_;
};

/// Grammar [UD]*; rejects anything else, naming the offending index.
UDPath parse_ud(std::string_view text);
inline const std::string& to_text(const UDPath& p) { return p.text(); }

/// Swaps Up and Down in every position (reflection through the horizontal
/// axis); negates the height profile pointwise.
UDPath reflect_horizontal(const UDPath& p);

/// All size()+1 prefix heights, starting at 0.
std::vector<int> height_profile(const UDPath& p);

enum class Extreme { Max, Min };
struct ExtremePoint {
  std::size_t index;
  int height;
  friend bool operator==(const ExtremePoint&, const ExtremePoint&) = default;
};

/// Smallest index attaining the maximal (resp. minimal) height of the
/// profile. Ties break leftmost; the empty path yields {0, 0}.
ExtremePoint leftmost_extreme_index(const UDPath& p, Extreme mode);

std::pair<UDPath, UDPath> split_at(const UDPath& p, std::size_t t);
UDPath concat(const UDPath& a, const UDPath& b);
/// Steps [from, to) as a standalone path.
UDPath slice(const UDPath& p, std::size_t from, std::size_t to);

// ---------------------------------------------------------------------------
// Northeastern paths
// ---------------------------------------------------------------------------

/// A path of East/North steps with an explicit start point; the visited
/// point sequence is determined by the start and the steps.
class NEPath {
 public:
  NEPath() = default;
  /// Validates that `steps` matches [NE]*.
  NEPath(GridPoint start, std::string steps);

  std::size_t size() const { return steps_.size(); }
  bool empty() const { return steps_.empty(); }
  StepNE step(std::size_t t) const { return StepNE(steps_[t]); }
  const std::string& steps_text() const { return steps_; }
  GridPoint start() const { return start_; }

  GridPoint end() const { return point_at(size()); }
  /// Point visited after the first `t` steps, 0 <= t <= size().
  GridPoint point_at(std::size_t t) const;
  std::size_t east_count() const;
  std::size_t north_count() const { return size() - east_count(); }

  friend bool operator==(const NEPath&, const NEPath&) = default;

 private:
  GridPoint start_{};
  std::string steps_;
};

/// Grammar `(x,y):STEPS` with STEPS in [NE]*, e.g. "(1,0):NEE".
NEPath parse_ne(std::string_view text);
std::string to_text(const NEPath& p);

/// Reflection through the line x = y: start coordinates swap and every
/// North/East swaps. An involution.
NEPath reflect_diagonal(const NEPath& p);

/// Shifts the start by `v`; steps unchanged.
NEPath translate(const NEPath& p, GridPoint v);

/// Smallest t >= 0 whose visited point lies on x = y, if any. Callers that
/// must ignore the start point filter t = 0 themselves.
std::optional<std::size_t> first_diagonal_touch(const NEPath& p);
/// Largest such t, if any.
std::optional<std::size_t> last_diagonal_touch(const NEPath& p);

std::pair<NEPath, NEPath> split_at(const NEPath& p, std::size_t t);
/// Requires b.start() == a.end().
NEPath concat(const NEPath& a, const NEPath& b);

}  // namespace latbij
