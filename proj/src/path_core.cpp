#include "latbij/path_core.hpp"

#include <algorithm>
#include <charconv>

namespace latbij {

std::string to_text(GridPoint p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

// ---------------------------------------------------------------------------
// UDPath
// ---------------------------------------------------------------------------

UDPath::UDPath(std::string steps) : steps_(std::move(steps)) {
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    if (steps_[i] != 'U' && steps_[i] != 'D') {
      throw parse_error("invalid step character '" + std::string(1, steps_[i]) +
                            "' at index " + std::to_string(i),
                        i);
    }
  }
}

int UDPath::final_height() const { return height_at(size()); }

int UDPath::height_at(std::size_t t) const {
  if (t > size()) throw precondition_error("height_at: index out of range");
  int h = 0;
  for (std::size_t i = 0; i < t; ++i) h += rise(step(i));
  return h;
}

int UDPath::max_height() const {
  int h = 0, best = 0;
  for (std::size_t i = 0; i < size(); ++i) {
    h += rise(step(i));
    best = std::max(best, h);
  }
  return best;
}

int UDPath::min_height() const {
  int h = 0, best = 0;
  for (std::size_t i = 0; i < size(); ++i) {
    h += rise(step(i));
    best = std::min(best, h);
  }
  return best;
}

UDPath parse_ud(std::string_view text) { return UDPath(std::string(text)); }

UDPath reflect_horizontal(const UDPath& p) {
  std::string out(p.text());
  for (char& c : out) c = (c == 'U') ? 'D' : 'U';
  return UDPath(std::move(out));
}

std::vector<int> height_profile(const UDPath& p) {
  std::vector<int> prof(p.size() + 1, 0);
  for (std::size_t i = 0; i < p.size(); ++i) prof[i + 1] = prof[i] + rise(p.step(i));
  return prof;
}

ExtremePoint leftmost_extreme_index(const UDPath& p, Extreme mode) {
  ExtremePoint best{0, 0};
  int h = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    h += rise(p.step(i));
    const bool better = mode == Extreme::Max ? h > best.height : h < best.height;
    if (better) best = {i + 1, h};
  }
  return best;
}

std::pair<UDPath, UDPath> split_at(const UDPath& p, std::size_t t) {
  if (t > p.size()) throw precondition_error("split_at: index out of range");
  return {UDPath(p.text().substr(0, t)), UDPath(p.text().substr(t))};
}

UDPath concat(const UDPath& a, const UDPath& b) { return UDPath(a.text() + b.text()); }

UDPath slice(const UDPath& p, std::size_t from, std::size_t to) {
  if (from > to || to > p.size()) throw precondition_error("slice: bad range");
  return UDPath(p.text().substr(from, to - from));
}

// ---------------------------------------------------------------------------
// NEPath
// ---------------------------------------------------------------------------

NEPath::NEPath(GridPoint start, std::string steps)
    : start_(start), steps_(std::move(steps)) {
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    if (steps_[i] != 'N' && steps_[i] != 'E') {
      throw parse_error("invalid step character '" + std::string(1, steps_[i]) +
                            "' at index " + std::to_string(i),
                        i);
    }
  }
}

GridPoint NEPath::point_at(std::size_t t) const {
  if (t > size()) throw precondition_error("point_at: index out of range");
  GridPoint p = start_;
  for (std::size_t i = 0; i < t; ++i) {
    if (step(i) == StepNE::East)
      ++p.x;
    else
      ++p.y;
  }
  return p;
}

std::size_t NEPath::east_count() const {
  return std::size_t(std::count(steps_.begin(), steps_.end(), 'E'));
}

namespace {

long long parse_coord(std::string_view text, std::size_t& pos) {
  std::size_t begin = pos;
  if (pos < text.size() && text[pos] == '-') ++pos;
  while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
  long long value = 0;
  auto res = std::from_chars(text.data() + begin, text.data() + pos, value);
  if (res.ec != std::errc{} || res.ptr != text.data() + pos || pos == begin)
    throw parse_error("expected integer at index " + std::to_string(begin), begin);
  return value;
}

void expect(std::string_view text, std::size_t& pos, char c) {
  if (pos >= text.size() || text[pos] != c)
    throw parse_error("expected '" + std::string(1, c) + "' at index " +
                          std::to_string(pos),
                      pos);
  ++pos;
}

}  // namespace

NEPath parse_ne(std::string_view text) {
  std::size_t pos = 0;
  expect(text, pos, '(');
  long long x = parse_coord(text, pos);
  expect(text, pos, ',');
  long long y = parse_coord(text, pos);
  expect(text, pos, ')');
  expect(text, pos, ':');
  std::string_view steps = text.substr(pos);
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (steps[i] != 'N' && steps[i] != 'E')
      throw parse_error("invalid step character '" + std::string(1, steps[i]) +
                            "' at index " + std::to_string(pos + i),
                        pos + i);
  }
  return NEPath({x, y}, std::string(steps));
}

std::string to_text(const NEPath& p) {
  return to_text(p.start()) + ":" + p.steps_text();
}

NEPath reflect_diagonal(const NEPath& p) {
  std::string out(p.steps_text());
  for (char& c : out) c = (c == 'N') ? 'E' : 'N';
  return NEPath({p.start().y, p.start().x}, std::move(out));
}

NEPath translate(const NEPath& p, GridPoint v) {
  return NEPath(p.start() + v, p.steps_text());
}

std::optional<std::size_t> first_diagonal_touch(const NEPath& p) {
  GridPoint cur = p.start();
  if (cur.on_diagonal()) return 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p.step(i) == StepNE::East)
      ++cur.x;
    else
      ++cur.y;
    if (cur.on_diagonal()) return i + 1;
  }
  return std::nullopt;
}

std::optional<std::size_t> last_diagonal_touch(const NEPath& p) {
  std::optional<std::size_t> found;
  GridPoint cur = p.start();
  if (cur.on_diagonal()) found = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p.step(i) == StepNE::East)
      ++cur.x;
    else
      ++cur.y;
    if (cur.on_diagonal()) found = i + 1;
  }
  return found;
}

std::pair<NEPath, NEPath> split_at(const NEPath& p, std::size_t t) {
  if (t > p.size()) throw precondition_error("split_at: index out of range");
  return {NEPath(p.start(), p.steps_text().substr(0, t)),
          NEPath(p.point_at(t), p.steps_text().substr(t))};
}

NEPath concat(const NEPath& a, const NEPath& b) {
  if (!(b.start() == a.end()))
    throw precondition_error("concat: second path does not start at the end of the first");
  return NEPath(a.start(), a.steps_text() + b.steps_text());
}

}  // namespace latbij
