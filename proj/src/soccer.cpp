#include "latbij/soccer.hpp"

namespace latbij {

TiePath TiePath::make(NEPath p) {
  if (!(p.start() == GridPoint{0, 0}))
    throw precondition_error("tie path must start at (0,0)");
  if (p.size() % 2 != 0) throw precondition_error("tie path needs an even step count");
  const int n = int(p.size() / 2);
  if (!(p.end() == GridPoint{n, n}))
    throw precondition_error("tie path must end at (n,n)");
  return {n, std::move(p)};
}

AvoidPath AvoidPath::make(NEPath p) {
  if (!(p.start() == GridPoint{0, 0}))
    throw precondition_error("avoiding path must start at (0,0)");
  if (p.size() % 2 != 0)
    throw precondition_error("avoiding path needs an even step count");
  GridPoint cur = p.start();
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p.step(i) == StepNE::East)
      ++cur.x;
    else
      ++cur.y;
    if (cur.on_diagonal())
      throw precondition_error("path touches the diagonal after its start");
  }
  return {int(p.size() / 2), std::move(p)};
}

AnkPath AnkPath::make(int n, int k, NEPath p) {
  if (n < 1) throw precondition_error("A(n,k) requires n >= 1");
  if (k < n || k > 2 * n) throw precondition_error("A(n,k) requires n <= k <= 2n");
  if (!(p.start() == GridPoint{1, 0}))
    throw precondition_error("A(n,k) paths start at (1,0)");
  if (p.size() != std::size_t(2 * n - 1))
    throw precondition_error("A(n,k) paths have 2n-1 steps");
  if (!(p.end() == GridPoint{k, 2 * n - k}))
    throw precondition_error("A(n,k) paths end at (k,2n-k)");
  return {n, k, std::move(p)};
}

MarkedTiePath MarkedTiePath::make(TiePath t, int mark) {
  if (mark < 0 || mark > t.n)
    throw precondition_error("mark must lie in [0,n]");
  if (!(t.path.point_at(std::size_t(2 * mark)) == GridPoint{mark, mark}))
    throw precondition_error("tie path does not visit the marked diagonal point");
  return {std::move(t), mark};
}

FStepResult f_step(const AnkPath& p) {
  auto touch = first_diagonal_touch(p.path);
  if (!touch.has_value()) return {false, p};

  // Reflect the prefix ending at the first diagonal point through x = y
  // (the prefix now runs from (0,1)), keep the suffix, shift everything
  // by (1,-1).
  auto [prefix, suffix] = split_at(p.path, *touch);
  NEPath joined = concat(reflect_diagonal(prefix), suffix);
  NEPath shifted = translate(joined, {1, -1});
  return {true, AnkPath::make(p.n, p.k + 1, std::move(shifted))};
}

AnkPath f_step_inv(const AnkPath& q) {
  if (q.k <= q.n) throw precondition_error("f_step_inv requires k > n");

  NEPath back = translate(q.path, {-1, 1});
  auto touch = first_diagonal_touch(back);
  if (!touch.has_value())
    throw precondition_error("translated path misses the diagonal; input not in A(n,k)");
  auto [prefix, suffix] = split_at(back, *touch);
  NEPath joined = concat(reflect_diagonal(prefix), suffix);
  return AnkPath::make(q.n, q.k - 1, std::move(joined));
}

namespace {

bool starts_north(const NEPath& p) {
  return !p.empty() && p.step(0) == StepNE::North;
}

}  // namespace

AvoidPath big_f(const TiePath& p, int* advances) {
  if (advances) *advances = 0;
  if (p.n == 0) return AvoidPath::make(p.path);
  if (starts_north(p.path))
    return AvoidPath::make(
        reflect_diagonal(big_f(TiePath::make(reflect_diagonal(p.path)), advances).path));

  AnkPath cur = AnkPath::make(
      p.n, p.n, NEPath({1, 0}, p.path.steps_text().substr(1)));
  int count = 0;
  for (;;) {
    FStepResult r = f_step(cur);
    cur = std::move(r.path);
    if (!r.advanced) break;
    if (++count > p.n)
      throw std::logic_error("big_f exceeded the n-advance bound");
  }
  if (advances) *advances = count;
  return AvoidPath::make(NEPath({0, 0}, "E" + cur.path.steps_text()));
}

TiePath big_f_inv(const AvoidPath& u) {
  if (u.n == 0) return TiePath::make(u.path);
  if (starts_north(u.path))
    return TiePath::make(
        reflect_diagonal(big_f_inv(AvoidPath::make(reflect_diagonal(u.path))).path));

  const int m = int(u.path.end().x);  // endpoint (m, 2n-m) with m > n
  AnkPath cur = AnkPath::make(
      u.n, m, NEPath({1, 0}, u.path.steps_text().substr(1)));
  for (int k = m; k > u.n; --k) cur = f_step_inv(cur);
  return TiePath::make(NEPath({0, 0}, "E" + cur.path.steps_text()));
}

MarkedTiePath soccer_forward(const NEPath& free_path) {
  if (!(free_path.start() == GridPoint{0, 0}))
    throw precondition_error("input must start at (0,0)");
  if (free_path.size() % 2 != 0)
    throw precondition_error("input needs an even step count");

  const std::size_t t = *last_diagonal_touch(free_path);  // index 0 always qualifies
  const int i = int(free_path.point_at(t).x);
  auto [prefix, suffix] = split_at(free_path, t);
  AvoidPath tail = AvoidPath::make(translate(suffix, {-i, -i}));
  TiePath pulled = big_f_inv(tail);
  NEPath whole(
      {0, 0}, prefix.steps_text() + pulled.path.steps_text());
  return MarkedTiePath::make(TiePath::make(std::move(whole)), i);
}

NEPath soccer_inverse(const MarkedTiePath& m) {
  const int i = m.mark;
  auto [prefix, suffix] = split_at(m.tie.path, std::size_t(2 * i));
  TiePath tail = TiePath::make(translate(suffix, {-i, -i}));
  AvoidPath pushed = big_f(tail);
  return NEPath({0, 0}, prefix.steps_text() + pushed.path.steps_text());
}

std::string to_text(const AnkPath& p) {
  return "n=" + std::to_string(p.n) + ",k=" + std::to_string(p.k) + " " +
         to_text(p.path);
}

std::string to_text(const MarkedTiePath& m) {
  return to_text(m.tie.path) + "@" + std::to_string(m.mark);
}

MarkedTiePath parse_marked_tie(std::string_view text) {
  const std::size_t at = text.rfind('@');
  if (at == std::string_view::npos)
    throw parse_error("missing '@' mark separator", text.size());
  std::string_view idx = text.substr(at + 1);
  if (idx.empty()) throw parse_error("missing mark index", at + 1);
  for (std::size_t i = 0; i < idx.size(); ++i)
    if (idx[i] < '0' || idx[i] > '9')
      throw parse_error("mark index must be a non-negative integer", at + 1 + i);
  NEPath path = parse_ne(text.substr(0, at));
  return MarkedTiePath::make(TiePath::make(std::move(path)),
                             int(std::stoul(std::string(idx))));
}

}  // namespace latbij
