#include "latbij/trace.hpp"

#include <charconv>

namespace latbij {

namespace {

std::string reflect_triple_text(const PathTriple& t) {
  return to_text(PathTriple::make(reflect_horizontal(t.a), reflect_horizontal(t.b),
                                  reflect_horizontal(t.c)));
}

PathTriple reflect_triple(const PathTriple& t) {
  return PathTriple::make(reflect_horizontal(t.a), reflect_horizontal(t.b),
                          reflect_horizontal(t.c));
}

long long stage_param(const std::string& stage, const char* key) {
  const std::size_t pos = stage.find(key);
  if (pos == std::string::npos) throw precondition_error("stage lacks " + std::string(key));
  std::size_t p = pos + std::string(key).size();
  long long v = 0;
  bool neg = false;
  if (p < stage.size() && stage[p] == '-') {
    neg = true;
    ++p;
  }
  std::size_t q = p;
  while (q < stage.size() && stage[q] >= '0' && stage[q] <= '9') ++q;
  auto res = std::from_chars(stage.data() + p, stage.data() + q, v);
  if (res.ec != std::errc{} || p == q)
    throw precondition_error("bad numeric parameter in stage: " + stage);
  return neg ? -v : v;
}

}  // namespace

AnkPath parse_ank(std::string_view text) {
  if (text.substr(0, 2) != "n=") throw parse_error("expected n= prefix", 0);
  std::size_t comma = text.find(",k=");
  std::size_t space = text.find(' ');
  if (comma == std::string_view::npos || space == std::string_view::npos ||
      comma > space)
    throw parse_error("expected n=..,k=.. prefix", 0);
  const int n = std::stoi(std::string(text.substr(2, comma - 2)));
  const int k = std::stoi(std::string(text.substr(comma + 3, space - comma - 3)));
  return AnkPath::make(n, k, parse_ne(text.substr(space + 1)));
}

// --------------------------------------------------------------------------
// Warmup traces
// --------------------------------------------------------------------------

std::vector<TraceEvent> trace_big_f(const TiePath& p, AvoidPath* result) {
  std::vector<TraceEvent> events;
  if (p.n == 0) {
    if (result) *result = AvoidPath::make(p.path);
    return events;
  }
  if (p.path.step(0) == StepNE::North) {
    TiePath flipped = TiePath::make(reflect_diagonal(p.path));
    events.push_back({"reflect-diagonal", to_text(p.path), to_text(flipped.path)});
    AvoidPath inner;
    auto sub = trace_big_f(flipped, &inner);
    events.insert(events.end(), sub.begin(), sub.end());
    AvoidPath out = AvoidPath::make(reflect_diagonal(inner.path));
    events.push_back({"reflect-diagonal", to_text(inner.path), to_text(out.path)});
    if (result) *result = std::move(out);
    return events;
  }

  AnkPath cur = AnkPath::make(p.n, p.n, NEPath({1, 0}, p.path.steps_text().substr(1)));
  events.push_back({"strip-first-step", to_text(p.path), to_text(cur)});
  for (;;) {
    FStepResult r = f_step(cur);
    events.push_back({"f_step k=" + std::to_string(cur.k) +
                          (r.advanced ? " advance" : " stop"),
                      to_text(cur), to_text(r.path)});
    bool done = !r.advanced;
    cur = std::move(r.path);
    if (done) break;
  }
  AvoidPath out = AvoidPath::make(NEPath({0, 0}, "E" + cur.path.steps_text()));
  events.push_back({"prepend-first-step", to_text(cur), to_text(out.path)});
  if (result) *result = std::move(out);
  return events;
}

std::vector<TraceEvent> trace_big_f_inv(const AvoidPath& u, TiePath* result) {
  std::vector<TraceEvent> events;
  if (u.n == 0) {
    if (result) *result = TiePath::make(u.path);
    return events;
  }
  if (u.path.step(0) == StepNE::North) {
    AvoidPath flipped = AvoidPath::make(reflect_diagonal(u.path));
    events.push_back({"reflect-diagonal", to_text(u.path), to_text(flipped.path)});
    TiePath inner;
    auto sub = trace_big_f_inv(flipped, &inner);
    events.insert(events.end(), sub.begin(), sub.end());
    TiePath out = TiePath::make(reflect_diagonal(inner.path));
    events.push_back({"reflect-diagonal", to_text(inner.path), to_text(out.path)});
    if (result) *result = std::move(out);
    return events;
  }

  const int m = int(u.path.end().x);
  AnkPath cur = AnkPath::make(u.n, m, NEPath({1, 0}, u.path.steps_text().substr(1)));
  events.push_back({"strip-first-step", to_text(u.path), to_text(cur)});
  for (int k = m; k > u.n; --k) {
    AnkPath next = f_step_inv(cur);
    events.push_back(
        {"f_step_inv k=" + std::to_string(k), to_text(cur), to_text(next)});
    cur = std::move(next);
  }
  TiePath out = TiePath::make(NEPath({0, 0}, "E" + cur.path.steps_text()));
  events.push_back({"prepend-first-step", to_text(cur), to_text(out.path)});
  if (result) *result = std::move(out);
  return events;
}

std::vector<TraceEvent> trace_soccer_forward(const NEPath& p, MarkedTiePath* result) {
  std::vector<TraceEvent> events;
  if (!(p.start() == GridPoint{0, 0}))
    throw precondition_error("input must start at (0,0)");
  if (p.size() % 2 != 0) throw precondition_error("input needs an even step count");

  const std::size_t t = *last_diagonal_touch(p);
  const int i = int(p.point_at(t).x);
  auto [prefix, suffix] = split_at(p, t);
  events.push_back({"take-prefix t=" + std::to_string(t), to_text(p), to_text(prefix)});
  AvoidPath tail = AvoidPath::make(translate(suffix, {-i, -i}));
  events.push_back(
      {"take-suffix t=" + std::to_string(t), to_text(p), to_text(tail.path)});
  TiePath pulled;
  auto sub = trace_big_f_inv(tail, &pulled);
  events.insert(events.end(), sub.begin(), sub.end());
  NEPath placed = translate(pulled.path, {i, i});
  events.push_back({"translate v=(" + std::to_string(i) + "," + std::to_string(i) + ")",
                    to_text(pulled.path), to_text(placed)});
  MarkedTiePath out = MarkedTiePath::make(
      TiePath::make(NEPath({0, 0}, prefix.steps_text() + pulled.path.steps_text())), i);
  events.push_back({"concatenate mark=" + std::to_string(i), to_text(placed),
                    to_text(out)});
  if (result) *result = std::move(out);
  return events;
}

std::vector<TraceEvent> trace_soccer_inverse(const MarkedTiePath& m, NEPath* result) {
  std::vector<TraceEvent> events;
  const int i = m.mark;
  const std::size_t t = std::size_t(2 * i);
  auto [prefix, suffix] = split_at(m.tie.path, t);
  events.push_back(
      {"take-prefix t=" + std::to_string(t), to_text(m.tie.path), to_text(prefix)});
  TiePath tail = TiePath::make(translate(suffix, {-i, -i}));
  events.push_back(
      {"take-suffix t=" + std::to_string(t), to_text(m.tie.path), to_text(tail.path)});
  AvoidPath pushed;
  auto sub = trace_big_f(tail, &pushed);
  events.insert(events.end(), sub.begin(), sub.end());
  NEPath placed = translate(pushed.path, {i, i});
  events.push_back({"translate v=(" + std::to_string(i) + "," + std::to_string(i) + ")",
                    to_text(pushed.path), to_text(placed)});
  NEPath out({0, 0}, prefix.steps_text() + pushed.path.steps_text());
  events.push_back(
      {"concatenate mark=" + std::to_string(i), to_text(placed), to_text(out)});
  if (result) *result = std::move(out);
  return events;
}

// --------------------------------------------------------------------------
// Triple-bijection traces
// --------------------------------------------------------------------------

namespace {

// t as the reflected core step, emitting the conjugation explicitly.
void trace_t_route(const PathTriple& t, std::vector<TraceEvent>& events,
                   MarkedPath* out) {
  PathTriple flipped = reflect_triple(t);
  events.push_back({"reflect", to_text(t), to_text(flipped)});
  MarkedPath up = s_map(flipped);
  events.push_back({"s split-at-K", to_text(flipped), to_text(up)});
  MarkedPath down = MarkedPath::make(reflect_horizontal(up.h), up.mark);
  events.push_back({"reflect", to_text(up), to_text(down)});
  if (out) *out = std::move(down);
}

}  // namespace

std::vector<TraceEvent> trace_g(const PathTriple& t, MarkedPath* result) {
  std::vector<TraceEvent> events;
  const TripleClass cls = classify(t);
  events.push_back({"classify", to_text(t), to_text(cls)});
  MarkedPath out;
  switch (cls) {
    case TripleClass::R: {
      out = r_map(t);
      events.push_back({"concatenate", to_text(t), to_text(out)});
      break;
    }
    case TripleClass::U: {
      out = s_map(t);
      events.push_back({"s split-at-K", to_text(t), to_text(out)});
      break;
    }
    case TripleClass::VminusU: {
      trace_t_route(t, events, &out);
      break;
    }
    case TripleClass::JBelow:
    case TripleClass::JAbove: {
      PathTriple fixed = z_map(t);
      events.push_back({"z", to_text(t), to_text(fixed)});
      trace_t_route(fixed, events, &out);
      break;
    }
  }
  if (result) *result = std::move(out);
  return events;
}

std::vector<TraceEvent> trace_g_inv(const MarkedPath& m, PathTriple* result) {
  std::vector<TraceEvent> events;
  const int k = m.mark_height();
  const char* branch = k == 0 ? "r_inv" : (k > 0 ? "s_inv" : "t_inv");
  events.push_back({"dispatch", to_text(m), branch});
  PathTriple out;
  if (k == 0) {
    out = r_inv(m);
    events.push_back({"split-at-mark", to_text(m), to_text(out)});
  } else if (k > 0) {
    out = s_inv(m);
    events.push_back({"s_inv split-at-K-and-Z", to_text(m), to_text(out)});
  } else {
    MarkedPath up = MarkedPath::make(reflect_horizontal(m.h), m.mark);
    events.push_back({"reflect", to_text(m), to_text(up)});
    PathTriple flipped = s_inv(up);
    events.push_back({"s_inv split-at-K-and-Z", to_text(up), to_text(flipped)});
    PathTriple down = reflect_triple(flipped);
    events.push_back({"reflect", to_text(flipped), to_text(down)});
    const bool inner = is_in_i(down);
    events.push_back({"membership", to_text(down), inner ? "I" : "V-U"});
    if (inner) {
      out = z_inv(down);
      events.push_back({"z_inv", to_text(down), to_text(out)});
    } else {
      out = std::move(down);
    }
  }
  if (result) *result = std::move(out);
  return events;
}

// --------------------------------------------------------------------------
// Replay
// --------------------------------------------------------------------------

std::optional<std::string> replay_event(const TraceEvent& ev) {
  const std::string& s = ev.stage;
  auto starts = [&](const char* prefix) { return s.rfind(prefix, 0) == 0; };

  if (s == "reflect-diagonal") return to_text(reflect_diagonal(parse_ne(ev.before)));
  if (s == "strip-first-step") {
    NEPath p = parse_ne(ev.before);
    const int n = int(p.size() / 2);
    const int k = int(p.end().x);
    return to_text(AnkPath::make(n, k, NEPath({1, 0}, p.steps_text().substr(1))));
  }
  if (s == "prepend-first-step") {
    AnkPath p = parse_ank(ev.before);
    return to_text(NEPath({0, 0}, "E" + p.path.steps_text()));
  }
  if (starts("f_step_inv k=")) return to_text(f_step_inv(parse_ank(ev.before)));
  if (starts("f_step k=")) return to_text(f_step(parse_ank(ev.before)).path);
  if (starts("take-prefix t=")) {
    const auto t = std::size_t(stage_param(s, "t="));
    return to_text(split_at(parse_ne(ev.before), t).first);
  }
  if (starts("take-suffix t=")) {
    const auto t = std::size_t(stage_param(s, "t="));
    NEPath suffix = split_at(parse_ne(ev.before), t).second;
    return to_text(translate(suffix, -suffix.start()));
  }
  if (starts("translate v=(")) {
    const long long x = stage_param(s, "v=(");
    const long long y = stage_param(s, ",");
    return to_text(translate(parse_ne(ev.before), {x, y}));
  }
  if (starts("concatenate mark=")) return std::nullopt;  // structural reassembly

  if (s == "classify") return to_text(classify(parse_triple(ev.before)));
  if (s == "concatenate") return to_text(r_map(parse_triple(ev.before)));
  if (s == "z") return to_text(z_map(parse_triple(ev.before)));
  if (s == "z_inv") return to_text(z_inv(parse_triple(ev.before)));
  if (s == "s split-at-K") return to_text(s_map(parse_triple(ev.before)));
  if (s == "s_inv split-at-K-and-Z") return to_text(s_inv(parse_marked(ev.before)));
  if (s == "split-at-mark") return to_text(r_inv(parse_marked(ev.before)));
  if (s == "reflect") {
    if (ev.before.find('|') != std::string::npos)
      return reflect_triple_text(parse_triple(ev.before));
    MarkedPath m = parse_marked(ev.before);
    return to_text(MarkedPath::make(reflect_horizontal(m.h), m.mark));
  }
  if (s == "dispatch") {
    const int k = parse_marked(ev.before).mark_height();
    return std::string(k == 0 ? "r_inv" : (k > 0 ? "s_inv" : "t_inv"));
  }
  if (s == "membership") {
    return std::string(is_in_i(parse_triple(ev.before)) ? "I" : "V-U");
  }
  throw precondition_error("unknown trace stage: " + s);
}

}  // namespace latbij
