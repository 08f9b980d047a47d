#pragma once

#include <optional>
#include <string>
#include <vector>

#include "latbij/hockey.hpp"
#include "latbij/path_core.hpp"
#include "latbij/soccer.hpp"

namespace latbij {

/// One stage of a bijection, as data: a label plus the serialized value
/// before and after the stage. Event sequences are replayable: feeding each
/// `before` through the labelled library operation reproduces `after`, and
/// the last `after` is the final output.
struct TraceEvent {
  std::string stage;
  std::string before;
  std::string after;
};

std::vector<TraceEvent> trace_big_f(const TiePath& p, AvoidPath* result = nullptr);
std::vector<TraceEvent> trace_big_f_inv(const AvoidPath& u, TiePath* result = nullptr);
std::vector<TraceEvent> trace_g(const PathTriple& t, MarkedPath* result = nullptr);
std::vector<TraceEvent> trace_g_inv(const MarkedPath& m, PathTriple* result = nullptr);
std::vector<TraceEvent> trace_soccer_forward(const NEPath& p,
                                             MarkedTiePath* result = nullptr);
std::vector<TraceEvent> trace_soccer_inverse(const MarkedTiePath& m,
                                             NEPath* result = nullptr);

/// Re-derives `after` from `before` for events that are single library
/// operations. Structural events (pure reassembly) return nullopt.
std::optional<std::string> replay_event(const TraceEvent& ev);

/// Parses the "n=..,k=.. (x,y):STEPS" serialization used in traces.
AnkPath parse_ank(std::string_view text);

}  // namespace latbij
