#pragma once

#include <json.hpp>

#include "latbij/hockey.hpp"
#include "latbij/path_core.hpp"
#include "latbij/soccer.hpp"
#include "latbij/trace.hpp"

namespace latbij {

// Lossless JSON forms of the text grammar:
//   triple       {"A": "...", "B": "...", "C": "..."}
//   marked path  {"H": "...", "X": int}
//   NE path      {"start": [x, y], "steps": "..."}
//   marked tie   {"start": [x, y], "steps": "...", "mark": int}

inline nlohmann::json json_of(const PathTriple& t) {
  return {{"A", t.a.text()}, {"B", t.b.text()}, {"C", t.c.text()}};
}

inline nlohmann::json json_of(const MarkedPath& m) {
  return {{"H", m.h.text()}, {"X", m.mark}};
}

inline nlohmann::json json_of(const NEPath& p) {
  return {{"start", {p.start().x, p.start().y}}, {"steps", p.steps_text()}};
}

inline nlohmann::json json_of(const MarkedTiePath& m) {
  nlohmann::json j = json_of(m.tie.path);
  j["mark"] = m.mark;
  return j;
}

inline nlohmann::json json_of(const TraceEvent& e) {
  return {{"stage", e.stage}, {"before", e.before}, {"after", e.after}};
}

inline PathTriple triple_from_json(const nlohmann::json& j) {
  return PathTriple::make(parse_ud(j.at("A").get<std::string>()),
                          parse_ud(j.at("B").get<std::string>()),
                          parse_ud(j.at("C").get<std::string>()));
}

inline MarkedPath marked_from_json(const nlohmann::json& j) {
  return MarkedPath::make(parse_ud(j.at("H").get<std::string>()),
                          j.at("X").get<std::size_t>());
}

inline NEPath ne_from_json(const nlohmann::json& j) {
  const auto& s = j.at("start");
  return NEPath({s.at(0).get<long long>(), s.at(1).get<long long>()},
                j.at("steps").get<std::string>());
}

inline MarkedTiePath marked_tie_from_json(const nlohmann::json& j) {
  return MarkedTiePath::make(TiePath::make(ne_from_json(j)), j.at("mark").get<int>());
}

}  // namespace latbij
