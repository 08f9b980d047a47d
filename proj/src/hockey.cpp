#include "latbij/hockey.hpp"

#include <optional>

namespace latbij {

PathTriple PathTriple::make(UDPath a, UDPath b, UDPath c) {
  if (!a.balanced() || !b.balanced() || !c.balanced())
    throw precondition_error("all three paths of a triple must be balanced");
  return {std::move(a), std::move(b), std::move(c)};
}

MarkedPath MarkedPath::make(UDPath h, std::size_t mark) {
  if (!h.balanced()) throw precondition_error("marked path must be balanced");
  if (mark > h.size()) throw precondition_error("mark index out of range");
  return {std::move(h), mark};
}

std::string to_text(TripleClass c) {
  switch (c) {
    case TripleClass::R: return "R";
    case TripleClass::U: return "U";
    case TripleClass::VminusU: return "V-U";
    case TripleClass::JBelow: return "J below";
    case TripleClass::JAbove: return "J above";
  }
  return "?";
}

TripleClass classify(const PathTriple& t) {
  if (t.c.empty()) return TripleClass::R;
  const bool b_empty = t.b.empty();
  const bool b_down = !b_empty && t.b.step(t.b.size() - 1) == StepUD::Down;
  const bool c_above = t.c.max_height() > 0;
  const bool c_below = t.c.min_height() < 0;
  if ((b_empty || b_down) && c_above) return TripleClass::U;
  if ((b_empty || !b_down) && c_below) return TripleClass::VminusU;
  // A nonempty balanced c leaves the axis, so reaching here means b is
  // nonempty and c lies weakly on one side.
  return b_down ? TripleClass::JBelow : TripleClass::JAbove;
}

bool is_in_i(const PathTriple& t) {
  return t.b.empty() && t.c.max_height() > 0 && t.c.min_height() < 0;
}

MarkedPath r_map(const PathTriple& t) {
  if (!t.c.empty()) throw precondition_error("r_map needs an empty last path");
  return MarkedPath::make(concat(t.a, t.b), t.a.size());
}

PathTriple r_inv(const MarkedPath& m) {
  if (m.mark_height() != 0)
    throw precondition_error("r_inv needs the mark on the axis");
  auto [a, b] = split_at(m.h, m.mark);
  return PathTriple::make(std::move(a), std::move(b), UDPath());
}

MarkedPath s_map(const PathTriple& t) {
  const auto [kappa, k] = leftmost_extreme_index(t.c, Extreme::Max);
  if (k <= 0)
    throw precondition_error("s_map needs a point of c strictly above the axis");
  if (classify(t) != TripleClass::U)
    throw precondition_error("s_map input must be in U_n");
  auto [c1, c2] = split_at(t.c, kappa);
  UDPath h = concat(concat(c1, t.a), concat(t.b, c2));
  return MarkedPath::make(std::move(h), kappa + t.a.size());
}

PathTriple s_inv(const MarkedPath& m) {
  const int k = m.mark_height();
  if (k <= 0)
    throw precondition_error("s_inv needs the mark strictly above the axis");

  // K: leftmost point of h at the mark height.
  std::size_t kappa = 0;
  {
    int h = 0;
    for (std::size_t i = 0;; ++i) {
      if (h == k) { kappa = i; break; }
      h += rise(m.h.step(i));
    }
  }

  // Z: rightmost point after the mark at the same height that h reaches by
  // a Down step and leaves by another Down step. Scanning from the right
  // end, where the height is 0 (h is balanced).
  std::optional<std::size_t> z;
  {
    int h = 0;
    for (std::size_t i = m.h.size(); i > m.mark; --i) {
      // h holds the height at point i
      if (h == k && i < m.h.size() && m.h.step(i - 1) == StepUD::Down &&
          m.h.step(i) == StepUD::Down) {
        z = i;
        break;
      }
      h -= rise(m.h.step(i - 1));
    }
  }

  UDPath c1 = slice(m.h, 0, kappa);
  UDPath a = slice(m.h, kappa, m.mark);
  UDPath b = z ? slice(m.h, m.mark, *z) : UDPath();
  UDPath c2 = z ? slice(m.h, *z, m.h.size()) : slice(m.h, m.mark, m.h.size());
  return PathTriple::make(std::move(a), std::move(b), concat(c1, c2));
}

MarkedPath t_map(const PathTriple& t) {
  const auto [kappa, k] = leftmost_extreme_index(t.c, Extreme::Min);
  if (k >= 0)
    throw precondition_error("t_map needs a point of c strictly below the axis");
  {
    const TripleClass cls = classify(t);
    if (cls != TripleClass::VminusU && !is_in_i(t))
      throw precondition_error("t_map input must be in V_n");
  }
  auto [c1, c2] = split_at(t.c, kappa);
  UDPath h = concat(concat(c1, t.a), concat(t.b, c2));
  return MarkedPath::make(std::move(h), kappa + t.a.size());
}

PathTriple t_inv(const MarkedPath& m) {
  if (m.mark_height() >= 0)
    throw precondition_error("t_inv needs the mark strictly below the axis");
  PathTriple r = s_inv(MarkedPath::make(reflect_horizontal(m.h), m.mark));
  return PathTriple::make(reflect_horizontal(r.a), reflect_horizontal(r.b),
                          reflect_horizontal(r.c));
}

PathTriple z_map(const PathTriple& t) {
  const TripleClass cls = classify(t);
  if (cls != TripleClass::JBelow && cls != TripleClass::JAbove)
    throw precondition_error("z_map input must be in J_n");
  return PathTriple::make(t.a, UDPath(), concat(t.b, t.c));
}

PathTriple z_inv(const PathTriple& t) {
  if (!is_in_i(t)) throw precondition_error("z_inv input must be in I_n");

  // Rightmost interior axis point of c whose incoming and outgoing steps
  // agree (a genuine crossing, not a touch). Scanned from the right end,
  // where the height is 0.
  std::optional<std::size_t> y;
  int h = 0;
  for (std::size_t i = t.c.size(); i-- > 1;) {
    h -= rise(t.c.step(i));  // height at point i
    if (h == 0 && t.c.step(i - 1) == t.c.step(i)) {
      y = i;
      break;
    }
  }
  if (!y) throw std::logic_error("I_n element without an axis crossing");
  auto [b, c] = split_at(t.c, *y);
  return PathTriple::make(t.a, std::move(b), std::move(c));
}

MarkedPath g_map(const PathTriple& t) {
  switch (classify(t)) {
    case TripleClass::R: return r_map(t);
    case TripleClass::U: return s_map(t);
    case TripleClass::VminusU: return t_map(t);
    case TripleClass::JBelow:
    case TripleClass::JAbove: return t_map(z_map(t));
  }
  throw std::logic_error("unreachable");
}

PathTriple g_inv(const MarkedPath& m) {
  const int k = m.mark_height();
  if (k == 0) return r_inv(m);
  if (k > 0) return s_inv(m);
  PathTriple t = t_inv(m);
  return is_in_i(t) ? z_inv(t) : t;
}

std::string to_text(const PathTriple& t) {
  return t.a.text() + "|" + t.b.text() + "|" + t.c.text();
}

std::string to_text(const MarkedPath& m) {
  return m.h.text() + "@" + std::to_string(m.mark);
}

PathTriple parse_triple(std::string_view text) {
  const std::size_t p1 = text.find('|');
  if (p1 == std::string_view::npos)
    throw parse_error("triple needs two '|' separators", text.size());
  const std::size_t p2 = text.find('|', p1 + 1);
  if (p2 == std::string_view::npos)
    throw parse_error("triple needs two '|' separators", text.size());
  if (text.find('|', p2 + 1) != std::string_view::npos)
    throw parse_error("triple has more than two '|' separators",
                      text.find('|', p2 + 1));
  return PathTriple::make(parse_ud(text.substr(0, p1)),
                          parse_ud(text.substr(p1 + 1, p2 - p1 - 1)),
                          parse_ud(text.substr(p2 + 1)));
}

MarkedPath parse_marked(std::string_view text) {
  const std::size_t at = text.rfind('@');
  if (at == std::string_view::npos)
    throw parse_error("missing '@' mark separator", text.size());
  std::string_view idx = text.substr(at + 1);
  if (idx.empty()) throw parse_error("missing mark index", at + 1);
  for (std::size_t i = 0; i < idx.size(); ++i)
    if (idx[i] < '0' || idx[i] > '9')
      throw parse_error("mark index must be a non-negative integer", at + 1 + i);
  return MarkedPath::make(parse_ud(text.substr(0, at)),
                          std::stoul(std::string(idx)));
}

}  // namespace latbij
