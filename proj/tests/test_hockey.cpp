#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "latbij/hockey.hpp"
#include "latbij/oracle.hpp"

using namespace latbij;

namespace {

PathTriple triple(const char* a, const char* b, const char* c) {
  return PathTriple::make(parse_ud(a), parse_ud(b), parse_ud(c));
}

// Set-definition predicates, written independently of classify():
// U_n: (B ends Down or B empty) and C has a point strictly above the axis.
bool in_u(const PathTriple& t) {
  const bool b_ok = t.b.empty() || t.b.step(t.b.size() - 1) == StepUD::Down;
  return b_ok && t.c.max_height() > 0;
}
// V_n: the mirror image.
bool in_v(const PathTriple& t) {
  const bool b_ok = t.b.empty() || t.b.step(t.b.size() - 1) == StepUD::Up;
  return b_ok && t.c.min_height() < 0;
}
bool in_r(const PathTriple& t) { return t.c.empty(); }

std::string show_triple(const PathTriple& t) { return to_text(t); }
std::string show_marked(const MarkedPath& m) { return to_text(m); }

UDPath random_balanced(int semilength, std::mt19937_64& rng) {
  std::string s(std::size_t(semilength), 'U');
  s += std::string(std::size_t(semilength), 'D');
  std::shuffle(s.begin(), s.end(), rng);
  return UDPath(s);
}

}  // namespace

TEST_CASE("classification against the set definitions") {
  for (int n = 0; n <= 5; ++n) {
    std::size_t r = 0, u = 0, v_minus_u = 0, j = 0, i_count = 0;
    for (const PathTriple& t : all_triples(n)) {
      const TripleClass cls = classify(t);
      const bool in_j = !in_r(t) && !in_u(t) && !in_v(t);
      switch (cls) {
        case TripleClass::R:
          ++r;
          CHECK(in_r(t));
          break;
        case TripleClass::U:
          ++u;
          CHECK(in_u(t));
          break;
        case TripleClass::VminusU:
          ++v_minus_u;
          CHECK(in_v(t));
          CHECK(!in_u(t));
          break;
        case TripleClass::JBelow:
          ++j;
          CHECK(in_j);
          CHECK(t.c.max_height() <= 0);
          CHECK(t.b.step(t.b.size() - 1) == StepUD::Down);
          break;
        case TripleClass::JAbove:
          ++j;
          CHECK(in_j);
          CHECK(t.c.min_height() >= 0);
          CHECK(t.b.step(t.b.size() - 1) == StepUD::Up);
          break;
      }
      if (is_in_i(t)) {
        ++i_count;
        CHECK(in_u(t));
        CHECK(in_v(t));
        CHECK(cls == TripleClass::U);
      }
      CHECK(is_in_i(t) == (in_u(t) && in_v(t)));
    }
    // the classes partition T_n, and z_inv will need |J| = |I|
    CHECK(r + u + v_minus_u + j == all_triples(n).size());
    CHECK(j == i_count);
  }
}

TEST_CASE("classify on the frozen examples") {
  CHECK(classify(triple("UD", "", "")) == TripleClass::R);
  CHECK(classify(triple("", "", "UD")) == TripleClass::U);
  CHECK(classify(triple("", "", "DU")) == TripleClass::VminusU);
  CHECK(classify(triple("", "UD", "DU")) == TripleClass::JBelow);
  CHECK(classify(triple("", "DU", "UD")) == TripleClass::JAbove);
  CHECK(is_in_i(triple("", "", "UDDU")));
  CHECK(!is_in_i(triple("", "", "UD")));
}

TEST_CASE("r_map and r_inv") {
  CHECK(to_text(r_map(triple("UD", "", ""))) == "UD@2");
  CHECK(to_text(r_map(triple("", "UD", ""))) == "UD@0");
  CHECK(to_text(r_map(triple("", "", ""))) == "@0");
  CHECK_THROWS_AS(r_map(triple("", "", "UD")), precondition_error);

  CHECK(to_text(r_inv(parse_marked("UD@2"))) == "UD||");
  CHECK(to_text(r_inv(parse_marked("UD@0"))) == "|UD|");
  CHECK_THROWS_AS(r_inv(parse_marked("UD@1")), precondition_error);
}

TEST_CASE("s_map and s_inv on the frozen examples") {
  CHECK(to_text(s_map(triple("", "", "UD"))) == "UD@1");
  CHECK(to_text(s_map(triple("UD", "", "UD"))) == "UUDD@3");
  CHECK_THROWS_AS(s_map(triple("", "", "DU")), precondition_error);

  CHECK(to_text(s_inv(parse_marked("UD@1"))) == "||UD");
  CHECK(to_text(s_inv(parse_marked("UUDD@3"))) == "UD||UD");
  CHECK_THROWS_AS(s_inv(parse_marked("UD@0")), precondition_error);
  CHECK_THROWS_AS(s_inv(parse_marked("DU@1")), precondition_error);
}

TEST_CASE("t_map and t_inv on the frozen examples") {
  CHECK(to_text(t_map(triple("", "", "DU"))) == "DU@1");
  CHECK(to_text(t_map(triple("", "", "UDDU"))) == "UDDU@3");
  CHECK(t_map(triple("", "", "UDDU")).mark_height() == -1);
  CHECK_THROWS_AS(t_map(triple("", "", "UD")), precondition_error);

  CHECK(to_text(t_inv(parse_marked("DU@1"))) == "||DU");
  CHECK(to_text(t_inv(parse_marked("UDDU@3"))) == "||UDDU");
  CHECK_THROWS_AS(t_inv(parse_marked("UD@1")), precondition_error);
}

TEST_CASE("t equals the reflected core step") {
  for (int n = 0; n <= 5; ++n) {
    for (const PathTriple& t : all_triples(n)) {
      if (!(classify(t) == TripleClass::VminusU || is_in_i(t))) continue;
      MarkedPath direct = t_map(t);
      PathTriple flipped = PathTriple::make(reflect_horizontal(t.a),
                                            reflect_horizontal(t.b),
                                            reflect_horizontal(t.c));
      MarkedPath conjugated = s_map(flipped);
      CHECK(direct.h == reflect_horizontal(conjugated.h));
      CHECK(direct.mark == conjugated.mark);
    }
  }
}

TEST_CASE("z_map and z_inv on the frozen examples") {
  CHECK(to_text(z_map(triple("", "UD", "DU"))) == "||UDDU");
  CHECK(to_text(z_map(triple("", "DU", "UD"))) == "||DUUD");
  CHECK_THROWS_AS(z_map(triple("", "", "UD")), precondition_error);

  CHECK(to_text(z_inv(triple("", "", "UDDU"))) == "|UD|DU");
  CHECK(to_text(z_inv(triple("", "", "DUUD"))) == "|DU|UD");
  CHECK_THROWS_AS(z_inv(triple("", "UD", "DU")), precondition_error);
}

TEST_CASE("z is a bijection J_n -> I_n") {
  for (int n = 0; n <= 5; ++n) {
    std::vector<PathTriple> j_set, i_set;
    for (const PathTriple& t : all_triples(n)) {
      const TripleClass cls = classify(t);
      if (cls == TripleClass::JBelow || cls == TripleClass::JAbove)
        j_set.push_back(t);
      if (is_in_i(t)) i_set.push_back(t);
    }
    auto rep = verify_bijection(j_set, i_set, z_map, z_inv, show_triple,
                                show_triple);
    INFO("n=", n, "\n", rep.to_text());
    CHECK(rep.pass());
  }
}

TEST_CASE("g_map covers the full n=1 table") {
  CHECK(to_text(g_map(triple("", "", "UD"))) == "UD@1");
  CHECK(to_text(g_map(triple("", "", "DU"))) == "DU@1");
  CHECK(to_text(g_map(triple("UD", "", ""))) == "UD@2");
  CHECK(to_text(g_map(triple("DU", "", ""))) == "DU@2");
  CHECK(to_text(g_map(triple("", "UD", ""))) == "UD@0");
  CHECK(to_text(g_map(triple("", "DU", ""))) == "DU@0");
  CHECK(to_text(g_map(triple("", "UD", "DU"))) == "UDDU@3");
  CHECK(to_text(g_map(triple("", "", ""))) == "@0");
}

TEST_CASE("g_inv on the frozen examples") {
  CHECK(to_text(g_inv(parse_marked("UDDU@3"))) == "|UD|DU");
  CHECK(to_text(g_inv(parse_marked("DU@1"))) == "||DU");
  CHECK(to_text(g_inv(parse_marked("@0"))) == "||");
}

TEST_CASE("class-image laws") {
  for (int n = 0; n <= 5; ++n) {
    for (const PathTriple& t : all_triples(n)) {
      const MarkedPath m = g_map(t);
      CHECK(m.h.size() == t.a.size() + t.b.size() + t.c.size());
      switch (classify(t)) {
        case TripleClass::R:
          CHECK(m.mark_height() == 0);
          break;
        case TripleClass::U:
          CHECK(m.mark_height() > 0);
          CHECK(m.mark_height() == t.c.max_height());
          break;
        case TripleClass::VminusU:
          CHECK(m.mark_height() < 0);
          CHECK(m.mark_height() == t.c.min_height());
          break;
        case TripleClass::JBelow:
        case TripleClass::JAbove:
          CHECK(m.mark_height() < 0);
          break;
      }
    }
  }
}

TEST_CASE("g is a bijection T_n -> D_n") {
  for (int n = 0; n <= 5; ++n) {
    auto rep = verify_bijection(all_triples(n), all_marked(n), g_map, g_inv,
                                show_triple, show_marked);
    INFO("n=", n, "\n", rep.to_text());
    CHECK(rep.pass());
  }
}

TEST_CASE("parallel and sequential reports agree") {
  auto seq = verify_bijection(all_triples(4), all_marked(4), g_map, g_inv,
                              show_triple, show_marked, 1);
  auto par = verify_bijection(all_triples(4), all_marked(4), g_map, g_inv,
                              show_triple, show_marked, 4);
  CHECK(seq.to_text() == par.to_text());
  CHECK(seq.pass());
}

TEST_CASE("round trips at large sizes") {
  std::mt19937_64 rng(42);
  for (int rep = 0; rep < 60; ++rep) {
    const int n = 500 + int(rng() % 1500);
    const int i = int(rng() % (n + 1));
    const int j = int(rng() % (n - i + 1));
    PathTriple t = PathTriple::make(random_balanced(i, rng),
                                    random_balanced(j, rng),
                                    random_balanced(n - i - j, rng));
    MarkedPath m = g_map(t);
    CHECK(m.h.size() == std::size_t(2 * n));
    CHECK(to_text(g_inv(m)) == to_text(t));
  }
}

TEST_CASE("triple and marked-path parsing") {
  CHECK(to_text(parse_triple("UD||DU")) == "UD||DU");
  CHECK(to_text(parse_triple("||")) == "||");
  CHECK_THROWS_AS(parse_triple("UD|DU"), parse_error);
  CHECK_THROWS_AS(parse_triple("UD||DU|"), parse_error);
  CHECK_THROWS_AS(parse_triple("UU||"), precondition_error);
  CHECK_THROWS_AS(parse_triple("UX||"), parse_error);

  CHECK(to_text(parse_marked("UDDU@3")) == "UDDU@3");
  CHECK_THROWS_AS(parse_marked("UDDU"), parse_error);
  CHECK_THROWS_AS(parse_marked("UDDU@"), parse_error);
  CHECK_THROWS_AS(parse_marked("UDDU@x"), parse_error);
  CHECK_THROWS_AS(parse_marked("UDDU@5"), precondition_error);
  CHECK_THROWS_AS(parse_marked("UDU@1"), precondition_error);
}
