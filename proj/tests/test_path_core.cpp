#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "latbij/path_core.hpp"

using namespace latbij;

namespace {

std::mt19937_64 rng(20240811);

UDPath random_ud(std::size_t len) {
  std::string s;
  for (std::size_t i = 0; i < len; ++i) s += (rng() & 1) ? 'U' : 'D';
  return UDPath(s);
}

NEPath random_ne(std::size_t len) {
  std::string s;
  for (std::size_t i = 0; i < len; ++i) s += (rng() & 1) ? 'N' : 'E';
  long long x = (long long)(rng() % 21) - 10;
  long long y = (long long)(rng() % 21) - 10;
  return NEPath({x, y}, s);
}

}  // namespace

TEST_CASE("parse_ud basics") {
  CHECK(height_profile(parse_ud("UUDD")) == std::vector<int>{0, 1, 2, 1, 0});
  CHECK(height_profile(parse_ud("")) == std::vector<int>{0});
  CHECK(parse_ud("").empty());

  CHECK_THROWS_AS(parse_ud("UDX"), parse_error);
  try {
    parse_ud("UDX");
  } catch (const parse_error& e) {
    CHECK(e.index == 2);
  }
  CHECK_THROWS_AS(parse_ud("ud"), parse_error);
}

TEST_CASE("parse/format round trip") {
  for (int rep = 0; rep < 200; ++rep) {
    UDPath p = random_ud(rng() % 40);
    CHECK(parse_ud(to_text(p)) == p);
  }
  for (int rep = 0; rep < 200; ++rep) {
    NEPath p = random_ne(rng() % 40);
    CHECK(parse_ne(to_text(p)) == p);
  }
  CHECK(to_text(parse_ne("(1,0):NEE")) == "(1,0):NEE");
  CHECK(to_text(parse_ne("(-3,7):")) == "(-3,7):");
  CHECK_THROWS_AS(parse_ne("1,0:NEE"), parse_error);
  CHECK_THROWS_AS(parse_ne("(1,0)NEE"), parse_error);
  CHECK_THROWS_AS(parse_ne("(1,0):NXE"), parse_error);
}

TEST_CASE("reflect_horizontal") {
  CHECK(reflect_horizontal(parse_ud("UD")) == parse_ud("DU"));
  CHECK(reflect_horizontal(parse_ud("")) == parse_ud(""));
  CHECK(reflect_horizontal(parse_ud("UUDDDU")) == parse_ud("DDUUUD"));

  for (int rep = 0; rep < 100; ++rep) {
    UDPath p = random_ud(rng() % 30);
    CHECK(reflect_horizontal(reflect_horizontal(p)) == p);
    auto prof = height_profile(p);
    auto neg = height_profile(reflect_horizontal(p));
    REQUIRE(prof.size() == neg.size());
    for (std::size_t i = 0; i < prof.size(); ++i) CHECK(neg[i] == -prof[i]);
  }
}

TEST_CASE("reflect_diagonal") {
  CHECK(reflect_diagonal(parse_ne("(0,0):EN")) == parse_ne("(0,0):NE"));
  CHECK(reflect_diagonal(parse_ne("(1,0):NEE")) == parse_ne("(0,1):ENN"));
  for (int rep = 0; rep < 100; ++rep) {
    NEPath p = random_ne(rng() % 30);
    CHECK(reflect_diagonal(reflect_diagonal(p)) == p);
  }
}

TEST_CASE("translate") {
  CHECK(translate(parse_ne("(0,1):NEE"), {1, -1}) == parse_ne("(1,0):NEE"));
  for (int rep = 0; rep < 100; ++rep) {
    NEPath p = random_ne(rng() % 30);
    GridPoint v{(long long)(rng() % 9) - 4, (long long)(rng() % 9) - 4};
    CHECK(translate(p, {0, 0}) == p);
    CHECK(translate(translate(p, v), -v) == p);
  }
}

TEST_CASE("height profile and extremes") {
  CHECK(height_profile(parse_ud("DUUD")) == std::vector<int>{0, -1, 0, 1, 0});
  CHECK(height_profile(parse_ud("UU")) == std::vector<int>{0, 1, 2});

  CHECK(leftmost_extreme_index(parse_ud("DUUD"), Extreme::Max) == ExtremePoint{3, 1});
  CHECK(leftmost_extreme_index(parse_ud("UDUD"), Extreme::Max) == ExtremePoint{1, 1});
  CHECK(leftmost_extreme_index(parse_ud("UDDU"), Extreme::Min) == ExtremePoint{3, -1});
  CHECK(leftmost_extreme_index(parse_ud(""), Extreme::Max) == ExtremePoint{0, 0});

  for (int rep = 0; rep < 100; ++rep) {
    UDPath p = random_ud(rng() % 30);
    auto mx = leftmost_extreme_index(p, Extreme::Max);
    auto mn = leftmost_extreme_index(reflect_horizontal(p), Extreme::Min);
    CHECK(mx.index == mn.index);
    CHECK(mx.height == -mn.height);
    CHECK(mx.height == p.max_height());
    CHECK(p.height_at(mx.index) == mx.height);
    // leftmost: strictly earlier points are strictly lower
    auto prof = height_profile(p);
    for (std::size_t i = 0; i < mx.index; ++i) CHECK(prof[i] < mx.height);
  }
}

TEST_CASE("first and last diagonal touch") {
  CHECK(first_diagonal_touch(parse_ne("(1,0):ENN")) == 3);
  CHECK(parse_ne("(1,0):ENN").point_at(3) == GridPoint{2, 2});
  CHECK(!first_diagonal_touch(parse_ne("(1,0):EEE")).has_value());
  CHECK(first_diagonal_touch(parse_ne("(0,0):")) == 0);
  CHECK(last_diagonal_touch(parse_ne("(0,0):ENNE")) == 4);
  CHECK(last_diagonal_touch(parse_ne("(0,0):ENEE")) == 2);
  CHECK(!last_diagonal_touch(parse_ne("(1,0):EE")).has_value());
}

TEST_CASE("split and concat") {
  auto [l, r] = split_at(parse_ud("UDDU"), 2);
  CHECK(l == parse_ud("UD"));
  CHECK(r == parse_ud("DU"));
  CHECK_THROWS_AS(split_at(parse_ud("UD"), 3), precondition_error);

  for (int rep = 0; rep < 150; ++rep) {
    UDPath p = random_ud(rng() % 30);
    std::size_t t = p.size() ? rng() % (p.size() + 1) : 0;
    auto [a, b] = split_at(p, t);
    CHECK(a.size() == t);
    CHECK(concat(a, b) == p);
  }
  for (int rep = 0; rep < 150; ++rep) {
    NEPath p = random_ne(rng() % 30);
    std::size_t t = p.size() ? rng() % (p.size() + 1) : 0;
    auto [a, b] = split_at(p, t);
    CHECK(b.start() == a.end());
    CHECK(concat(a, b) == p);
  }
  CHECK_THROWS_AS(concat(parse_ne("(0,0):E"), parse_ne("(0,0):N")),
                  precondition_error);
}

TEST_CASE("slice") {
  CHECK(slice(parse_ud("UDDU"), 1, 3) == parse_ud("DD"));
  CHECK(slice(parse_ud("UDDU"), 2, 2) == parse_ud(""));
  CHECK_THROWS_AS(slice(parse_ud("UD"), 2, 1), precondition_error);
}
