#include <random>

#include "doctest.h"
#include "random_region.hpp"
#include "tilecount/region.hpp"

using namespace tilecount;

TEST_CASE("build_rectangle") {
  CHECK(build_rectangle(0, 5).empty());
  const Region r = build_rectangle(2, 1);
  CHECK(r.size() == 2);
  CHECK(r.contains({0, 0}));
  CHECK(r.contains({0, 1}));
  CHECK(build_rectangle(4, 4).size() == 16);
}

TEST_CASE("build_frame") {
  CHECK(build_frame({2, 2, 2, 2, 0, 0}) == build_rectangle(4, 4));
  for (int n = 0; n <= 6; ++n) CHECK(build_frame({2, 2, 2, 2, n, n}).size() == static_cast<std::size_t>(8 * n + 16));
  // The hole sits a1 rows up and b1 columns in.
  const Region f = build_frame({1, 3, 2, 1, 2, 3});
  CHECK(f.contains({1, 1}));
  CHECK_FALSE(f.contains({2, 1}));
  CHECK_FALSE(f.contains({4, 2}));
  CHECK(f.contains({5, 2}));
  CHECK(f.contains({2, 3}));
  CHECK_THROWS_AS(build_frame({0, 1, 1, 1, 0, 0}), std::invalid_argument);
}

TEST_CASE("a frame with one zero hole dimension is a slit") {
  const Region slit = build_frame({2, 2, 2, 2, 0, 3});
  CHECK(slit.cells() == build_rectangle(4, 7).cells());
  CHECK(slit.walls().size() == 3);
  CHECK(slit.blocked({2, 1}, {2, 2}));
  CHECK_FALSE(slit.blocked({1, 1}, {1, 2}));
  CHECK(build_frame({2, 2, 2, 2, 0, 0}).walls().empty());
}

TEST_CASE("frame area identity") {
  for (int a1 = 1; a1 <= 6; ++a1)
    for (int a2 = 1; a2 <= 6; a2 += 2)
      for (int b1 = 1; b1 <= 6; ++b1)
        for (int b2 = 1; b2 <= 6; b2 += 3)
          for (int m = 0; m <= 6; m += 2)
            for (int n = 0; n <= 6; n += 3) {
              const FrameSpec s{a1, a2, b1, b2, m, n};
              REQUIRE(build_frame(s).size() == static_cast<std::size_t>(s.height() * s.width() - m * n));
            }
}

TEST_CASE("build_cross") {
  CHECK(build_cross({2, 2, 0}).size() == 4);
  CHECK(build_cross({2, 2, 1}).size() == 12);
  for (int n = 0; n <= 5; ++n) CHECK(build_cross({4, 4, n}).size() == static_cast<std::size_t>(16 + 16 * n));
  for (int a = 1; a <= 4; ++a) {
    for (int b = 1; b <= 4; ++b) {
      CHECK(build_cross({a, b, 0}).canonical() == build_rectangle(b, a));
      CHECK(build_cross({a, b, 3}).size() == static_cast<std::size_t>(a * b + 6 * (a + b)));
    }
  }
}

TEST_CASE("canonical form is idempotent and translation invariant") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const Region r = testgen::random_region(rng, 20);
    const Region c = r.canonical();
    CHECK(c.canonical() == c);
    const int dx = static_cast<int>(testgen::small_int(rng, -50, 50));
    const int dy = static_cast<int>(testgen::small_int(rng, -50, 50));
    CHECK(r.translated(dx, dy).canonical() == c);
    CHECK(r.rotated().rotated().rotated().rotated().canonical() == c);
    CHECK(r.reflected().reflected() == r);
  }
}

TEST_CASE("region files") {
  CHECK(parse_region_file("").empty());
  const Region d = parse_region_file("0 0\n1 0");
  CHECK(d == Region({{0, 0}, {1, 0}}));
  CHECK(parse_region_file("# comment\n\n  3   4 \n") == Region({{3, 4}}));
  try {
    parse_region_file("0 0\n0 0");
    FAIL("expected an error");
  } catch (const RegionParseError& e) {
    CHECK(std::string(e.what()).find("(0, 0)") != std::string::npos);
  }
  try {
    parse_region_file("0 0\n\n1 x\n");
    FAIL("expected an error");
  } catch (const RegionParseError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  const Region f = build_frame({1, 2, 1, 2, 1, 1});
  CHECK(parse_region_file(format_region_file(f)) == f);
  CHECK_THROWS(Region({{0, 0}, {0, 0}}));
}
