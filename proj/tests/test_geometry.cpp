#include "doctest.h"
#include "matchlat/errors.hpp"
#include "matchlat/geometry.hpp"

using namespace matchlat;

namespace {
Point pt(int x, int y) { return Point{Rat(x), Rat(y)}; }
}

TEST_CASE("parse_decimal accepts plain and fractional decimals") {
  CHECK(parse_decimal("3") == Rat(3));
  CHECK(parse_decimal("-7") == Rat(-7));
  CHECK(parse_decimal("0.25") == Rat(1, 4));
  CHECK(parse_decimal("-1.5") == Rat(-3, 2));
  CHECK(parse_decimal("10.000") == Rat(10));
  CHECK(parse_decimal("+2") == Rat(2));
}

TEST_CASE("parse_decimal rejects junk") {
  CHECK_THROWS_AS(parse_decimal(""), ParseError);
  CHECK_THROWS_AS(parse_decimal("1/2"), ParseError);
  CHECK_THROWS_AS(parse_decimal("1.2.3"), ParseError);
  CHECK_THROWS_AS(parse_decimal("abc"), ParseError);
  CHECK_THROWS_AS(parse_decimal("."), ParseError);
  CHECK_THROWS_AS(parse_decimal("1e3"), ParseError);
}

TEST_CASE("format_rat round-trips through parse") {
  for (const char* s : {"0", "3", "-7", "0.25", "-1.5", "12.375"}) {
    Rat r = parse_decimal(s);
    CHECK(parse_decimal(format_rat(r)) == r);
  }
}

TEST_CASE("orient gives turn direction") {
  CHECK(orient(pt(0, 0), pt(1, 0), pt(1, 1)) > 0);   // left
  CHECK(orient(pt(0, 0), pt(1, 0), pt(1, -1)) < 0);  // right
  CHECK(orient(pt(0, 0), pt(1, 0), pt(2, 0)) == 0);  // collinear
}

TEST_CASE("segments_conflict detects crossings and overlaps") {
  // proper X crossing
  CHECK(segments_conflict(pt(0, 0), pt(2, 2), pt(0, 2), pt(2, 0)));
  // shared endpoint only: fine
  CHECK(!segments_conflict(pt(0, 0), pt(1, 0), pt(1, 0), pt(1, 1)));
  // disjoint
  CHECK(!segments_conflict(pt(0, 0), pt(1, 0), pt(0, 1), pt(1, 1)));
  // collinear overlap
  CHECK(segments_conflict(pt(0, 0), pt(2, 0), pt(1, 0), pt(3, 0)));
  // touching at interior of one segment
  CHECK(segments_conflict(pt(0, 0), pt(2, 0), pt(1, 0), pt(1, 1)));
  // collinear but separated
  CHECK(!segments_conflict(pt(0, 0), pt(1, 0), pt(2, 0), pt(3, 0)));
}

TEST_CASE("point_on_open_segment is strict") {
  CHECK(point_on_open_segment(pt(1, 0), pt(0, 0), pt(2, 0)));
  CHECK(!point_on_open_segment(pt(0, 0), pt(0, 0), pt(2, 0)));
  CHECK(!point_on_open_segment(pt(2, 0), pt(0, 0), pt(2, 0)));
  CHECK(!point_on_open_segment(pt(1, 1), pt(0, 0), pt(2, 0)));
}

TEST_CASE("point_in_polygon on a square and a nonconvex polygon") {
  std::vector<Point> sq = {pt(0, 0), pt(4, 0), pt(4, 4), pt(0, 4)};
  CHECK(point_in_polygon(pt(2, 2), sq));
  CHECK(!point_in_polygon(pt(5, 2), sq));
  CHECK(!point_in_polygon(pt(-1, -1), sq));

  // L shape
  std::vector<Point> ell = {pt(0, 0), pt(3, 0), pt(3, 1),
                            pt(1, 1), pt(1, 3), pt(0, 3)};
  CHECK(point_in_polygon(Point{Rat(1, 2), Rat(1, 2)}, ell));
  CHECK(!point_in_polygon(pt(2, 2), ell));
}

TEST_CASE("signed_area2 sign follows orientation") {
  std::vector<Point> ccw = {pt(0, 0), pt(2, 0), pt(2, 2), pt(0, 2)};
  CHECK(signed_area2(ccw) == Rat(8));
  std::vector<Point> cw(ccw.rbegin(), ccw.rend());
  CHECK(signed_area2(cw) == Rat(-8));
  // degenerate tree walk
  std::vector<Point> spike = {pt(0, 0), pt(1, 0)};
  CHECK(signed_area2(spike) == Rat(0));
}

TEST_CASE("angle_less orders directions counterclockwise from +x") {
  std::vector<Point> dirs = {pt(1, 0), pt(1, 1), pt(0, 1), pt(-1, 1),
                             pt(-1, 0), pt(-1, -1), pt(0, -1), pt(1, -1)};
  for (size_t i = 0; i < dirs.size(); ++i)
    for (size_t j = 0; j < dirs.size(); ++j)
      CHECK(angle_less(dirs[i], dirs[j]) == (i < j));
}
