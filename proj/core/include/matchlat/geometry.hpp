#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace matchlat {

// Exact rational coordinates. Face identity and the clockwise convention
// must be bit-stable, so no floating point anywhere in the embedding.
using Rat = boost::multiprecision::cpp_rational;

struct Point {
  Rat x, y;
  bool operator==(const Point& o) const { return x == o.x && y == o.y; }
};

// Parses a decimal string such as "3", "-1/2" is not accepted; "0.25" is.
Rat parse_decimal(const std::string& s);
std::string format_rat(const Rat& r);

int sign(const Rat& r);

// Sign of the cross product (b-a) x (c-a): >0 left turn, <0 right turn.
int orient(const Point& a, const Point& b, const Point& c);

// True if the closed segments [a,b] and [c,d] share a point that is not a
// common endpoint of both.
bool segments_conflict(const Point& a, const Point& b, const Point& c,
                       const Point& d);

// True if p lies strictly inside segment [a,b].
bool point_on_open_segment(const Point& p, const Point& a, const Point& b);

// Strict interior test; p must not lie on the polygon boundary.
bool point_in_polygon(const Point& p, const std::vector<Point>& poly);

// Twice the signed area of the (possibly self-touching) closed walk.
Rat signed_area2(const std::vector<Point>& walk);

// Counterclockwise angular order of direction vectors around the origin,
// starting from the positive x-axis.
bool angle_less(const Point& u, const Point& v);

}  // namespace matchlat
