#include "matchlat/geometry.hpp"

#include <algorithm>

#include "matchlat/errors.hpp"

namespace matchlat {

Rat parse_decimal(const std::string& s) {
  if (s.empty()) throw ParseError("empty coordinate");
  std::size_t i = 0;
  bool neg = false;
  if (s[i] == '+' || s[i] == '-') {
    neg = (s[i] == '-');
    ++i;
  }
  boost::multiprecision::cpp_int num = 0, den = 1;
  bool any_digit = false, seen_dot = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (c == '.') {
      if (seen_dot) throw ParseError("bad coordinate '" + s + "'");
      seen_dot = true;
    } else if (c >= '0' && c <= '9') {
      num = num * 10 + (c - '0');
      if (seen_dot) den *= 10;
      any_digit = true;
    } else {
      throw ParseError("bad coordinate '" + s + "'");
    }
  }
  if (!any_digit) throw ParseError("bad coordinate '" + s + "'");
  if (neg) num = -num;
  return Rat(num, den);
}

std::string format_rat(const Rat& r) {
  using boost::multiprecision::cpp_int;
  cpp_int num = numerator(r), den = denominator(r);
  if (den == 1) return num.str();
  // coordinates always come from decimal strings, so den = 2^a * 5^b;
  // scale to a power of ten and print the exact expansion
  cpp_int d = den;
  int twos = 0, fives = 0;
  while (d % 2 == 0) { d /= 2; ++twos; }
  while (d % 5 == 0) { d /= 5; ++fives; }
  if (d != 1) return num.str() + "/" + den.str();  // not expressible
  int k = std::max(twos, fives);
  cpp_int scale = 1;
  for (int i = 0; i < k; ++i) scale *= 10;
  cpp_int scaled = num * (scale / den);
  bool neg = scaled < 0;
  std::string digits = (neg ? -scaled : scaled).str();
  if ((int)digits.size() <= k) digits.insert(0, k + 1 - digits.size(), '0');
  digits.insert(digits.size() - k, ".");
  return (neg ? "-" : "") + digits;
}

int sign(const Rat& r) {
  if (r > 0) return 1;
  if (r < 0) return -1;
  return 0;
}

int orient(const Point& a, const Point& b, const Point& c) {
  return sign((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x));
}

bool point_on_open_segment(const Point& p, const Point& a, const Point& b) {
  if (orient(a, b, p) != 0) return false;
  if (p == a || p == b) return false;
  // collinear: check p strictly between a and b
  if (a.x != b.x) return (a.x < p.x) != (b.x < p.x);
  return (a.y < p.y) != (b.y < p.y);
}

bool segments_conflict(const Point& a, const Point& b, const Point& c,
                       const Point& d) {
  int o1 = orient(a, b, c), o2 = orient(a, b, d);
  int o3 = orient(c, d, a), o4 = orient(c, d, b);
  bool share_ac = (a == c), share_ad = (a == d), share_bc = (b == c),
       share_bd = (b == d);
  if (share_ac || share_ad || share_bc || share_bd) {
    // Sharing one endpoint is fine unless the other ends overlap the segment.
    if (point_on_open_segment(a, c, d) || point_on_open_segment(b, c, d) ||
        point_on_open_segment(c, a, b) || point_on_open_segment(d, a, b))
      return true;
    // identical segments are caught as duplicate edges upstream
    return false;
  }
  if (o1 == 0 && point_on_open_segment(c, a, b)) return true;
  if (o2 == 0 && point_on_open_segment(d, a, b)) return true;
  if (o3 == 0 && point_on_open_segment(a, c, d)) return true;
  if (o4 == 0 && point_on_open_segment(b, c, d)) return true;
  if (o1 == 0 && o2 == 0) return false;  // collinear, disjoint
  return o1 * o2 < 0 && o3 * o4 < 0;
}

bool point_in_polygon(const Point& p, const std::vector<Point>& poly) {
  // crossing number; the caller guarantees p is not on the boundary
  bool inside = false;
  std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = poly[i];
    const Point& b = poly[(i + 1) % n];
    if ((a.y > p.y) != (b.y > p.y)) {
      // x coordinate of the edge at height p.y
      Rat xi = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (xi > p.x) inside = !inside;
    }
  }
  return inside;
}

Rat signed_area2(const std::vector<Point>& walk) {
  Rat s = 0;
  std::size_t n = walk.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = walk[i];
    const Point& b = walk[(i + 1) % n];
    s += a.x * b.y - b.x * a.y;
  }
  return s;
}

bool angle_less(const Point& u, const Point& v) {
  auto half = [](const Point& w) {
    // 0 for angle in [0, pi), 1 for [pi, 2pi)
    if (w.y > 0) return 0;
    if (w.y < 0) return 1;
    return w.x > 0 ? 0 : 1;
  };
  int hu = half(u), hv = half(v);
  if (hu != hv) return hu < hv;
  Rat cr = u.x * v.y - u.y * v.x;
  return cr > 0;
}

}  // namespace matchlat
