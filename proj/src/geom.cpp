#include "kakeya/geom.hpp"

namespace kakeya {

std::vector<Point> line_points(const FieldTable& f, const Line& line) {
  std::vector<Point> pts;
  pts.reserve(f.q());
  for (unsigned t = 0; t < f.q(); ++t) {
    const Felt param{t};
    if (line.slope.is_infinite())
      pts.push_back({line.intercept, param});
    else
      pts.push_back({param, f.add(f.mul(line.slope.value(), param), line.intercept)});
  }
  return pts;
}

bool contains(const FieldTable& f, const Line& line, const Point& pt) {
  if (line.slope.is_infinite()) return pt.x == line.intercept;
  return pt.y == f.add(f.mul(line.slope.value(), pt.x), line.intercept);
}

Intersection intersect(const FieldTable& f, const Line& l1, const Line& l2) {
  if (l1.slope == l2.slope) {
    if (l1.intercept == l2.intercept) return Coincident{};
    return Parallel{};
  }
  if (l1.slope.is_infinite() || l2.slope.is_infinite()) {
    const Line& vertical = l1.slope.is_infinite() ? l1 : l2;
    const Line& other = l1.slope.is_infinite() ? l2 : l1;
    const Felt x = vertical.intercept;
    return Point{x, f.add(f.mul(other.slope.value(), x), other.intercept)};
  }
  const Felt m1 = l1.slope.value();
  const Felt m2 = l2.slope.value();
  const Felt x = f.div(f.sub(l2.intercept, l1.intercept), f.sub(m1, m2));
  return Point{x, f.add(f.mul(m1, x), l1.intercept)};
}

}  // namespace kakeya
