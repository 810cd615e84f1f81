#include <doctest.h>

#include <random>
#include <set>

#include "kakeya/geom.hpp"

using namespace kakeya;

namespace {

Line finite(unsigned m, unsigned b) { return {Slope::finite(Felt{m}), Felt{b}}; }
Line vertical(unsigned a) { return {Slope::infinity(), Felt{a}}; }
Point pt(unsigned x, unsigned y) { return {Felt{x}, Felt{y}}; }

Line random_line(std::mt19937_64& rng, unsigned q) {
  const unsigned slot = static_cast<unsigned>(rng() % (q + 1));
  return {Slope::from_slot(slot, q), Felt{static_cast<unsigned>(rng() % q)}};
}

}  // namespace

TEST_SUITE("geom") {

TEST_CASE("line_points orders by parameter") {
  const auto f = make_field(3);
  CHECK(line_points(*f, finite(1, 2)) == std::vector<Point>{pt(0, 2), pt(1, 0), pt(2, 1)});
  CHECK(line_points(*f, vertical(1)) == std::vector<Point>{pt(1, 0), pt(1, 1), pt(1, 2)});
}

TEST_CASE("contains") {
  const auto f3 = make_field(3);
  CHECK(contains(*f3, finite(1, 2), pt(1, 0)));
  CHECK_FALSE(contains(*f3, finite(1, 2), pt(1, 1)));
  const auto f5 = make_field(5);
  CHECK(contains(*f5, vertical(3), pt(3, 4)));
  CHECK_FALSE(contains(*f5, vertical(3), pt(2, 4)));
}

TEST_CASE("intersect outcomes") {
  const auto f3 = make_field(3);
  CHECK(intersect(*f3, finite(1, 2), finite(2, 2)) == Intersection{pt(0, 2)});
  CHECK(intersect(*f3, finite(1, 0), finite(1, 2)) == Intersection{Parallel{}});
  CHECK(intersect(*f3, finite(1, 0), finite(1, 0)) == Intersection{Coincident{}});
  CHECK(intersect(*f3, vertical(0), vertical(2)) == Intersection{Parallel{}});
  const auto f5 = make_field(5);
  CHECK(intersect(*f5, finite(2, 1), vertical(3)) == Intersection{pt(3, 2)});
  CHECK(intersect(*f5, vertical(3), finite(2, 1)) == Intersection{pt(3, 2)});
}

TEST_CASE("tangent lines of the parabola meet at (i + j, ij)") {
  for (auto [p, k] : std::vector<std::pair<unsigned, unsigned>>{{3, 1}, {5, 1}, {2, 2}, {3, 2}, {7, 1}}) {
    const auto f = make_field(p, k);
    for (unsigned i = 0; i < f->q(); ++i)
      for (unsigned j = 0; j < f->q(); ++j) {
        if (i == j) continue;
        const Felt a{i}, b{j};
        const Line li{Slope::finite(a), f->neg(f->mul(a, a))};
        const Line lj{Slope::finite(b), f->neg(f->mul(b, b))};
        REQUIRE(intersect(*f, li, lj) == Intersection{Point{f->add(a, b), f->mul(a, b)}});
      }
  }
}

TEST_CASE("property: intersections lie on both lines and are symmetric") {
  std::mt19937_64 rng(20240611);
  for (auto [p, k] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {3, 1}, {2, 3}, {7, 1}, {3, 2}, {13, 1}, {2, 8}}) {
    const auto f = make_field(p, k);
    for (int trial = 0; trial < 2000; ++trial) {
      const Line l1 = random_line(rng, f->q());
      const Line l2 = random_line(rng, f->q());
      const Intersection r = intersect(*f, l1, l2);
      REQUIRE(r == intersect(*f, l2, l1));
      if (l1.slope == l2.slope) {
        REQUIRE_FALSE(std::holds_alternative<Point>(r));
        continue;
      }
      const Point& P = std::get<Point>(r);
      REQUIRE(contains(*f, l1, P));
      REQUIRE(contains(*f, l2, P));
    }
  }
}

TEST_CASE("property: a line has q distinct points covering every parameter") {
  for (auto [p, k] : std::vector<std::pair<unsigned, unsigned>>{{3, 1}, {2, 2}, {5, 1}, {3, 2}, {2, 4}}) {
    const auto f = make_field(p, k);
    const unsigned q = f->q();
    for (unsigned slot = 0; slot <= q; ++slot)
      for (unsigned b = 0; b < q; ++b) {
        const Line l{Slope::from_slot(slot, q), Felt{b}};
        const auto pts = line_points(*f, l);
        REQUIRE(pts.size() == q);
        std::set<Point> distinct(pts.begin(), pts.end());
        REQUIRE(distinct.size() == q);
        std::set<unsigned> params;
        for (const Point& P : pts) {
          REQUIRE(contains(*f, l, P));
          params.insert(slot == q ? P.y.idx : P.x.idx);
        }
        REQUIRE(params.size() == q);
      }
  }
}

TEST_CASE("slope slots") {
  CHECK(Slope::from_slot(5, 5).is_infinite());
  CHECK(Slope::from_slot(2, 5) == Slope::finite(Felt{2}));
  CHECK(Slope::infinity().slot(7) == 7);
}

}
