#pragma once

#include <compare>
#include <variant>
#include <vector>

#include "kakeya/gf.hpp"

namespace kakeya {

/// Direction of a line: a finite slope m (y = mx + b) or infinity (x = a).
class Slope {
 public:
  static constexpr Slope finite(Felt m) noexcept { return Slope(false, m); }
  static constexpr Slope infinity() noexcept { return Slope(true, Felt{0}); }

  /// Inverse of slot(): slots 0..q-1 are the finite slopes, slot q is infinity.
  static Slope from_slot(unsigned slot, unsigned q) noexcept {
    return slot == q ? infinity() : finite(Felt{slot});
  }

  constexpr bool is_infinite() const noexcept { return infinite_; }
  /// Only meaningful for finite slopes.
  constexpr Felt value() const noexcept { return m_; }
  /// Position in slope order: finite slopes by element index, then infinity.
  constexpr unsigned slot(unsigned q) const noexcept { return infinite_ ? q : m_.idx; }

  friend constexpr bool operator==(Slope, Slope) = default;

 private:
  constexpr Slope(bool inf, Felt m) noexcept : infinite_(inf), m_(m) {}
  bool infinite_;
  Felt m_;
};

/// l(m, b): y = m x + b, or l(inf, a): x = a.
struct Line {
  Slope slope;
  Felt intercept;

  friend constexpr bool operator==(const Line&, const Line&) = default;
};

struct Point {
  Felt x;
  Felt y;

  friend constexpr auto operator<=>(const Point&, const Point&) = default;
};

struct Parallel {
  friend constexpr bool operator==(Parallel, Parallel) = default;
};
struct Coincident {
  friend constexpr bool operator==(Coincident, Coincident) = default;
};

using Intersection = std::variant<Point, Parallel, Coincident>;

/// The q points of a line, ordered by x for finite slopes and by y for
/// vertical lines.
std::vector<Point> line_points(const FieldTable& field, const Line& line);

bool contains(const FieldTable& field, const Line& line, const Point& point);

Intersection intersect(const FieldTable& field, const Line& l1, const Line& l2);

}  // namespace kakeya
