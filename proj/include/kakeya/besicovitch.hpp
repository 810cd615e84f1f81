#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kakeya/geom.hpp"

namespace kakeya {

/// The q+1 intercepts of a union-of-lines Besicovitch set
/// B = U_{i in F_q u {inf}} l(i, b_i).
///
/// Slot i < q holds b_i for the finite slope with element index i; slot q
/// holds the x-intercept of the vertical line.
class LineConfig {
 public:
  LineConfig(Field field, std::vector<Felt> intercepts);
  /// Validating constructor from raw indices.
  static LineConfig from_indices(Field field, std::span<const long long> intercepts);
  /// Parses the text form "b_0,b_1,...,b_{q-1},a".
  static LineConfig parse(Field field, std::string_view text);

  const Field& field() const noexcept { return field_; }
  const FieldTable& table() const noexcept { return *field_; }
  unsigned q() const noexcept { return field_->q(); }

  const std::vector<Felt>& intercepts() const noexcept { return intercepts_; }
  Felt intercept(unsigned slot) const { return intercepts_.at(slot); }
  Line line(unsigned slot) const;

  std::vector<unsigned> indices() const;
  std::string to_string() const;

  friend bool operator==(const LineConfig& a, const LineConfig& b) {
    return a.q() == b.q() && a.intercepts_ == b.intercepts_;
  }

 private:
  Field field_;
  std::vector<Felt> intercepts_;
};

/// Per-point line counts m_P over the q x q plane, indexed by (x, y).
class MultiplicityGrid {
 public:
  explicit MultiplicityGrid(unsigned q) : q_(q), counts_(static_cast<std::size_t>(q) * q, 0) {}

  unsigned q() const noexcept { return q_; }
  unsigned at(Point p) const noexcept { return counts_[cell(p)]; }
  unsigned at(unsigned x, unsigned y) const noexcept { return counts_[x * q_ + y]; }
  void increment(Point p) noexcept { ++counts_[cell(p)]; }
  const std::vector<std::uint16_t>& counts() const noexcept { return counts_; }

  std::uint64_t total() const noexcept;

 private:
  std::size_t cell(Point p) const noexcept { return static_cast<std::size_t>(p.x.idx) * q_ + p.y.idx; }

  unsigned q_;
  std::vector<std::uint16_t> counts_;
};

struct IncidenceReport {
  std::int64_t cardinality = 0;
  std::int64_t excess = 0;
  std::map<unsigned, std::int64_t> histogram;  ///< multiplicity (>= 1) -> point count
  std::int64_t lower_bound = 0;                ///< q(q+1)/2
};

struct ConditionalCheck {
  /// First slope (in slope order) whose configured line holds every point of
  /// multiplicity >= 3.
  std::optional<Slope> covering_slope;
  std::int64_t triple_points = 0;  ///< T: points with m_P >= 3
  std::int64_t delta = 0;          ///< configured lines meeting no triple point
};

/// (m-1)(m-2)/2 for m >= 1, the contribution of a point of multiplicity m.
constexpr std::int64_t point_excess(std::int64_t m) noexcept { return m < 1 ? 0 : (m - 1) * (m - 2) / 2; }

MultiplicityGrid multiplicity_map(const LineConfig& config);

/// Counts |B| by direct union and by the incidence formula; throws
/// InternalInconsistency if they disagree.
IncidenceReport incidence_report(const LineConfig& config);

/// Size of the union of the configured lines, counted point by point.
std::int64_t direct_cardinality(const LineConfig& config);

/// Excess contributed by the lines in slots [0, lines) only.
std::int64_t partial_excess(const LineConfig& config, unsigned lines);

/// B_0: b_i = -i^2 for finite i, vertical line x = 0.
LineConfig b0_config(const Field& field);

/// Slopes whose configured line carries no point with m_P >= 3.
std::vector<Slope> triple_point_exceptions(const LineConfig& config);

ConditionalCheck conditional_check(const LineConfig& config);

/// Statements checked per configuration for odd q: at most one line misses
/// every triple point, excess >= ceil(q/3), and when a covering slope exists
/// excess >= (q-1)/2 with equality exactly when T = (q-1)/2 and no point has
/// multiplicity above 3. Returns one message per violated statement; empty
/// for even q.
std::vector<std::string> theorem_violations(const LineConfig& config);

/// Image under (x, y) -> (x + e, y + f).
LineConfig translate(const LineConfig& config, Felt e, Felt f);

/// Translation representative with b_0 = 0 and vertical intercept 0.
LineConfig normalize(const LineConfig& config);

/// Raw-index normalization used by the search hot path.
void normalize_indices(const FieldTable& field, std::span<unsigned> intercepts);

}  // namespace kakeya
