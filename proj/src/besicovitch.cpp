#include "kakeya/besicovitch.hpp"

#include <charconv>
#include <numeric>

#include "kakeya/error.hpp"

namespace kakeya {

LineConfig::LineConfig(Field field, std::vector<Felt> intercepts)
    : field_(std::move(field)), intercepts_(std::move(intercepts)) {
  if (!field_) throw Error(ErrorKind::InvalidConfig, "missing field");
  if (intercepts_.size() != field_->q() + 1)
    throw Error(ErrorKind::InvalidConfig, "expected " + std::to_string(field_->q() + 1) + " intercepts, got " +
                                              std::to_string(intercepts_.size()));
  for (Felt b : intercepts_)
    if (!field_->valid(b)) throw Error(ErrorKind::InvalidElement, "intercept " + std::to_string(b.idx) + " out of range");
}

LineConfig LineConfig::from_indices(Field field, std::span<const long long> intercepts) {
  std::vector<Felt> elems;
  elems.reserve(intercepts.size());
  for (long long v : intercepts) elems.push_back(field->element(v));
  return LineConfig(std::move(field), std::move(elems));
}

LineConfig LineConfig::parse(Field field, std::string_view text) {
  std::vector<long long> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view tok = text.substr(pos, end - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    long long v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
      throw Error(ErrorKind::InvalidConfig, "bad intercept token '" + std::string(tok) + "'");
    values.push_back(v);
    pos = end + 1;
  }
  return from_indices(std::move(field), values);
}

Line LineConfig::line(unsigned slot) const {
  return Line{Slope::from_slot(slot, q()), intercepts_.at(slot)};
}

std::vector<unsigned> LineConfig::indices() const {
  std::vector<unsigned> out;
  out.reserve(intercepts_.size());
  for (Felt b : intercepts_) out.push_back(b.idx);
  return out;
}

std::string LineConfig::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < intercepts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(intercepts_[i].idx);
  }
  return s;
}

std::uint64_t MultiplicityGrid::total() const noexcept {
  return std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0});
}

MultiplicityGrid multiplicity_map(const LineConfig& config) {
  MultiplicityGrid grid(config.q());
  for (unsigned slot = 0; slot <= config.q(); ++slot)
    for (const Point& p : line_points(config.table(), config.line(slot))) grid.increment(p);
  return grid;
}

std::int64_t direct_cardinality(const LineConfig& config) {
  const unsigned q = config.q();
  std::vector<bool> covered(static_cast<std::size_t>(q) * q, false);
  std::int64_t count = 0;
  for (unsigned slot = 0; slot <= q; ++slot)
    for (const Point& p : line_points(config.table(), config.line(slot))) {
      auto ref = covered[p.x.idx * q + p.y.idx];
      if (!ref) {
        ref = true;
        ++count;
      }
    }
  return count;
}

IncidenceReport incidence_report(const LineConfig& config) {
  const std::int64_t q = config.q();
  const MultiplicityGrid grid = multiplicity_map(config);
  IncidenceReport report;
  report.lower_bound = q * (q + 1) / 2;
  for (std::uint16_t m : grid.counts()) {
    if (m == 0) continue;
    ++report.histogram[m];
    report.excess += point_excess(m);
  }
  report.cardinality = direct_cardinality(config);
  if (report.cardinality != report.lower_bound + report.excess)
    throw Error(ErrorKind::InternalInconsistency,
                "direct cardinality " + std::to_string(report.cardinality) + " != " +
                    std::to_string(report.lower_bound) + " + " + std::to_string(report.excess));
  return report;
}

std::int64_t partial_excess(const LineConfig& config, unsigned lines) {
  const unsigned q = config.q();
  MultiplicityGrid grid(q);
  for (unsigned slot = 0; slot < lines && slot <= q; ++slot)
    for (const Point& p : line_points(config.table(), config.line(slot))) grid.increment(p);
  std::int64_t excess = 0;
  for (std::uint16_t m : grid.counts()) excess += point_excess(m);
  return excess;
}

LineConfig b0_config(const Field& field) {
  const FieldTable& f = *field;
  std::vector<Felt> b;
  b.reserve(f.q() + 1);
  for (unsigned i = 0; i < f.q(); ++i) b.push_back(f.neg(f.mul(Felt{i}, Felt{i})));
  b.push_back(f.zero());
  return LineConfig(field, std::move(b));
}

std::vector<Slope> triple_point_exceptions(const LineConfig& config) {
  const MultiplicityGrid grid = multiplicity_map(config);
  std::vector<Slope> out;
  for (unsigned slot = 0; slot <= config.q(); ++slot) {
    bool has_triple = false;
    for (const Point& p : line_points(config.table(), config.line(slot)))
      if (grid.at(p) >= 3) {
        has_triple = true;
        break;
      }
    if (!has_triple) out.push_back(Slope::from_slot(slot, config.q()));
  }
  return out;
}

ConditionalCheck conditional_check(const LineConfig& config) {
  const unsigned q = config.q();
  const FieldTable& f = config.table();
  const MultiplicityGrid grid = multiplicity_map(config);

  std::vector<Point> triples;
  for (unsigned x = 0; x < q; ++x)
    for (unsigned y = 0; y < q; ++y)
      if (grid.at(x, y) >= 3) triples.push_back({Felt{x}, Felt{y}});

  ConditionalCheck check;
  for (unsigned slot = 0; slot <= q && !check.covering_slope; ++slot) {
    const Line l = config.line(slot);
    bool covers = true;
    for (const Point& p : triples)
      if (!contains(f, l, p)) {
        covers = false;
        break;
      }
    if (covers) check.covering_slope = l.slope;
  }
  if (check.covering_slope) {
    check.triple_points = static_cast<std::int64_t>(triples.size());
    check.delta = static_cast<std::int64_t>(triple_point_exceptions(config).size());
  }
  return check;
}

std::vector<std::string> theorem_violations(const LineConfig& config) {
  std::vector<std::string> out;
  const std::int64_t q = config.q();
  if (q % 2 == 0) return out;

  const IncidenceReport report = incidence_report(config);
  const auto exceptions = triple_point_exceptions(config);
  if (exceptions.size() > 1)
    out.push_back("triple point lemma: " + std::to_string(exceptions.size()) + " lines carry no triple point");
  if (report.excess < (q + 2) / 3)
    out.push_back("excess " + std::to_string(report.excess) + " below ceil(q/3)");

  const ConditionalCheck check = conditional_check(config);
  if (check.covering_slope) {
    const std::int64_t half = (q - 1) / 2;
    const unsigned max_m = report.histogram.empty() ? 0 : report.histogram.rbegin()->first;
    if (report.excess < half) out.push_back("covering slope present but excess below (q-1)/2");
    const bool equality = report.excess == half;
    const bool structure = check.triple_points == half && max_m == 3;
    if (equality != structure) out.push_back("covering-slope equality case does not match T = (q-1)/2, max m = 3");
  }
  return out;
}

LineConfig translate(const LineConfig& config, Felt e, Felt f) {
  const FieldTable& F = config.table();
  const unsigned q = config.q();
  std::vector<Felt> b(q + 1);
  // (x, y) -> (x + e, y + f) maps l(m, b) to l(m, b + f - m e) and l(inf, a) to l(inf, a + e).
  for (unsigned m = 0; m < q; ++m) b[m] = F.sub(F.add(config.intercept(m), f), F.mul(Felt{m}, e));
  b[q] = F.add(config.intercept(q), e);
  return LineConfig(config.field(), std::move(b));
}

LineConfig normalize(const LineConfig& config) {
  const FieldTable& F = config.table();
  return translate(config, F.neg(config.intercept(config.q())), F.neg(config.intercept(0)));
}

void normalize_indices(const FieldTable& F, std::span<unsigned> b) {
  const unsigned q = F.q();
  const Felt a{b[q]};
  const Felt b0{b[0]};
  // b_m - b_0 + m a
  for (unsigned m = 0; m < q; ++m) b[m] = F.add(F.sub(Felt{b[m]}, b0), F.mul(Felt{m}, a)).idx;
  b[q] = 0;
}

}  // namespace kakeya
