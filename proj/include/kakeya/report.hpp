#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "kakeya/besicovitch.hpp"
#include "kakeya/search.hpp"
#include "kakeya/stats.hpp"

namespace kakeya {

using Json = nlohmann::json;  // std::map-backed, so keys dump in sorted order

enum class Format { Json, Csv, Text };

Format parse_format(std::string_view name);

/// A report ready for output. `table` is the CSV body used for --format csv;
/// when empty the CSV form lists top-level key,value pairs.
struct Report {
  std::string title;
  Json data;
  std::string table;
};

/// Serializes deterministically: same report, same bytes.
std::string emit(const Report& report, Format format);

Json slope_json(const Slope& slope);
Json point_json(const Point& point);

/// {p, k, q, modulus}; modulus is null for prime fields.
Json field_json(const FieldTable& field);

/// {p,k,q,modulus,intercepts,cardinality,excess,histogram,lower_bound};
/// histogram is a list of [multiplicity, count] pairs in ascending order.
Json incidence_json(const LineConfig& config, const IncidenceReport& report);
Json conditional_json(const ConditionalCheck& check, unsigned q);

/// {q,min_excess,min_cardinality,witness_count,witnesses,nodes_explored,
/// nodes_pruned,exhausted,wall_ms}. wall_ms is left out when include_timing
/// is false so that repeated runs compare byte for byte.
Json search_json(const SearchOutcome& outcome, bool include_timing = true);
Json conjecture_json(const ConjectureReport& report);

/// {q,n,seed,empirical_mean,empirical_variance,closed_form_mean,
/// closed_form_variance,band_violation_fraction}
Json sample_json(const SampleReport& report);

std::string histogram_csv(const IncidenceReport& report);
std::string witnesses_csv(const SearchOutcome& outcome);
std::string samples_csv(const SampleReport& report);

}  // namespace kakeya
