#include "kakeya/report.hpp"

#include <sstream>

#include "kakeya/error.hpp"

namespace kakeya {

Format parse_format(std::string_view name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  if (name == "text") return Format::Text;
  throw Error(ErrorKind::InvalidConfig, "unknown format '" + std::string(name) + "'");
}

namespace {

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string csv_cell(const Json& v) {
  std::string s = scalar_text(v);
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

}  // namespace

std::string emit(const Report& report, Format format) {
  switch (format) {
    case Format::Json:
      return report.data.dump(2) + "\n";
    case Format::Csv: {
      if (!report.table.empty()) return report.table;
      std::string out = "key,value\n";
      for (const auto& [key, value] : report.data.items()) out += key + "," + csv_cell(value) + "\n";
      return out;
    }
    case Format::Text: {
      std::ostringstream os;
      if (!report.title.empty()) os << report.title << "\n";
      if (report.data.contains("exhausted") && report.data["exhausted"] == false)
        os << "NON-EXHAUSTIVE: node budget reached; results are not a proof of minimality\n";
      for (const auto& [key, value] : report.data.items()) os << "  " << key << ": " << scalar_text(value) << "\n";
      return os.str();
    }
  }
  return {};
}

Json slope_json(const Slope& slope) {
  if (slope.is_infinite()) return "inf";
  return slope.value().idx;
}

Json point_json(const Point& p) { return Json::array({p.x.idx, p.y.idx}); }

Json field_json(const FieldTable& f) {
  Json j;
  j["p"] = f.p();
  j["k"] = f.k();
  j["q"] = f.q();
  j["modulus"] = f.modulus() ? Json(*f.modulus()) : Json(nullptr);
  return j;
}

Json incidence_json(const LineConfig& config, const IncidenceReport& report) {
  Json j = field_json(config.table());
  j["intercepts"] = config.indices();
  j["cardinality"] = report.cardinality;
  j["excess"] = report.excess;
  j["lower_bound"] = report.lower_bound;
  Json hist = Json::array();
  for (const auto& [m, count] : report.histogram) hist.push_back(Json::array({m, count}));
  j["histogram"] = std::move(hist);
  return j;
}

Json conditional_json(const ConditionalCheck& check, unsigned) {
  Json j;
  j["covering_slope"] = check.covering_slope ? slope_json(*check.covering_slope) : Json(nullptr);
  j["T"] = check.triple_points;
  j["delta"] = check.delta;
  return j;
}

Json search_json(const SearchOutcome& o, bool include_timing) {
  Json j;
  j["q"] = o.q;
  j["min_excess"] = o.min_excess ? Json(*o.min_excess) : Json(nullptr);
  j["min_cardinality"] = o.min_cardinality() ? Json(*o.min_cardinality()) : Json(nullptr);
  j["witness_count"] = o.witnesses.size();
  j["witnesses"] = o.witnesses;
  j["nodes_explored"] = o.nodes_explored;
  j["nodes_pruned"] = o.nodes_pruned;
  j["exhausted"] = o.exhausted;
  if (include_timing) j["wall_ms"] = o.wall_ms;
  return j;
}

Json conjecture_json(const ConjectureReport& r) {
  Json j;
  j["conjecture1_holds"] = r.conjecture1_holds;
  j["conjecture2_holds"] = r.conjecture2_holds;
  j["counterexamples"] = r.counterexamples;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

Json sample_json(const SampleReport& r) {
  Json j;
  j["q"] = r.q;
  j["n"] = r.n;
  j["seed"] = r.seed;
  j["empirical_mean"] = r.empirical_mean;
  j["empirical_variance"] = r.empirical_variance;
  j["closed_form_mean"] = r.closed_form_mean;
  j["closed_form_variance"] = r.closed_form_variance;
  j["band_violation_fraction"] = r.band_violation_fraction;
  return j;
}

std::string histogram_csv(const IncidenceReport& report) {
  std::string out = "multiplicity,count\n";
  for (const auto& [m, count] : report.histogram) out += std::to_string(m) + "," + std::to_string(count) + "\n";
  return out;
}

std::string witnesses_csv(const SearchOutcome& outcome) {
  std::string out;
  for (unsigned i = 0; i < outcome.q; ++i) out += "b_" + std::to_string(i) + ",";
  out += "b_inf\n";
  for (const auto& w : outcome.witnesses) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(w[i]);
    }
    out += '\n';
  }
  return out;
}

std::string samples_csv(const SampleReport& report) {
  std::string out = "sample,cardinality\n";
  for (std::size_t i = 0; i < report.cardinalities.size(); ++i)
    out += std::to_string(i) + "," + std::to_string(report.cardinalities[i]) + "\n";
  return out;
}

}  // namespace kakeya
