#include "kakeya/cli.hpp"

#include <algorithm>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "kakeya/error.hpp"
#include "kakeya/report.hpp"

namespace kakeya::cli {

namespace {

struct RunSpec {
  unsigned p = 0;
  unsigned k = 1;
  std::string format = "json";
  std::string intercepts;
  std::uint64_t n = 10000;
  std::uint64_t seed = 1;
  unsigned workers = 1;
  std::optional<std::uint64_t> node_budget;
  std::string initial_bound;  // "", "inf", or an integer
  bool no_normalize = false;
  bool omit_timing = false;
  bool enumerate = false;
};

struct Outcome {
  Report report;
  bool falsified = false;
};

Json run_echo(const std::string& command, const RunSpec& spec) {
  Json j;
  j["command"] = command;
  j["p"] = spec.p;
  j["k"] = spec.k;
  return j;
}

SearchOptions search_options(const Field& field, const RunSpec& spec) {
  SearchOptions opts;
  opts.field = field;
  opts.use_translation_normalization = !spec.no_normalize;
  opts.worker_count = spec.workers;
  opts.node_budget = spec.node_budget;
  if (spec.initial_bound == "inf") {
    opts.initial_bound = SearchOptions::kUnbounded;
  } else if (!spec.initial_bound.empty()) {
    try {
      opts.initial_bound = std::stoll(spec.initial_bound);
    } catch (const std::exception&) {
      throw CLI::ValidationError("--initial-bound", "expected an integer or 'inf'");
    }
  }
  const unsigned q = field->q();
  // q = 11 takes seconds; q = 13 is already far slower.
  if (q > 11 && !spec.node_budget)
    throw Error(ErrorKind::TooLarge, "q = " + std::to_string(q) + " is beyond exhaustive reach; pass --node-budget");
  return opts;
}

Outcome field_check(const RunSpec& spec) {
  const Field field = make_field(spec.p, spec.k);
  const FieldAudit audit = audit_field(*field);
  const Felt product = nonzero_product(*field);
  const Felt expected = field->odd() ? field->neg(field->one()) : field->one();

  Outcome o;
  o.report.title = "field-check GF(" + std::to_string(field->q()) + ")";
  o.report.data = field_json(*field);
  o.report.data["axioms_hold"] = audit.axioms_hold;
  o.report.data["axiom_checks"] = audit.checks;
  o.report.data["nonzero_product"] = product.idx;
  o.report.data["nonzero_product_expected"] = expected.idx;
  o.report.data["run"] = run_echo("field-check", spec);
  o.falsified = !audit.axioms_hold || product != expected;
  return o;
}

Outcome verify_config(const std::string& command, const LineConfig& config, const RunSpec& spec) {
  const IncidenceReport inc = incidence_report(config);
  const ConditionalCheck check = conditional_check(config);
  const auto exceptions = triple_point_exceptions(config);
  const auto violations = theorem_violations(config);

  Outcome o;
  o.report.title = command + " q=" + std::to_string(config.q()) + " intercepts=" + config.to_string();
  o.report.data = incidence_json(config, inc);
  o.report.data["conditional"] = conditional_json(check, config.q());
  Json ex = Json::array();
  for (const Slope& s : exceptions) ex.push_back(slope_json(s));
  o.report.data["triple_point_exceptions"] = std::move(ex);
  o.report.data["violations"] = violations;
  o.report.data["run"] = run_echo(command, spec);
  o.report.table = histogram_csv(inc);
  o.falsified = !violations.empty();
  return o;
}

Outcome b0(const RunSpec& spec) {
  const Field field = make_field(spec.p, spec.k);
  Outcome o = verify_config("b0", b0_config(field), spec);
  const std::int64_t expected = field->odd() ? (static_cast<std::int64_t>(field->q()) - 1) / 2 : 0;
  o.report.data["expected_excess"] = expected;
  if (o.report.data["excess"] != expected) o.falsified = true;
  return o;
}

Outcome verify(const RunSpec& spec) {
  const Field field = make_field(spec.p, spec.k);
  return verify_config("verify", LineConfig::parse(field, spec.intercepts), spec);
}

Json search_echo(const std::string& command, const RunSpec& spec) {
  Json j = run_echo(command, spec);
  j["normalize"] = !spec.no_normalize;
  j["initial_bound"] = spec.initial_bound.empty() ? Json("b0") : Json(spec.initial_bound);
  j["node_budget"] = spec.node_budget ? Json(*spec.node_budget) : Json(nullptr);
  return j;
}

Outcome search(const RunSpec& spec) {
  const Field field = make_field(spec.p, spec.k);
  const SearchOutcome result = min_excess_search(search_options(field, spec));
  Outcome o;
  o.report.title = "search q=" + std::to_string(field->q());
  o.report.data = search_json(result, !spec.omit_timing);
  o.report.data.update(field_json(*field));
  o.report.data["run"] = search_echo("search", spec);
  o.report.table = witnesses_csv(result);
  return o;
}

Outcome conjectures(const RunSpec& spec) {
  const Field field = make_field(spec.p, spec.k);
  const SearchOutcome result = min_excess_search(search_options(field, spec));
  const ConjectureReport verdict = verify_conjectures(field, result);
  Outcome o;
  o.report.title = "conjectures q=" + std::to_string(field->q());
  o.report.data = search_json(result, !spec.omit_timing);
  o.report.data.update(field_json(*field));
  o.report.data.update(conjecture_json(verdict));
  o.report.data["run"] = search_echo("conjectures", spec);
  o.report.table = witnesses_csv(result);
  o.falsified = !verdict.conjecture1_holds || !verdict.conjecture2_holds;
  return o;
}

Outcome moments(const RunSpec& spec) {
  const Field field = make_field(spec.p, spec.k);
  const unsigned q = field->q();
  const mpq_class mean = expected_cardinality(q);
  const mpq_class var = variance_cardinality(q);

  Outcome o;
  o.report.title = "moments q=" + std::to_string(q);
  Json& d = o.report.data;
  d = field_json(*field);
  d["closed_form_mean"] = to_fraction_string(mean);
  d["closed_form_variance"] = to_fraction_string(var);
  d["closed_form_mean_float"] = mean.get_d();
  d["closed_form_variance_float"] = var.get_d();
  d["p_single"] = to_fraction_string(joint_point_probability(q, false));
  d["p_joint_distinct"] = to_fraction_string(joint_point_probability(q, true));
  d["chebyshev_bound"] = q >= 3 ? Json(chebyshev_bound(q)) : Json(nullptr);
  Json echo = run_echo("moments", spec);
  echo["enumerate"] = spec.enumerate;
  d["run"] = echo;
  if (spec.enumerate) {
    const ExactMoments exact = exact_moments_by_enumeration(*field);
    d["mean"] = to_fraction_string(exact.mean);
    d["variance"] = to_fraction_string(exact.variance);
    const bool match = exact.mean == mean && exact.variance == var;
    d["closed_form_match"] = match;
    o.falsified = !match;
  }
  return o;
}

Outcome sample(const RunSpec& spec) {
  const Field field = make_field(spec.p, spec.k);
  const SampleReport r = monte_carlo(*field, spec.n, spec.seed, spec.workers);
  Outcome o;
  o.report.title = "sample q=" + std::to_string(field->q());
  o.report.data = sample_json(r);
  o.report.data.update(field_json(*field));
  if (field->q() >= 3) o.report.data["chebyshev_bound"] = chebyshev_bound(field->q());
  o.report.data["run"] = run_echo("sample", spec);
  o.report.table = samples_csv(r);
  return o;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Besicovitch sets over finite planes: construction, verification, search and statistics", "kakeya"};
  app.require_subcommand(1);
  RunSpec spec;

  auto add_field = [&](CLI::App* sub) {
    sub->add_option("--p", spec.p, "field characteristic (prime)")->required();
    sub->add_option("--k", spec.k, "extension degree")->capture_default_str();
    sub->add_option("--format", spec.format, "json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
  };
  auto add_search = [&](CLI::App* sub) {
    add_field(sub);
    sub->add_option("--workers", spec.workers, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
    sub->add_option("--node-budget", spec.node_budget, "cap on explored nodes; result is labelled non-exhaustive");
    sub->add_option("--initial-bound", spec.initial_bound, "starting excess bound (integer or 'inf'; default B0)");
    sub->add_flag("--no-normalize", spec.no_normalize, "search all q^(q+1) configurations");
    sub->add_flag("--omit-timing", spec.omit_timing, "leave wall_ms out of the report");
  };

  auto* field_cmd = app.add_subcommand("field-check", "build GF(p^k) and audit its tables");
  add_field(field_cmd);
  auto* b0_cmd = app.add_subcommand("b0", "report on the parabola construction B0");
  add_field(b0_cmd);
  auto* verify_cmd = app.add_subcommand("verify", "incidence report and theorem checks for one configuration");
  add_field(verify_cmd);
  verify_cmd->add_option("--intercepts", spec.intercepts, "b_0,...,b_{q-1},a")->required();
  auto* search_cmd = app.add_subcommand("search", "exhaustive minimum-excess search");
  add_search(search_cmd);
  auto* conj_cmd = app.add_subcommand("conjectures", "search, then check both conjectures on every minimizer");
  add_search(conj_cmd);
  auto* moments_cmd = app.add_subcommand("moments", "exact mean and variance of |B|");
  add_field(moments_cmd);
  moments_cmd->add_flag("--enumerate", spec.enumerate, "confirm by enumerating every configuration");
  auto* sample_cmd = app.add_subcommand("sample", "Monte Carlo estimate and concentration band");
  add_field(sample_cmd);
  sample_cmd->add_option("--n", spec.n, "sample count")->check(CLI::PositiveNumber)->capture_default_str();
  sample_cmd->add_option("--seed", spec.seed, "64-bit seed")->capture_default_str();
  sample_cmd->add_option("--workers", spec.workers, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kOk;
    }
    err << e.what() << "\n";
    return kUsage;
  }

  try {
    Outcome o;
    if (*field_cmd) o = field_check(spec);
    else if (*b0_cmd) o = b0(spec);
    else if (*verify_cmd) o = verify(spec);
    else if (*search_cmd) o = search(spec);
    else if (*conj_cmd) o = conjectures(spec);
    else if (*moments_cmd) o = moments(spec);
    else if (*sample_cmd) o = sample(spec);
    out << emit(o.report, parse_format(spec.format));
    return o.falsified ? kFalsified : kOk;
  } catch (const CLI::ValidationError& e) {
    err << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return e.kind() == ErrorKind::InternalInconsistency ? kFalsified : kDomainError;
  }
}

}  // namespace kakeya::cli
